#include "doctest.h"

#include <random>

#include "d4g2/scalars.hpp"

using namespace d4g2;

TEST_CASE("rational arithmetic") {
  CHECK(rat_arith(Rational(1, 2), Rational(1, 3), RatOp::add) == Rational(5, 6));
  CHECK(rat_arith(Rational(7, 2), Rational(14, 5), RatOp::sub) == Rational(7, 10));
  CHECK(rat_arith(Rational(4), Rational(7, 2), RatOp::sub) == Rational(1, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational::parse("-14/21") == Rational(-2, 3));
  CHECK(Rational(-3, 2).str() == "-3/2");
}

TEST_CASE("rational division by zero is a typed error") {
  CHECK_THROWS_AS(rat_arith(Rational(1), Rational(0), RatOp::div), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("eisenstein arithmetic") {
  Eis xi = Eis::xi();
  CHECK(eis_arith(xi, xi, EisOp::mul) == Eis(Rational(-1), Rational(-1)));
  Eis xi2 = xi * xi;
  CHECK(xi + xi2 == Eis(-1));
  CHECK((xi2 - xi) * (xi2 - xi) == Eis(-3));
  CHECK(xi * xi * xi == Eis(1));
  CHECK(Eis(1) + xi + xi2 == Eis(0));
  CHECK(xi.conj() == xi2);
  CHECK(eis_arith(xi, Eis(), EisOp::conj) == xi2);
  CHECK(xi.str() == "xi");
}

TEST_CASE("eisenstein properties on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  auto rnd = [&] { return Eis(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng)))); };
  for (int i = 0; i < 200; ++i) {
    Eis a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Eis(1));
  }
}
