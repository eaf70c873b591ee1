#include "doctest.h"

#include <random>

#include "d4g2/fock.hpp"

using namespace d4g2;

namespace {

const Rational half(1, 2);

GeneratorLabel z(int f, bool st) { return {f, st, 0}; }

// Σ coeff · word applied to v
FockVector apply_terms(const std::vector<OrderedTerm>& ts, const FockVector& v) {
  FockVector r(v.sector());
  for (const auto& t : ts) r += t.coeff * apply_word(t.word, v);
  return r;
}

}  // namespace

TEST_CASE("generator action") {
  FockVector ns = FockVector::vacuum(Sector::NS), ra = FockVector::vacuum(Sector::Ramond);
  FockVector v = apply_generator(gen(1, true, -half), ns);
  CHECK(apply_generator(gen(1, false, half), v) == ns);
  CHECK(apply_generator(gen(4, false, 0), ra).is_zero());
  CHECK(apply_generator(gen(4, true, 0), apply_generator(gen(4, true, 0), ra)).is_zero());
  CHECK(apply_generator(gen(2, false, half), ns).is_zero());
  CHECK_THROWS_AS(apply_generator(gen(1, false, 0), ns), SectorMismatch);
  // a_2(-1/2) a_1(-1/2) |0> = -a_1(-1/2) a_2(-1/2) |0>
  FockVector w = apply_word({gen(2, false, -half), gen(1, false, -half)}, ns);
  CHECK(w == -1 * parse_state("a1(-1/2) a2(-1/2) |0>"));
  CHECK(w.str() == "-a1(-1/2) a2(-1/2) |0>");
}

TEST_CASE("depth, weight and parity") {
  CHECK(depth(FockState::vacuum(Sector::NS)) == Rational(0));
  CHECK(depth(FockState::vacuum(Sector::Ramond)) == half);
  auto s = parse_state("a4*(0) |0'>").terms().begin()->first;
  CHECK(d4_weight(s) == root_tables().d4_fundamental[2]);
  CHECK(d4_weight(FockState::vacuum(Sector::Ramond)) == root_tables().d4_fundamental[3]);
  auto t = parse_state("a1(-1/2) |0>").terms().begin()->first;
  CHECK(parity(t) == 1);
  CHECK(d4_weight(t) == root_tables().d4_fundamental[0]);
  auto u = parse_state("a1*(-3/2) a4(-1/2) |0>").terms().begin()->first;
  CHECK(depth(u) == Rational(2));
  CHECK(u.str() == "a1*(-3/2) a4(-1/2) |0>");
  CHECK(parse_state(u.str()) == FockVector(u));
}

TEST_CASE("normal ordering") {
  auto a = gen(1, false, half), b = gen(2, true, -half);
  CHECK(normal_order_monomial({a, b}) == std::vector<OrderedTerm>{{Rational(-1), {b, a}}});
  CHECK(normal_order_monomial({b, a}) == std::vector<OrderedTerm>{{Rational(1), {b, a}}});
  CHECK(normal_order_monomial({a, a}).empty());
  // ∘∘a(0)a^*(0)∘∘ = ½(a a^* − a^* a)
  auto t = normal_order_monomial({z(1, false), z(1, true)});
  CHECK(t.size() == 2);
  for (const auto& s : enumerate_basis(Sector::Ramond, Rational(3, 2))) {
    FockVector v(s);
    FockVector expect = half * apply_word({z(1, false), z(1, true)}, v) - half * apply_word({z(1, true), z(1, false)}, v);
    CHECK(apply_terms(t, v) == expect);
  }
}

TEST_CASE("four zero modes with two contracting pairs") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      auto no = normal_order_monomial({z(i, false), z(i, true), z(j, false), z(j, true)});
      for (const auto& s : enumerate_basis(Sector::Ramond, Rational(3, 2))) {
        FockVector v(s);
        FockVector expect = Rational(1, 4) * v - apply_word({z(i, true), z(j, true), z(i, false), z(j, false)}, v) -
                            half * apply_word({z(i, true), z(i, false)}, v) - half * apply_word({z(j, true), z(j, false)}, v);
        CHECK(apply_terms(no, v) == expect);
      }
    }
}

TEST_CASE("four distinct zero modes are a plain product") {
  std::vector<GeneratorLabel> w = {z(1, true), z(2, false), z(3, true), z(4, true)};
  auto no = normal_order_monomial(w);
  for (const auto& s : enumerate_basis(Sector::Ramond, Rational(3, 2))) {
    FockVector v(s);
    CHECK(apply_terms(no, v) == apply_word(w, v));
  }
  std::vector<GeneratorLabel> all = {z(1, true), z(2, true), z(3, true), z(4, true)};
  CHECK(apply_terms(normal_order_monomial(all), FockVector::vacuum(Sector::Ramond)) ==
        apply_word(all, FockVector::vacuum(Sector::Ramond)));
}

TEST_CASE("quadratic operators") {
  FockVector v = parse_state("a1(-1/2) a3(-1/2) a3*(-1/2) |0>");
  CHECK(apply_quadratic({2, false}, {3, true}, 0, false, v) == parse_state("a1(-1/2) a2(-1/2) a3*(-1/2) |0>"));
  CHECK(apply_quadratic({2, false}, {3, true}, 0, false, FockVector::vacuum(Sector::NS)).is_zero());
  std::mt19937 rng(3);
  auto basis = basis_at_depth(Sector::NS, Rational(2));
  std::uniform_int_distribution<int> c(-4, 4);
  FockVector r(Sector::NS);
  for (const auto& s : basis) r.add(s, Rational(c(rng)));
  for (int k = -2; k <= 2; ++k)
    for (int fa = 1; fa <= 4; ++fa)
      for (int fb = 1; fb <= 4; ++fb) {
        FieldLabel a{fa, false}, b{fb, true};
        CHECK(apply_quadratic(a, b, k, false, r) == -1 * apply_quadratic(b, a, k, false, r));
      }
}

TEST_CASE("quadratic Cartan operator measures the weight") {
  // ∘∘a_i(w)a_i^*(w)∘∘_0 acts on a basis state by its ε_i coordinate
  for (Sector sec : {Sector::NS, Sector::Ramond})
    for (const auto& s : enumerate_basis(sec, Rational(2)))
      for (int i = 1; i <= 4; ++i) {
        FockVector v(s);
        CHECK(apply_quadratic({i, false}, {i, true}, 0, false, v) == d4_weight(s).e[i - 1] * v);
      }
}

TEST_CASE("quartic operators") {
  CHECK(apply_quartic({{{2, false}, {2, true}, {3, false}, {3, true}}}, 0, parse_state("a2(-1/2) a3(-1/2) a4(-1/2) |0>")) ==
        parse_state("a2(-1/2) a3(-1/2) a4(-1/2) |0>"));
  CHECK(apply_quartic({{{1, true}, {2, false}, {3, false}, {4, true}}}, 0, parse_state("a1(-1/2) a4(-1/2) a4*(-1/2) |0>")) ==
        -1 * parse_state("a2(-1/2) a3(-1/2) a4*(-1/2) |0>"));
  CHECK(apply_quartic({{{1, false}, {2, true}, {3, true}, {4, false}}}, 1, parse_state("a2(-1/2) a3(-1/2) a4*(-1/2) |0>")) ==
        -1 * parse_state("a1(-1/2) |0>"));
}

TEST_CASE("basis enumeration") {
  CHECK(basis_at_depth(Sector::NS, Rational(1), 0).size() == 28);
  CHECK(basis_at_depth(Sector::NS, Rational(3, 2)).size() == 64);
  CHECK(basis_at_depth(Sector::Ramond, half, 0).size() == 8);
  CHECK(basis_at_depth(Sector::Ramond, half, 1).size() == 8);
  auto all = enumerate_basis(Sector::NS, Rational(2));
  CHECK(all.size() == 1 + 8 + 28 + 64 + 134);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(depth(all[i - 1]) <= depth(all[i]));
}

TEST_CASE("fock invariants") {
  for (const auto& r : fock_checks()) CHECK_MESSAGE(r.pass, r.check);
}
