#include "d4g2/scalars.hpp"

namespace d4g2 {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
  mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational rat_arith(const Rational& a, const Rational& b, RatOp op) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
    case RatOp::div: return a / b;
  }
  return {};
}

EisensteinRational EisensteinRational::conj() const {
  // a + bξ² = (a - b) - bξ
  return {re_ - xi_, -xi_};
}

Rational EisensteinRational::norm() const { return re_ * re_ - re_ * xi_ + xi_ * xi_; }

EisensteinRational EisensteinRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  EisensteinRational c = conj();
  return {c.re_ / n, c.xi_ / n};
}

std::string EisensteinRational::str() const {
  if (xi_.is_zero()) return re_.str();
  std::string x = xi_ == Rational(1) ? "xi" : xi_ == Rational(-1) ? "-xi" : xi_.str() + "*xi";
  if (re_.is_zero()) return x;
  if (x[0] == '-') return re_.str() + " - " + x.substr(1);
  return re_.str() + " + " + x;
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& o) {
  re_ += o.re_;
  xi_ += o.xi_;
  return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& o) {
  re_ -= o.re_;
  xi_ -= o.xi_;
  return *this;
}

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& o) {
  // (a + bξ)(c + dξ) = ac - bd + (ad + bc - bd)ξ
  Rational bd = xi_ * o.xi_;
  Rational r = re_ * o.re_ - bd;
  Rational x = re_ * o.xi_ + xi_ * o.re_ - bd;
  re_ = std::move(r);
  xi_ = std::move(x);
  return *this;
}

EisensteinRational eis_arith(const EisensteinRational& a, const EisensteinRational& b, EisOp op) {
  switch (op) {
    case EisOp::add: return a + b;
    case EisOp::mul: return a * b;
    case EisOp::conj: return a.conj();
  }
  return {};
}

}  // namespace d4g2
