#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace d4g2 {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  long to_long() const { return v_.get_num().get_si(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

enum class RatOp { add, sub, mul, div };
Rational rat_arith(const Rational& a, const Rational& b, RatOp op);

// re + xi * ξ, with ξ² = -1 - ξ
class EisensteinRational {
 public:
  EisensteinRational() = default;
  EisensteinRational(const Rational& re) : re_(re) {}
  EisensteinRational(long re) : re_(re) {}
  EisensteinRational(int re) : re_(re) {}
  EisensteinRational(const Rational& re, const Rational& xi) : re_(re), xi_(xi) {}
  static EisensteinRational xi() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& xi_part() const { return xi_; }
  bool is_zero() const { return re_.is_zero() && xi_.is_zero(); }
  bool is_rational() const { return xi_.is_zero(); }
  EisensteinRational conj() const;
  Rational norm() const;
  EisensteinRational inverse() const;
  std::string str() const;

  EisensteinRational operator-() const { return {-re_, -xi_}; }
  EisensteinRational& operator+=(const EisensteinRational& o);
  EisensteinRational& operator-=(const EisensteinRational& o);
  EisensteinRational& operator*=(const EisensteinRational& o);
  EisensteinRational& operator/=(const EisensteinRational& o) { return *this *= o.inverse(); }

  friend EisensteinRational operator+(EisensteinRational a, const EisensteinRational& b) { return a += b; }
  friend EisensteinRational operator-(EisensteinRational a, const EisensteinRational& b) { return a -= b; }
  friend EisensteinRational operator*(EisensteinRational a, const EisensteinRational& b) { return a *= b; }
  friend EisensteinRational operator/(EisensteinRational a, const EisensteinRational& b) { return a /= b; }
  friend bool operator==(const EisensteinRational& a, const EisensteinRational& b) {
    return a.re_ == b.re_ && a.xi_ == b.xi_;
  }
  friend bool operator!=(const EisensteinRational& a, const EisensteinRational& b) { return !(a == b); }

 private:
  Rational re_, xi_;
};

enum class EisOp { add, mul, conj };
EisensteinRational eis_arith(const EisensteinRational& a, const EisensteinRational& b, EisOp op);

using Eis = EisensteinRational;

}  // namespace d4g2
