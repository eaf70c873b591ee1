#pragma once

#include <string>
#include <vector>

#include "d4g2/report.hpp"
#include "d4g2/scalars.hpp"
#include "d4g2/sector.hpp"

namespace d4g2 {

// Truncated power series c_0 + c_1 x + ... + c_N x^N.
class Series {
 public:
  explicit Series(int order = 0) : c_(order + 1) {}
  static Series one(int order);
  static Series monomial(int order, int power, const Rational& coef = Rational(1));
  static Series from(int order, const std::vector<long>& coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Series truncated(int order) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend bool operator==(const Series& a, const Series& b);

  // in-place (1 + coef x^p) and 1/(1 - x^p)
  void mul_binomial(const Rational& coef, int power);
  void div_one_minus(int power);

 private:
  std::vector<Rational> c_;
};

enum class SeriesOp { add, sub, mul };
Series series_arith(const Series& a, const Series& b, SeriesOp op);
Series series_reciprocal(const Series& a);
Series substitute_power(const Series& a, int k);
Series negate_variable(const Series& a);
Series shift(const Series& a, int k);
Series pow(const Series& a, int e);

CheckResult compare_series(const std::string& name, const Series& lhs, const Series& rhs);

Series euler_phi(int N);
Series euler_phi_sum(int N);
Report jtpi_check(int N);

Series rr_a(int N);
Series rr_b(int N);
Series rr_a_sum(int N);
Series rr_b_sum(int N);
Series v_series(int N);
Series v_series_ratio(int N);
Series c_series(int N);
Series c_series_from_v(int N);
Report series_route_checks(int N);

struct MinimalModelLabel {
  int s, t, m, n;
  Rational c() const;
  Rational h() const;
};

struct Character {
  Rational offset;
  Series gr;
};

Character minimal_character(const MinimalModelLabel& label, int N);
// q^{p*offset + norm} gr(q^p); the exponent must be a non-negative integer
Series normalized_character(const MinimalModelLabel& label, int p, const Rational& norm, int N);
Report character_form_checks(int N);

Series clifford_principal_gr(int N);
Series clifford_principal_product(int N, bool ramond, bool parity_signed = false);
Series g2_fock_factor(int N);
Series g2_fock_factor_product(int N);
Series g2_principal_gr(int j, int N);
Report principal_checks(int N);

struct Branching {
  Series A, B;
};
Branching branching_series(int N);
Branching branching_series_matrix(int N);
Series even_part(const Series& a);
Series odd_part(const Series& a);
Report branching_checks(int N);
Report ramanujan_checks(int N);
Report decomposition_identities(int N);

// coefficient of x^k counts states at depth base + k/2, with x = q^{1/2}
Series horizontal_gr(Sector sector, int N);
Report jacobi_abs_check(int N);

Report all_series_checks(int N);

}  // namespace d4g2
