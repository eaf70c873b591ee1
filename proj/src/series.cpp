#include "d4g2/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace d4g2 {

Series Series::one(int order) {
  Series s(order);
  s[0] = 1;
  return s;
}

Series Series::monomial(int order, int power, const Rational& coef) {
  Series s(order);
  if (power >= 0 && power <= order) s[power] = coef;
  return s;
}

Series Series::from(int order, const std::vector<long>& coeffs) {
  Series s(order);
  for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k) s[k] = coeffs[k];
  return s;
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = c_[k];
  return s;
}

Series Series::operator-() const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r[k] = -c_[k];
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) c_.resize(o.order() + 1);
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) c_.resize(o.order() + 1);
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int N = std::min(a.order(), b.order());
  Series r(N);
  for (int i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

bool operator==(const Series& a, const Series& b) {
  int N = std::min(a.order(), b.order());
  for (int k = 0; k <= N; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

void Series::mul_binomial(const Rational& coef, int power) {
  if (power == 0) {
    *this *= Rational(1) + coef;
    return;
  }
  for (int k = order(); k >= power; --k) c_[k] += coef * c_[k - power];
}

void Series::div_one_minus(int power) {
  if (power <= 0) throw std::invalid_argument("div_one_minus needs a positive power");
  for (int k = power; k <= order(); ++k) c_[k] += c_[k - power];
}

Series series_arith(const Series& a, const Series& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  return Series();
}

Series series_reciprocal(const Series& a) {
  if (a[0].is_zero()) throw DivisionByZero();
  int N = a.order();
  Series r(N);
  Rational inv0 = Rational(1) / a[0];
  r[0] = inv0;
  for (int k = 1; k <= N; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero()) s += a[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return r;
}

Series substitute_power(const Series& a, int k) {
  int N = a.order();
  Series r(N);
  for (int j = 0; j * k <= N; ++j) r[j * k] = a[j];
  return r;
}

Series negate_variable(const Series& a) {
  Series r = a;
  for (int k = 1; k <= r.order(); k += 2) r[k] = -r[k];
  return r;
}

Series shift(const Series& a, int k) {
  int N = a.order();
  Series r(N);
  for (int j = 0; j + k <= N; ++j)
    if (j + k >= 0) r[j + k] = a[j];
  return r;
}

Series pow(const Series& a, int e) {
  Series r = Series::one(a.order());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

CheckResult compare_series(const std::string& name, const Series& lhs, const Series& rhs) {
  CheckResult r;
  r.check = name;
  r.order = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= r.order; ++k) {
    if (lhs[k] != rhs[k]) {
      r.pass = false;
      r.first_mismatch = k;
      r.lhs = lhs[k].str();
      r.rhs = rhs[k].str();
      break;
    }
  }
  return r;
}

Series euler_phi(int N) {
  Series s = Series::one(N);
  for (int i = 1; i <= N; ++i) s.mul_binomial(Rational(-1), i);
  return s;
}

namespace {

// Σ_k (-1)^k q^{k(ak+b)/2}
Series signed_theta(int N, int a, int b) {
  Series s(N);
  for (long k = -2 * N - 2; k <= 2 * N + 2; ++k) {
    long e = k * (a * k + b);
    if (e % 2 != 0) throw std::logic_error("non-integral theta exponent");
    e /= 2;
    if (e < 0 || e > N) continue;
    s[static_cast<int>(e)] += (k % 2 == 0) ? Rational(1) : Rational(-1);
  }
  return s;
}

Series product_one_minus(int N, int modulus, std::initializer_list<int> residues) {
  Series s = Series::one(N);
  for (int n = 1; n <= N; ++n)
    for (int r : residues) {
      int p = modulus * n - r;
      if (p > 0 && p <= N) s.mul_binomial(Rational(-1), p);
    }
  return s;
}

Series product_inverse_one_minus(int N, int modulus, std::initializer_list<int> residues) {
  Series s = Series::one(N);
  for (int n = 1; n <= N; ++n)
    for (int r : residues) {
      int p = modulus * n - r;
      if (p > 0 && p <= N) s.div_one_minus(p);
    }
  return s;
}

}  // namespace

Series euler_phi_sum(int N) { return signed_theta(N, 3, -1); }

Report jtpi_check(int N) {
  Report rep;
  rep.push_back(compare_series("JTPI specialization u=q v=q^2 (pentagonal)", euler_phi(N), euler_phi_sum(N)));
  rep.push_back(compare_series("JTPI specialization u=q^4 v=q", product_one_minus(N, 5, {0, 1, 4}),
                               signed_theta(N, 5, 3)));
  rep.push_back(compare_series("JTPI specialization u=q^3 v=q^2", product_one_minus(N, 5, {0, 2, 3}),
                               signed_theta(N, 5, 1)));
  return rep;
}

Series rr_a(int N) { return product_inverse_one_minus(N, 5, {2, 3}); }
Series rr_b(int N) { return product_inverse_one_minus(N, 5, {1, 4}); }
Series rr_a_sum(int N) { return signed_theta(N, 5, 3) * series_reciprocal(euler_phi(N)); }
Series rr_b_sum(int N) { return signed_theta(N, 5, 1) * series_reciprocal(euler_phi(N)); }

Series v_series(int N) { return product_one_minus(N, 2, {1}); }

Series v_series_ratio(int N) {
  return euler_phi(N) * series_reciprocal(substitute_power(euler_phi(N), 2));
}

Series c_series(int N) {
  Series r = substitute_power(euler_phi(N), 2) * series_reciprocal(euler_phi(N));
  return Rational(2) * (r * r);
}

Series c_series_from_v(int N) {
  Series v = v_series(N);
  return Rational(2) * series_reciprocal(v * v);
}

Report series_route_checks(int N) {
  Report rep;
  rep.push_back(compare_series("a(q) product = sum form", rr_a(N), rr_a_sum(N)));
  rep.push_back(compare_series("b(q) product = sum form", rr_b(N), rr_b_sum(N)));
  rep.push_back(compare_series("v(q) product = phi(q)/phi(q^2)", v_series(N), v_series_ratio(N)));
  rep.push_back(compare_series("v(-q) = phi(-q)/phi(q^2)", negate_variable(v_series(N)),
                               negate_variable(euler_phi(N)) *
                                   series_reciprocal(substitute_power(euler_phi(N), 2))));
  Series vm = negate_variable(v_series(N));
  Series p2 = substitute_power(euler_phi(N), 2);
  rep.push_back(compare_series("v(-q) = phi(q^2)^2/(phi(q)phi(q^4))", vm,
                               p2 * p2 * series_reciprocal(euler_phi(N) * substitute_power(euler_phi(N), 4))));
  rep.push_back(compare_series("c(t) = 2 phi(t^2)^2/phi(t)^2 = 2/v(t)^2", c_series(N), c_series_from_v(N)));
  rep.push_back(compare_series("1/v(q) = prod (1+q^m)", series_reciprocal(v_series(N)), [&] {
    Series s = Series::one(N);
    for (int m = 1; m <= N; ++m) s.mul_binomial(Rational(1), m);
    return s;
  }()));
  return rep;
}

Rational MinimalModelLabel::c() const {
  return Rational(1) - Rational(6L * (s - t) * (s - t), static_cast<long>(s) * t);
}

Rational MinimalModelLabel::h() const {
  long a = static_cast<long>(m) * t - static_cast<long>(n) * s;
  return Rational(a * a - static_cast<long>(s - t) * (s - t), 4L * s * t);
}

Character minimal_character(const MinimalModelLabel& L, int N) {
  if (std::gcd(L.s, L.t) != 1 || L.s < 2 || L.t < 2 || L.m < 1 || L.m >= L.s || L.n < 1 || L.n >= L.t)
    throw std::invalid_argument("invalid minimal model label");
  long st = static_cast<long>(L.s) * L.t;
  long lin1 = static_cast<long>(L.m) * L.t - static_cast<long>(L.n) * L.s;
  long lin2 = static_cast<long>(L.m) * L.t + static_cast<long>(L.n) * L.s;
  long mn = static_cast<long>(L.m) * L.n;
  long margin = 2 * std::abs(lin2);
  Series sum(N);
  long K = static_cast<long>(std::sqrt(static_cast<double>(N + margin) / st)) + 2;
  for (long k = -K; k <= K; ++k) {
    long e1 = st * k * k + k * lin1;
    long e2 = st * k * k + lin2 * k + mn;
    if (e1 < 0 || e2 < 0) throw std::logic_error("negative exponent in character sum");
    if (e1 <= N) sum[static_cast<int>(e1)] += Rational(1);
    if (e2 <= N) sum[static_cast<int>(e2)] -= Rational(1);
  }
  return {L.h() - L.c() / Rational(24), sum * series_reciprocal(euler_phi(N))};
}

Series normalized_character(const MinimalModelLabel& L, int p, const Rational& norm, int N) {
  Character ch = minimal_character(L, N);
  Rational e = Rational(p) * ch.offset + norm;
  if (!e.is_integer() || e.sign() < 0) throw std::logic_error("character normalization is not a non-negative integer power");
  return shift(substitute_power(ch.gr, p), static_cast<int>(e.to_long()));
}

Report character_form_checks(int N) {
  Report rep;
  Series v = v_series(N), vm = negate_variable(v);
  Series a = rr_a(N), b = rr_b(N);
  Series am = negate_variable(a), bm = negate_variable(b);
  Rational half(1, 2);
  Rational n34(1, 24), n45(7, 120), n45b(-17, 120);
  rep.push_back(compare_series("chi(2,5;1,1) = q^{11/60} prod 1/((1-q^{5n+2})(1-q^{5n+3}))",
                               normalized_character({2, 5, 1, 1}, 1, Rational(-11, 60), N), a));
  rep.push_back(compare_series("chi(2,5;1,2) = q^{-1/60} prod 1/((1-q^{5n+1})(1-q^{5n+4}))",
                               normalized_character({2, 5, 1, 2}, 1, Rational(1, 60), N), b));
  rep.push_back(compare_series("chi(3,4;1,1)(q^2) q^{1/24} = (v(-q)+v(q))/2",
                               normalized_character({3, 4, 1, 1}, 2, n34, N), half * (vm + v)));
  rep.push_back(compare_series("chi(3,4;1,3)(q^2) q^{1/24} = (v(-q)-v(q))/2",
                               normalized_character({3, 4, 1, 3}, 2, n34, N), half * (vm - v)));
  rep.push_back(compare_series("chi(3,4;1,2)(q) q^{-1/24} = 1/v(q)",
                               normalized_character({3, 4, 1, 2}, 1, Rational(-1, 24), N), series_reciprocal(v)));
  rep.push_back(compare_series("chi(4,5;1,1)(q^2) q^{7/120} = (v(-q)b(-q)+v(q)b(q))/2",
                               normalized_character({4, 5, 1, 1}, 2, n45, N), half * (vm * bm + v * b)));
  rep.push_back(compare_series("chi(4,5;1,4)(q^2) q^{7/120} = (v(-q)b(-q)-v(q)b(q))/2",
                               normalized_character({4, 5, 1, 4}, 2, n45, N), half * (vm * bm - v * b)));
  rep.push_back(compare_series("chi(4,5;1,2)(q^2) q^{-17/120} = (v(-q)a(-q)+v(q)a(q))/2",
                               normalized_character({4, 5, 1, 2}, 2, n45b, N), half * (vm * am + v * a)));
  rep.push_back(compare_series("chi(4,5;1,3)(q^2) q^{-17/120} = (v(-q)a(-q)-v(q)a(q))/2",
                               normalized_character({4, 5, 1, 3}, 2, n45b, N), half * (vm * am - v * a)));
  Series vinv = series_reciprocal(v);
  rep.push_back(compare_series("chi(4,5;2,1)(q) q^{-49/120} = a(q^2)/v(q)",
                               normalized_character({4, 5, 2, 1}, 1, Rational(-49, 120), N),
                               substitute_power(a, 2) * vinv));
  rep.push_back(compare_series("chi(4,5;2,2)(q) q^{-1/120} = b(q^2)/v(q)",
                               normalized_character({4, 5, 2, 2}, 1, Rational(-1, 120), N),
                               substitute_power(b, 2) * vinv));
  return rep;
}

Series clifford_principal_gr(int N) {
  Series p = euler_phi(N);
  return substitute_power(p, 2) * substitute_power(p, 6) * series_reciprocal(p * substitute_power(p, 3));
}

Series clifford_principal_product(int N, bool ramond, bool parity_signed) {
  Rational s = parity_signed ? Rational(-1) : Rational(1);
  Series r = Series::one(N);
  if (!ramond) {
    for (int m = 0; 6 * m <= N; ++m)
      for (int i = 1; i <= 4; ++i) {
        int e1 = i - 4 + 6 * m + 3, e2 = 4 - i + 6 * m + 3;
        if (e1 <= N) r.mul_binomial(s, e1);
        if (e2 <= N) r.mul_binomial(s, e2);
      }
  } else {
    for (int i = 1; i <= 4; ++i) r.mul_binomial(s, 4 - i);
    for (int n = 1; 6 * n - 3 <= N; ++n)
      for (int i = 1; i <= 4; ++i) {
        int e1 = i - 4 + 6 * n, e2 = 4 - i + 6 * n;
        if (e1 <= N) r.mul_binomial(s, e1);
        if (e2 <= N) r.mul_binomial(s, e2);
      }
  }
  return r;
}

Series g2_fock_factor(int N) {
  Series p = euler_phi(N);
  return substitute_power(p, 2) * substitute_power(p, 3) * series_reciprocal(p * substitute_power(p, 6));
}

Series g2_fock_factor_product(int N) { return product_inverse_one_minus(N, 6, {5, 1}); }

Series g2_principal_gr(int j, int N) {
  if (j != 0 && j != 2) throw std::invalid_argument("G2 module index must be 0 or 2");
  Series f = g2_fock_factor(N);
  return f * substitute_power(j == 0 ? rr_a(N) : rr_b(N), 3);
}

Series even_part(const Series& a) {
  Series r = a;
  for (int k = 1; k <= r.order(); k += 2) r[k] = 0;
  return r;
}

Series odd_part(const Series& a) {
  Series r = a;
  for (int k = 0; k <= r.order(); k += 2) r[k] = 0;
  return r;
}

Branching branching_series(int N) {
  Series vm = negate_variable(v_series(N));
  Series w = vm * vm;
  return {negate_variable(rr_b(N)) * w, negate_variable(rr_a(N)) * w};
}

Branching branching_series_matrix(int N) {
  Series a = rr_a(N), b = rr_b(N);
  Series am = negate_variable(a), bm = negate_variable(b);
  Series D = -(a * bm) - am * b;
  Series Dinv = series_reciprocal(D);
  Series c = c_series(N);
  // D^{-1} [[-b(-t), -b(t)], [-a(-t), a(t)]] [c, 0]^T
  return {-(bm * c) * Dinv, -(am * c) * Dinv};
}

Report principal_checks(int N) {
  Report rep;
  Series gr = clifford_principal_gr(N);
  Series two_gr = Rational(2) * gr;
  rep.push_back(compare_series("NS principal product = 2 phi(u^2)phi(u^6)/(phi(u)phi(u^3))",
                               clifford_principal_product(N, false), two_gr));
  rep.push_back(compare_series("Ramond principal product = 2 phi(u^2)phi(u^6)/(phi(u)phi(u^3))",
                               clifford_principal_product(N, true), two_gr));
  Series pp = Series::one(N);
  for (int n = 1; n <= N; ++n) {
    pp.mul_binomial(Rational(1), n);
    if (3 * n <= N) pp.mul_binomial(Rational(1), 3 * n);
  }
  rep.push_back(compare_series("NS principal product = 2 prod (1+u^n)(1+u^{3n})", clifford_principal_product(N, false),
                               Rational(2) * pp));
  rep.push_back(compare_series("NS parity-signed principal product vanishes (gr V0 = gr V1)",
                               clifford_principal_product(N, false, true), Series(N)));
  rep.push_back(compare_series("Ramond parity-signed principal product vanishes (gr V2 = gr V3)",
                               clifford_principal_product(N, true, true), Series(N)));
  Series F = g2_fock_factor(N);
  rep.push_back(compare_series("F(u) ratio = prod 1/((1-u^{6n-5})(1-u^{6n-1}))", F, g2_fock_factor_product(N)));
  rep.push_back(compare_series("F(u) ratio = v(u^3)/v(u)", F,
                               substitute_power(v_series(N), 3) * series_reciprocal(v_series(N))));

  // decomposition of the principal graded dimensions, in u with t = u^3
  int Nt = N / 3;
  Branching br = branching_series(Nt);
  Series Ae = substitute_power(even_part(br.A).truncated(N), 3), Ao = substitute_power(odd_part(br.A).truncated(N), 3);
  Series Be = substitute_power(even_part(br.B).truncated(N), 3), Bo = substitute_power(odd_part(br.B).truncated(N), 3);
  Series W0 = g2_principal_gr(0, N), W2 = g2_principal_gr(2, N);
  rep.push_back(compare_series("gr V0 = A_even(u^3) F a(u^3) + B_odd(u^3) F b(u^3)", gr, Ae * W0 + Bo * W2));
  rep.push_back(compare_series("gr V1 = A_odd(u^3) F a(u^3) + B_even(u^3) F b(u^3)", gr, Ao * W0 + Be * W2));
  Series p = euler_phi(N);
  rep.push_back(compare_series("gr(CM)/F(u) = phi(u^6)^2/phi(u^3)^2", gr * series_reciprocal(F),
                               substitute_power(p, 6) * substitute_power(p, 6) *
                                   series_reciprocal(substitute_power(p, 3) * substitute_power(p, 3))));
  return rep;
}

Report branching_checks(int N) {
  Report rep;
  Branching br = branching_series(N), bm = branching_series_matrix(N);
  rep.push_back(compare_series("A(t) closed form = matrix solve", br.A, bm.A));
  rep.push_back(compare_series("B(t) closed form = matrix solve", br.B, bm.B));
  rep.push_back(compare_series("A(t) = b(-t)c(t)/c(t^2)", br.A,
                               negate_variable(rr_b(N)) * c_series(N) *
                                   series_reciprocal(substitute_power(c_series(N), 2))));
  bool nonneg = true;
  for (int k = 0; k <= N; ++k)
    if (!br.A[k].is_integer() || br.A[k].sign() < 0 || !br.B[k].is_integer() || br.B[k].sign() < 0) nonneg = false;
  rep.push_back(make_check("A(t), B(t) coefficients are non-negative integers", nonneg));
  rep.back().order = N;
  Series phi = euler_phi(N);
  Series lhs = substitute_power(phi, 2) * substitute_power(phi, 2) * series_reciprocal(phi * phi);
  Series a = rr_a(N), b = rr_b(N);
  rep.push_back(compare_series("phi(t^2)^2/phi(t)^2 = A_even a + B_odd b", lhs,
                               even_part(br.A) * a + odd_part(br.B) * b));
  rep.push_back(compare_series("phi(t^2)^2/phi(t)^2 = A_odd a + B_even b", lhs,
                               odd_part(br.A) * a + even_part(br.B) * b));
  rep.push_back(compare_series("A(t)a(t) + B(t)b(t) = c(t)", br.A * a + br.B * b, c_series(N)));
  rep.push_back(compare_series("A(-t)a(t) - B(-t)b(t) = 0", negate_variable(br.A) * a - negate_variable(br.B) * b,
                               Series(N)));
  Series vm = negate_variable(v_series(N));
  rep.push_back(compare_series("c(t)/c(t^2) = v(-t)^2", c_series(N) * series_reciprocal(substitute_power(c_series(N), 2)),
                               vm * vm));
  return rep;
}

Report ramanujan_checks(int N) {
  Report rep;
  Series a = rr_a(N), b = rr_b(N);
  Series D = -(a * negate_variable(b)) - negate_variable(a) * b;
  rep.push_back(compare_series("D(t) = -a(t)b(-t) - a(-t)b(t) = -c(t^2)", D, -substitute_power(c_series(N), 2)));
  rep.push_back(make_check("D(t) constant term -2", D[0] == Rational(-2)));
  rep.push_back(compare_series("D(t) has only even exponents", odd_part(D), Series(N)));
  Series phi = euler_phi(N);
  Series p2 = substitute_power(phi, 2), p4 = substitute_power(phi, 4);
  Series rhs = p2 * p2 * p2 * p2 * series_reciprocal(p4 * p4 * phi * phi);
  Series a4 = substitute_power(a, 4), b4 = substitute_power(b, 4);
  rep.push_back(compare_series("b(t)b(t^4) + t a(t)a(t^4) = phi(t^2)^4/(phi(t^4)^2 phi(t)^2)", b * b4 + shift(a * a4, 1),
                               rhs));
  Series vm = negate_variable(v_series(N)), v = v_series(N);
  rep.push_back(compare_series("t a(t)a(t^4) + b(t)b(t^4) = v(-t)^2", shift(a * a4, 1) + b * b4, vm * vm));
  rep.push_back(compare_series("t a(-t)a(t^4) - b(-t)b(t^4) = -v(t)^2",
                               shift(negate_variable(a) * a4, 1) - negate_variable(b) * b4, -(v * v)));
  return rep;
}

Report decomposition_identities(int N) {
  Report rep;
  Branching br = branching_series(N);
  Series Am = negate_variable(br.A), Bm = negate_variable(br.B);
  Rational half(1, 2);
  Series Ap = half * (br.A + Am), Aq = half * (br.A - Am);
  Series Bp = half * (br.B + Bm), Bq = half * (br.B - Bm);

  Rational n34(1, 24), n45(7, 120), n45b(-17, 120);
  Series x11 = normalized_character({3, 4, 1, 1}, 2, n34, N);
  Series x13 = normalized_character({3, 4, 1, 3}, 2, n34, N);
  Series y11 = normalized_character({4, 5, 1, 1}, 2, n45, N);
  Series y14 = normalized_character({4, 5, 1, 4}, 2, n45, N);
  Series y12 = normalized_character({4, 5, 1, 2}, 2, n45b, N);
  Series y13 = normalized_character({4, 5, 1, 3}, 2, n45b, N);
  Series x12 = normalized_character({3, 4, 1, 2}, 2, Rational(-1, 12), N);
  Series y21 = normalized_character({4, 5, 2, 1}, 2, Rational(-49, 60), N);
  Series y22 = normalized_character({4, 5, 2, 2}, 2, Rational(-1, 60), N);

  Series r0 = x11 * y11 + x13 * y14, r1 = x11 * y14 + x13 * y11;
  Series r2 = x11 * y13 + x13 * y12, r3 = x11 * y12 + x13 * y13;
  rep.push_back(compare_series("V0/Omega0 (A(t)+A(-t))/2 in characters", Ap, r0));
  rep.push_back(compare_series("V1/Omega0 (A(t)-A(-t))/2 in characters", Aq, r1));
  rep.push_back(compare_series("V0/Omega2 (B(t)-B(-t))/2 in characters", Bq, r2));
  rep.push_back(compare_series("V1/Omega2 (B(t)+B(-t))/2 in characters", Bp, r3));
  rep.push_back(compare_series("V2,V3/Omega0 (A(t)-A(-t))/2 = t chi(3,4;1,2) chi(4,5;2,1)", Aq, shift(x12 * y21, 1)));
  rep.push_back(compare_series("V2,V3/Omega2 (B(t)+B(-t))/2 = chi(3,4;1,2) chi(4,5;2,2)", Bp, x12 * y22));

  Series v = v_series(N), vm = negate_variable(v);
  Series a = rr_a(N), b = rr_b(N);
  Series vp = half * (vm + v), vq = half * (vm - v);
  Series vbp = half * (vm * negate_variable(b) + v * b), vbq = half * (vm * negate_variable(b) - v * b);
  Series vap = half * (vm * negate_variable(a) + v * a), vaq = half * (vm * negate_variable(a) - v * a);
  rep.push_back(compare_series("(A(t)+A(-t))/2 = v+ [vb]+ + v- [vb]-", Ap, vp * vbp + vq * vbq));
  rep.push_back(compare_series("(A(t)-A(-t))/2 = v+ [vb]- + v- [vb]+", Aq, vp * vbq + vq * vbp));
  rep.push_back(compare_series("(B(t)-B(-t))/2 = v+ [va]- + v- [va]+", Bq, vp * vaq + vq * vap));
  rep.push_back(compare_series("(B(t)+B(-t))/2 = v+ [va]+ + v- [va]-", Bp, vp * vap + vq * vaq));
  Series c2 = substitute_power(c_series(N), 2);
  rep.push_back(compare_series("(A(t)-A(-t))/2 = t c(t^2) a(t^4)/2", Aq, shift(half * c2 * substitute_power(a, 4), 1)));
  rep.push_back(compare_series("(B(t)+B(-t))/2 = c(t^2) b(t^4)/2", Bp, half * c2 * substitute_power(b, 4)));
  rep.push_back(compare_series("sum of the four NS decompositions = A(t) + B(t)", r0 + r1 + r2 + r3, br.A + br.B));
  return rep;
}

Series horizontal_gr(Sector sector, int N) {
  Series s = Series::one(N);
  if (sector == Sector::NS) {
    for (int n = 1; n <= N; n += 2)
      for (int i = 0; i < 8; ++i) s.mul_binomial(Rational(1), n);
  } else {
    for (int n = 2; n <= N; n += 2)
      for (int i = 0; i < 8; ++i) s.mul_binomial(Rational(1), n);
    s *= Rational(16);
  }
  return s;
}

Report jacobi_abs_check(int N) {
  Report rep;
  Series p = Series::one(N), m = Series::one(N), r = Series::one(N);
  for (int n = 0; 2 * n + 1 <= N; ++n)
    for (int i = 0; i < 8; ++i) {
      p.mul_binomial(Rational(1), 2 * n + 1);
      m.mul_binomial(Rational(-1), 2 * n + 1);
    }
  for (int n = 1; 2 * n <= N; ++n)
    for (int i = 0; i < 8; ++i) r.mul_binomial(Rational(1), 2 * n);
  Series rhs = shift(Rational(16) * r, 1);
  rep.push_back(compare_series("prod(1+q^{2n+1})^8 - prod(1-q^{2n+1})^8 = 16q prod(1+q^{2n})^8", p - m, rhs));
  rep.push_back(compare_series("Jacobi left side has only odd exponents", even_part(p - m), Series(N)));
  // NS horizontal in x = q^{1/2}, with x -> q gives the q^2-substituted form
  rep.push_back(compare_series("NS horizontal gr equals prod(1+q^{2n+1})^8 after q -> q^2", horizontal_gr(Sector::NS, N), p));
  return rep;
}

Report all_series_checks(int N) {
  Report rep;
  append(rep, jtpi_check(N));
  append(rep, series_route_checks(N));
  append(rep, character_form_checks(N));
  append(rep, principal_checks(N));
  append(rep, branching_checks(N));
  append(rep, ramanujan_checks(N));
  append(rep, decomposition_identities(N));
  append(rep, jacobi_abs_check(N));
  return rep;
}

}  // namespace d4g2
