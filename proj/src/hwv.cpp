#include "d4g2/hwv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace d4g2 {

namespace {

const Rational half(1, 2);
const Rational seven_tenths(7, 10);

FockVector combine(const std::vector<FockState>& basis, const std::vector<Rational>& c) {
  FockVector v(basis.empty() ? Sector::NS : basis[0].sector());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) v.add(basis[i], c[i]);
  return v;
}

// first nonzero coordinate becomes 1
void normalize(std::vector<Rational>& c) {
  for (const auto& x : c)
    if (!x.is_zero()) {
      Rational inv = Rational(1) / x;
      for (auto& y : c) y *= inv;
      return;
    }
}

// coordinates of images of op on span(vs) in the basis vs (which is assumed invariant)
RationalMatrix restrict_operator(const OperatorSpec& op, const std::vector<FockState>& basis,
                                 const std::vector<std::vector<Rational>>& vs) {
  const std::size_t n = vs.size();
  std::map<FockState, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  RationalMatrix sys(basis.size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) sys[i][j] = vs[j][i];
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    FockVector img = op.apply(combine(basis, vs[j]));
    std::vector<Rational> rhs(basis.size());
    for (const auto& [s, x] : img.terms()) {
      auto it = index.find(s);
      if (it == index.end()) throw std::runtime_error("L0 image leaves the candidate span");
      rhs[it->second] = x;
    }
    auto sol = solve(sys, rhs, n);
    if (!sol) throw std::runtime_error("L0 image leaves the solution space");
    for (std::size_t i = 0; i < n; ++i) out[i][j] = (*sol)[i];
  }
  return out;
}

// eigenvectors (as coordinate vectors) of a over the span of the given columns
std::vector<std::pair<Rational, std::vector<std::vector<Rational>>>> eigenspaces(const RationalMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::pair<Rational, std::vector<std::vector<Rational>>>> out;
  std::size_t total = 0;
  for (const auto& [lam, mult] : rational_eigenvalues(a)) {
    RationalMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m[i][i] -= lam;
    auto ns = nullspace(m, n);
    if (static_cast<int>(ns.size()) != mult) throw std::runtime_error("non-diagonalizable L0 restriction");
    total += ns.size();
    out.push_back({lam, ns});
  }
  if (total != n) throw std::runtime_error("L0 restriction has irrational eigenvalues");
  return out;
}

std::vector<std::vector<Rational>> apply_coords(const std::vector<std::vector<Rational>>& basis,
                                                const std::vector<std::vector<Rational>>& coords) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : coords) {
    std::vector<Rational> v(basis.empty() ? 0 : basis[0].size());
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero())
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * basis[j][i];
    out.push_back(std::move(v));
  }
  return out;
}

mpz_class gcd_z(mpz_class a, mpz_class b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> d;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

// p(x) with coefficients c[0] + c[1] x + ...
Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational r;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::vector<Rational> divide_linear(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    carry = c[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

}  // namespace

Sector module_sector(Module m) { return (m == Module::V0 || m == Module::V1) ? Sector::NS : Sector::Ramond; }
int module_parity(Module m) { return (m == Module::V1 || m == Module::V3) ? 1 : 0; }

std::string module_name(Module m) {
  switch (m) {
    case Module::V0: return "V0";
    case Module::V1: return "V1";
    case Module::V2: return "V2";
    case Module::V3: return "V3";
  }
  return "?";
}

Module parse_module(const std::string& s) {
  for (Module m : {Module::V0, Module::V1, Module::V2, Module::V3})
    if (module_name(m) == s) return m;
  throw std::invalid_argument("unknown module " + s);
}

std::string g2_label_name(G2Label w) { return w == G2Label::omega0 ? "Omega0" : "Omega2"; }

G2Weight g2_target(G2Label w) { return w == G2Label::omega0 ? G2Weight{0, 0} : G2Weight{0, 1}; }

std::string HWVLabel::str() const {
  return "(" + module_name(module) + ", " + depth.str() + ", " + h12.str() + ", " + h710.str() + ", " +
         g2_label_name(weight) + ")";
}

std::vector<FockState> candidate_basis(Module m, const Rational& depth_value, G2Label w) {
  std::vector<FockState> out;
  const G2Weight target = g2_target(w);
  for (const auto& s : basis_at_depth(module_sector(m), depth_value, module_parity(m)))
    if (project_to_g2(d4_weight(s)) == target) out.push_back(s);
  return out;
}

const std::vector<OperatorSpec>& positive_operators(Sector sector) {
  static const std::vector<OperatorSpec> ns = {
      g2_simple_op(G2Root::beta1), g2_simple_op(G2Root::beta2), g2_simple_op(G2Root::minus_theta),
      coset_L(1, half, Sector::NS), coset_L(2, half, Sector::NS), coset_L(1, seven_tenths, Sector::NS),
      coset_L(2, seven_tenths, Sector::NS)};
  static const std::vector<OperatorSpec> ra = {
      g2_simple_op(G2Root::beta1), g2_simple_op(G2Root::beta2), g2_simple_op(G2Root::minus_theta),
      coset_L(1, half, Sector::Ramond), coset_L(2, half, Sector::Ramond), coset_L(1, seven_tenths, Sector::Ramond),
      coset_L(2, seven_tenths, Sector::Ramond)};
  return sector == Sector::NS ? ns : ra;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev–LeVerrier: c[n] = 1, M_k = A M_{k−1} + c_{n−k+1} I, c_{n−k} = −tr(A M_k)/k
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    RationalMatrix am = mat_mul(a, m);
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<std::pair<Rational, int>> rational_eigenvalues(const RationalMatrix& a) {
  std::vector<Rational> p = characteristic_polynomial(a);
  std::vector<std::pair<Rational, int>> out;
  int zero = 0;
  while (p.size() > 1 && p[0].is_zero()) {
    p.erase(p.begin());
    ++zero;
  }
  if (zero > 0) out.push_back({Rational(0), zero});
  // integer coefficients
  mpz_class l = 1;
  for (const auto& x : p) {
    mpz_class d = x.den();
    l = l / gcd_z(l, d) * d;
  }
  std::vector<mpz_class> z;
  for (const auto& x : p) z.push_back(mpq_class(x.raw() * l).get_num());
  std::vector<Rational> cands;
  if (p.size() > 1)
    for (const auto& num : divisors(z.front()))
      for (const auto& den : divisors(z.back()))
        for (int s : {1, -1}) cands.push_back(Rational(mpq_class(mpz_class(s * num), den)));
  std::map<Rational, int> found;
  for (const auto& r : cands) {
    if (found.count(r)) continue;
    int mult = 0;
    while (p.size() > 1 && eval_poly(p, r).is_zero()) {
      p = divide_linear(p, r);
      ++mult;
    }
    if (mult > 0) found[r] = mult;
  }
  for (const auto& [r, m] : found) out.push_back({r, m});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<HWVSolution> solve_hwv(Module m, const Rational& depth_value, G2Label w) {
  const Sector sec = module_sector(m);
  const auto cand = candidate_basis(m, depth_value, w);
  if (cand.empty()) return {};
  std::map<FockState, std::size_t> row_of;
  std::vector<std::vector<FockVector>> images;
  for (const auto& op : positive_operators(sec)) {
    std::vector<FockVector> col;
    for (const auto& s : cand) {
      col.push_back(op.apply(s));
      for (const auto& [t, x] : col.back().terms()) row_of.emplace(t, 0);
    }
    images.push_back(std::move(col));
  }
  // one block of rows per operator, indexed over every target state
  std::size_t idx = 0;
  for (auto& [t, i] : row_of) i = idx++;
  RationalMatrix sys(images.size() * row_of.size(), std::vector<Rational>(cand.size()));
  for (std::size_t o = 0; o < images.size(); ++o)
    for (std::size_t j = 0; j < cand.size(); ++j)
      for (const auto& [t, x] : images[o][j].terms()) sys[o * row_of.size() + row_of[t]][j] = x;
  auto ns = nullspace(sys, cand.size());
  if (ns.empty()) return {};

  RationalMatrix a12 = restrict_operator(coset_L(0, half, sec), cand, ns);
  std::vector<HWVSolution> out;
  for (const auto& [h12, sp12] : eigenspaces(a12)) {
    auto vs12 = apply_coords(ns, sp12);
    RationalMatrix a710 = restrict_operator(coset_L(0, seven_tenths, sec), cand, vs12);
    for (const auto& [h710, sp] : eigenspaces(a710)) {
      auto vs = apply_coords(vs12, sp);
      for (auto& c : vs) {
        normalize(c);
        out.push_back({combine(cand, c), h12, h710});
      }
    }
  }
  return out;
}

Rational g2_casimir_eigenvalue(const FockVector& v) {
  const auto pairs = dual_pairs(subalgebra_bases().g0);
  FockVector img = sugawara_L(pairs, 4, 0, v);
  if (v.is_zero()) return Rational(0);
  const auto& [s, x] = *v.terms().begin();
  Rational h = img.coeff(s) / x;
  if (img != h * v) throw std::runtime_error("not an eigenvector of the G2 zero mode");
  return h;
}

const std::vector<ReferenceHWV>& reference_hwvs() {
  static const std::vector<ReferenceHWV> list = [] {
    auto st = [](const std::string& s) { return parse_state(s); };
    auto q = [&](const std::string& a, const std::string& b, const std::string& c) {
      return st("a" + a + "(-1/2) a" + b + "(-1/2) a" + c + "(-1/2) |0>");
    };
    auto q4 = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
      return st("a" + a + "(-1/2) a" + b + "(-1/2) a" + c + "(-1/2) a" + d + "(-1/2) |0>");
    };
    const Rational h = half;
    std::vector<ReferenceHWV> l;
    l.push_back({{Module::V0, 0, 0, 0, G2Label::omega0}, FockVector::vacuum(Sector::NS)});
    l.push_back({{Module::V0, 1, h, Rational(1, 10), G2Label::omega2},
                 st("a1(-1/2) a4(-1/2) |0>") + st("a1(-1/2) a4*(-1/2) |0>")});
    l.push_back({{Module::V0, 1, 0, Rational(3, 5), G2Label::omega2},
                 Rational(2) * st("a2(-1/2) a3(-1/2) |0>") - st("a1(-1/2) a4(-1/2) |0>") + st("a1(-1/2) a4*(-1/2) |0>")});
    l.push_back({{Module::V0, 2, h, Rational(3, 2), G2Label::omega0},
                 q4("1", "1*", "4", "4*") - q4("2", "2*", "4", "4*") - q4("3", "3*", "4", "4*") + q4("1*", "2", "3", "4") +
                     q4("1*", "2", "3", "4*") + q4("1", "2*", "3*", "4") + q4("1", "2*", "3*", "4*")});
    l.push_back({{Module::V1, h, h, 0, G2Label::omega0}, st("a4(-1/2) |0>") + st("a4*(-1/2) |0>")});
    l.push_back({{Module::V1, h, 0, Rational(1, 10), G2Label::omega2}, st("a1(-1/2) |0>")});
    l.push_back({{Module::V1, Rational(3, 2), h, Rational(3, 5), G2Label::omega2},
                 q("2", "3", "4") + q("2", "3", "4*") - q("1", "4", "4*")});
    l.push_back({{Module::V1, Rational(3, 2), 0, Rational(3, 2), G2Label::omega0},
                 q("1", "1*", "4") - q("1", "1*", "4*") - q("2", "2*", "4") + q("2", "2*", "4*") - q("3", "3*", "4") +
                     q("3", "3*", "4*") + Rational(2) * (q("1*", "2", "3") + q("1", "2*", "3*"))});
    const Rational r16(1, 16);
    l.push_back({{Module::V2, h, r16, Rational(3, 80), G2Label::omega2}, FockVector::vacuum(Sector::Ramond)});
    l.push_back({{Module::V2, h, r16, Rational(7, 16), G2Label::omega0},
                 st("a1*(0) a4*(0) |0'>") - st("a2*(0) a3*(0) |0'>")});
    l.push_back({{Module::V3, h, r16, Rational(3, 80), G2Label::omega2}, st("a4*(0) |0'>")});
    l.push_back({{Module::V3, h, r16, Rational(7, 16), G2Label::omega0},
                 st("a1*(0) |0'>") + st("a2*(0) a3*(0) a4*(0) |0'>")});
    return l;
  }();
  return list;
}

}  // namespace d4g2
