#include "d4g2/chevalley.hpp"

#include <algorithm>
#include <bit>

namespace d4g2 {

namespace {

int popcount(unsigned x) { return std::popcount(x); }

std::string subscript_string(unsigned mask) {
  std::string s;
  for (int i = 1; i <= 4; ++i)
    if (mask & (1u << (i - 1))) s += std::to_string(i);
  return s;
}

std::string coefficient_prefix(const Eis& c, bool first) {
  if (c.is_rational()) {
    const Rational& r = c.re();
    std::string sign = r.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rational a = r.sign() < 0 ? -r : r;
    if (a == Rational(1)) return sign;
    return sign + a.str() + "*";
  }
  return std::string(first ? "" : " + ") + "(" + c.str() + ")*";
}

}  // namespace

int perm_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

int ChevalleyBasisLabel::summand() const {
  if (is_a()) return 0;
  return popcount(mask()) % 2 ? 2 : 1;
}

std::string ChevalleyBasisLabel::str() const {
  if (is_a()) return "a_" + std::to_string(flavor()) + (starred() ? "^*" : "");
  unsigned m = mask();
  if (m == 0) return "v";
  if (m == 15) return "w";
  return "v_{" + subscript_string(m) + "}";
}

ChevalleyElement ChevalleyElement::basis(int index, const Eis& c) {
  ChevalleyElement e;
  e.add(index, c);
  return e;
}

ChevalleyElement ChevalleyElement::a(int flavor) { return basis(flavor - 1); }
ChevalleyElement ChevalleyElement::astar(int flavor) { return basis(flavor + 3); }

ChevalleyElement ChevalleyElement::v(std::initializer_list<int> subscripts) {
  std::vector<int> seq(subscripts);
  unsigned mask = 0;
  for (int i : seq) {
    if (i < 1 || i > 4 || (mask & (1u << (i - 1)))) return {};
    mask |= 1u << (i - 1);
  }
  return basis(8 + static_cast<int>(mask), Eis(perm_sign(seq)));
}

Eis ChevalleyElement::coeff(int index) const {
  auto it = c_.find(index);
  return it == c_.end() ? Eis() : it->second;
}

ChevalleyElement ChevalleyElement::component(int summand) const {
  ChevalleyElement r;
  for (const auto& [k, c] : c_)
    if (ChevalleyBasisLabel{k}.summand() == summand) r.c_.emplace(k, c);
  return r;
}

void ChevalleyElement::add(int index, const Eis& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

ChevalleyElement ChevalleyElement::operator-() const {
  ChevalleyElement r;
  for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
  return r;
}

ChevalleyElement& ChevalleyElement::operator+=(const ChevalleyElement& o) {
  for (const auto& [k, c] : o.c_) add(k, c);
  return *this;
}

ChevalleyElement& ChevalleyElement::operator-=(const ChevalleyElement& o) {
  for (const auto& [k, c] : o.c_) add(k, -c);
  return *this;
}

ChevalleyElement& ChevalleyElement::operator*=(const Eis& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [k, c] : c_) c *= s;
  return *this;
}

std::string ChevalleyElement::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : c_) {
    s += coefficient_prefix(c, first) + ChevalleyBasisLabel{k}.str();
    first = false;
  }
  return s;
}

ChevalleyElement finite_clifford_act(int a_index, const ChevalleyElement& m) {
  ChevalleyBasisLabel g{a_index};
  unsigned bit = 1u << (g.flavor() - 1);
  ChevalleyElement r;
  for (const auto& [k, c] : m.coeffs()) {
    ChevalleyBasisLabel l{k};
    if (l.is_a()) throw std::invalid_argument("finite_clifford_act: argument must lie in CM");
    unsigned s = l.mask();
    Eis sign(popcount(s & (bit - 1)) % 2 ? -1 : 1);
    if (g.starred()) {
      if (!(s & bit)) r.add(8 + static_cast<int>(s | bit), sign * c);
    } else if (s & bit) {
      r.add(8 + static_cast<int>(s ^ bit), sign * c);
    }
  }
  return r;
}

namespace {

// (v_S, v_T): sign of rev(a_S^*) a_T^* relative to a_1^* a_2^* a_3^* a_4^*
int cm_basis_pairing(unsigned s, unsigned t) {
  if ((s & t) || (s | t) != 15u) return 0;
  int k = popcount(s);
  int sign = (k * (k - 1) / 2) % 2 ? -1 : 1;
  int inv = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j < i; ++j)
      if ((s & (1u << (i - 1))) && (t & (1u << (j - 1)))) ++inv;
  return inv % 2 ? -sign : sign;
}

int basis_pairing(int i, int j) {
  ChevalleyBasisLabel a{i}, b{j};
  if (a.is_a() != b.is_a()) return 0;
  if (a.is_a()) return (a.flavor() == b.flavor() && a.starred() != b.starred()) ? 1 : 0;
  return cm_basis_pairing(a.mask(), b.mask());
}

}  // namespace

Eis cm_pairing(const ChevalleyElement& b, const ChevalleyElement& c) {
  Eis r;
  for (const auto& [i, x] : b.coeffs()) {
    if (ChevalleyBasisLabel{i}.is_a()) throw std::invalid_argument("cm_pairing: arguments must lie in CM");
    for (const auto& [j, y] : c.coeffs()) {
      if (ChevalleyBasisLabel{j}.is_a()) throw std::invalid_argument("cm_pairing: arguments must lie in CM");
      int p = cm_basis_pairing(ChevalleyBasisLabel{i}.mask(), ChevalleyBasisLabel{j}.mask());
      if (p) r += Eis(p) * x * y;
    }
  }
  return r;
}

Eis pairing(const ChevalleyElement& x, const ChevalleyElement& y) {
  Eis r;
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) {
      int p = basis_pairing(i, j);
      if (p) r += Eis(p) * a * b;
    }
  return r;
}

ChevalleyElement pairing_dual(int index) {
  for (int j = 0; j < kChevalleyDim; ++j) {
    int p = basis_pairing(index, j);
    if (p) return ChevalleyElement::basis(j, Eis(p));
  }
  return {};
}

namespace {

std::vector<int> members(unsigned mask) {
  std::vector<int> r;
  for (int i = 1; i <= 4; ++i)
    if (mask & (1u << (i - 1))) r.push_back(i);
  return r;
}

int single(unsigned mask) { return members(mask).front(); }

// b ∈ CM^0 (even mask s), c ∈ CM^1 (odd mask t)
ChevalleyElement circ_rule(unsigned s, unsigned t) {
  int ns = popcount(s), nt = popcount(t);
  if (ns == 0 && nt == 1) return {};
  if (ns == 0 && nt == 3) {
    int l = single(15u ^ t);
    auto ijk = members(t);
    return ChevalleyElement::basis(ChevalleyBasisLabel::a(l, false).index,
                                   Eis(perm_sign({l, ijk[0], ijk[1], ijk[2]})));
  }
  if (ns == 2 && nt == 1) {
    if (s & t) return {};
    int i = single(t);
    auto jk = members(s);
    int l = single(15u ^ s ^ t);
    return ChevalleyElement::basis(ChevalleyBasisLabel::a(l, false).index,
                                   Eis(perm_sign({i, l, jk[0], jk[1]})));
  }
  if (ns == 4 && nt == 1) return ChevalleyElement::astar(single(t));
  if (ns == 2 && nt == 3) {
    unsigned common = s & t;
    if (popcount(common) != 1) return {};
    int j = single(common);
    int i = single(s ^ common);
    auto kl = members(t ^ common);
    int sign = perm_sign({i, j}) * perm_sign({j, kl[0], kl[1]}) * perm_sign({j, i, kl[0], kl[1]});
    return ChevalleyElement::basis(ChevalleyBasisLabel::a(j, true).index, Eis(sign));
  }
  return {};
}

ChevalleyElement basis_circ(int i, int j) {
  ChevalleyBasisLabel a{i}, b{j};
  int sa = a.summand(), sb = b.summand();
  if (sa == sb) return {};
  if (sa == 0) return finite_clifford_act(i, ChevalleyElement::basis(j));
  if (sb == 0) return finite_clifford_act(j, ChevalleyElement::basis(i));
  if (sa == 1) return circ_rule(a.mask(), b.mask());
  return circ_rule(b.mask(), a.mask());
}

}  // namespace

ChevalleyElement circ_product(const ChevalleyElement& u1, const ChevalleyElement& u2) {
  ChevalleyElement r;
  for (const auto& [i, x] : u1.coeffs())
    for (const auto& [j, y] : u2.coeffs()) {
      ChevalleyElement t = basis_circ(i, j);
      if (!t.is_zero()) r += (x * y) * t;
    }
  return r;
}

namespace {

Eis cubic_form(const ChevalleyElement& u) {
  ChevalleyElement ab, a = u.component(0), b = u.component(1);
  for (const auto& [k, c] : a.coeffs()) ab += c * finite_clifford_act(k, b);
  return cm_pairing(ab, u.component(2));
}

}  // namespace

Eis cubic_form_polarized(const ChevalleyElement& u1, const ChevalleyElement& u2, const ChevalleyElement& u3) {
  return cubic_form(u1 + u2 + u3) - cubic_form(u2 + u3) - cubic_form(u1 + u3) - cubic_form(u1 + u2) +
         cubic_form(u1) + cubic_form(u2) + cubic_form(u3);
}

ChevalleyElement circ_product_from_form(const ChevalleyElement& u1, const ChevalleyElement& u2) {
  ChevalleyElement r;
  for (int k = 0; k < kChevalleyDim; ++k) {
    Eis c = cubic_form_polarized(u1, u2, ChevalleyElement::basis(k));
    if (!c.is_zero()) r += c * pairing_dual(k);
  }
  return r;
}

ChevalleyElement e_vector(int which) {
  using E = ChevalleyElement;
  switch (which) {
    case 1:
      return E::a(4) + E::astar(4);
    case 2:
      return E::v({1, 4}) - E::v({2, 3});
    case 3:
      return -E::v({1}) - E::v({2, 3, 4});
    default:
      throw std::invalid_argument("e_vector: which must be 1, 2 or 3");
  }
}

ChevalleyElement rho_e(int which, const ChevalleyElement& u) {
  if (which != 1 && which != 2) throw std::invalid_argument("rho_e: which must be 1 or 2");
  ChevalleyElement e = e_vector(which);
  int home = which == 1 ? 0 : 1;
  ChevalleyElement r;
  for (int s = 0; s < 3; ++s) {
    ChevalleyElement part = u.component(s);
    if (part.is_zero()) continue;
    if (s == home)
      r += pairing(part, e) * e - part;
    else
      r += circ_product(e, part);
  }
  return r;
}

ChevalleyElement sigma(const ChevalleyElement& u) { return rho_e(1, rho_e(2, u)); }

ChevalleyElement sigma_power(int k, const ChevalleyElement& u) {
  ChevalleyElement r = u;
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) r = sigma(r);
  return r;
}

ChevalleyElement tau(const ChevalleyElement& u) { return rho_e(1, u); }

OperatorMatrix operator_matrix(const std::vector<ChevalleyElement>& images) {
  OperatorMatrix m(kChevalleyDim, std::vector<Eis>(kChevalleyDim));
  for (int j = 0; j < kChevalleyDim; ++j)
    for (const auto& [i, c] : images[j].coeffs()) m[i][j] = c;
  return m;
}

OperatorMatrix sigma_matrix() {
  std::vector<ChevalleyElement> im;
  for (int j = 0; j < kChevalleyDim; ++j) im.push_back(sigma(ChevalleyElement::basis(j)));
  return operator_matrix(im);
}

OperatorMatrix tau_matrix() {
  std::vector<ChevalleyElement> im;
  for (int j = 0; j < kChevalleyDim; ++j) im.push_back(tau(ChevalleyElement::basis(j)));
  return operator_matrix(im);
}

SO8Element::SO8Element() = default;

SO8Element SO8Element::pair(int p, int q, const Eis& c) {
  SO8Element x;
  if (p == q) return x;
  x.m_[p][q] += c;
  x.m_[q][p] -= c;
  return x;
}

SO8Element SO8Element::h(int i) { return pair(i - 1, i + 3); }

SO8Element SO8Element::wedge(const ChevalleyElement& u, const ChevalleyElement& v) {
  SO8Element x;
  for (const auto& [p, a] : u.coeffs())
    for (const auto& [q, b] : v.coeffs()) {
      if (p >= 8 || q >= 8) throw std::invalid_argument("SO8Element::wedge: arguments must lie in A");
      x += pair(p, q, a * b);
    }
  return x;
}

std::pair<int, int> SO8Element::basis_pair(int k) {
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q)
      if (k-- == 0) return {p, q};
  throw std::out_of_range("SO8Element::basis_pair");
}

SO8Element SO8Element::basis(int k) {
  auto [p, q] = basis_pair(k);
  return pair(p, q);
}

bool SO8Element::is_zero() const {
  for (const auto& row : m_)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

std::vector<Eis> SO8Element::coords() const {
  std::vector<Eis> c;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) c.push_back(m_[p][q]);
  return c;
}

SO8Element SO8Element::from_coords(const std::vector<Eis>& c) {
  SO8Element x;
  for (int k = 0; k < basis_count(); ++k) {
    auto [p, q] = basis_pair(k);
    x += pair(p, q, c[k]);
  }
  return x;
}

SO8Element SO8Element::operator-() const {
  SO8Element x = *this;
  x *= Eis(-1);
  return x;
}

SO8Element& SO8Element::operator+=(const SO8Element& o) {
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) m_[p][q] += o.m_[p][q];
  return *this;
}

SO8Element& SO8Element::operator-=(const SO8Element& o) {
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) m_[p][q] -= o.m_[p][q];
  return *this;
}

SO8Element& SO8Element::operator*=(const Eis& s) {
  for (auto& row : m_)
    for (auto& c : row) c *= s;
  return *this;
}

std::string generator_name(int g) { return ChevalleyBasisLabel{g}.str(); }

std::string SO8Element::str() const {
  std::string s;
  bool first = true;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      if (m_[p][q].is_zero()) continue;
      s += coefficient_prefix(m_[p][q], first) + "∘∘" + generator_name(p) + generator_name(q) + "∘∘";
      first = false;
    }
  return first ? "0" : s;
}

namespace {

int home_summand(const ChevalleyElement& u, const ChevalleyElement& v) {
  int s = -1;
  for (const auto* x : {&u, &v})
    for (const auto& [k, c] : x->coeffs()) {
      int t = ChevalleyBasisLabel{k}.summand();
      if (s >= 0 && s != t) throw std::invalid_argument("pair_action: u and v must lie in one summand");
      s = t;
    }
  return s;
}

const std::vector<OperatorMatrix>& g_basis_operators() {
  static const std::vector<OperatorMatrix> ops = [] {
    std::vector<OperatorMatrix> r;
    for (int k = 0; k < SO8Element::basis_count(); ++k) {
      auto [p, q] = SO8Element::basis_pair(k);
      r.push_back(pair_operator(ChevalleyElement::basis(p), ChevalleyElement::basis(q)));
    }
    return r;
  }();
  return ops;
}

Eis gen_pairing(int p, int q) { return Eis(basis_pairing(p, q)); }

}  // namespace

ChevalleyElement pair_action(const ChevalleyElement& u, const ChevalleyElement& v, const ChevalleyElement& t) {
  int home = home_summand(u, v);
  if (home < 0) return {};
  ChevalleyElement r;
  for (int s = 0; s < 3; ++s) {
    ChevalleyElement part = t.component(s);
    if (part.is_zero()) continue;
    if (s == home) {
      r += pairing(v, part) * u;
      r -= pairing(u, part) * v;
    } else {
      ChevalleyElement d = circ_product(u, circ_product(v, part)) - circ_product(v, circ_product(u, part));
      r += Eis(Rational(1, 2)) * d;
    }
  }
  return r;
}

OperatorMatrix pair_operator(const ChevalleyElement& u, const ChevalleyElement& v) {
  std::vector<ChevalleyElement> im;
  for (int j = 0; j < kChevalleyDim; ++j) im.push_back(pair_action(u, v, ChevalleyElement::basis(j)));
  return operator_matrix(im);
}

OperatorMatrix g_operator(const SO8Element& x) {
  OperatorMatrix m(kChevalleyDim, std::vector<Eis>(kChevalleyDim));
  const auto& ops = g_basis_operators();
  auto c = x.coords();
  for (int k = 0; k < SO8Element::basis_count(); ++k) {
    if (c[k].is_zero()) continue;
    for (int i = 0; i < kChevalleyDim; ++i)
      for (int j = 0; j < kChevalleyDim; ++j)
        if (!ops[k][i][j].is_zero()) m[i][j] += c[k] * ops[k][i][j];
  }
  return m;
}

ChevalleyElement g_action(const SO8Element& x, const ChevalleyElement& u) {
  ChevalleyElement r;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      const Eis& c = x.at(p, q);
      if (!c.is_zero()) r += c * pair_action(ChevalleyElement::basis(p), ChevalleyElement::basis(q), u);
    }
  return r;
}

SO8Element bracket(const SO8Element& x, const SO8Element& y) {
  SO8Element r;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      if (x.at(p, q).is_zero()) continue;
      for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
          if (y.at(a, b).is_zero()) continue;
          Eis c = x.at(p, q) * y.at(a, b);
          r += SO8Element::pair(p, b, c * gen_pairing(q, a));
          r += SO8Element::pair(q, a, c * gen_pairing(p, b));
          r -= SO8Element::pair(q, b, c * gen_pairing(p, a));
          r -= SO8Element::pair(p, a, c * gen_pairing(q, b));
        }
    }
  return r;
}

Eis killing(const SO8Element& x, const SO8Element& y) {
  Eis r;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      if (x.at(p, q).is_zero()) continue;
      for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
          if (y.at(a, b).is_zero()) continue;
          Eis f = gen_pairing(p, b) * gen_pairing(q, a) - gen_pairing(p, a) * gen_pairing(q, b);
          if (!f.is_zero()) r += f * x.at(p, q) * y.at(a, b);
        }
    }
  return r;
}

Matrix<Eis> so8_matrix(const SO8Element& x) {
  Matrix<Eis> m(8, std::vector<Eis>(8));
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      const Eis& c = x.at(p, q);
      if (c.is_zero()) continue;
      int i = p % 4, j = q % 4;
      if (q < 4) {
        m[i][j + 4] += c;
        m[j][i + 4] -= c;
      } else if (p >= 4) {
        m[i + 4][j] += c;
        m[j + 4][i] -= c;
      } else {
        m[i][j] += c;
        m[j + 4][i + 4] -= c;
      }
    }
  return m;
}

SO8Element identify(const OperatorMatrix& op) {
  const auto& ops = g_basis_operators();
  const int n = SO8Element::basis_count();
  Matrix<Eis> sys;
  std::vector<Eis> rhs;
  for (int i = 0; i < kChevalleyDim; ++i)
    for (int j = 0; j < kChevalleyDim; ++j) {
      std::vector<Eis> row(n);
      bool any = !op[i][j].is_zero();
      for (int k = 0; k < n; ++k) {
        row[k] = ops[k][i][j];
        any = any || !row[k].is_zero();
      }
      if (!any) continue;
      sys.push_back(std::move(row));
      rhs.push_back(op[i][j]);
    }
  auto x = solve(sys, rhs, n);
  if (!x) throw InconsistentSystem("identify: operator is not in the image of g");
  return SO8Element::from_coords(*x);
}

SO8Element identify_pair(const ChevalleyElement& u, const ChevalleyElement& v) {
  return identify(pair_operator(u, v));
}

SO8Element identify_operator(int i, const SO8Element& x) {
  if (((i % 3) + 3) % 3 == 0) return x;
  OperatorMatrix op(kChevalleyDim, std::vector<Eis>(kChevalleyDim));
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      const Eis& c = x.at(p, q);
      if (c.is_zero()) continue;
      auto m = pair_operator(sigma_power(i, ChevalleyElement::basis(p)), sigma_power(i, ChevalleyElement::basis(q)));
      for (int r = 0; r < kChevalleyDim; ++r)
        for (int s = 0; s < kChevalleyDim; ++s)
          if (!m[r][s].is_zero()) op[r][s] += c * m[r][s];
    }
  return identify(op);
}

SO8Element tau_g(const SO8Element& x) {
  SO8Element r;
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      const Eis& c = x.at(p, q);
      if (!c.is_zero()) r += c * SO8Element::wedge(tau(ChevalleyElement::basis(p)), tau(ChevalleyElement::basis(q)));
    }
  return r;
}

namespace {

int ga(int i) { return i - 1; }
int gs(int i) { return i + 3; }
SO8Element P(int p, int q, const Eis& c = Eis(1)) { return SO8Element::pair(p, q, c); }

}  // namespace

std::vector<IdentificationRow> identification_positive_roots() {
  return {
      {"a1a2", 1, {}, {3, 4}, P(ga(1), ga(2)), -1, {4}, {3}},
      {"a1a3", -1, {}, {2, 4}, P(ga(1), ga(3)), -1, {4}, {2}},
      {"a2a3*", 1, {3, 4}, {1, 3}, P(ga(2), gs(3)), 1, {3}, {1, 3, 4}},
      {"a1a2*", -1, {2, 4}, {2, 3}, P(ga(1), gs(2)), 1, {2}, {2, 3, 4}},
      {"a3a4*", 1, {2, 4}, {1, 4}, P(ga(3), gs(4)), -1, {4}, {1, 2, 4}},
      {"a3a4", 1, {}, {1, 2}, P(ga(3), ga(4)), 1, {2}, {1}},
      {"a2a4", -1, {}, {1, 3}, P(ga(2), ga(4)), 1, {3}, {1}},
      {"a2a4*", -1, {3, 4}, {1, 4}, P(ga(2), gs(4)), 1, {4}, {1, 3, 4}},
      {"a1a3*", 1, {3, 4}, {2, 3}, P(ga(1), gs(3)), -1, {3}, {2, 3, 4}},
      {"a1a4*", 1, {3, 4}, {2, 4}, P(ga(1), gs(4)), -1, {4}, {2, 3, 4}},
      {"a1a4", 1, {}, {2, 3}, P(ga(1), ga(4)), -1, {3}, {2}},
      {"a2a3", 1, {}, {1, 4}, P(ga(2), ga(3)), -1, {4}, {1}},
  };
}

Matrix<Rational> matrix_script_a() {
  Rational h(1, 2);
  return {{h, h, h, -h}, {h, h, -h, h}, {h, -h, h, h}, {h, -h, -h, -h}};
}

std::vector<CartanRow> identification_cartan() {
  auto A = matrix_script_a();
  auto col = [&](int j) {
    SO8Element x;
    for (int i = 0; i < 4; ++i) x += Eis(A[i][j]) * SO8Element::h(i + 1);
    return x;
  };
  auto row = [&](int j) {
    SO8Element x;
    for (int i = 0; i < 4; ++i) x += Eis(A[j][i]) * SO8Element::h(i + 1);
    return x;
  };
  return {
      {1, 1, {}, {1, 2, 3, 4}, col(0), -1, {4}, {1, 2, 3}, row(0)},
      {2, -1, {3, 4}, {1, 2}, col(1), 1, {3}, {1, 2, 4}, row(1)},
      {3, 1, {2, 4}, {1, 3}, col(2), -1, {2}, {1, 3, 4}, row(2)},
      {4, -1, {1, 4}, {2, 3}, col(3), 1, {2, 3, 4}, {1}, row(3)},
  };
}

std::size_t span_rank(const std::vector<SO8Element>& xs) {
  Matrix<Eis> m;
  for (const auto& x : xs) m.push_back(x.coords());
  return rank(m);
}

bool in_span(const std::vector<SO8Element>& basis, const SO8Element& x) {
  auto ext = basis;
  ext.push_back(x);
  return span_rank(ext) == span_rank(basis);
}

std::vector<SO8Element> killing_dual_basis(const std::vector<SO8Element>& basis) {
  const std::size_t n = basis.size();
  Matrix<Eis> gram(n, std::vector<Eis>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = killing(basis[i], basis[j]);
  std::vector<SO8Element> dual;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Eis> e(n);
    e[k] = Eis(1);
    auto c = solve(gram, e, n);
    if (!c || rank(gram) != n) throw InconsistentSystem("killing_dual_basis: degenerate form on span");
    SO8Element d;
    for (std::size_t i = 0; i < n; ++i)
      if (!(*c)[i].is_zero()) d += (*c)[i] * basis[i];
    dual.push_back(d);
  }
  return dual;
}

namespace {

SubalgebraBases build_bases() {
  SubalgebraBases b;
  const Eis xi = Eis::xi(), xi2 = Eis::xi() * Eis::xi();
  const Eis third(Rational(1, 3)), half(Rational(1, 2));
  auto h = [](int i) { return SO8Element::h(i); };

  b.g0 = {
      {"H1", h(1) + h(3)},
      {"H2", h(2) - h(3)},
      {"X_b1", P(ga(2), gs(3))},
      {"X_b1+3b2", P(ga(1), ga(3))},
      {"X_2b1+3b2", P(ga(1), ga(2))},
      {"X_b2", P(ga(1), gs(2)) + P(ga(3), gs(4)) - P(ga(3), ga(4))},
      {"X_b1+b2", P(ga(1), gs(3)) + P(ga(2), ga(4)) - P(ga(2), gs(4))},
      {"X_b1+2b2", P(ga(2), ga(3)) + P(ga(1), ga(4)) - P(ga(1), gs(4))},
      {"X_-b1", P(ga(3), gs(2))},
      {"X_-b1-3b2", P(gs(3), gs(1))},
      {"X_-2b1-3b2", P(gs(2), gs(1))},
      {"X_-b2", third * (P(ga(2), gs(1)) + P(ga(4), gs(3)) - P(gs(4), gs(3)))},
      {"X_-b1-b2", third * (P(ga(3), gs(1)) + P(gs(4), gs(2)) - P(ga(4), gs(2)))},
      {"X_-b1-2b2", third * (P(gs(3), gs(2)) + P(gs(4), gs(1)) - P(ga(4), gs(1)))},
  };

  auto module = [&](const Eis& z, const Eis& z2) {
    return std::vector<std::pair<std::string, SO8Element>>{
        {"h1-h2-h3", h(1) - h(2) - h(3) + (z2 - z) * h(4)},
        {"a1a2*", P(ga(1), gs(2)) - z2 * P(ga(3), ga(4)) + z * P(ga(3), gs(4))},
        {"a1a3*", P(ga(1), gs(3)) + z2 * P(ga(2), ga(4)) - z * P(ga(2), gs(4))},
        {"a2a3", P(ga(2), ga(3)) - z2 * P(ga(1), gs(4)) + z * P(ga(1), ga(4))},
        {"a1*a2", P(gs(1), ga(2)) - z2 * P(gs(3), gs(4)) + z * P(gs(3), ga(4))},
        {"a1*a3", P(gs(1), ga(3)) + z2 * P(gs(2), gs(4)) - z * P(gs(2), ga(4))},
        {"a2*a3*", P(gs(2), gs(3)) - z2 * P(gs(1), ga(4)) + z * P(gs(1), gs(4))},
    };
  };
  b.g1 = module(xi, xi2);
  b.g2 = module(xi2, xi);

  b.b1 = {
      {"h1", h(1)},
      {"h2", h(2)},
      {"h3", h(3)},
      {"X_g1", P(ga(1), gs(2))},
      {"X_g2", P(ga(2), gs(3))},
      {"X_g1+g2", P(ga(1), gs(3))},
      {"X_g2+2g3", P(ga(2), ga(3))},
      {"X_g1+g2+2g3", P(ga(1), ga(3))},
      {"X_g1+2g2+2g3", P(ga(1), ga(2))},
      {"X_-g1", P(ga(2), gs(1))},
      {"X_-g2", P(ga(3), gs(2))},
      {"X_-g1-g2", P(ga(3), gs(1))},
      {"X_-g2-2g3", P(gs(3), gs(2))},
      {"X_-g1-g2-2g3", P(gs(3), gs(1))},
      {"X_-g1-2g2-2g3", P(gs(2), gs(1))},
      {"X_g3", P(ga(3), ga(4)) - P(ga(3), gs(4))},
      {"X_g2+g3", P(ga(2), ga(4)) - P(ga(2), gs(4))},
      {"X_g1+g2+g3", P(ga(1), ga(4)) - P(ga(1), gs(4))},
      {"X_-g3", half * (P(gs(4), gs(3)) - P(ga(4), gs(3)))},
      {"X_-g2-g3", half * (P(gs(4), gs(2)) - P(ga(4), gs(2)))},
      {"X_-g1-g2-g3", half * (P(gs(4), gs(1)) - P(ga(4), gs(1)))},
  };

  b.b_minus1 = {
      {"a4a4*", h(4)},
      {"a1a4+a1a4*", P(ga(1), ga(4)) + P(ga(1), gs(4))},
      {"a1*a4+a1*a4*", P(gs(1), ga(4)) + P(gs(1), gs(4))},
      {"a2a4+a2a4*", P(ga(2), ga(4)) + P(ga(2), gs(4))},
      {"a2*a4+a2*a4*", P(gs(2), ga(4)) + P(gs(2), gs(4))},
      {"a3a4+a3a4*", P(ga(3), ga(4)) + P(ga(3), gs(4))},
      {"a3*a4+a3*a4*", P(gs(3), ga(4)) + P(gs(3), gs(4))},
  };
  return b;
}

}  // namespace

const SubalgebraBases& subalgebra_bases() {
  static const SubalgebraBases b = build_bases();
  return b;
}

}  // namespace d4g2
