#include "d4g2/affine.hpp"

#include <stdexcept>

#include "d4g2/linalg.hpp"

namespace d4g2 {

namespace {

const FieldLabel f1{1, false}, f1s{1, true}, f2{2, false}, f2s{2, true}, f3{3, false}, f3s{3, true}, f4{4, false},
    f4s{4, true};

FieldLabel field(int g) { return {g % 4 + 1, g >= 4}; }

std::vector<int> term_key(const OperatorTerm& t) {
  std::vector<int> k = {static_cast<int>(t.kind), t.total_mode};
  for (const auto& p : t.pattern) k.push_back(p.flavor * 2 + (p.starred ? 1 : 0));
  return k;
}

bool same_shape(const OperatorTerm& a, const OperatorTerm& b) {
  return a.kind == b.kind && a.total_mode == b.total_mode && a.pattern == b.pattern;
}

void add_scaled(FockVector& out, const Rational& c, const FockVector& v) {
  for (const auto& [s, x] : v.terms()) out.add(s, c * x);
}

FockVector raw_term(const OperatorTerm& t, const FockState& s) {
  FockVector v(s);
  switch (t.kind) {
    case TermKind::quadratic:
      return apply_quadratic(t.pattern[0], t.pattern[1], t.total_mode, false, v);
    case TermKind::derivative:
      return apply_quadratic(t.pattern[0], t.pattern[1], t.total_mode, true, v);
    case TermKind::quartic:
      return apply_quartic({t.pattern[0], t.pattern[1], t.pattern[2], t.pattern[3]}, t.total_mode, v);
  }
  return FockVector(s.sector());
}

int floor_mode_depth(const FockState& s) { return s.depth2() / 2; }

}  // namespace

std::string OperatorTerm::str() const {
  std::string p;
  for (const auto& f : pattern) p += (p.empty() ? "" : " ") + f.str();
  std::string kindname = kind == TermKind::derivative ? "d" : "";
  return coeff.str() + "*" + kindname + "[" + p + "]_" + std::to_string(total_mode);
}

OperatorSpec& OperatorSpec::quadratic(const Rational& c, FieldLabel a, FieldLabel b, int k) {
  OperatorSpec o;
  o.terms.push_back({c, TermKind::quadratic, {a, b}, k});
  return *this += o;
}

OperatorSpec& OperatorSpec::derivative(const Rational& c, FieldLabel a, FieldLabel b, int k) {
  OperatorSpec o;
  o.terms.push_back({c, TermKind::derivative, {a, b}, k});
  return *this += o;
}

OperatorSpec& OperatorSpec::quartic(const Rational& c, const std::array<FieldLabel, 4>& p, int k) {
  OperatorSpec o;
  o.terms.push_back({c, TermKind::quartic, {p.begin(), p.end()}, k});
  return *this += o;
}

OperatorSpec& OperatorSpec::operator+=(const OperatorSpec& o) {
  for (const auto& t : o.terms) {
    auto it = std::find_if(terms.begin(), terms.end(), [&](const OperatorTerm& u) { return same_shape(u, t); });
    if (it == terms.end()) {
      if (!t.coeff.is_zero()) terms.push_back(t);
      continue;
    }
    it->coeff += t.coeff;
    if (it->coeff.is_zero()) terms.erase(it);
  }
  scalar += o.scalar;
  return *this;
}

OperatorSpec& OperatorSpec::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms.clear();
    scalar = Rational(0);
    return *this;
  }
  for (auto& t : terms) t.coeff *= c;
  scalar *= c;
  return *this;
}

const FockVector& apply_term(const OperatorTerm& t, const FockState& s) {
  thread_local std::map<std::pair<std::vector<int>, FockState>, FockVector> cache;
  auto key = std::make_pair(term_key(t), s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), raw_term(t, s)).first;
  return it->second;
}

FockVector OperatorSpec::apply(const FockState& s) const { return apply(FockVector(s)); }

FockVector OperatorSpec::apply(const FockVector& v) const {
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms()) {
    for (const auto& t : terms) add_scaled(r, c * t.coeff, apply_term(t, s));
    if (!scalar.is_zero()) r.add(s, c * scalar);
  }
  return r;
}

std::string OperatorSpec::str() const {
  std::string s = name.empty() ? "" : name + " = ";
  bool first = true;
  for (const auto& t : terms) {
    s += (first ? "" : " + ") + t.str();
    first = false;
  }
  if (!scalar.is_zero() || first) s += (first ? "" : " + ") + scalar.str() + "*id";
  return s;
}

OperatorSpec g2_simple_op(G2Root which) {
  switch (which) {
    case G2Root::beta1:
      return OperatorSpec("X_b1(0)").quadratic(Rational(1), f2, f3s, 0);
    case G2Root::beta2:
      return OperatorSpec("X_b2(0)")
          .quadratic(Rational(1), f1, f2s, 0)
          .quadratic(Rational(1), f3, f4s, 0)
          .quadratic(Rational(-1), f3, f4, 0);
    case G2Root::minus_theta:
      return OperatorSpec("X_-theta(1)").quadratic(Rational(1), f2s, f1s, 1);
  }
  return {};
}

OperatorSpec current(const SO8Element& x, int n, const std::string& name) {
  OperatorSpec op(name + "(" + std::to_string(n) + ")");
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      const Eis& c = x.at(p, q);
      if (c.is_zero()) continue;
      if (!c.is_rational()) throw std::invalid_argument("current: element has irrational coefficients");
      op.quadratic(c.re(), field(p), field(q), n);
    }
  return op;
}

FockVector pair_vector(FieldLabel a, FieldLabel b) {
  return apply_normal_ordered({a.at(-3), b.at(-1)}, FockVector::vacuum(Sector::NS));
}

FockVector quad_vector(FieldLabel a, FieldLabel b, FieldLabel c, FieldLabel d) {
  return apply_normal_ordered({a.at(-1), b.at(-1), c.at(-1), d.at(-1)}, FockVector::vacuum(Sector::NS));
}

FockVector boxed(Boxed which) {
  switch (which) {
    case Boxed::b44s:
      return pair_vector(f4, f4s) + pair_vector(f4s, f4) + pair_vector(f4, f4) + pair_vector(f4s, f4s);
    case Boxed::b11s22s:
      return quad_vector(f1, f1s, f2, f2s) + quad_vector(f1, f1s, f3, f3s) - quad_vector(f2, f2s, f3, f3s);
    case Boxed::b22s44s:
      return quad_vector(f2, f2s, f4, f4s) + quad_vector(f3, f3s, f4, f4s) - quad_vector(f1, f1s, f4, f4s);
    case Boxed::b1s234:
      return quad_vector(f1s, f2, f3, f4) + quad_vector(f1, f2s, f3s, f4s);
    case Boxed::b1s234s:
      return quad_vector(f1, f2s, f3s, f4) + quad_vector(f1s, f2, f3, f4s);
  }
  return FockVector(Sector::NS);
}

const ConformalVectors& conformal_vectors() {
  static const ConformalVectors cv = [] {
    ConformalVectors c;
    c.d4 = FockVector(Sector::NS);
    for (int i = 1; i <= 4; ++i) c.d4 += Rational(1, 2) * (pair_vector({i, false}, {i, true}) + pair_vector({i, true}, {i, false}));
    const Rational fifth(1, 5);
    c.b3 = c.d4 - Rational(1, 4) * boxed(Boxed::b44s);
    c.g2 = fifth * (Rational(4) * c.d4 - boxed(Boxed::b44s) + boxed(Boxed::b11s22s) + boxed(Boxed::b1s234) -
                    boxed(Boxed::b1s234s));
    c.d4_b3 = Rational(1, 4) * boxed(Boxed::b44s);
    c.b3_g2 = fifth * c.d4 - Rational(1, 20) * boxed(Boxed::b44s) - fifth * boxed(Boxed::b11s22s) -
              fifth * boxed(Boxed::b1s234) + fifth * boxed(Boxed::b1s234s);
    return c;
  }();
  return cv;
}

std::vector<std::pair<SO8Element, SO8Element>> dual_pairs(const std::vector<std::pair<std::string, SO8Element>>& basis) {
  std::vector<SO8Element> xs;
  for (const auto& [n, x] : basis) xs.push_back(x);
  auto dual = killing_dual_basis(xs);
  std::vector<std::pair<SO8Element, SO8Element>> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], dual[i]);
  return out;
}

namespace {

void require_dual(const std::vector<std::pair<SO8Element, SO8Element>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (killing(basis[i].first, basis[j].second) != Eis(i == j ? 1 : 0))
        throw std::invalid_argument("sugawara: basis and dual are not Killing dual");
}

}  // namespace

FockVector sugawara_omega(const std::vector<std::pair<SO8Element, SO8Element>>& basis, int dual_coxeter) {
  require_dual(basis);
  FockVector sum(Sector::NS);
  const FockVector vac = FockVector::vacuum(Sector::NS);
  for (const auto& [x, d] : basis) sum += current(x, -1).apply(current(d, -1).apply(vac));
  return Rational(1, 2 * (dual_coxeter + 1)) * sum;
}

FockVector sugawara_L(const std::vector<std::pair<SO8Element, SO8Element>>& basis, int dual_coxeter, int k,
                      const FockVector& v) {
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms()) {
    const int md = floor_mode_depth(s);
    FockVector sv(s);
    for (const auto& [x, d] : basis)
      for (int j = k - md; j <= md; ++j) {
        if (j <= -1)
          add_scaled(r, c, current(x, j).apply(current(d, k - j).apply(sv)));
        else
          add_scaled(r, c, current(d, k - j).apply(current(x, j).apply(sv)));
      }
  }
  return Rational(1, 2 * (dual_coxeter + 1)) * r;
}

OperatorSpec full_L(int k, Sector sector) {
  OperatorSpec op("L_" + std::to_string(k));
  for (int i = 1; i <= 4; ++i) {
    FieldLabel a{i, false}, b{i, true};
    op.derivative(Rational(1), a, b, k);
    op.quadratic(Rational(k + 1, 2), a, b, k);
  }
  if (sector == Sector::Ramond && k == 0) op.scalar = Rational(1, 2);
  return op;
}

OperatorSpec coset_L(int k, const Rational& charge, Sector sector) {
  const bool ramond0 = sector == Sector::Ramond && k == 0;
  const std::vector<std::pair<FieldLabel, FieldLabel>> fours = {{f4, f4}, {f4s, f4s}, {f4, f4s}, {f4s, f4}};
  if (charge == Rational(1, 2)) {
    OperatorSpec op("L^1/2_" + std::to_string(k));
    for (const auto& [a, b] : fours) op.derivative(Rational(1, 4), a, b, k);
    if (ramond0) op.scalar = Rational(1, 16);
    return op;
  }
  if (charge == Rational(7, 10)) {
    OperatorSpec op("L^7/10_" + std::to_string(k));
    for (int i = 1; i <= 4; ++i) {
      op.derivative(Rational(1, 10), {i, true}, {i, false}, k);
      op.derivative(Rational(1, 10), {i, false}, {i, true}, k);
    }
    for (const auto& [a, b] : fours) op.derivative(Rational(-1, 20), a, b, k);
    const int signs[7] = {1, 1, -1, 1, 1, -1, -1};
    const auto& pats = coset_quartic_patterns();
    for (std::size_t p = 0; p < pats.size(); ++p) op.quartic(Rational(-signs[p], 5), pats[p], k);
    if (ramond0) op.scalar = Rational(7, 80);
    return op;
  }
  throw std::invalid_argument("coset_L: charge must be 1/2 or 7/10");
}

Rational binomial_half(int m) {
  Rational r(1);
  for (int j = 0; j < m; ++j) r *= Rational(-1 - 2 * j, 2) / Rational(j + 1);
  return r;
}

Rational delta_coefficient(int m, int n) {
  return Rational(1, 2) * Rational(m - n, m + n + 1) * binomial_half(m) * binomial_half(n);
}

namespace {

// coefficient of z^{-p} in Δ(z)
FockVector delta_part(int p, const FockVector& v) {
  FockVector r(Sector::NS);
  for (int m = 0; m < p; ++m) {
    int n = p - 1 - m;
    Rational c = delta_coefficient(m, n);
    if (c.is_zero()) continue;
    for (int i = 1; i <= 4; ++i)
      r += c * apply_word({FieldLabel{i, false}.at(2 * m + 1), FieldLabel{i, true}.at(2 * n + 1)}, v);
  }
  return r;
}

}  // namespace

Rational delta_correction(const FockVector& v) {
  FockVector z2 = delta_part(2, v) + Rational(1, 2) * delta_part(1, delta_part(1, v));
  return z2.coeff(FockState::vacuum(Sector::NS));
}

OperatorSpec vertex_operator(const FockVector& omega, int k, Sector sector) {
  OperatorSpec op("Y_" + std::to_string(k));
  for (const auto& [s, c] : omega.terms()) {
    const auto& f = s.factors();
    if (s.sector() != Sector::NS || s.depth2() != 4) throw std::invalid_argument("vertex_operator: expects a depth-2 NS vector");
    auto lab = [](const GeneratorLabel& g) { return FieldLabel{g.flavor, g.starred}; };
    if (f.size() == 2)
      op.derivative(c, lab(f[0]), lab(f[1]), k);
    else if (f.size() == 4)
      op.quartic(c, {lab(f[0]), lab(f[1]), lab(f[2]), lab(f[3])}, k);
    else
      throw std::invalid_argument("vertex_operator: unsupported state " + s.str());
  }
  if (sector == Sector::Ramond && k == 0) op.scalar = delta_correction(omega);
  return op;
}

CheckResult commutator_check(const std::string& name, const OperatorSpec& a, const OperatorSpec& b,
                             const OperatorSpec& expected, Sector sector, const Rational& max_depth) {
  CheckResult r = make_check(name, true);
  long n = 0;
  for (const auto& s : enumerate_basis(sector, max_depth)) {
    FockVector v(s);
    FockVector lhs = a.apply(b.apply(v)) - b.apply(a.apply(v)) - expected.apply(v);
    if (!lhs.is_zero()) {
      r.pass = false;
      r.first_mismatch = n;
      r.note = "first failing state " + s.str() + ": residual " + lhs.str();
      return r;
    }
    ++n;
  }
  r.lhs = std::to_string(n) + " states";
  return r;
}

std::vector<Rational> SigmaHatSpan::coordinates(const FockVector& v) const {
  std::vector<FockState> rows;
  for (const auto& x : vectors)
    for (const auto& [s, c] : x.terms()) rows.push_back(s);
  for (const auto& [s, c] : v.terms()) rows.push_back(s);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  Matrix<Rational> m(rows.size(), std::vector<Rational>(vectors.size()));
  std::vector<Rational> rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) m[i][j] = vectors[j].coeff(rows[i]);
    rhs[i] = v.coeff(rows[i]);
  }
  auto c = solve(m, rhs, vectors.size());
  if (!c) throw std::invalid_argument("sigma_hat: vector outside the listed span");
  return *c;
}

FockVector SigmaHatSpan::vector(const std::vector<Rational>& c) const {
  FockVector r(Sector::NS);
  for (std::size_t j = 0; j < vectors.size(); ++j) r += c[j] * vectors[j];
  return r;
}

FockVector SigmaHatSpan::apply(const FockVector& v, int power) const {
  std::vector<Rational> c = coordinates(v);
  for (int p = 0; p < power; ++p) {
    std::vector<Rational> next(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
      for (std::size_t i = 0; i < vectors.size(); ++i) next[i] += c[j] * images[j][i];
    c = std::move(next);
  }
  return vector(c);
}

const SigmaHatSpan& sigma_hat_boxed() {
  static const SigmaHatSpan span = [] {
    SigmaHatSpan s;
    const FockVector q = pair_vector(f4, f4) + pair_vector(f4s, f4s);
    s.names = {"omega_D4", "[44*]", "[11*22*]", "[22*44*]", "[1*234]", "[1*234*]", "44+4*4*"};
    s.vectors = {conformal_vectors().d4, boxed(Boxed::b44s),   boxed(Boxed::b11s22s), boxed(Boxed::b22s44s),
                 boxed(Boxed::b1s234),   boxed(Boxed::b1s234s), q};
    const Rational h(1, 2), o(1), z(0);
    // coordinates in the order of names; 44*+4*4 = [44*] − (44+4*4*)
    s.images = {
        {o, z, z, z, z, z, z},
        {h, z, -h, -h, z, o, z},
        {h, -o, h, -h, z, z, o},
        {-h, o, h, -h, z, z, -o},
        {z, z, z, z, z, z, -o},
        {z, z, z, z, -o, z, z},
        {z, z, z, z, z, o, z},
    };
    return s;
  }();
  return span;
}

}  // namespace d4g2
