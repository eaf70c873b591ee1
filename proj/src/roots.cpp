#include "d4g2/roots.hpp"

#include <algorithm>
#include <map>

namespace d4g2 {

D4Weight D4Weight::eps(int i) {
  D4Weight w;
  w.e[i - 1] = 1;
  return w;
}

D4Weight D4Weight::operator-() const {
  D4Weight w;
  for (int i = 0; i < 4; ++i) w.e[i] = -e[i];
  return w;
}

D4Weight& D4Weight::operator+=(const D4Weight& o) {
  for (int i = 0; i < 4; ++i) e[i] += o.e[i];
  return *this;
}

D4Weight& D4Weight::operator-=(const D4Weight& o) {
  for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
  return *this;
}

D4Weight operator*(const Rational& s, const D4Weight& w) {
  D4Weight r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * w.e[i];
  return r;
}

bool operator<(const D4Weight& a, const D4Weight& b) { return a.e < b.e; }

std::string D4Weight::str() const {
  return "(" + e[0].str() + "," + e[1].str() + "," + e[2].str() + "," + e[3].str() + ")";
}

Rational dot(const D4Weight& a, const D4Weight& b) {
  Rational s;
  for (int i = 0; i < 4; ++i) s += a.e[i] * b.e[i];
  return s;
}

bool G2Weight::dominant_integral() const {
  return m1.is_integer() && m2.is_integer() && m1.sign() >= 0 && m2.sign() >= 0;
}

std::string G2Weight::str() const { return m1.str() + "*L1 + " + m2.str() + "*L2"; }

namespace {

D4Weight vec(Rational a, Rational b, Rational c, Rational d) {
  D4Weight w;
  w.e = {a, b, c, d};
  return w;
}

RootTables build_tables() {
  RootTables t;
  t.d4_simple = {vec(1, -1, 0, 0), vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 1, 1)};
  t.d4_theta = vec(1, 1, 0, 0);
  Rational third(1, 3), half(1, 2);
  t.g2_simple = {vec(0, 1, -1, 0), vec(third, -third, 2 * third, 0)};
  t.g2_fundamental = {vec(1, 1, 0, 0), vec(2 * third, third, third, 0)};
  t.b3_simple = {vec(1, -1, 0, 0), vec(0, 1, -1, 0), vec(0, 0, 1, 0)};
  t.d4_fundamental = {vec(1, 0, 0, 0), vec(1, 1, 0, 0), vec(half, half, half, -half), vec(half, half, half, half)};
  return t;
}

}  // namespace

const RootTables& root_tables() {
  static const RootTables t = build_tables();
  return t;
}

std::vector<D4Weight> d4_roots() {
  std::vector<D4Weight> r;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) r.push_back(Rational(si) * D4Weight::eps(i) + Rational(sj) * D4Weight::eps(j));
  return r;
}

std::vector<G2RootCoords> g2_roots() {
  std::vector<G2RootCoords> pos = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<G2RootCoords> all = pos;
  for (auto& p : pos) all.push_back({-p.b1, -p.b2});
  return all;
}

G2Weight project_to_g2(const D4Weight& w) { return {w.e[1] - w.e[2], w.e[0] - w.e[1] + 2 * w.e[2]}; }

G2RootCoords project_alphas(const std::array<Rational, 4>& a) { return {a[1], a[0] + a[2] + a[3]}; }

G2RootCoords to_root_coords(const G2Weight& w) {
  // λ̄1 = 2β1 + 3β2, λ̄2 = β1 + 2β2
  return {2 * w.m1 + w.m2, 3 * w.m1 + 2 * w.m2};
}

G2Weight to_weight_coords(const G2RootCoords& r) {
  // inverse of [[2,1],[3,2]] is [[2,-1],[-3,2]]
  return {2 * r.b1 - r.b2, -3 * r.b1 + 2 * r.b2};
}

D4Weight g2_embed(const G2Weight& w) {
  const auto& t = root_tables();
  return w.m1 * t.g2_fundamental[0] + w.m2 * t.g2_fundamental[1];
}

std::array<Rational, 4> alpha_coefficients(const D4Weight& w) {
  // α-coordinates are the pairings with the fundamental coweights (λ_i, since D4 is simply laced)
  const auto& t = root_tables();
  return {dot(w, t.d4_fundamental[0]), dot(w, t.d4_fundamental[1]), dot(w, t.d4_fundamental[2]),
          dot(w, t.d4_fundamental[3])};
}

namespace {

D4Weight permute_alphas(const D4Weight& w, const std::array<int, 4>& image) {
  const auto& t = root_tables();
  auto a = alpha_coefficients(w);
  D4Weight r;
  for (int i = 0; i < 4; ++i) r += a[i] * t.d4_simple[image[i]];
  return r;
}

}  // namespace

D4Weight sigma_star(const D4Weight& w) { return permute_alphas(w, {3, 1, 0, 2}); }
D4Weight tau_star(const D4Weight& w) { return permute_alphas(w, {0, 1, 3, 2}); }

Report root_data_checks() {
  Report rep;
  const auto& t = root_tables();
  D4Weight theta = t.d4_simple[0] + Rational(2) * t.d4_simple[1] + t.d4_simple[2] + t.d4_simple[3];
  rep.push_back(make_check("theta = alpha1 + 2alpha2 + alpha3 + alpha4", theta == t.d4_theta));
  bool dual = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (dot(t.d4_fundamental[i], t.d4_simple[j]) != Rational(i == j ? 1 : 0)) dual = false;
  rep.push_back(make_check("<lambda_i, alpha_j> = delta_ij", dual));

  bool routes = true, invariant = true, orthogonal = true;
  std::map<std::pair<std::string, std::string>, int> mult;
  for (const auto& r : d4_roots()) {
    G2Weight p = project_to_g2(r);
    if (!(to_root_coords(p) == project_alphas(alpha_coefficients(r)))) routes = false;
    if (!(project_to_g2(sigma_star(r)) == p)) invariant = false;
    D4Weight avg = Rational(1, 3) * (r + sigma_star(r) + sigma_star(sigma_star(r)));
    if (!(g2_embed(p) == avg)) orthogonal = false;
    auto rc = to_root_coords(p);
    ++mult[{rc.b1.str(), rc.b2.str()}];
  }
  rep.push_back(make_check("alpha route and epsilon route agree on all 24 D4 roots", routes));
  rep.push_back(make_check("projection is sigma*-invariant on all D4 roots", invariant));
  rep.push_back(make_check("projection equals the sigma*-orbit average", orthogonal));
  bool images = mult.size() == 12;
  for (const auto& g : g2_roots()) {
    auto it = mult.find({g.b1.str(), g.b2.str()});
    bool long_root = g.b1 != Rational(0) && (g.b2 == Rational(0) || g.b2 == Rational(3) || g.b2 == Rational(-3));
    int expect = long_root ? 1 : 3;
    if (it == mult.end() || it->second != expect) images = false;
  }
  rep.push_back(make_check("D4 roots project onto G2 roots: long with multiplicity 1, short with 3", images));

  bool cyc = sigma_star(t.d4_simple[0]) == t.d4_simple[3] && sigma_star(t.d4_simple[1]) == t.d4_simple[1] &&
             sigma_star(t.d4_simple[2]) == t.d4_simple[0] && sigma_star(t.d4_simple[3]) == t.d4_simple[2];
  rep.push_back(make_check("sigma* cycles alpha1 -> alpha4 -> alpha3 -> alpha1", cyc));
  bool b3 = true;
  for (int i = 0; i < 3; ++i)
    if (!(tau_star(t.b3_simple[i]) == t.b3_simple[i])) b3 = false;
  rep.push_back(make_check("B3 simple roots are tau*-fixed", b3 && dot(t.b3_simple[2], t.b3_simple[2]) == Rational(1)));
  return rep;
}

}  // namespace d4g2
