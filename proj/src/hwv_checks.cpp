#include <algorithm>
#include <optional>
#include <set>

#include "d4g2/hwv.hpp"

namespace d4g2 {

namespace {

struct Cell {
  Module module;
  Rational depth;
  G2Label weight;
};

// every (module, depth, weight) cell of the search grid
std::vector<Cell> search_grid() {
  std::vector<Cell> g;
  const Rational h(1, 2), t(3, 2);
  for (G2Label w : {G2Label::omega0, G2Label::omega2}) {
    for (const Rational& d : {Rational(0), Rational(1), Rational(2)}) g.push_back({Module::V0, d, w});
    for (const Rational& d : {h, t}) g.push_back({Module::V1, d, w});
    for (Module m : {Module::V2, Module::V3})
      for (const Rational& d : {h, t}) g.push_back({m, d, w});
  }
  return g;
}

std::string cell_name(const Cell& c) {
  return module_name(c.module) + " depth " + c.depth.str() + " " + g2_label_name(c.weight);
}

// scalar s with v = s·w, if any
std::optional<Rational> proportional(const FockVector& v, const FockVector& w) {
  if (v.is_zero() || w.is_zero() || v.terms().size() != w.terms().size()) return std::nullopt;
  const auto& [s, x] = *w.terms().begin();
  Rational c = v.coeff(s) / x;
  if (c.is_zero() || v != c * w) return std::nullopt;
  return c;
}

std::vector<std::string> state_names(const std::vector<FockState>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string r;
  for (const auto& s : v) r += (r.empty() ? "" : ", ") + s;
  return r;
}

bool in_span(const FockVector& v, const std::vector<FockState>& basis) {
  std::set<FockState> b(basis.begin(), basis.end());
  for (const auto& [s, x] : v.terms())
    if (!b.count(s)) return false;
  return true;
}

std::vector<FockState> states(const std::vector<std::string>& texts) {
  std::vector<FockState> out;
  for (const auto& t : texts) out.push_back(parse_state(t).terms().begin()->first);
  return out;
}

std::string ns3(const std::string& a, const std::string& b, const std::string& c) {
  return "a" + a + "(-1/2) a" + b + "(-1/2) a" + c + "(-1/2) |0>";
}

std::string ns4(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return "a" + a + "(-1/2) a" + b + "(-1/2) a" + c + "(-1/2) a" + d + "(-1/2) |0>";
}

struct ListedBasis {
  Cell cell;
  std::vector<FockState> states;
};

std::vector<ListedBasis> listed_bases() {
  const Rational h(1, 2), t(3, 2);
  std::vector<ListedBasis> l;
  l.push_back({{Module::V0, 0, G2Label::omega0}, states({"|0>"})});
  l.push_back({{Module::V1, h, G2Label::omega0}, states({"a4(-1/2) |0>", "a4*(-1/2) |0>"})});
  l.push_back({{Module::V1, h, G2Label::omega2}, states({"a1(-1/2) |0>"})});
  l.push_back({{Module::V0, 1, G2Label::omega2},
               states({"a1(-1/2) a4(-1/2) |0>", "a1(-1/2) a4*(-1/2) |0>", "a2(-1/2) a3(-1/2) |0>"})});
  l.push_back({{Module::V1, t, G2Label::omega0},
               states({"a4(-3/2) |0>", "a4*(-3/2) |0>", ns3("1", "1*", "4"), ns3("1", "1*", "4*"), ns3("2", "2*", "4"),
                       ns3("2", "2*", "4*"), ns3("3", "3*", "4"), ns3("3", "3*", "4*"), ns3("1*", "2", "3"),
                       ns3("1", "2*", "3*")})});
  l.push_back({{Module::V1, t, G2Label::omega2},
               states({"a1(-3/2) |0>", ns3("1", "2", "2*"), ns3("1", "3", "3*"), ns3("1", "4", "4*"), ns3("2", "3", "4"),
                       ns3("2", "3", "4*")})});
  l.push_back({{Module::V0, 2, G2Label::omega0},
               states({ns4("1", "1*", "4", "4*"), ns4("2", "2*", "4", "4*"), ns4("3", "3*", "4", "4*"),
                       ns4("1*", "2", "3", "4"), ns4("1*", "2", "3", "4*"), ns4("1", "2*", "3*", "4"),
                       ns4("1", "2*", "3*", "4*"), ns4("1", "1*", "2", "2*"), ns4("1", "1*", "3", "3*"),
                       ns4("2", "2*", "3", "3*")})});
  l.push_back({{Module::V2, h, G2Label::omega0}, states({"a1*(0) a4*(0) |0'>", "a2*(0) a3*(0) |0'>"})});
  l.push_back({{Module::V2, h, G2Label::omega2}, states({"|0'>"})});
  l.push_back({{Module::V3, h, G2Label::omega0}, states({"a1*(0) |0'>", "a2*(0) a3*(0) a4*(0) |0'>"})});
  l.push_back({{Module::V3, h, G2Label::omega2}, states({"a4*(0) |0'>"})});
  return l;
}

}  // namespace

Report verify_reference_hwvs() {
  Report rep;
  for (const auto& p : reference_hwvs()) {
    const Sector sec = module_sector(p.label.module);
    const auto& ops = positive_operators(sec);
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (!ops[i].apply(p.vector).is_zero()) bad.push_back("operator " + std::to_string(i));
    CheckResult r = make_check("reference HWV " + p.label.str() + " annihilated by positive operators", bad.empty(), join(bad));
    rep.push_back(r);

    FockVector l12 = coset_L(0, Rational(1, 2), sec).apply(p.vector);
    FockVector l710 = coset_L(0, Rational(7, 10), sec).apply(p.vector);
    CheckResult e = make_check("reference HWV " + p.label.str() + " L0 eigenvalues",
                               l12 == p.label.h12 * p.vector && l710 == p.label.h710 * p.vector);
    e.eigenvalues = {p.label.h12.str(), p.label.h710.str()};
    rep.push_back(e);

    auto sols = solve_hwv(p.label.module, p.label.depth, p.label.weight);
    std::optional<Rational> scale;
    for (const auto& s : sols)
      if (s.h12 == p.label.h12 && s.h710 == p.label.h710)
        if (auto c = proportional(p.vector, s.vector)) scale = c;
    CheckResult m = make_check("reference HWV " + p.label.str() + " proportional to solver output", scale.has_value());
    if (scale) m.scalar = scale->str();
    rep.push_back(m);
  }
  return rep;
}

Report hwv_checks() {
  Report rep = verify_reference_hwvs();

  // cell-level solution counts and invariants
  std::multiset<std::pair<Rational, Rational>> found;
  for (const auto& cell : search_grid()) {
    auto sols = solve_hwv(cell.module, cell.depth, cell.weight);
    std::size_t expected = 0;
    for (const auto& p : reference_hwvs())
      if (p.label.module == cell.module && p.label.depth == cell.depth && p.label.weight == cell.weight) ++expected;
    CheckResult c = make_check("solve_hwv " + cell_name(cell) + " count", sols.size() == expected,
                               std::to_string(sols.size()) + " found, " + std::to_string(expected) + " expected");
    for (const auto& s : sols) c.eigenvalues.push_back("(" + s.h12.str() + ", " + s.h710.str() + ")");
    rep.push_back(c);
    for (const auto& s : sols) {
      found.insert({s.h12, s.h710});
      bool ok = true;
      for (const auto& [st, x] : s.vector.terms())
        ok = ok && depth(st) == cell.depth && parity(st) == module_parity(cell.module) &&
             project_to_g2(d4_weight(st)) == g2_target(cell.weight);
      rep.push_back(make_check("solve_hwv " + cell_name(cell) + " homogeneous in depth, parity and weight", ok));
      Rational hg2 = g2_casimir_eigenvalue(s.vector);
      CheckResult g = make_check("h12 + h710 + hG2 = depth on " + cell_name(cell), s.h12 + s.h710 + hg2 == cell.depth);
      g.eigenvalues = {s.h12.str(), s.h710.str(), hg2.str()};
      rep.push_back(g);
    }
  }
  std::multiset<std::pair<Rational, Rational>> want;
  for (const auto& p : reference_hwvs()) want.insert({p.label.h12, p.label.h710});
  rep.push_back(make_check("eigenvalue pairs of all solutions", found == want));
  rep.push_back(make_check("V0 depth 1 Omega0 search is empty", solve_hwv(Module::V0, 1, G2Label::omega0).empty()));
  rep.push_back(make_check("V0 depth 2 Omega2 search is empty", solve_hwv(Module::V0, 2, G2Label::omega2).empty()));

  // candidate bases versus the explicit lists
  for (const auto& l : listed_bases()) {
    auto cand = candidate_basis(l.cell.module, l.cell.depth, l.cell.weight);
    std::set<FockState> cs(cand.begin(), cand.end()), ls(l.states.begin(), l.states.end());
    bool contains = std::includes(cs.begin(), cs.end(), ls.begin(), ls.end());
    std::vector<FockState> extra;
    for (const auto& s : cand)
      if (!ls.count(s)) extra.push_back(s);
    bool hwv_in_list = true;
    for (const auto& s : solve_hwv(l.cell.module, l.cell.depth, l.cell.weight))
      hwv_in_list = hwv_in_list && in_span(s.vector, l.states);
    rep.push_back(make_check("candidate basis " + cell_name(l.cell) + " contains the listed states", contains));
    rep.push_back(make_check("solutions in " + cell_name(l.cell) + " lie in the span of the listed states", hwv_in_list,
                             extra.empty() ? "" : "weight-space states outside the list: " + join(state_names(extra))));
  }
  return rep;
}

}  // namespace d4g2
