#include <algorithm>
#include <random>
#include <set>

#include "d4g2/fock.hpp"
#include "d4g2/series.hpp"

namespace d4g2 {

namespace {

std::vector<GeneratorLabel> generators(Sector sector, int max_abs_mode2) {
  std::vector<GeneratorLabel> out;
  for (int m2 = -max_abs_mode2; m2 <= max_abs_mode2; ++m2) {
    if ((sector == Sector::NS) != (m2 % 2 != 0)) continue;
    for (int f = 1; f <= 4; ++f)
      for (bool st : {false, true}) out.push_back({f, st, m2});
  }
  return out;
}

std::map<std::vector<int>, Rational> as_map(const std::vector<OrderedTerm>& ts) {
  std::map<std::vector<int>, Rational> m;
  for (const auto& t : ts) {
    std::vector<int> key;
    for (const auto& g : t.word) key.push_back(g.key());
    m[key] += t.coeff;
    if (m[key].is_zero()) m.erase(key);
  }
  return m;
}

std::map<std::vector<int>, int> multisets(const std::vector<std::array<int, 4>>& tuples) {
  std::map<std::vector<int>, int> m;
  for (const auto& t : tuples) {
    std::vector<int> s(t.begin(), t.end());
    std::sort(s.begin(), s.end());
    ++m[s];
  }
  return m;
}

}  // namespace

const std::vector<std::array<FieldLabel, 4>>& coset_quartic_patterns() {
  static const std::vector<std::array<FieldLabel, 4>> p = {
      {{{1, false}, {1, true}, {2, false}, {2, true}}}, {{{1, false}, {1, true}, {3, false}, {3, true}}},
      {{{2, false}, {2, true}, {3, false}, {3, true}}}, {{{1, true}, {2, false}, {3, false}, {4, false}}},
      {{{1, false}, {2, true}, {3, true}, {4, true}}},  {{{1, true}, {2, false}, {3, false}, {4, true}}},
      {{{1, false}, {2, true}, {3, true}, {4, false}}}};
  return p;
}

Report fock_checks() {
  Report rep;

  bool cliff = true;
  for (Sector sec : {Sector::NS, Sector::Ramond}) {
    auto states = enumerate_basis(sec, Rational(2));
    auto gens = generators(sec, sec == Sector::NS ? 5 : 4);
    for (const auto& g : gens)
      for (const auto& h : gens)
        for (const auto& s : states) {
          FockVector v(s);
          FockVector lhs = apply_generator(g, apply_generator(h, v)) + apply_generator(h, apply_generator(g, v));
          FockVector rhs = g.pairs_with(h) ? v : FockVector(sec);
          if (lhs != rhs) cliff = false;
        }
  }
  rep.push_back(make_check("Clifford relations hold as operator identities on all basis states of depth <= 2", cliff));

  bool counts = true;
  std::string detail;
  const int N = 8;
  Series ns = horizontal_gr(Sector::NS, N), ra = horizontal_gr(Sector::Ramond, N);
  auto nsb = enumerate_basis(Sector::NS, Rational(4));
  auto rab = enumerate_basis(Sector::Ramond, Rational(4));
  for (int k = 0; k <= N; ++k) {
    long cn = std::count_if(nsb.begin(), nsb.end(), [&](const FockState& s) { return s.depth2() == k; });
    long cr = std::count_if(rab.begin(), rab.end(), [&](const FockState& s) { return s.depth2() == k; });
    if (Rational(cn) != ns[k]) counts = false;
    if (k <= 7 && Rational(cr) != ra[k]) counts = false;
    if (k <= 4) detail += (detail.empty() ? "" : ",") + std::to_string(cn);
  }
  auto c = make_check("basis counts per depth equal the horizontal products to depth 4 (NS and Ramond)", counts);
  c.lhs = detail;
  rep.push_back(c);

  bool alt = true;
  std::mt19937 rng(7);
  for (Sector sec : {Sector::NS, Sector::Ramond}) {
    auto pool = generators(sec, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<GeneratorLabel> w(4);
      for (auto& g : w) g = pool[pick(rng)];
      auto base = as_map(normal_order_monomial(w));
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto sw = w;
        std::swap(sw[i], sw[i + 1]);
        auto m = as_map(normal_order_monomial(sw));
        for (auto& [k, v] : m) v = -v;
        if (w[i] == w[i + 1] ? !m.empty() : m != base) alt = false;
      }
    }
  }
  rep.push_back(make_check("normal ordering is alternating under transpositions (NS and Ramond, zero-mode blocks included)", alt));

  auto k0 = multisets(quartic_mode_tuples(Sector::NS, 0, 3));
  auto k1 = multisets(quartic_mode_tuples(Sector::NS, 1, 3));
  std::map<std::vector<int>, int> want0 = {{{-1, -1, 1, 1}, 6}, {{-3, 1, 1, 1}, 4}, {{-1, -1, -1, 3}, 4}};
  std::map<std::vector<int>, int> want1 = {{{-1, 1, 1, 1}, 4}};
  rep.push_back(make_check("quartic mode tuples on depth 3/2: multisets --++, -+++, ---+ with 6, 4, 4 orderings (k=0) and -+++ with 4 (k=1)",
                           k0 == want0 && k1 == want1));

  bool complete = true;
  auto v1 = basis_at_depth(Sector::NS, Rational(3, 2), 1);
  for (int k : {0, 1}) {
    std::set<std::array<int, 4>> allowed;
    for (const auto& t : quartic_mode_tuples(Sector::NS, k, 3)) allowed.insert(t);
    for (int a = -7; a <= 7; a += 2)
      for (int b = -7; b <= 7; b += 2)
        for (int cc = -7; cc <= 7; cc += 2) {
          std::array<int, 4> t{a, b, cc, 2 * k - a - b - cc};
          if (allowed.count(t) || std::abs(t[3]) > 7) continue;
          for (const auto& p : coset_quartic_patterns())
            for (const auto& s : v1) {
              std::vector<GeneratorLabel> w = {p[0].at(t[0]), p[1].at(t[1]), p[2].at(t[2]), p[3].at(t[3])};
              if (!apply_normal_ordered(w, FockVector(s)).is_zero()) complete = false;
            }
        }
  }
  rep.push_back(make_check("every quartic term outside the enumerated tuples annihilates the depth-3/2 basis (modes up to 7/2)", complete));

  bool vac = apply_generator(gen(4, false, 0), FockVector::vacuum(Sector::Ramond)).is_zero() &&
             depth(FockState::vacuum(Sector::NS)) == Rational(0) &&
             depth(FockState::vacuum(Sector::Ramond)) == Rational(1, 2) &&
             d4_weight(parse_state("a4*(0) |0'>").terms().begin()->first) == root_tables().d4_fundamental[2];
  rep.push_back(make_check("vacua: depths 0 and 1/2, A(Z)^+ kills |0'>, a4*(0)|0'> has weight lambda3", vac));
  return rep;
}

}  // namespace d4g2
