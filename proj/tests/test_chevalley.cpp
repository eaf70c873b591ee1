#include "doctest.h"

#include <random>

#include "d4g2/chevalley.hpp"

using namespace d4g2;
using E = ChevalleyElement;

namespace {

E vac() { return E::v({}); }

// α(v_S) c read off on v_1234, with α(a_{s1}^*..a_{sk}^*) = a_{sk}^*..a_{s1}^*
Eis reversal_pairing(const std::vector<int>& s, const E& c) {
  E r = c;
  for (int f : s) r = finite_clifford_act(ChevalleyBasisLabel::a(f, true).index, r);
  return r.coeff(ChevalleyBasisLabel::cm(0xF).index);
}

// v_S with S in the listed order
E from_list(const std::vector<int>& s) {
  E r = vac();
  for (auto it = s.rbegin(); it != s.rend(); ++it) r = finite_clifford_act(ChevalleyBasisLabel::a(*it, true).index, r);
  return r;
}

std::vector<int> subscripts(unsigned mask) {
  std::vector<int> s;
  for (int f = 1; f <= 4; ++f)
    if (mask & (1u << (f - 1))) s.push_back(f);
  return s;
}

Matrix<Eis> commutator(const Matrix<Eis>& a, const Matrix<Eis>& b) {
  auto ab = mat_mul(a, b), ba = mat_mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

const SO8Element& named(const std::vector<std::pair<std::string, SO8Element>>& xs, const std::string& name) {
  for (const auto& [n, x] : xs)
    if (n == name) return x;
  FAIL("missing basis element " << name);
  return xs.front().second;
}

}  // namespace

TEST_CASE("finite Clifford action") {
  CHECK(finite_clifford_act(ChevalleyBasisLabel::a(1, true).index, vac()) == E::v({1}));
  CHECK(finite_clifford_act(ChevalleyBasisLabel::a(1, false).index, E::v({1})) == vac());
  CHECK(finite_clifford_act(ChevalleyBasisLabel::a(1, false).index, E::v({2, 3})).is_zero());
  CHECK(finite_clifford_act(ChevalleyBasisLabel::a(2, true).index, E::v({1})) == E::v({2, 1}));
  CHECK(E::v({2, 1}) == Eis(-1) * E::v({1, 2}));
  // a_i a_j^* + a_j^* a_i = δ_ij on every CM basis vector
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (unsigned s = 0; s < 16; ++s) {
        E m = E::basis(ChevalleyBasisLabel::cm(s).index);
        int ai = ChevalleyBasisLabel::a(i, false).index, aj = ChevalleyBasisLabel::a(j, true).index;
        E lhs = finite_clifford_act(ai, finite_clifford_act(aj, m)) + finite_clifford_act(aj, finite_clifford_act(ai, m));
        CHECK(lhs == (i == j ? m : E{}));
      }
}

TEST_CASE("CM pairing agrees with the reversal oracle") {
  CHECK(cm_pairing(vac(), E::v({1, 2, 3, 4})) == Eis(1));
  CHECK(cm_pairing(E::v({1}), E::v({2, 3, 4})) == reversal_pairing({1}, E::v({2, 3, 4})));
  for (unsigned s = 0; s < 16; ++s)
    for (unsigned t = 0; t < 16; ++t) {
      E b = E::basis(ChevalleyBasisLabel::cm(s).index), c = E::basis(ChevalleyBasisLabel::cm(t).index);
      CHECK(cm_pairing(b, c) == reversal_pairing(subscripts(s), c));
      CHECK(cm_pairing(b, c) == cm_pairing(c, b));
      if ((__builtin_popcount(s) + __builtin_popcount(t)) % 2 == 1) CHECK(cm_pairing(b, c).is_zero());
    }
  CHECK(pairing(E::a(2), E::astar(2)) == Eis(1));
  CHECK(pairing(E::a(2), E::astar(3)).is_zero());
  CHECK(pairing(E::a(1), E::v({2, 3, 4})).is_zero());
}

TEST_CASE("circ product rules") {
  CHECK(circ_product(vac(), E::v({1})).is_zero());
  CHECK(circ_product(E::v({1}), E::v({2, 3})) == Eis(perm_sign({1, 4, 2, 3})) * E::a(4));
  CHECK(circ_product(E::v({1, 2}), E::v({1, 2, 3})).is_zero());
  CHECK(circ_product(E::v({1, 2, 3, 4}), E::v({2})) == E::astar(2));
  CHECK(circ_product(E::a(1), E::a(2)).is_zero());
  CHECK(circ_product(E::a(1), E::v({1})) == vac());
  CHECK(circ_product(E::astar(3), vac()) == E::v({3}));
  CHECK(perm_sign({2, 1, 3}) == -1);
  CHECK(perm_sign({3, 1, 2}) == 1);
}

TEST_CASE("circ rule table equals the cubic-form oracle") {
  for (int i = 0; i < kChevalleyDim; ++i)
    for (int j = 0; j < kChevalleyDim; ++j) {
      E u = E::basis(i), v = E::basis(j);
      CHECK_MESSAGE(circ_product(u, v) == circ_product_from_form(u, v), u.str() << " o " << v.str());
    }
}

TEST_CASE("triality automorphisms on examples") {
  CHECK(sigma(E::a(1)) == vac());
  CHECK(sigma(E::astar(4)) == Eis(-1) * E::v({2, 3}));
  CHECK(tau(E::a(4)) == E::astar(4));
  CHECK(tau(E::a(1)) == Eis(-1) * E::a(1));
  CHECK(pairing(e_vector(1), e_vector(1)) == Eis(2));
  CHECK(pairing(e_vector(2), e_vector(2)) == Eis(2));
  CHECK(pairing(e_vector(3), e_vector(3)) == Eis(2));
  CHECK(circ_product(e_vector(1), e_vector(2)) == e_vector(3));
}

TEST_CASE("sigma and tau relations on the basis") {
  for (int i = 0; i < kChevalleyDim; ++i) {
    E u = E::basis(i);
    CHECK(sigma_power(3, u) == u);
    CHECK(tau(tau(u)) == u);
    CHECK(tau(sigma(tau(u))) == sigma_power(2, u));
    for (int j = 0; j < kChevalleyDim; ++j) {
      E v = E::basis(j);
      CHECK(sigma(circ_product(u, v)) == circ_product(sigma(u), sigma(v)));
      CHECK(pairing(sigma(u), sigma(v)) == pairing(u, v));
    }
  }
  CHECK(rank(identity_matrix<Eis>(kChevalleyDim)) == 24);
}

TEST_CASE("g acts naturally on A") {
  CHECK(g_action(SO8Element::h(1), E::a(1)) == E::a(1));
  CHECK(g_action(SO8Element::pair(0, 1), E::astar(2)) == E::a(1));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      CHECK(g_action(SO8Element::h(i), E::a(j)) == (i == j ? E::a(j) : E{}));
      CHECK(g_action(SO8Element::h(i), E::astar(j)) == (i == j ? Eis(-1) * E::astar(j) : E{}));
    }
}

TEST_CASE("bracket, form and matrix realization") {
  CHECK(bracket(SO8Element::h(1), SO8Element::pair(0, 1)) == SO8Element::pair(0, 1));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(killing(SO8Element::h(i), SO8Element::h(j)) == Eis(i == j ? 1 : 0));
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&] {
    std::vector<Eis> c(28);
    for (auto& x : c) x = Eis(Rational(coef(rng)), Rational(coef(rng)));
    return SO8Element::from_coords(c);
  };
  for (int k = 0; k < 20; ++k) {
    SO8Element x = random_element(), y = random_element();
    CHECK(so8_matrix(bracket(x, y)) == commutator(so8_matrix(x), so8_matrix(y)));
    CHECK(g_operator(bracket(x, y)) == commutator(g_operator(x), g_operator(y)));
    CHECK(killing(x, y) == killing(y, x));
  }
}

TEST_CASE("identification of sigma images") {
  SO8Element half_sum = Eis(Rational(1, 2)) * (SO8Element::h(1) + SO8Element::h(2) + SO8Element::h(3) + SO8Element::h(4));
  CHECK(identify_operator(1, SO8Element::h(1)) == half_sum);
  CHECK(identify_operator(2, SO8Element::h(4)) ==
        Eis(Rational(1, 2)) * (SO8Element::h(1) - SO8Element::h(2) - SO8Element::h(3) - SO8Element::h(4)));
  CHECK(identify_pair(vac(), E::v({3, 4})) == SO8Element::pair(0, 1));
  for (int k = 0; k < SO8Element::basis_count(); k += 3) {
    SO8Element x = SO8Element::basis(k);
    CHECK(identify(g_operator(x)) == x);
    CHECK(identify_operator(1, identify_operator(2, x)) == x);
  }
}

TEST_CASE("positive-root identification table errata") {
  // entries whose printed sign is the negative of the computed identification
  std::vector<std::pair<std::string, int>> errata = {{"a1a3", 2}, {"a2a3*", 1}, {"a1a2*", 1}, {"a1a2*", 2}, {"a3a4", 2}};
  std::vector<std::pair<std::string, int>> found;
  for (const auto& row : identification_positive_roots())
    for (int col = 1; col <= 2; ++col) {
      SO8Element x = col == 1 ? row.sign1 * identify_pair(from_list(row.u1), from_list(row.v1))
                              : row.sign2 * identify_pair(from_list(row.u2), from_list(row.v2));
      if (x == row.g0) continue;
      CHECK(x == -row.g0);
      found.emplace_back(row.label, col);
    }
  CHECK(found == errata);
}

TEST_CASE("G2 and B3 subalgebras") {
  const auto& b = subalgebra_bases();
  CHECK(b.g0.size() == 14);
  CHECK(b.g1.size() == 7);
  CHECK(b.g2.size() == 7);
  CHECK(b.b1.size() == 21);
  CHECK(b.b_minus1.size() == 7);
  std::vector<SO8Element> g0, b1;
  for (const auto& [n, x] : b.g0) g0.push_back(x);
  for (const auto& [n, x] : b.b1) b1.push_back(x);
  CHECK(span_rank(g0) == 14);
  CHECK(span_rank(b1) == 21);
  for (const auto& x : g0) CHECK(identify_operator(1, x) == x);
  for (const auto& [n, x] : b.g1) CHECK(identify_operator(1, x) == Eis::xi() * x);
  for (const auto& [n, x] : b.b_minus1) CHECK(tau_g(x) == -x);
  SO8Element hb = bracket(named(b.g0, "X_b1"), named(b.g0, "X_-b1"));
  CHECK_FALSE(hb.is_zero());
  CHECK(in_span({named(b.g0, "H1"), named(b.g0, "H2")}, hb));
  auto dual = killing_dual_basis(g0);
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g0.size(); ++j) CHECK(killing(g0[i], dual[j]) == Eis(i == j ? 1 : 0));
}
