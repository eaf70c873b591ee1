#include "doctest.h"

#include "d4g2/hwv.hpp"

using namespace d4g2;

namespace {

const Rational half(1, 2);

FockVector ns3(const std::string& a, const std::string& b, const std::string& c) {
  return parse_state("a" + a + "(-1/2) a" + b + "(-1/2) a" + c + "(-1/2) |0>");
}

}  // namespace

TEST_CASE("candidate bases") {
  auto d = candidate_basis(Module::V1, Rational(3, 2), G2Label::omega2);
  CHECK(d.size() == 6);
  CHECK(d.front().str() == "a1(-3/2) |0>");
  auto r = candidate_basis(Module::V2, half, G2Label::omega2);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == FockState::vacuum(Sector::Ramond));
  CHECK(candidate_basis(Module::V0, 0, G2Label::omega2).empty());
  CHECK(candidate_basis(Module::V0, 2, G2Label::omega0).size() == 20);
}

TEST_CASE("rational eigenvalues") {
  RationalMatrix a = {{Rational(1, 16), 0}, {0, Rational(7, 16)}};
  auto e = rational_eigenvalues(a);
  REQUIRE(e.size() == 2);
  CHECK(e[0].first == Rational(1, 16));
  CHECK(e[1].first == Rational(7, 16));
  RationalMatrix b = {{0, 1}, {0, 0}};
  CHECK(rational_eigenvalues(b) == std::vector<std::pair<Rational, int>>{{Rational(0), 2}});
  RationalMatrix c = {{0, 1}, {2, 0}};  // x² − 2
  CHECK(rational_eigenvalues(c).empty());
  CHECK(characteristic_polynomial(c) == std::vector<Rational>{Rational(-2), 0, 1});
}

TEST_CASE("solve_hwv on the worked cell") {
  auto s = solve_hwv(Module::V1, Rational(3, 2), G2Label::omega2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].h12 == half);
  CHECK(s[0].h710 == Rational(3, 5));
  FockVector expected = ns3("2", "3", "4") + ns3("2", "3", "4*") - ns3("1", "4", "4*");
  CHECK(s[0].vector == -1 * expected);
}

TEST_CASE("solve_hwv vacuum and Ramond cells") {
  auto v = solve_hwv(Module::V0, 0, G2Label::omega0);
  REQUIRE(v.size() == 1);
  CHECK(v[0].vector == FockVector::vacuum(Sector::NS));
  CHECK(v[0].h12.is_zero());
  auto r = solve_hwv(Module::V2, half, G2Label::omega0);
  REQUIRE(r.size() == 1);
  CHECK(r[0].vector == parse_state("a1*(0) a4*(0) |0'>") - parse_state("a2*(0) a3*(0) |0'>"));
  CHECK(r[0].h12 == Rational(1, 16));
  CHECK(r[0].h710 == Rational(7, 16));
  CHECK(solve_hwv(Module::V0, 1, G2Label::omega0).empty());
  CHECK(solve_hwv(Module::V0, 2, G2Label::omega2).empty());
}

TEST_CASE("grading identity on the vacuum descendants") {
  // ω_G2 eigenvalue on a1(-1/2) is the G2 Casimir share of depth 1/2
  FockVector a1 = parse_state("a1(-1/2) |0>");
  CHECK(g2_casimir_eigenvalue(a1) == half - Rational(1, 10));
  CHECK_THROWS(g2_casimir_eigenvalue(parse_state("a1(-1/2) a4(-1/2) |0>")));
}

TEST_CASE("reference HWVs") {
  CHECK(reference_hwvs().size() == 12);
  for (const auto& r : hwv_checks()) CHECK_MESSAGE(r.pass, r.check << " " << r.note);
}
