#include "doctest.h"

#include "d4g2/roots.hpp"

using namespace d4g2;

TEST_CASE("projection examples") {
  const auto& t = root_tables();
  G2Weight beta1 = to_weight_coords({1, 0});
  CHECK(beta1 == G2Weight{2, -3});
  CHECK(project_to_g2(t.d4_simple[1]) == beta1);
  CHECK(project_to_g2(t.d4_fundamental[3]) == G2Weight{0, 1});
  CHECK(project_to_g2(t.d4_fundamental[0]) == G2Weight{0, 1});
  CHECK(project_to_g2(t.d4_fundamental[2]) == G2Weight{0, 1});
  CHECK(project_to_g2(t.d4_fundamental[1]) == G2Weight{1, 0});
  CHECK(project_to_g2(D4Weight{}) == G2Weight{0, 0});
}

TEST_CASE("alpha-route projection") {
  CHECK(project_alphas({1, 0, 0, 0}) == G2RootCoords{0, 1});
  CHECK(project_alphas({0, 0, 1, 1}) == G2RootCoords{0, 2});
  CHECK(project_alphas({0, 1, 0, 0}) == G2RootCoords{1, 0});
  const auto& t = root_tables();
  for (int i = 0; i < 4; ++i) {
    std::array<Rational, 4> a{};
    a[i] = 1;
    CHECK(to_root_coords(project_to_g2(t.d4_simple[i])) == project_alphas(a));
  }
}

TEST_CASE("G2 simple roots and fundamental weights in epsilon coordinates") {
  const auto& t = root_tables();
  CHECK(t.g2_fundamental[0] == Rational(2) * t.g2_simple[0] + Rational(3) * t.g2_simple[1]);
  CHECK(t.g2_fundamental[1] == t.g2_simple[0] + Rational(2) * t.g2_simple[1]);
  CHECK(g2_embed(project_to_g2(t.g2_simple[0])) == t.g2_simple[0]);
  CHECK(g2_embed(project_to_g2(t.g2_simple[1])) == t.g2_simple[1]);
  CHECK(dot(t.g2_simple[0], t.g2_simple[0]) == Rational(3) * dot(t.g2_simple[1], t.g2_simple[1]));
  CHECK(G2Weight{1, 0}.dominant_integral());
  CHECK_FALSE(G2Weight{Rational(1, 2), 0}.dominant_integral());
}

TEST_CASE("root data invariants") {
  for (const auto& r : root_data_checks()) CHECK_MESSAGE(r.pass, r.check);
  CHECK(d4_roots().size() == 24);
  CHECK(g2_roots().size() == 12);
}

TEST_CASE("projection is linear on random combinations") {
  auto roots = d4_roots();
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = 0; j < roots.size(); j += 5) {
      D4Weight s = roots[i] + Rational(3) * roots[j];
      G2Weight p = project_to_g2(s), pi = project_to_g2(roots[i]), pj = project_to_g2(roots[j]);
      CHECK(p == G2Weight{pi.m1 + 3 * pj.m1, pi.m2 + 3 * pj.m2});
    }
}
