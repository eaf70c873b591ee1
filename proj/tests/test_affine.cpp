#include "doctest.h"

#include "d4g2/affine.hpp"

using namespace d4g2;

namespace {

const Rational half(1, 2);
const FieldLabel f1{1, false}, f2{2, false}, f3{3, false}, f4{4, false}, f1s{1, true}, f2s{2, true}, f3s{3, true},
    f4s{4, true};

int lowest(Sector s, int bound) { return s == Sector::NS ? -(2 * bound + 1) : -2 * bound; }

// −¼ Σ_r (r+½)(∘∘4(r)4(k−r)∘∘ + ∘∘4*(r)4*(k−r)∘∘ + ∘∘4(r)4*(k−r)∘∘ + ∘∘4*(r)4(k−r)∘∘) with r summed over a wide window
FockVector literal_half(int k, const FockVector& v) {
  const Sector sec = v.sector();
  FockVector r(sec);
  const std::pair<FieldLabel, FieldLabel> ps[] = {{f4, f4}, {f4s, f4s}, {f4, f4s}, {f4s, f4}};
  for (int r2 = lowest(sec, 5); r2 <= 11; r2 += 2) {
    Rational w = Rational(-1, 4) * (Rational(r2, 2) + half);
    for (const auto& [a, b] : ps) r += w * apply_normal_ordered({a.at(r2), b.at(2 * k - r2)}, v);
  }
  if (sec == Sector::Ramond && k == 0) r += Rational(1, 16) * v;
  return r;
}

FockVector literal_seven_tenths(int k, const FockVector& v) {
  const Sector sec = v.sector();
  FockVector r(sec);
  for (int r2 = lowest(sec, 5); r2 <= 11; r2 += 2) {
    Rational w = Rational(r2, 2) + half;
    for (int i = 1; i <= 4; ++i) {
      FieldLabel a{i, false}, b{i, true};
      r += Rational(-1, 10) * w * (apply_normal_ordered({b.at(r2), a.at(2 * k - r2)}, v) + apply_normal_ordered({a.at(r2), b.at(2 * k - r2)}, v));
    }
    for (const auto& [a, b] : {std::pair{f4, f4}, {f4s, f4s}, {f4, f4s}, {f4s, f4}})
      r += Rational(1, 20) * w * apply_normal_ordered({a.at(r2), b.at(2 * k - r2)}, v);
  }
  const int signs[7] = {1, 1, -1, 1, 1, -1, -1};
  const auto& pats = coset_quartic_patterns();
  const int lo = lowest(sec, 4), hi = 9;
  for (int a = lo; a <= hi; a += 2)
    for (int b = lo; b <= hi; b += 2)
      for (int c = lo; c <= hi; c += 2) {
        int d = 2 * k - a - b - c;
        if (d < lo || d > hi) continue;
        for (std::size_t p = 0; p < pats.size(); ++p)
          r += Rational(-signs[p], 5) *
               apply_normal_ordered({pats[p][0].at(a), pats[p][1].at(b), pats[p][2].at(c), pats[p][3].at(d)}, v);
      }
  if (sec == Sector::Ramond && k == 0) r += Rational(7, 80) * v;
  return r;
}

}  // namespace

TEST_CASE("G2 simple-root operators") {
  CHECK(g2_simple_op(G2Root::beta1).apply(parse_state("a1(-1/2) a2(-1/2) a2*(-1/2) |0>")) ==
        -1 * parse_state("a1(-1/2) a2(-1/2) a3*(-1/2) |0>"));
  CHECK(g2_simple_op(G2Root::minus_theta).apply(parse_state("a1(-3/2) |0>")) == parse_state("a2*(-1/2) |0>"));
  CHECK(g2_simple_op(G2Root::beta2).apply(FockVector::vacuum(Sector::NS)).is_zero());
  CHECK(g2_simple_op(G2Root::beta2).terms.size() == 3);
}

TEST_CASE("OperatorSpec arithmetic merges like terms") {
  OperatorSpec a = full_L(1, Sector::NS);
  OperatorSpec z = a - a;
  CHECK(z.is_zero());
  OperatorSpec b = Rational(2) * a;
  for (const auto& s : enumerate_basis(Sector::NS, Rational(3, 2))) CHECK(b.apply(s) == Rational(2) * a.apply(s));
  CHECK(a.terms.size() == 8);
}

TEST_CASE("full Virasoro family") {
  CHECK(full_L(0, Sector::NS).apply(parse_state("a1(-1/2) |0>")) == half * parse_state("a1(-1/2) |0>"));
  CHECK(full_L(0, Sector::Ramond).apply(FockVector::vacuum(Sector::Ramond)) == half * FockVector::vacuum(Sector::Ramond));
  // L_{-1} a(-1/2)|0> = a(-3/2)|0>
  CHECK(full_L(-1, Sector::NS).apply(parse_state("a2*(-1/2) |0>")) == parse_state("a2*(-3/2) |0>"));
  CHECK(full_L(-2, Sector::NS).apply(FockVector::vacuum(Sector::NS)) == conformal_vectors().d4);
}

TEST_CASE("coset operators agree with the literal mode sums") {
  for (Sector sec : {Sector::NS, Sector::Ramond})
    for (const auto& s : enumerate_basis(sec, Rational(3, 2)))
      for (int k = -1; k <= 1; ++k) {
        FockVector v(s);
        CHECK(coset_L(k, half, sec).apply(v) == literal_half(k, v));
        CHECK(coset_L(k, Rational(7, 10), sec).apply(v) == literal_seven_tenths(k, v));
      }
}

TEST_CASE("coset eigenvalues on reference vectors") {
  FockVector v = parse_state("a2(-1/2) a3(-1/2) a4(-1/2) |0>") + parse_state("a2(-1/2) a3(-1/2) a4*(-1/2) |0>") -
                 parse_state("a1(-1/2) a4(-1/2) a4*(-1/2) |0>");
  CHECK(coset_L(0, half, Sector::NS).apply(v) == half * v);
  FockVector r = FockVector::vacuum(Sector::Ramond);
  CHECK(coset_L(0, Rational(7, 10), Sector::Ramond).apply(r) == Rational(3, 80) * r);
  CHECK(coset_L(0, half, Sector::Ramond).apply(r) == Rational(1, 16) * r);
  for (const auto& s : basis_at_depth(Sector::NS, Rational(3, 2))) {
    bool low = true;
    for (const auto& g : s.factors())
      if (g.flavor == 4) low = false;
    if (low) CHECK(coset_L(1, half, Sector::NS).apply(s).is_zero());
  }
  CHECK_THROWS(coset_L(0, Rational(1, 3), Sector::NS));
}

TEST_CASE("commutator_check recovers the central charge") {
  OperatorSpec expected = Rational(4) * coset_L(0, half, Sector::NS);
  expected.scalar += Rational(1, 4);
  auto ok = commutator_check("c=1/2", coset_L(2, half, Sector::NS), coset_L(-2, half, Sector::NS), expected, Sector::NS, Rational(2));
  CHECK(ok.pass);
  expected.scalar += Rational(1, 4);
  auto bad = commutator_check("c=1", coset_L(2, half, Sector::NS), coset_L(-2, half, Sector::NS), expected, Sector::NS, Rational(2));
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_mismatch == 0L);
  CHECK(bad.note.find("|0>") != std::string::npos);
  CHECK(commutator_check("b2", coset_L(1, Rational(7, 10), Sector::NS), g2_simple_op(G2Root::beta2), OperatorSpec(),
                         Sector::NS, Rational(2))
            .pass);
}

TEST_CASE("conformal vectors and Sugawara assembly") {
  const auto& cv = conformal_vectors();
  const auto& b = subalgebra_bases();
  CHECK(cv.d4_b3 == Rational(1, 4) * (pair_vector(f4, f4s) + pair_vector(f4s, f4) + pair_vector(f4, f4) + pair_vector(f4s, f4s)));
  CHECK(cv.d4 == cv.b3 + cv.d4_b3);
  CHECK(sugawara_omega(dual_pairs(b.b1), 5) == cv.b3);
  CHECK(sugawara_omega(dual_pairs(b.g0), 4) == cv.g2);

  // CSA, long and short pieces of the B3 sum without the 1/12
  FockVector low(Sector::NS);
  for (int i = 1; i <= 3; ++i) low += pair_vector({i, false}, {i, true}) + pair_vector({i, true}, {i, false});
  FockVector fourfold = pair_vector(f4, f4s) + pair_vector(f4s, f4) - pair_vector(f4, f4) - pair_vector(f4s, f4s);
  auto pairs = dual_pairs(b.b1);
  FockVector csa(Sector::NS), lng(Sector::NS), sht(Sector::NS);
  const FockVector vac = FockVector::vacuum(Sector::NS);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    FockVector t = current(pairs[i].first, -1).apply(current(pairs[i].second, -1).apply(vac));
    const std::string& n = b.b1[i].first;
    if (n[0] == 'h')
      csa += t;
    else if (n.find("g3") != std::string::npos && n.find("2g3") == std::string::npos)
      sht += t;
    else
      lng += t;
  }
  CHECK(csa == low);
  CHECK(lng == Rational(4) * low);
  CHECK(sht == low + Rational(3) * fourfold);

  std::vector<std::pair<SO8Element, SO8Element>> wrong = {{SO8Element::h(1), SO8Element::h(2)}};
  CHECK_THROWS(sugawara_omega(wrong, 5));
}

TEST_CASE("Ramond delta corrections") {
  CHECK(binomial_half(0) == Rational(1));
  CHECK(binomial_half(1) == -half);
  CHECK(binomial_half(2) == Rational(3, 8));
  CHECK(delta_coefficient(0, 1) == Rational(1, 8));
  CHECK(delta_coefficient(1, 0) == Rational(-1, 8));
  CHECK(delta_coefficient(0, 0) == Rational(0));
  const auto& cv = conformal_vectors();
  CHECK(delta_correction(cv.d4) == half);
  CHECK(delta_correction(cv.d4_b3) == Rational(1, 16));
  CHECK(delta_correction(cv.b3_g2) == Rational(7, 80));
  CHECK(delta_correction(boxed(Boxed::b11s22s)).is_zero());
  CHECK(vertex_operator(cv.b3_g2, 0, Sector::Ramond).scalar == coset_L(0, Rational(7, 10), Sector::Ramond).scalar);
}

TEST_CASE("sigma-hat on the boxed span") {
  const auto& sh = sigma_hat_boxed();
  CHECK(sh.apply(boxed(Boxed::b1s234s)) == -1 * boxed(Boxed::b1s234));
  CHECK(sh.apply(boxed(Boxed::b44s), 3) == boxed(Boxed::b44s));
  auto c = sh.coordinates(sh.apply(conformal_vectors().d4_b3));
  CHECK(c == std::vector<Rational>{Rational(1, 8), Rational(0), Rational(-1, 8), Rational(-1, 8), Rational(0), Rational(1, 4), Rational(0)});
  CHECK_THROWS(sh.coordinates(pair_vector(f1, f2)));
}

TEST_CASE("affine invariants") {
  for (const auto& r : affine_checks(false)) CHECK_MESSAGE(r.pass, r.check << " " << r.note);
}
