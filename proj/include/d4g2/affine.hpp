#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "d4g2/chevalley.hpp"
#include "d4g2/fock.hpp"
#include "d4g2/report.hpp"

namespace d4g2 {

enum class TermKind { quadratic, derivative, quartic };

// coeff · Σ ∘∘p1 p2∘∘_k, coeff · Σ (r−k−½)∘∘p1(k−r)p2(r)∘∘, or coeff · Σ ∘∘p1 p2 p3 p4∘∘_k
struct OperatorTerm {
  Rational coeff;
  TermKind kind = TermKind::quadratic;
  std::vector<FieldLabel> pattern;
  int total_mode = 0;
  std::string str() const;
};

class OperatorSpec {
 public:
  OperatorSpec() = default;
  explicit OperatorSpec(std::string name) : name(std::move(name)) {}

  std::string name;
  std::vector<OperatorTerm> terms;
  Rational scalar;

  OperatorSpec& quadratic(const Rational& c, FieldLabel a, FieldLabel b, int k);
  OperatorSpec& derivative(const Rational& c, FieldLabel a, FieldLabel b, int k);
  OperatorSpec& quartic(const Rational& c, const std::array<FieldLabel, 4>& p, int k);

  FockVector apply(const FockVector& v) const;
  FockVector apply(const FockState& s) const;
  bool is_zero() const { return terms.empty() && scalar.is_zero(); }
  std::string str() const;

  OperatorSpec& operator+=(const OperatorSpec& o);
  OperatorSpec& operator*=(const Rational& c);
  friend OperatorSpec operator+(OperatorSpec a, const OperatorSpec& b) { return a += b; }
  friend OperatorSpec operator-(OperatorSpec a, OperatorSpec b) { return a += (b *= Rational(-1)); }
  friend OperatorSpec operator*(const Rational& c, OperatorSpec a) { return a *= c; }
};

// memoized action of a single term on a basis state
const FockVector& apply_term(const OperatorTerm& t, const FockState& s);

enum class G2Root { beta1, beta2, minus_theta };
OperatorSpec g2_simple_op(G2Root which);

// X(n) = Σ_{p<q} m[p][q] ∘∘g_p(w)g_q(w)∘∘_n for a rational element of g
OperatorSpec current(const SO8Element& x, int n, const std::string& name = "X");

FockVector pair_vector(FieldLabel a, FieldLabel b);
FockVector quad_vector(FieldLabel a, FieldLabel b, FieldLabel c, FieldLabel d);

enum class Boxed { b44s, b11s22s, b22s44s, b1s234, b1s234s };
FockVector boxed(Boxed which);

struct ConformalVectors {
  FockVector d4, b3, g2, d4_b3, b3_g2;
};
const ConformalVectors& conformal_vectors();

// (1/(2(h∨+1))) Σ X_i(−1) X^i(−1) 𝟏
FockVector sugawara_omega(const std::vector<std::pair<SO8Element, SO8Element>>& basis, int dual_coxeter);
std::vector<std::pair<SO8Element, SO8Element>> dual_pairs(const std::vector<std::pair<std::string, SO8Element>>& basis);
// S Σ_i Σ_j ⋆⋆X_i(j) X^i(k−j)⋆⋆ v
FockVector sugawara_L(const std::vector<std::pair<SO8Element, SO8Element>>& basis, int dual_coxeter, int k,
                      const FockVector& v);

OperatorSpec full_L(int k, Sector sector);
// charge is 1/2 or 7/10
OperatorSpec coset_L(int k, const Rational& charge, Sector sector);

Rational binomial_half(int m);
Rational delta_coefficient(int m, int n);
// z^{-2}𝟏 coefficient of exp(Δ(z)) v
Rational delta_correction(const FockVector& v);
// Y_k(ω) on the given sector, read off from a depth-2 NS vector
OperatorSpec vertex_operator(const FockVector& omega, int k, Sector sector);

CheckResult commutator_check(const std::string& name, const OperatorSpec& a, const OperatorSpec& b,
                             const OperatorSpec& expected, Sector sector, const Rational& max_depth);

// the listed images on the span of ω_D4, boxed 11*22*, 22*44*, 1*234, 1*234* and the pairs 44*+4*4, 44+4*4*
struct SigmaHatSpan {
  std::vector<std::string> names;
  std::vector<FockVector> vectors;
  std::vector<std::vector<Rational>> images;  // images[j] are coordinates of σ̂(vectors[j])
  std::vector<Rational> coordinates(const FockVector& v) const;
  FockVector vector(const std::vector<Rational>& c) const;
  FockVector apply(const FockVector& v, int power = 1) const;
};
const SigmaHatSpan& sigma_hat_boxed();

Report sigma_hat_checks(bool full = true);
Report affine_checks(bool full = true);

}  // namespace d4g2
