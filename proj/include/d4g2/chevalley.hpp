#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "d4g2/linalg.hpp"
#include "d4g2/report.hpp"
#include "d4g2/scalars.hpp"

namespace d4g2 {

// Index 0..3 = a_1..a_4, 4..7 = a_1^*..a_4^*, 8 + S = v_S for S ⊆ {1,2,3,4} as a bitmask.
struct ChevalleyBasisLabel {
  int index;

  static ChevalleyBasisLabel a(int flavor, bool starred) { return {flavor - 1 + (starred ? 4 : 0)}; }
  static ChevalleyBasisLabel cm(unsigned mask) { return {8 + static_cast<int>(mask)}; }
  bool is_a() const { return index < 8; }
  int flavor() const { return index % 4 + 1; }
  bool starred() const { return index >= 4; }
  unsigned mask() const { return static_cast<unsigned>(index - 8); }
  // 0 = A, 1 = CM^0, 2 = CM^1
  int summand() const;
  std::string str() const;
};

constexpr int kChevalleyDim = 24;

class ChevalleyElement {
 public:
  ChevalleyElement() = default;
  static ChevalleyElement basis(int index, const Eis& c = Eis(1));
  static ChevalleyElement a(int flavor);
  static ChevalleyElement astar(int flavor);
  // v_S = a_S^* vac with S listed in any order; the sign follows the listed order
  static ChevalleyElement v(std::initializer_list<int> subscripts);

  const std::map<int, Eis>& coeffs() const { return c_; }
  Eis coeff(int index) const;
  bool is_zero() const { return c_.empty(); }
  // component in summand 0 (A), 1 (CM^0) or 2 (CM^1)
  ChevalleyElement component(int summand) const;
  void add(int index, const Eis& c);

  ChevalleyElement operator-() const;
  ChevalleyElement& operator+=(const ChevalleyElement& o);
  ChevalleyElement& operator-=(const ChevalleyElement& o);
  ChevalleyElement& operator*=(const Eis& s);
  friend ChevalleyElement operator+(ChevalleyElement a, const ChevalleyElement& b) { return a += b; }
  friend ChevalleyElement operator-(ChevalleyElement a, const ChevalleyElement& b) { return a -= b; }
  friend ChevalleyElement operator*(const Eis& s, ChevalleyElement a) { return a *= s; }
  friend bool operator==(const ChevalleyElement& a, const ChevalleyElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ChevalleyElement& a, const ChevalleyElement& b) { return !(a == b); }
  std::string str() const;

 private:
  std::map<int, Eis> c_;
};

// Left Clifford action of a_i or a_i^* (label index 0..7) on CM.
ChevalleyElement finite_clifford_act(int a_index, const ChevalleyElement& m);
// (b, c) on CM: α(b)c = (b, c) w; extended to 𝒞 with (a_i, a_j^*) = δ_ij and (A, CM) = 0.
Eis cm_pairing(const ChevalleyElement& b, const ChevalleyElement& c);
Eis pairing(const ChevalleyElement& x, const ChevalleyElement& y);
// permutation sign of a sequence of distinct integers
int perm_sign(const std::vector<int>& seq);

ChevalleyElement circ_product(const ChevalleyElement& u1, const ChevalleyElement& u2);
// the same product from the polarized cubic form Φ and the pairing
ChevalleyElement circ_product_from_form(const ChevalleyElement& u1, const ChevalleyElement& u2);
Eis cubic_form_polarized(const ChevalleyElement& u1, const ChevalleyElement& u2, const ChevalleyElement& u3);
ChevalleyElement pairing_dual(int index);

ChevalleyElement e_vector(int which);
ChevalleyElement rho_e(int which, const ChevalleyElement& u);
ChevalleyElement sigma(const ChevalleyElement& u);
ChevalleyElement sigma_power(int k, const ChevalleyElement& u);
ChevalleyElement tau(const ChevalleyElement& u);

using OperatorMatrix = Matrix<Eis>;  // 24 x 24, column j = image of basis j
OperatorMatrix operator_matrix(const std::vector<ChevalleyElement>& images);
OperatorMatrix sigma_matrix();
OperatorMatrix tau_matrix();

// Generators 0..7 = a_1..a_4, a_1^*..a_4^*; x = Σ_{p<q} m[p][q] ∘∘g_p g_q∘∘ with m antisymmetric.
class SO8Element {
 public:
  SO8Element();
  static SO8Element pair(int p, int q, const Eis& c = Eis(1));
  static SO8Element h(int i);
  // ∘∘uv∘∘ for u, v ∈ A
  static SO8Element wedge(const ChevalleyElement& u, const ChevalleyElement& v);
  static int basis_count() { return 28; }
  static SO8Element basis(int k);
  static std::pair<int, int> basis_pair(int k);

  const Eis& at(int p, int q) const { return m_[p][q]; }
  bool is_zero() const;
  std::vector<Eis> coords() const;
  static SO8Element from_coords(const std::vector<Eis>& c);

  SO8Element operator-() const;
  SO8Element& operator+=(const SO8Element& o);
  SO8Element& operator-=(const SO8Element& o);
  SO8Element& operator*=(const Eis& s);
  friend SO8Element operator+(SO8Element a, const SO8Element& b) { return a += b; }
  friend SO8Element operator-(SO8Element a, const SO8Element& b) { return a -= b; }
  friend SO8Element operator*(const Eis& s, SO8Element a) { return a *= s; }
  friend bool operator==(const SO8Element& a, const SO8Element& b) { return a.m_ == b.m_; }
  friend bool operator!=(const SO8Element& a, const SO8Element& b) { return !(a == b); }
  std::string str() const;

 private:
  std::array<std::array<Eis, 8>, 8> m_;
};

std::string generator_name(int g);

// ∘∘uv∘∘ acting on 𝒞 with u, v in one summand: natural formula on that summand, half ∘ formula elsewhere
ChevalleyElement pair_action(const ChevalleyElement& u, const ChevalleyElement& v, const ChevalleyElement& t);
OperatorMatrix pair_operator(const ChevalleyElement& u, const ChevalleyElement& v);
ChevalleyElement g_action(const SO8Element& x, const ChevalleyElement& u);
OperatorMatrix g_operator(const SO8Element& x);
SO8Element bracket(const SO8Element& x, const SO8Element& y);
Eis killing(const SO8Element& x, const SO8Element& y);
Matrix<Eis> so8_matrix(const SO8Element& x);

struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the element of g whose action on 𝒞 equals the given operator
SO8Element identify(const OperatorMatrix& op);
SO8Element identify_pair(const ChevalleyElement& u, const ChevalleyElement& v);
// σ^i(x) = Σ m[p][q] ∘∘(σ^i g_p)(σ^i g_q)∘∘ written in g^(0)
SO8Element identify_operator(int i, const SO8Element& x);
SO8Element tau_g(const SO8Element& x);

struct IdentificationRow {
  std::string label;
  Eis sign1;
  std::vector<int> u1, v1;  // subscripts of the CM^0 pair in g^(1); {} is v
  SO8Element g0;
  Eis sign2;
  std::vector<int> u2, v2;  // subscripts of the CM^1 pair in g^(2)
};
std::vector<IdentificationRow> identification_positive_roots();

struct CartanRow {
  int i;
  Eis sign1;
  std::vector<int> u1, v1;
  SO8Element sigma_h;
  Eis sign2;
  std::vector<int> u2, v2;
  SO8Element sigma2_h;
};
std::vector<CartanRow> identification_cartan();
Matrix<Rational> matrix_script_a();

struct SubalgebraBases {
  std::vector<std::pair<std::string, SO8Element>> g0, g1, g2, b1, b_minus1;
};
const SubalgebraBases& subalgebra_bases();
std::size_t span_rank(const std::vector<SO8Element>& xs);
bool in_span(const std::vector<SO8Element>& basis, const SO8Element& x);
// dual basis with respect to killing(); throws when the form is degenerate on the span
std::vector<SO8Element> killing_dual_basis(const std::vector<SO8Element>& basis);

Report chevalley_checks();

}  // namespace d4g2
