#pragma once

#include <string>
#include <vector>

#include "d4g2/affine.hpp"
#include "d4g2/linalg.hpp"

namespace d4g2 {

enum class Module { V0, V1, V2, V3 };
enum class G2Label { omega0, omega2 };

Sector module_sector(Module m);
int module_parity(Module m);
std::string module_name(Module m);
Module parse_module(const std::string& s);
std::string g2_label_name(G2Label w);
// G2 weight 0 or λ̄2
G2Weight g2_target(G2Label w);

struct HWVLabel {
  Module module = Module::V0;
  Rational depth;
  Rational h12, h710;
  G2Label weight = G2Label::omega0;
  std::string str() const;
};

struct HWVSolution {
  FockVector vector;
  Rational h12, h710;
};

using RationalMatrix = Matrix<Rational>;

// states of the module at this depth whose D4 weight projects to the target G2 weight
std::vector<FockState> candidate_basis(Module m, const Rational& depth, G2Label w);

// X_β1(0), X_β2(0), X_−θ(1), L_1^{1/2}, L_2^{1/2}, L_1^{7/10}, L_2^{7/10}
const std::vector<OperatorSpec>& positive_operators(Sector sector);

std::vector<HWVSolution> solve_hwv(Module m, const Rational& depth, G2Label w);

// eigenvalues of a square rational matrix that are rational, with algebraic multiplicity
std::vector<std::pair<Rational, int>> rational_eigenvalues(const RationalMatrix& a);
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

struct ReferenceHWV {
  HWVLabel label;
  FockVector vector;
};
const std::vector<ReferenceHWV>& reference_hwvs();

// Sugawara G2 zero mode eigenvalue of an eigenvector
Rational g2_casimir_eigenvalue(const FockVector& v);

Report verify_reference_hwvs();
Report hwv_checks();

}  // namespace d4g2
