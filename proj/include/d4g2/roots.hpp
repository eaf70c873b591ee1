#pragma once

#include <array>
#include <string>
#include <vector>

#include "d4g2/report.hpp"
#include "d4g2/scalars.hpp"

namespace d4g2 {

struct D4Weight {
  std::array<Rational, 4> e{};

  static D4Weight eps(int i);
  D4Weight operator-() const;
  D4Weight& operator+=(const D4Weight& o);
  D4Weight& operator-=(const D4Weight& o);
  friend D4Weight operator+(D4Weight a, const D4Weight& b) { return a += b; }
  friend D4Weight operator-(D4Weight a, const D4Weight& b) { return a -= b; }
  friend D4Weight operator*(const Rational& s, const D4Weight& w);
  friend bool operator==(const D4Weight& a, const D4Weight& b) { return a.e == b.e; }
  friend bool operator<(const D4Weight& a, const D4Weight& b);
  std::string str() const;
};

Rational dot(const D4Weight& a, const D4Weight& b);

// coefficients of the G2 fundamental weights (λ̄1, λ̄2)
struct G2Weight {
  Rational m1, m2;
  bool dominant_integral() const;
  friend bool operator==(const G2Weight& a, const G2Weight& b) { return a.m1 == b.m1 && a.m2 == b.m2; }
  std::string str() const;
};

// coefficients in the simple-root basis (β1, β2)
struct G2RootCoords {
  Rational b1, b2;
  friend bool operator==(const G2RootCoords& a, const G2RootCoords& b) { return a.b1 == b.b1 && a.b2 == b.b2; }
};

struct RootTables {
  std::array<D4Weight, 4> d4_simple;
  D4Weight d4_theta;
  std::array<D4Weight, 2> g2_simple;
  std::array<D4Weight, 2> g2_fundamental;
  std::array<D4Weight, 3> b3_simple;
  std::array<D4Weight, 4> d4_fundamental;
};

const RootTables& root_tables();
std::vector<D4Weight> d4_roots();
std::vector<G2RootCoords> g2_roots();

G2Weight project_to_g2(const D4Weight& w);
G2RootCoords project_alphas(const std::array<Rational, 4>& a);
G2RootCoords to_root_coords(const G2Weight& w);
G2Weight to_weight_coords(const G2RootCoords& r);
D4Weight g2_embed(const G2Weight& w);
std::array<Rational, 4> alpha_coefficients(const D4Weight& w);
// σ* on the simple roots: α1 → α4, α2 → α2, α3 → α1, α4 → α3
D4Weight sigma_star(const D4Weight& w);
D4Weight tau_star(const D4Weight& w);

Report root_data_checks();

}  // namespace d4g2
