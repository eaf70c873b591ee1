#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "d4g2/report.hpp"
#include "d4g2/roots.hpp"
#include "d4g2/scalars.hpp"
#include "d4g2/sector.hpp"

namespace d4g2 {

// a_flavor(mode2/2) or a_flavor^*(mode2/2)
struct GeneratorLabel {
  int flavor = 1;
  bool starred = false;
  int mode2 = -1;

  // canonical order: mode2 ascending, then flavor, then unstarred before starred
  int key() const { return (mode2 * 4 + (flavor - 1)) * 2 + (starred ? 1 : 0); }
  bool creator() const { return mode2 < 0 || (mode2 == 0 && starred); }
  Sector sector() const { return mode2 % 2 == 0 ? Sector::Ramond : Sector::NS; }
  // (g, h) = δ_flavor (one starred) δ_{m,-n}
  bool pairs_with(const GeneratorLabel& o) const {
    return flavor == o.flavor && starred != o.starred && mode2 == -o.mode2;
  }
  Rational mode() const { return Rational(mode2, 2); }
  std::string str() const;
  friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) { return a.key() == b.key(); }
  friend bool operator<(const GeneratorLabel& a, const GeneratorLabel& b) { return a.key() < b.key(); }
};

GeneratorLabel gen(int flavor, bool starred, const Rational& mode);

struct SectorMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// creator monomial on the vacuum, factors strictly increasing in canonical order
class FockState {
 public:
  explicit FockState(Sector sector = Sector::NS) : sector_(sector) {}
  // sorts the creators and returns the sign; nullopt for a repeated or non-creator factor
  static std::optional<std::pair<int, FockState>> from_creators(Sector sector, std::vector<GeneratorLabel> factors);
  static FockState vacuum(Sector sector) { return FockState(sector); }

  Sector sector() const { return sector_; }
  const std::vector<GeneratorLabel>& factors() const { return f_; }
  // Σ|mode| over factors
  Rational mode_depth() const;
  int depth2() const;
  std::string str() const;

  friend bool operator<(const FockState& a, const FockState& b);
  friend bool operator==(const FockState& a, const FockState& b) { return a.sector_ == b.sector_ && a.f_ == b.f_; }

 private:
  friend class FockVector;
  friend std::optional<std::pair<int, FockState>> act(const GeneratorLabel& g, const FockState& s);
  Sector sector_;
  std::vector<GeneratorLabel> f_;
};

// L_0 eigenvalue: Σ|mode| plus 1/2 in the Ramond sector
Rational depth(const FockState& s);
D4Weight d4_weight(const FockState& s);
int parity(const FockState& s);

// g·s as a signed basis state, or nullopt for zero
std::optional<std::pair<int, FockState>> act(const GeneratorLabel& g, const FockState& s);

class FockVector {
 public:
  explicit FockVector(Sector sector = Sector::NS) : sector_(sector) {}
  FockVector(const FockState& s, const Rational& c = Rational(1));
  static FockVector vacuum(Sector sector) { return FockVector(FockState::vacuum(sector)); }

  Sector sector() const { return sector_; }
  const std::map<FockState, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const FockState& s) const;
  void add(const FockState& s, const Rational& c);

  FockVector operator-() const;
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& s);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& s, FockVector a) { return a *= s; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.sector_ == b.sector_ && a.t_ == b.t_; }
  friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }
  std::string str() const;

 private:
  Sector sector_;
  std::map<FockState, Rational> t_;
};

FockVector apply_generator(const GeneratorLabel& g, const FockVector& v);
// product g_1 g_2 ... g_r applied to v (g_r acts first)
FockVector apply_word(const std::vector<GeneratorLabel>& word, const FockVector& v);

struct OrderedTerm {
  Rational coeff;
  std::vector<GeneratorLabel> word;
  friend bool operator==(const OrderedTerm& a, const OrderedTerm& b) { return a.coeff == b.coeff && a.word == b.word; }
};
// ∘∘g_1 ... g_r∘∘ as a combination of products; zero-mode blocks antisymmetrized with 1/k!
std::vector<OrderedTerm> normal_order_monomial(const std::vector<GeneratorLabel>& labels);
FockVector apply_normal_ordered(const std::vector<GeneratorLabel>& labels, const FockVector& v);

// (flavor, starred) with the mode left free
struct FieldLabel {
  int flavor;
  bool starred;
  GeneratorLabel at(int mode2) const { return {flavor, starred, mode2}; }
  std::string str() const;
  friend bool operator==(const FieldLabel& a, const FieldLabel& b) = default;
};

// Σ_r ∘∘a(k−r)b(r)∘∘ v, or Σ_r (r−k−½) ∘∘a(k−r)b(r)∘∘ v when derivative
FockVector apply_quadratic(const FieldLabel& a, const FieldLabel& b, int k, bool derivative, const FockVector& v);
// Σ_{r1+r2+r3+r4=k} ∘∘p1(r1)p2(r2)p3(r3)p4(r4)∘∘ v
FockVector apply_quartic(const std::array<FieldLabel, 4>& pattern, int k, const FockVector& v);
// mode tuples (mode2 units) summing to 2k whose positive part fits in a state of twice-mode-depth depth2
std::vector<std::array<int, 4>> quartic_mode_tuples(Sector sector, int k, int depth2);

// the seven quartic templates of the 7/10 coset operators: 11*22*, 11*33*, 22*33*, 1*234, 12*3*4*, 1*234*, 12*3*4
const std::vector<std::array<FieldLabel, 4>>& coset_quartic_patterns();

// canonical states of depth ≤ max_depth, ordered by depth then canonically
std::vector<FockState> enumerate_basis(Sector sector, const Rational& max_depth);
std::vector<FockState> basis_at_depth(Sector sector, const Rational& depth_value, std::optional<int> parity = {});

// parse "a1*(-3/2) a4(-1/2) |0>" or "a4*(0) |0'>"
FockVector parse_state(const std::string& text);

Report fock_checks();

}  // namespace d4g2
