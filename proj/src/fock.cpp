#include "d4g2/fock.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace d4g2 {

std::string GeneratorLabel::str() const {
  return "a" + std::to_string(flavor) + (starred ? "*" : "") + "(" + mode().str() + ")";
}

GeneratorLabel gen(int flavor, bool starred, const Rational& mode) {
  Rational m2 = Rational(2) * mode;
  if (!m2.is_integer()) throw std::invalid_argument("mode must be a half-integer");
  return {flavor, starred, static_cast<int>(m2.to_long())};
}

std::string FieldLabel::str() const { return std::to_string(flavor) + (starred ? "*" : ""); }

std::optional<std::pair<int, FockState>> FockState::from_creators(Sector sector, std::vector<GeneratorLabel> factors) {
  int sign = 1;
  for (const auto& g : factors)
    if (!g.creator() || g.sector() != sector) return std::nullopt;
  for (std::size_t i = 1; i < factors.size(); ++i)
    for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
      std::swap(factors[j], factors[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1]) return std::nullopt;
  FockState s(sector);
  s.f_ = std::move(factors);
  return std::make_pair(sign, std::move(s));
}

Rational FockState::mode_depth() const { return Rational(depth2(), 2); }

int FockState::depth2() const {
  int d = 0;
  for (const auto& g : f_) d -= g.mode2;
  return d;
}

std::string FockState::str() const {
  std::string r;
  for (const auto& g : f_) r += g.str() + " ";
  return r + (sector_ == Sector::NS ? "|0>" : "|0'>");
}

bool operator<(const FockState& a, const FockState& b) {
  if (a.sector_ != b.sector_) return a.sector_ < b.sector_;
  return std::lexicographical_compare(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end());
}

Rational depth(const FockState& s) {
  Rational d = s.mode_depth();
  if (s.sector() == Sector::Ramond) d += Rational(1, 2);
  return d;
}

D4Weight d4_weight(const FockState& s) {
  D4Weight w;
  if (s.sector() == Sector::Ramond) w = root_tables().d4_fundamental[3];
  for (const auto& g : s.factors()) {
    if (g.starred)
      w -= D4Weight::eps(g.flavor);
    else
      w += D4Weight::eps(g.flavor);
  }
  return w;
}

int parity(const FockState& s) { return static_cast<int>(s.factors().size() % 2); }

std::optional<std::pair<int, FockState>> act(const GeneratorLabel& g, const FockState& s) {
  if (g.creator()) {
    auto it = std::lower_bound(s.f_.begin(), s.f_.end(), g);
    if (it != s.f_.end() && *it == g) return std::nullopt;
    auto pos = it - s.f_.begin();
    FockState r = s;
    r.f_.insert(r.f_.begin() + pos, g);
    return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(r));
  }
  for (std::size_t p = 0; p < s.f_.size(); ++p)
    if (g.pairs_with(s.f_[p])) {
      FockState r = s;
      r.f_.erase(r.f_.begin() + static_cast<long>(p));
      return std::make_pair(p % 2 == 0 ? 1 : -1, std::move(r));
    }
  return std::nullopt;
}

namespace {

std::optional<std::pair<int, FockState>> act_word(const std::vector<GeneratorLabel>& word, FockState s) {
  int sign = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto r = act(*it, s);
    if (!r) return std::nullopt;
    sign *= r->first;
    s = std::move(r->second);
  }
  return std::make_pair(sign, std::move(s));
}

void check_sector(const GeneratorLabel& g, Sector s) {
  if (g.sector() != s) throw SectorMismatch("generator " + g.str() + " does not act on this sector");
}

}  // namespace

FockVector::FockVector(const FockState& s, const Rational& c) : sector_(s.sector()) { add(s, c); }

Rational FockVector::coeff(const FockState& s) const {
  auto it = t_.find(s);
  return it == t_.end() ? Rational(0) : it->second;
}

void FockVector::add(const FockState& s, const Rational& c) {
  if (c.is_zero()) return;
  if (s.sector() != sector_) {
    if (!t_.empty()) throw SectorMismatch("mixed sectors in one vector");
    sector_ = s.sector();
  }
  auto [it, inserted] = t_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

FockVector FockVector::operator-() const {
  FockVector r = *this;
  for (auto& [s, c] : r.t_) c = -c;
  return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.t_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.t_) add(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [st, c] : t_) c *= s;
  return *this;
}

std::string FockVector::str() const {
  if (t_.empty()) return "0";
  std::string r;
  bool first = true;
  for (const auto& [s, c] : t_) {
    Rational a = c;
    if (!first) {
      r += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    } else if (a == Rational(-1)) {
      r += "-";
      a = Rational(1);
    }
    if (a != Rational(1)) r += a.str() + " ";
    r += s.str();
    first = false;
  }
  return r;
}

FockVector apply_generator(const GeneratorLabel& g, const FockVector& v) {
  check_sector(g, v.sector());
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms())
    if (auto x = act(g, s)) r.add(x->second, x->first == 1 ? c : -c);
  return r;
}

FockVector apply_word(const std::vector<GeneratorLabel>& word, const FockVector& v) {
  for (const auto& g : word) check_sector(g, v.sector());
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms())
    if (auto x = act_word(word, s)) r.add(x->second, x->first == 1 ? c : -c);
  return r;
}

std::vector<OrderedTerm> normal_order_monomial(const std::vector<GeneratorLabel>& labels) {
  if (labels.empty()) return {{Rational(1), {}}};
  Sector sector = labels.front().sector();
  for (const auto& g : labels)
    if (g.sector() != sector) throw SectorMismatch("normal ordering mixes sectors");
  std::vector<GeneratorLabel> w = labels;
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      std::swap(w[j], w[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return {};
  if (sector == Sector::NS) return {{Rational(sign), w}};

  auto zb = std::find_if(w.begin(), w.end(), [](const GeneratorLabel& g) { return g.mode2 == 0; });
  auto ze = std::find_if(zb, w.end(), [](const GeneratorLabel& g) { return g.mode2 != 0; });
  std::vector<GeneratorLabel> block(zb, ze);
  if (block.size() < 2) return {{Rational(sign), w}};
  std::size_t start = static_cast<std::size_t>(zb - w.begin());
  std::vector<int> perm(block.size());
  std::iota(perm.begin(), perm.end(), 0);
  long fact = 1;
  for (std::size_t i = 2; i <= block.size(); ++i) fact *= static_cast<long>(i);
  std::vector<OrderedTerm> out;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    OrderedTerm t{Rational(inv % 2 == 0 ? sign : -sign, fact), w};
    for (std::size_t i = 0; i < perm.size(); ++i) t.word[start + i] = block[perm[i]];
    out.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

const std::vector<OrderedTerm>& cached_normal_order(const std::vector<GeneratorLabel>& labels) {
  thread_local std::map<std::vector<int>, std::vector<OrderedTerm>> cache;
  std::vector<int> key;
  key.reserve(labels.size());
  for (const auto& g : labels) key.push_back(g.key());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), normal_order_monomial(labels)).first;
  return it->second;
}

void add_normal_ordered(const std::vector<GeneratorLabel>& labels, const FockState& s, const Rational& c,
                        FockVector& out) {
  for (const auto& t : cached_normal_order(labels))
    if (auto x = act_word(t.word, s)) out.add(x->second, x->first == 1 ? c * t.coeff : -(c * t.coeff));
}

// every positive-mode label must find its partner among the factors of s
bool annihilators_match(const std::vector<GeneratorLabel>& labels, const FockState& s) {
  for (const auto& g : labels) {
    if (g.mode2 <= 0) continue;
    GeneratorLabel partner{g.flavor, !g.starred, -g.mode2};
    if (!std::binary_search(s.factors().begin(), s.factors().end(), partner)) return false;
  }
  return true;
}

int mode_parity(Sector s) { return s == Sector::NS ? 1 : 0; }

bool same_parity(int m2, Sector s) { return ((m2 % 2) + 2) % 2 == mode_parity(s); }

}  // namespace

FockVector apply_normal_ordered(const std::vector<GeneratorLabel>& labels, const FockVector& v) {
  for (const auto& g : labels) check_sector(g, v.sector());
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms()) add_normal_ordered(labels, s, c, r);
  return r;
}

FockVector apply_quadratic(const FieldLabel& a, const FieldLabel& b, int k, bool derivative, const FockVector& v) {
  FockVector r(v.sector());
  const int k2 = 2 * k;
  for (const auto& [s, c] : v.terms()) {
    const int d2 = s.depth2();
    for (int r2 = k2 - d2 - 1; r2 <= d2; ++r2) {
      if (!same_parity(r2, v.sector())) continue;
      const int m2 = k2 - r2;
      if (std::max(r2, 0) + std::max(m2, 0) > d2) continue;
      Rational w = derivative ? Rational(r2 - k2 - 1, 2) : Rational(1);
      if (w.is_zero()) continue;
      add_normal_ordered({a.at(m2), b.at(r2)}, s, c * w, r);
    }
  }
  return r;
}

namespace {

const std::vector<std::array<int, 4>>& cached_tuples(Sector sector, int k, int depth2) {
  thread_local std::map<std::tuple<int, int, int>, std::vector<std::array<int, 4>>> cache;
  auto key = std::make_tuple(static_cast<int>(sector), k, depth2);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::array<int, 4>> out;
  const int k2 = 2 * k;
  const int lo = std::min(0, k2) - depth2 - 1;
  for (int a = lo; a <= depth2; ++a)
    for (int b = lo; b <= depth2; ++b)
      for (int c = lo; c <= depth2; ++c) {
        int d = k2 - a - b - c;
        std::array<int, 4> t{a, b, c, d};
        bool ok = true;
        int pos = 0;
        for (int m : t) {
          if (!same_parity(m, sector)) ok = false;
          pos += std::max(m, 0);
        }
        if (ok && pos <= depth2) out.push_back(t);
      }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<std::array<int, 4>> quartic_mode_tuples(Sector sector, int k, int depth2) {
  return cached_tuples(sector, k, depth2);
}

FockVector apply_quartic(const std::array<FieldLabel, 4>& pattern, int k, const FockVector& v) {
  FockVector r(v.sector());
  for (const auto& [s, c] : v.terms())
    for (const auto& t : cached_tuples(v.sector(), k, s.depth2())) {
      std::vector<GeneratorLabel> w = {pattern[0].at(t[0]), pattern[1].at(t[1]), pattern[2].at(t[2]), pattern[3].at(t[3])};
      if (annihilators_match(w, s)) add_normal_ordered(w, s, c, r);
    }
  return r;
}

std::vector<FockState> enumerate_basis(Sector sector, const Rational& max_depth) {
  Rational budget = max_depth;
  if (sector == Sector::Ramond) budget -= Rational(1, 2);
  if (budget.sign() < 0) return {};
  Rational b2 = Rational(2) * budget;
  // largest integer not above 2·budget
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), b2.num().get_mpz_t(), b2.den().get_mpz_t());
  const int cap = static_cast<int>(fl.get_si());
  std::vector<GeneratorLabel> creators;
  for (int m2 = -cap; m2 <= 0; ++m2) {
    if (!same_parity(m2, sector)) continue;
    for (int f = 1; f <= 4; ++f)
      for (bool st : {false, true}) {
        GeneratorLabel g{f, st, m2};
        if (g.creator()) creators.push_back(g);
      }
  }
  std::sort(creators.begin(), creators.end());
  std::vector<FockState> out;
  std::vector<GeneratorLabel> cur;
  auto dfs = [&](auto&& self, std::size_t from, int used) -> void {
    auto s = FockState::from_creators(sector, cur);
    out.push_back(s->second);
    for (std::size_t i = from; i < creators.size(); ++i) {
      int cost = -creators[i].mode2;
      if (used + cost > cap) continue;
      cur.push_back(creators[i]);
      self(self, i + 1, used + cost);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const FockState& a, const FockState& b) {
    if (a.depth2() != b.depth2()) return a.depth2() < b.depth2();
    return a < b;
  });
  return out;
}

std::vector<FockState> basis_at_depth(Sector sector, const Rational& depth_value, std::optional<int> par) {
  std::vector<FockState> out;
  for (auto& s : enumerate_basis(sector, depth_value))
    if (depth(s) == depth_value && (!par || parity(s) == *par)) out.push_back(std::move(s));
  return out;
}

FockVector parse_state(const std::string& text) {
  static const std::regex gen_re(R"(a([1-4])(\*?)\(\s*([-+]?\d+(?:/\d+)?)\s*\))");
  static const std::regex vac_re(R"(\|0('?)>)");
  std::smatch vm;
  if (!std::regex_search(text, vm, vac_re)) throw std::invalid_argument("missing vacuum in '" + text + "'");
  Sector sector = vm[1].length() ? Sector::Ramond : Sector::NS;
  std::vector<GeneratorLabel> gens;
  std::string head = text.substr(0, static_cast<std::size_t>(vm.position(0)));
  for (auto it = std::sregex_iterator(head.begin(), head.end(), gen_re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    gens.push_back(gen(std::stoi(m[1].str()), m[2].length() > 0, Rational::parse(m[3].str())));
  }
  for (const auto& g : gens) check_sector(g, sector);
  return apply_word(gens, FockVector::vacuum(sector));
}

}  // namespace d4g2
