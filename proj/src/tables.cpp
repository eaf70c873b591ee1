#include "d4g2/tables.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace d4g2 {

namespace {

const std::string kVac = "\xF0\x9D\x9F\x8F";  // 𝟏
const std::string kNO = "\xE2\x88\x98\xE2\x88\x98";  // ∘∘

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }
bool ends_with(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

std::string factor_text(const GeneratorLabel& g, bool with_mode) {
  std::string r = std::to_string(g.flavor) + (g.starred ? "*" : "");
  if (with_mode) r += "(" + g.mode().str() + ")";
  return r;
}

struct ParsedFactor {
  int flavor;
  bool starred;
  std::optional<int> mode2;
};

// "12*(-3/2)4" style factor list; mode may be r or -r when allow_r
std::vector<ParsedFactor> parse_factors(const std::string& s, std::size_t& pos, bool allow_r, std::vector<int>* rsign = nullptr) {
  std::vector<ParsedFactor> out;
  while (pos < s.size() && s[pos] >= '1' && s[pos] <= '4') {
    ParsedFactor f{s[pos] - '0', false, std::nullopt};
    ++pos;
    if (pos < s.size() && s[pos] == '*') {
      f.starred = true;
      ++pos;
    }
    if (pos < s.size() && s[pos] == '(') {
      auto close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced mode in " + s);
      std::string m = s.substr(pos + 1, close - pos - 1);
      pos = close + 1;
      if (allow_r && (m == "r" || m == "-r")) {
        if (rsign) rsign->push_back(m == "r" ? 1 : -1);
      } else {
        Rational q = Rational::parse(m);
        f.mode2 = static_cast<int>((Rational(2) * q).to_long());
      }
    }
    out.push_back(f);
  }
  return out;
}

std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!cur.empty()) terms.push_back({sign, cur});
      cur.clear();
      sign = ch == '+' ? 1 : -1;
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back({sign, cur});
  return terms;
}

FockVector parse_term(const std::string& t) {
  bool ramond = ends_with(t, kVac + "'");
  std::string body = t;
  if (ramond)
    body = t.substr(0, t.size() - kVac.size() - 1);
  else if (ends_with(t, kVac))
    body = t.substr(0, t.size() - kVac.size());
  std::size_t pos = 0;
  auto fs = parse_factors(body, pos, false);
  if (pos != body.size()) throw std::invalid_argument("bad state " + t);
  std::vector<GeneratorLabel> gens;
  for (const auto& f : fs) {
    int m2 = f.mode2.value_or(-1);
    if (m2 % 2 == 0) ramond = true;
    gens.push_back({f.flavor, f.starred, m2});
  }
  const Sector sec = ramond ? Sector::Ramond : Sector::NS;
  auto st = FockState::from_creators(sec, gens);
  if (!st) return FockVector(sec);
  return FockVector(st->second, Rational(st->first));
}

bool is_quartic_template(const std::string& s) {
  return !s.empty() && s.find('(') == std::string::npos && !starts_with(s, kNO);
}

std::vector<FieldLabel> template_fields(const std::string& s) {
  std::size_t pos = 0;
  auto fs = parse_factors(s, pos, false);
  if (pos != s.size()) throw std::invalid_argument("bad template " + s);
  std::vector<FieldLabel> out;
  for (const auto& f : fs) out.push_back({f.flavor, f.starred});
  return out;
}

}  // namespace

std::string shorthand(const FockState& s) {
  const auto& f = s.factors();
  const std::string vac = kVac + (s.sector() == Sector::Ramond ? "'" : "");
  if (f.empty()) return vac;
  bool compact = s.sector() == Sector::NS && f.size() >= 3 &&
                 std::all_of(f.begin(), f.end(), [](const GeneratorLabel& g) { return g.mode2 == -1; });
  std::string r;
  for (const auto& g : f) r += factor_text(g, !compact);
  return compact ? r : r + vac;
}

std::string shorthand(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<std::string, Rational>> items;
  for (const auto& [s, c] : v.terms()) items.push_back({shorthand(s), c});
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Rational& c = items[i].second;
    if (c.sign() < 0)
      out += "-";
    else if (i > 0)
      out += "+";
    Rational mag = c.sign() < 0 ? -c : c;
    if (mag != Rational(1)) out += mag.str() + "\xC2\xB7";
    out += items[i].first;
  }
  return out;
}

FockVector parse_shorthand(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") return FockVector(Sector::NS);
  std::optional<FockVector> acc;
  const std::string dot = "\xC2\xB7";
  for (const auto& [sign, t] : split_terms(s)) {
    Rational c(sign);
    std::string body = t;
    if (auto d = t.find(dot); d != std::string::npos) {
      c *= Rational::parse(t.substr(0, d));
      body = t.substr(d + dot.size());
    }
    FockVector v = parse_term(body);
    if (!acc) acc = FockVector(v.sector());
    *acc += c * v;
  }
  return *acc;
}

FockVector apply_row_label(const std::string& label, const TableContext& ctx, const FockVector& v) {
  if (starts_with(label, kNO)) {
    if (!ends_with(label, kNO)) throw std::invalid_argument("unterminated normal ordering " + label);
    std::string inner = label.substr(kNO.size(), label.size() - 2 * kNO.size());
    std::size_t pos = 0;
    std::vector<int> rs;
    auto fs = parse_factors(inner, pos, true, &rs);
    if (pos != inner.size()) throw std::invalid_argument("bad row " + label);
    if (!rs.empty()) {
      if (fs.size() != 2 || rs != std::vector<int>{1, -1}) throw std::invalid_argument("bad mode sum " + label);
      // apply_quadratic sums ∘∘a(−r)b(r)∘∘, the derivative form carries −(s+½) for the mode s of a
      return apply_quadratic({fs[0].flavor, fs[0].starred}, {fs[1].flavor, fs[1].starred}, ctx.total_mode, ctx.weighted, v);
    }
    std::vector<GeneratorLabel> w;
    for (const auto& f : fs) w.push_back({f.flavor, f.starred, f.mode2.value()});
    return apply_normal_ordered(w, v);
  }
  if (is_quartic_template(label)) {
    auto p = template_fields(label);
    if (p.size() != 4) throw std::invalid_argument("quartic template needs four fields: " + label);
    std::array<FieldLabel, 4> pat{p[0], p[1], p[2], p[3]};
    if (!ctx.multiset) return apply_quartic(pat, ctx.total_mode, v);
    FockVector r(v.sector());
    for (const auto& [s, c] : v.terms())
      for (const auto& t : quartic_mode_tuples(v.sector(), ctx.total_mode, s.depth2())) {
        std::array<int, 4> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != *ctx.multiset) continue;
        r += c * apply_normal_ordered({pat[0].at(t[0]), pat[1].at(t[1]), pat[2].at(t[2]), pat[3].at(t[3])}, FockVector(s));
      }
    return r;
  }
  std::string body = label;
  Rational sign(1);
  if (starts_with(body, "-")) {
    sign = Rational(-1);
    body = body.substr(1);
  }
  std::size_t pos = 0;
  auto fs = parse_factors(body, pos, false);
  if (pos != body.size() || fs.empty()) throw std::invalid_argument("bad row " + label);
  std::vector<GeneratorLabel> w;
  for (const auto& f : fs) {
    if (!f.mode2) throw std::invalid_argument("product factor without mode in " + label);
    w.push_back({f.flavor, f.starred, *f.mode2});
  }
  return sign * apply_word(w, v);
}

std::string mismatch_kind_name(MismatchKind k) {
  switch (k) {
    case MismatchKind::sign: return "sign";
    case MismatchKind::dropped_higher_modes: return "dropped-higher-modes";
    default: return "other";
  }
}

std::string CellMismatch::str() const {
  return "row " + row + ", column " + column + ": computed " + computed + ", golden " + golden + " [" +
         mismatch_kind_name(kind) + "]";
}

MismatchKind classify_mismatch(const std::string& computed, const std::string& golden) {
  FockVector c = parse_shorthand(computed), g = parse_shorthand(golden);
  if (!c.is_zero() && c.sector() == g.sector() && c == Rational(-1) * g) return MismatchKind::sign;
  FockVector low(c.sector());
  for (const auto& [s, x] : c.terms())
    if (std::all_of(s.factors().begin(), s.factors().end(), [](const GeneratorLabel& f) { return f.mode2 >= -1; }))
      low.add(s, x);
  if (low != c && (low == g || (low.is_zero() && g.is_zero()))) return MismatchKind::dropped_higher_modes;
  return MismatchKind::other;
}

std::string GeneratedTable::markdown() const {
  auto line = [](const std::vector<std::string>& cells) {
    std::string r = "|";
    for (const auto& c : cells) r += " " + c + " |";
    return r + "\n";
  };
  std::string out = line(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (const auto& t : table_catalog()) ids.push_back(t.id);
  return ids;
}

GeneratedTable generate_table(const std::string& id) {
  const auto& cat = table_catalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const CatalogTable& t) { return t.id == id; });
  if (it == cat.end()) throw std::invalid_argument("unknown table id " + id);
  GeneratedTable g;
  g.id = it->id;
  g.title = it->title;
  std::vector<FockVector> cols;
  std::vector<std::string> names;
  for (const auto& c : it->columns) {
    cols.push_back(parse_shorthand(c));
    names.push_back(shorthand(cols.back()));
  }
  g.header = {it->corner};
  g.header.insert(g.header.end(), names.begin(), names.end());
  for (const auto& row : it->rows) {
    std::vector<std::string> cells = {row.label};
    if (row.section) {
      for (const auto& n : names) cells.push_back(row.repeat_header ? n : "");
    } else {
      for (const auto& c : cols) cells.push_back(shorthand(apply_row_label(row.label, it->context, c)));
    }
    g.rows.push_back(std::move(cells));
  }
  return g;
}

std::string golden_table_path(const std::string& dir, const std::string& id) { return dir + "/" + id + ".md"; }

TableDiff compare_with_golden(const GeneratedTable& t, const std::string& golden_dir) {
  TableDiff d;
  d.id = t.id;
  std::ifstream in(golden_table_path(golden_dir, t.id));
  if (!in) {
    d.missing = true;
    return d;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string golden = ss.str();
  const std::string mine = t.markdown();
  d.identical = golden == mine;
  if (d.identical) return d;
  auto split_lines = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in2(s);
    std::string l;
    while (std::getline(in2, l)) out.push_back(l);
    return out;
  };
  auto split_cells = [](const std::string& l) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (l[i] == '|') {
        auto b = cur.find_first_not_of(' '), e = cur.find_last_not_of(' ');
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
        cur.clear();
      } else {
        cur += l[i];
      }
    }
    return out;
  };
  auto gl = split_lines(golden), ml = split_lines(mine);
  if (gl.size() != ml.size()) d.layout.push_back("row count " + std::to_string(ml.size()) + " vs golden " + std::to_string(gl.size()));
  for (std::size_t i = 0; i < std::min(gl.size(), ml.size()); ++i) {
    if (gl[i] == ml[i]) continue;
    auto gc = split_cells(gl[i]), mc = split_cells(ml[i]);
    if (gc.size() != mc.size() || gc.empty()) {
      d.layout.push_back("line " + std::to_string(i + 1) + " layout differs");
      continue;
    }
    if (gc[0] != mc[0]) {
      d.layout.push_back("line " + std::to_string(i + 1) + " label " + mc[0] + " vs golden " + gc[0]);
      continue;
    }
    const auto header = split_cells(ml[0]);
    for (std::size_t j = 1; j < gc.size(); ++j)
      if (gc[j] != mc[j]) {
        CellMismatch m{i == 0 ? "header" : mc[0], j < header.size() ? header[j] : std::to_string(j), mc[j], gc[j]};
        m.kind = classify_mismatch(mc[j], gc[j]);
        d.cells.push_back(m);
      }
  }
  return d;
}

Report table_checks(const std::string& golden_dir) {
  Report rep;
  for (const auto& id : table_ids()) {
    TableDiff d = compare_with_golden(generate_table(id), golden_dir);
    std::string note;
    if (d.missing) note = "golden file missing";
    for (const auto& m : d.layout) note += (note.empty() ? "" : "; ") + m;
    for (const auto& m : d.cells) note += (note.empty() ? "" : "; ") + m.str();
    CheckResult r = make_check("table " + id + " matches golden", d.identical, note);
    rep.push_back(r);
  }
  return rep;
}

}  // namespace d4g2
