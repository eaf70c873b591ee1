#include "d4g2/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "d4g2/affine.hpp"
#include "d4g2/chevalley.hpp"
#include "d4g2/fock.hpp"
#include "d4g2/hwv.hpp"
#include "d4g2/roots.hpp"
#include "d4g2/series.hpp"
#include "d4g2/tables.hpp"
#include "json.hpp"

namespace d4g2 {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "markdown") return OutputFormat::markdown;
  throw std::invalid_argument("unknown format " + s);
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"identities", "characters", "branching", "finite-algebra", "conformal",
                                             "hwv",        "tables",     "graded-dims", "all"};
  return c;
}

void validate(const RunConfig& c) {
  if (std::find(commands().begin(), commands().end(), c.command) == commands().end())
    throw std::invalid_argument("unknown command " + c.command);
  if (c.order < 16) throw std::invalid_argument("order must be at least 16");
  if (c.max_depth > Rational(3) || c.max_depth < Rational(0)) throw std::invalid_argument("max-depth must lie in [0, 3]");
  if (!(Rational(2) * c.max_depth).is_integer()) throw std::invalid_argument("max-depth must be a half-integer");
  if (c.depth && !(Rational(2) * *c.depth).is_integer()) throw std::invalid_argument("depth must be a half-integer");
}

Report identities_suite(int order) {
  Report r;
  append(r, jtpi_check(order));
  append(r, series_route_checks(order));
  append(r, ramanujan_checks(order));
  append(r, decomposition_identities(order));
  append(r, jacobi_abs_check(order));
  return r;
}

Report characters_suite(int order) {
  Report r = character_form_checks(order);
  append(r, principal_checks(order));
  return r;
}

Report branching_suite(int order) { return branching_checks(order); }

Report finite_algebra_suite() {
  Report r = root_data_checks();
  append(r, chevalley_checks());
  return r;
}

Report conformal_suite() { return affine_checks(true); }

namespace {

std::vector<std::string> shorthand_list(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

Report hwv_suite(const RunConfig& c) {
  if (!c.module && !c.depth) return hwv_checks();
  if (!c.module || !c.depth) throw std::invalid_argument("hwv needs both --module and --depth");
  const Module m = parse_module(*c.module);
  Report r;
  for (G2Label w : {G2Label::omega0, G2Label::omega2}) {
    const std::string cell = module_name(m) + " depth " + c.depth->str() + " " + g2_label_name(w);
    auto sols = solve_hwv(m, *c.depth, w);
    std::size_t expected = 0;
    for (const auto& p : reference_hwvs())
      if (p.label.module == m && p.label.depth == *c.depth && p.label.weight == w) ++expected;
    CheckResult cnt = make_check("solve_hwv " + cell + " solution count", sols.size() == expected,
                                 std::to_string(sols.size()) + " found, " + std::to_string(expected) + " expected");
    r.push_back(cnt);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      CheckResult s = make_check("solve_hwv " + cell + " solution " + std::to_string(i + 1), true);
      s.lhs = shorthand(sols[i].vector);
      s.eigenvalues = shorthand_list({sols[i].h12, sols[i].h710});
      r.push_back(s);
    }
  }
  return r;
}

Report tables_suite(const RunConfig& c) {
  if (!c.table_id) return table_checks(c.golden_dir);
  GeneratedTable t = generate_table(*c.table_id);
  TableDiff d = compare_with_golden(t, c.golden_dir);
  std::string note;
  for (const auto& m : d.layout) note += (note.empty() ? "" : "; ") + m;
  for (const auto& m : d.cells) note += (note.empty() ? "" : "; ") + m.str();
  if (d.missing) note = "golden file missing";
  CheckResult r = make_check("table " + t.id + " matches golden", d.identical, note);
  r.lhs = t.markdown();
  return {r};
}

Report graded_dims_suite(const Rational& max_depth) {
  Report r = fock_checks();
  const int d2 = static_cast<int>((Rational(2) * max_depth).to_long());
  for (Sector sec : {Sector::NS, Sector::Ramond}) {
    Series gr = horizontal_gr(sec, std::max(d2, 1));
    auto basis = enumerate_basis(sec, max_depth);
    const int top = sec == Sector::NS ? d2 : d2 - 1;
    for (int k = 0; k <= top; ++k) {
      long n = std::count_if(basis.begin(), basis.end(), [&](const FockState& s) { return s.depth2() == k; });
      const Rational dep = Rational(k, 2) + (sec == Sector::Ramond ? Rational(1, 2) : Rational(0));
      CheckResult c = make_check(std::string(sec == Sector::NS ? "NS" : "Ramond") + " states at depth " + dep.str() +
                                     " match the graded dimension",
                                 Rational(n) == gr[k]);
      c.lhs = std::to_string(n);
      c.rhs = gr[k].str();
      r.push_back(c);
    }
  }
  return r;
}

Report run_suite(const RunConfig& c) {
  validate(c);
  const std::string& cmd = c.command;
  if (cmd == "identities") return identities_suite(c.order);
  if (cmd == "characters") return characters_suite(c.order);
  if (cmd == "branching") return branching_suite(c.order);
  if (cmd == "finite-algebra") return finite_algebra_suite();
  if (cmd == "conformal") return conformal_suite();
  if (cmd == "hwv") return hwv_suite(c);
  if (cmd == "tables") return tables_suite(c);
  if (cmd == "graded-dims") return graded_dims_suite(c.max_depth);
  Report r;
  for (const auto& sub : commands()) {
    if (sub == "all") continue;
    RunConfig s = c;
    s.command = sub;
    s.module.reset();
    s.depth.reset();
    s.table_id.reset();
    append(r, run_suite(s));
  }
  return r;
}

namespace {

nlohmann::json detail_json(const CheckResult& c) {
  nlohmann::json d = nlohmann::json::object();
  if (c.first_mismatch) d["first_mismatch"] = *c.first_mismatch;
  if (c.scalar) d["scalar"] = *c.scalar;
  if (!c.eigenvalues.empty()) d["eigenvalues"] = c.eigenvalues;
  if (c.order >= 0) d["order"] = c.order;
  if (!c.lhs.empty()) d["lhs"] = c.lhs;
  if (!c.rhs.empty()) d["rhs"] = c.rhs;
  if (!c.note.empty()) d["note"] = c.note;
  return d;
}

std::string status(const CheckResult& c) { return c.pass ? "PASS" : "FAIL"; }

std::string summary(const Report& r) {
  const auto failed = std::count_if(r.begin(), r.end(), [](const CheckResult& c) { return !c.pass; });
  return std::to_string(r.size()) + " checks, " + std::to_string(failed) + " failed";
}

}  // namespace

std::string emit_report(const Report& r, OutputFormat f) {
  if (f == OutputFormat::json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : r) a.push_back({{"check", c.check}, {"status", status(c)}, {"detail", detail_json(c)}});
    return a.dump(2) + "\n";
  }
  std::string out;
  if (f == OutputFormat::markdown) {
    bool only_tables = !r.empty() && std::all_of(r.begin(), r.end(), [](const CheckResult& c) {
      return c.lhs.rfind("| ", 0) == 0;
    });
    if (only_tables) {
      for (const auto& c : r) out += c.lhs;
      return out;
    }
    out += "| check | status | detail |\n|---|---|---|\n";
    for (const auto& c : r) {
      std::string d = detail_json(c).dump();
      std::replace(d.begin(), d.end(), '|', '/');
      std::replace(d.begin(), d.end(), '\n', ' ');
      out += "| " + c.check + " | " + status(c) + " | " + d + " |\n";
    }
    return out + "\n" + summary(r) + "\n";
  }
  for (const auto& c : r) {
    out += status(c) + "  " + c.check + "\n";
    if (c.first_mismatch) out += "    first_mismatch: " + std::to_string(*c.first_mismatch) + "\n";
    if (c.scalar) out += "    scalar: " + *c.scalar + "\n";
    if (!c.eigenvalues.empty()) {
      out += "    eigenvalues:";
      for (const auto& e : c.eigenvalues) out += " " + e;
      out += "\n";
    }
    if (c.order >= 0) out += "    order: " + std::to_string(c.order) + "\n";
    if (!c.lhs.empty()) out += (c.lhs.find('\n') != std::string::npos ? "" : "    lhs: ") + c.lhs + (c.lhs.back() == '\n' ? "" : "\n");
    if (!c.rhs.empty()) out += "    rhs: " + c.rhs + "\n";
    if (!c.note.empty()) out += "    note: " + c.note + "\n";
  }
  return out + summary(r) + "\n";
}

}  // namespace d4g2
