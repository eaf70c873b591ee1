#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "d4g2/affine.hpp"
#include "d4g2/chevalley.hpp"
#include "d4g2/fock.hpp"
#include "d4g2/hwv.hpp"
#include "d4g2/suites.hpp"
#include "d4g2/tables.hpp"

using namespace d4g2;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<Report()> run;
  double time_limit = 0;
};

Report select(const Report& r, const std::vector<std::string>& needles, const std::vector<std::string>& exclude = {}) {
  Report out;
  for (const auto& c : r) {
    bool hit = false;
    for (const auto& n : needles) hit = hit || c.check.find(n) != std::string::npos;
    for (const auto& n : exclude) hit = hit && c.check.find(n) == std::string::npos;
    if (hit) out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-9"};
  int order = 200;
  std::string golden = D4G2_GOLDEN_DIR;
  std::vector<int> expect_fail, only;
  bool verbose = false;
  app.add_option("--order", order, "q-series order for criterion 4")->check(CLI::Range(16, 100000));
  app.add_option("--golden-dir", golden, "directory of golden tables");
  app.add_option("--expect-fail", expect_fail, "criteria whose failure is pinned")->delimiter(',');
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  app.add_flag("-v,--verbose", verbose, "list failing checks");
  CLI11_PARSE(app, argc, argv);

  std::optional<Report> affine;
  auto affine_report = [&]() -> const Report& {
    if (!affine) affine = affine_checks(true);
    return *affine;
  };

  const std::vector<Criterion> criteria = {
      {1, "HWV reproduction", [] { return hwv_checks(); }, 60.0},
      {2, "conformal vectors",
       [&] { return select(affine_report(), {"Sugawara assembly", "omega_D4 = omega_B3 + omega_D4-B3"}); }},
      {3, "Virasoro structure",
       [&] {
         return select(affine_report(),
                       {"satisfies the Virasoro bracket", "[L^1/2_m, L^7/10_n] = 0", "commutes with the three G2 simple-root"},
                       {"twisted"});
       }},
      {4, "q-series identities",
       [&] {
         Report r = identities_suite(order);
         append(r, characters_suite(order));
         append(r, branching_suite(order));
         return r;
       }},
      {5, "basis counts against graded dimensions",
       [] {
         Report r = select(fock_checks(), {"basis counts per depth"});
         append(r, select(graded_dims_suite(Rational(3)), {"match the graded dimension"}));
         return r;
       }},
      {6, "finite algebra", [] { return chevalley_checks(); }},
      {7, "Ramond corrections", [&] { return select(affine_report(), {"Ramond corrections", "delta corrections"}); }},
      {8, "table fidelity", [&] { return table_checks(golden); }},
      {9, "sigma-hat span consistency", [&] { return select(affine_report(), {"sigma-hat", "twisted coset"}); }},
  };

  std::set<int> pinned(expect_fail.begin(), expect_fail.end()), wanted(only.begin(), only.end());
  bool as_expected = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Report r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const long failed = std::count_if(r.begin(), r.end(), [](const CheckResult& x) { return !x.pass; });
    bool pass = !r.empty() && failed == 0;
    std::ostringstream detail;
    detail << r.size() - failed << "/" << r.size() << " checks, " << std::fixed << std::setprecision(1) << secs << " s";
    if (c.time_limit > 0) {
      detail << " (limit " << c.time_limit << " s)";
      pass = pass && secs < c.time_limit;
    }
    if (r.empty()) detail << ", no checks selected";
    std::cout << "criterion " << c.number << " " << c.name << ": " << (pass ? "PASS" : "FAIL") << " [" << detail.str()
              << "]" << (pinned.count(c.number) ? " expected failure" : "") << "\n";
    if (!pass && (verbose || pinned.count(c.number)))
      for (const auto& x : r)
        if (!x.pass) std::cout << "    failing: " << x.check << "\n";
    as_expected = as_expected && (pass != static_cast<bool>(pinned.count(c.number)));
  }
  std::cout.flush();
  return as_expected ? 0 : 1;
}
