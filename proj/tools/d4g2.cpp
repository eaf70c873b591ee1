#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "d4g2/suites.hpp"

using namespace d4g2;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the D4 / G2 coset construction"};
  app.require_subcommand(0);
  RunConfig cfg;
  cfg.golden_dir = D4G2_GOLDEN_DIR;
  std::string max_depth = "2", format = "text", depth, module, id, out;

  app.add_option("command", cfg.command, "one of identities, characters, branching, finite-algebra, conformal, hwv, tables, graded-dims, all")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--order", cfg.order, "q-series truncation order")->envname("D4G2_ORDER")->check(CLI::Range(16, 100000));
  app.add_option("--max-depth", max_depth, "largest basis depth, e.g. 3/2");
  app.add_option("--format", format, "text, json or markdown")->envname("D4G2_FORMAT")->check(CLI::IsMember({"text", "json", "markdown"}));
  app.add_option("--out", out, "write the report to this file");
  app.add_option("--module", module, "V0, V1, V2 or V3 (hwv)");
  app.add_option("--depth", depth, "depth of the hwv search, e.g. 3/2");
  app.add_option("--id", id, "table id (tables)");
  app.add_option("--golden-dir", cfg.golden_dir, "directory of golden tables")->envname("D4G2_GOLDEN_DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  Report report;
  try {
    cfg.format = parse_format(format);
    cfg.max_depth = Rational::parse(max_depth);
    if (!depth.empty()) cfg.depth = Rational::parse(depth);
    if (!module.empty()) cfg.module = module;
    if (!id.empty()) cfg.table_id = id;
    if (!out.empty()) cfg.out = out;
    validate(cfg);
    report = run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string text = emit_report(report, cfg.format);
  if (cfg.out) {
    std::ofstream f(*cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << *cfg.out << "\n";
      return 2;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return all_pass(report) ? 0 : 1;
}
