#pragma once

#include <optional>
#include <string>
#include <vector>

#include "d4g2/report.hpp"
#include "d4g2/scalars.hpp"

namespace d4g2 {

enum class OutputFormat { text, json, markdown };
OutputFormat parse_format(const std::string& s);

struct RunConfig {
  std::string command = "all";
  int order = 200;
  Rational max_depth = Rational(2);
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;
  std::optional<std::string> module;
  std::optional<Rational> depth;
  std::optional<std::string> table_id;
  std::string golden_dir;
};

// throws std::invalid_argument on order < 16, max_depth > 3 or an unknown command
void validate(const RunConfig& c);
const std::vector<std::string>& commands();

Report identities_suite(int order);
Report characters_suite(int order);
Report branching_suite(int order);
Report finite_algebra_suite();
Report conformal_suite();
Report hwv_suite(const RunConfig& c);
Report tables_suite(const RunConfig& c);
Report graded_dims_suite(const Rational& max_depth);
Report run_suite(const RunConfig& c);

std::string emit_report(const Report& r, OutputFormat f);

}  // namespace d4g2
