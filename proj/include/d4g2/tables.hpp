#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "d4g2/fock.hpp"
#include "d4g2/report.hpp"

namespace d4g2 {

// shorthand: 𝟏 / 𝟏' vacua, "12*3" for NS states of at least three factors all at mode −1/2, "1(-3/2)𝟏" otherwise
std::string shorthand(const FockState& s);
// terms sorted by their shorthand, joined with +/−, "0" for the zero vector
std::string shorthand(const FockVector& v);
// inverse of the shorthand, accepting non-canonical factor orders and signed sums
FockVector parse_shorthand(const std::string& text);

// how row labels act
struct TableContext {
  int total_mode = 0;
  // mode multiset (twice the modes, sorted) restricting quartic templates
  std::optional<std::array<int, 4>> multiset;
  // ∘∘a(r)b(−r)∘∘ rows read as −Σ_r (r+½)∘∘a(r)b(−r)∘∘
  bool weighted = false;
};

// a product "2(-1/2)3*(1/2)" (optionally signed), "∘∘a(r)b(-r)∘∘", "∘∘a(m)b(n)∘∘" or a quartic template "1*234"
FockVector apply_row_label(const std::string& label, const TableContext& ctx, const FockVector& v);

struct TableRow {
  std::string label;
  // section rows carry no operator; repeat_header reprints the column labels
  bool section = false;
  bool repeat_header = false;
};

struct CatalogTable {
  std::string id;
  std::string title;
  std::string corner;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  TableContext context;
};

struct GeneratedTable {
  std::string id;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string markdown() const;
};

const std::vector<CatalogTable>& table_catalog();
std::vector<std::string> table_ids();
GeneratedTable generate_table(const std::string& id);

std::string golden_table_path(const std::string& dir, const std::string& id);
// cell-level comparison against a golden markdown file
enum class MismatchKind { sign, dropped_higher_modes, other };
std::string mismatch_kind_name(MismatchKind k);
struct CellMismatch {
  std::string row, column, computed, golden;
  MismatchKind kind = MismatchKind::other;
  std::string str() const;
};
struct TableDiff {
  std::string id;
  bool identical = false;
  bool missing = false;
  // layout problems (row count, labels) that prevent a cell comparison
  std::vector<std::string> layout;
  std::vector<CellMismatch> cells;
  std::size_t size() const { return layout.size() + cells.size(); }
};
// sign: computed = −golden; dropped_higher_modes: golden equals computed with the terms carrying a mode below −1/2 removed
MismatchKind classify_mismatch(const std::string& computed, const std::string& golden);
TableDiff compare_with_golden(const GeneratedTable& t, const std::string& golden_dir);

Report table_checks(const std::string& golden_dir);

}  // namespace d4g2
