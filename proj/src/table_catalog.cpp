#include "d4g2/tables.hpp"

namespace d4g2 {

namespace {

using Cols = std::vector<std::string>;
using Labels = std::vector<std::string>;

std::vector<TableRow> rows(const Labels& labels) {
  std::vector<TableRow> r;
  for (const auto& l : labels) r.push_back({l});
  return r;
}

std::vector<TableRow> operator+(std::vector<TableRow> a, const std::vector<TableRow>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TableRow section(const std::string& label, bool repeat_header = false) { return {label, true, repeat_header}; }

const Cols kDepth32 = {"1(-3/2)𝟏", "122*", "133*", "144*", "234", "234*"};
const Cols kDepth32Even = {"144*", "234", "234*"};
const Cols kRamond = {"𝟏'", "1*(0)4*(0)𝟏'", "2*(0)3*(0)𝟏'", "4*(0)𝟏'", "1*(0)𝟏'", "2*(0)3*(0)4*(0)𝟏'"};
const Cols kLow = {"4(-1/2)𝟏", "4*(-1/2)𝟏", "1(-1/2)𝟏", "1(-1/2)4(-1/2)𝟏", "1(-1/2)4*(-1/2)𝟏", "2(-1/2)3(-1/2)𝟏"};
const Cols kV1 = {"11*4", "11*4*", "22*4", "22*4*", "33*4", "33*4*", "1*23", "12*3*"};
const Cols kV1Signed = {"11*4", "-11*4*", "-22*4", "22*4*", "-33*4", "33*4*", "1*23", "12*3*"};
const Cols kV0 = {"11*44*", "22*44*", "33*44*", "1*234", "1*234*", "12*3*4", "12*3*4*"};
const Cols kV0Signed = {"11*44*", "-22*44*", "-33*44*", "1*234", "1*234*", "12*3*4", "12*3*4*"};

const Labels kQuarticA = {"11*22*", "11*33*", "22*33*", "1*234*", "12*3*4", "1*234", "12*3*4*"};
const Labels kQuarticB = {"11*22*", "11*33*", "22*33*", "1*234", "12*3*4*", "1*234*", "12*3*4"};
const Labels kQuarticV0 = {"11*22*", "11*33*", "22*33*", "1*234", "1*234*", "12*3*4", "12*3*4*"};
const Labels kRaisingPairs = {"1(1/2)1*(1/2)", "1*(1/2)1(1/2)", "2(1/2)2*(1/2)", "2*(1/2)2(1/2)", "3(1/2)3*(1/2)",
                              "3*(1/2)3(1/2)", "4(1/2)4*(1/2)", "4*(1/2)4(1/2)", "4(1/2)4(1/2)", "4*(1/2)4*(1/2)"};
const Labels kHalfPairs = {"4(-1/2)4(1/2)",   "4(-1/2)4*(1/2)",  "4*(-1/2)4(1/2)",  "4*(-1/2)4*(1/2)", "1*(-1/2)1(1/2)",
                           "2*(-1/2)2(1/2)",  "3*(-1/2)3(1/2)",  "1(-1/2)1*(1/2)",  "2(-1/2)2*(1/2)",  "3(-1/2)3*(1/2)"};

std::vector<TableRow> g2_ladder() {
  return rows({"2(-1/2)3*(1/2)", "3*(-1/2)2(1/2)"}) + std::vector<TableRow>{section("Xβ2(0)")} +
         rows({"1(-1/2)2*(1/2)", "2*(-1/2)1(1/2)", "3(-1/2)4*(1/2)", "4*(-1/2)3(1/2)", "3(-1/2)4(1/2)", "4(-1/2)3(1/2)"}) +
         std::vector<TableRow>{section("X-θ(1)")} + rows({"2*(1/2)1*(1/2)"});
}

TableContext ctx(int k, std::optional<std::array<int, 4>> multiset = std::nullopt, bool weighted = false) {
  return {k, multiset, weighted};
}

std::vector<CatalogTable> build() {
  std::vector<CatalogTable> t;
  t.push_back({"g2-beta1", "X_{β1}(0) on depth 3/2 of V0 and V1", "r<0", kDepth32,
               rows({"2(-3/2)3*(3/2)", "2(-1/2)3*(1/2)"}) + std::vector<TableRow>{section("r>0", true)} +
                   rows({"3*(-3/2)2(3/2)", "3*(-1/2)2(1/2)"}),
               ctx(0)});
  t.push_back({"g2-beta2", "X_{β2}(0) on depth 3/2", "r<0", kDepth32,
               rows({"1(-3/2)2*(3/2)", "1(-1/2)2*(1/2)", "3(-3/2)4*(3/2)", "3(-1/2)4*(1/2)", "3(-3/2)4(3/2)",
                     "3(-1/2)4(1/2)"}) +
                   std::vector<TableRow>{section("r>0", true)} +
                   rows({"2*(-3/2)1(3/2)", "2*(-1/2)1(1/2)", "4*(-3/2)3(3/2)", "4*(-1/2)3(1/2)", "4(-3/2)3(3/2)",
                         "4(-1/2)3(1/2)"}),
               ctx(0)});
  t.push_back({"g2-net", "normal-ordered mode sums of the G2 raising operators", "net=1-1", kDepth32,
               rows({"∘∘2(r)3*(-r)∘∘", "∘∘1(r)2*(-r)∘∘", "∘∘3(r)4*(-r)∘∘", "∘∘3(r)4(-r)∘∘"}), ctx(0)});
  t.push_back({"g2-theta", "X_{−θ}(1) terms on depth 3/2", "Σ=1", kDepth32,
               rows({"∘∘2*(3/2)1*(-1/2)∘∘", "∘∘2*(1/2)1*(1/2)∘∘", "∘∘2*(-1/2)1*(3/2)∘∘"}), ctx(0)});
  t.push_back({"quartic-L1", "quartic templates at total mode 1", "-+++", kDepth32, rows(kQuarticA), ctx(1)});
  t.push_back({"quartic---++", "quartic templates, modes (−1/2, −1/2, 1/2, 1/2)", "--++", kDepth32, rows(kQuarticA),
               ctx(0, std::array<int, 4>{-1, -1, 1, 1})});
  t.push_back({"quartic--+++", "quartic templates, modes (−3/2, 1/2, 1/2, 1/2)", "-+++", kDepth32, rows(kQuarticA),
               ctx(0, std::array<int, 4>{-3, 1, 1, 1})});
  t.push_back({"quartic----+", "quartic templates, modes (−1/2, −1/2, −1/2, 3/2)", "---+", kDepth32, rows(kQuarticA),
               ctx(0, std::array<int, 4>{-1, -1, -1, 3})});
  t.push_back({"quadratic-half", "quadratic terms with modes ±1/2", "r=1/2", kDepth32,
               rows({"1*(-1/2)1(1/2)", "1(-1/2)1*(1/2)", "2*(-1/2)2(1/2)", "2(-1/2)2*(1/2)", "3*(-1/2)3(1/2)",
                     "3(-1/2)3*(1/2)", "4*(-1/2)4(1/2)", "4(-1/2)4*(1/2)", "4(-1/2)4(1/2)", "4*(-1/2)4*(1/2)"}),
               ctx(0)});
  t.push_back({"quadratic-three-halves", "quadratic terms with modes ±3/2", "r=3/2", kDepth32,
               rows({"1*(-3/2)1(3/2)", "1(-3/2)1*(3/2)"}) + std::vector<TableRow>{section("r=-3/2")} +
                   rows({"1*(-3/2)1(3/2)", "1(-3/2)1*(3/2)"}),
               ctx(0)});
  t.push_back({"quartic-L0-sum", "quartic templates at total mode 0 on the even depth 3/2 states", "", kDepth32Even,
               rows(kQuarticA), ctx(0)});
  t.push_back({"quadratic-L0-sum", "weighted quadratic mode sums at total mode 0", "", kDepth32Even,
               rows({"∘∘1(r)1*(-r)∘∘", "∘∘1*(r)1(-r)∘∘", "∘∘2(r)2*(-r)∘∘", "∘∘2*(r)2(-r)∘∘", "∘∘3(r)3*(-r)∘∘",
                     "∘∘3*(r)3(-r)∘∘", "∘∘4(r)4*(-r)∘∘", "∘∘4*(r)4(-r)∘∘", "∘∘4(r)4(-r)∘∘", "∘∘4*(r)4*(-r)∘∘"}),
               ctx(0, std::nullopt, true)});
  t.push_back({"ramond-beta2", "X_{β2}(0) on the Ramond ground states", "Xβ2(0)", kRamond,
               rows({"-2*(0)1(0)", "-4*(0)3(0)", "4(0)3(0)"}), ctx(0)});
  t.push_back({"ramond-quartic-L0", "zero-mode terms on the Ramond ground states", "ri=0", kRamond,
               rows({"1*(0)2*(0)1(0)2(0)", "1*(0)3*(0)1(0)3(0)", "2*(0)3*(0)2(0)3(0)", "1*(0)1(0)", "2*(0)2(0)",
                     "3*(0)3(0)", "1*(0)2(0)3(0)4*(0)", "1(0)2*(0)3*(0)4(0)", "1*(0)2(0)3(0)4(0)",
                     "1(0)2*(0)3*(0)4*(0)"}),
               ctx(0)});
  t.push_back({"ns-g2-low", "G2 raising operators on the low NS candidates", "Xβ1(0)", kLow, g2_ladder(), ctx(0)});
  t.push_back({"ns-g2-V1", "G2 raising operators on depth 3/2 of V1", "Xβ1(0)", kV1, g2_ladder(), ctx(0)});
  t.push_back({"ns-g2-V0", "G2 raising operators on depth 2 of V0", "Xβ1(0)", kV0, g2_ladder(), ctx(0)});
  t.push_back({"ns-L2-V0", "quartic templates at total mode 2 on depth 2 of V0", "", kV0, rows(kQuarticV0), ctx(2)});
  t.push_back({"ns-L1-V1", "L1 terms on depth 3/2 of V1", "", kV1, rows(kRaisingPairs) + rows(kQuarticB), ctx(1)});
  t.push_back({"ns-L1-V0a", "L1 terms on depth 2 of V0", "", Cols(kV0.begin(), kV0.begin() + 4),
               rows(kRaisingPairs) + rows(kQuarticB), ctx(1)});
  t.push_back({"ns-L1-V0b", "L1 terms on depth 2 of V0, continued", "", Cols(kV0.begin() + 4, kV0.end()),
               rows(kRaisingPairs) + rows(kQuarticB), ctx(1)});
  t.push_back({"ns-L0-low", "L0 terms on the low NS candidates", "", kLow, rows(kHalfPairs) + rows(kQuarticB), ctx(0)});
  t.push_back({"ns-L0-V1", "L0 terms on depth 3/2 of V1", "", kV1Signed, rows(kHalfPairs) + rows(kQuarticB), ctx(0)});
  t.push_back({"ns-L0-V0", "L0 terms on depth 2 of V0", "", kV0Signed, rows(kHalfPairs) + rows(kQuarticB), ctx(0)});
  return t;
}

}  // namespace

const std::vector<CatalogTable>& table_catalog() {
  static const std::vector<CatalogTable> c = build();
  return c;
}

}  // namespace d4g2
