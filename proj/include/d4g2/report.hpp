#pragma once

#include <optional>
#include <string>
#include <vector>

namespace d4g2 {

struct CheckResult {
  std::string check;
  bool pass = true;
  int order = -1;
  std::optional<long> first_mismatch;
  std::string lhs, rhs;
  std::optional<std::string> scalar;
  std::vector<std::string> eigenvalues;
  std::string note;
};

using Report = std::vector<CheckResult>;

inline CheckResult make_check(std::string name, bool ok, std::string note = {}) {
  CheckResult r;
  r.check = std::move(name);
  r.pass = ok;
  r.note = std::move(note);
  return r;
}

inline bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

inline void append(Report& dst, const Report& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace d4g2
