#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace autw {

struct CheckLine {
  bool pass;
  std::string id;
  std::string detail;
};

/// Line-oriented verification report: one `PASS|FAIL <check-id> <detail>`
/// line per atomic check.
class Report {
 public:
  void add(bool pass, std::string id, std::string detail = {});
  void append(const Report& other);

  const std::vector<CheckLine>& lines() const noexcept { return lines_; }
  std::size_t failures() const noexcept;
  bool ok() const noexcept { return failures() == 0; }

  std::string to_text() const;
  /// {"ok": bool, "checks": [{"pass", "id", "detail"}...]}
  std::string to_json() const;

 private:
  std::vector<CheckLine> lines_;
};

}  // namespace autw
