#include "autw/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace autw {

void Report::add(bool pass, std::string id, std::string detail) {
  lines_.push_back({pass, std::move(id), std::move(detail)});
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [](const auto& l) { return !l.pass; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l.pass ? "PASS " : "FAIL ";
    out += l.id;
    if (!l.detail.empty()) {
      out += ' ';
      out += l.detail;
    }
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& l : lines_) {
    checks.push_back({{"pass", l.pass}, {"id", l.id}, {"detail", l.detail}});
  }
  nlohmann::json doc = {{"ok", ok()}, {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

}  // namespace autw
