#include "homconf/report.hpp"

#include <algorithm>

namespace homconf {

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed(); }));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.axiom = prefix + "." + c.axiom;
    checks_.push_back(std::move(c));
  }
}

std::string Report::residual_text(const Check& c) {
  if (c.residual.empty()) return "0";
  std::string out;
  for (const auto& [component, value] : c.residual) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(value) + ")*" + component;
  }
  return out;
}

}  // namespace homconf
