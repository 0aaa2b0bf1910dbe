#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homconf/poly.hpp"

namespace homconf {

/// One nonzero component of a residual, e.g. ("E", D + 2*L) or ("e1|e2", D1).
struct ResidualComponent {
  std::string component;
  Poly value;
};

struct Check {
  std::string axiom;
  std::vector<std::string> tuple;
  /// Nonzero components only; empty means the identity holds on this tuple.
  std::vector<ResidualComponent> residual;
  std::string note;

  bool passed() const { return residual.empty(); }
};

/// Ordered list of per-tuple checks. Passes iff every residual is zero.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;

  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Appends `other`'s checks, prefixing their axiom names with `prefix.`.
  void merge(const Report& other, const std::string& prefix = {});

  /// The residual printed in surface syntax, `0` when empty.
  static std::string residual_text(const Check& c);

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace homconf
