#pragma once

#include "lazyhom/errors.hpp"

#include <string>
#include <vector>

namespace lazyhom {

struct CheckRecord {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Runtime invariant transcript shared by the pipelines. A failed check is
/// recorded and then raised as a MathError attributed to `module`.
class Checks {
 public:
  explicit Checks(bool enabled = true) : enabled_(enabled) {}

  bool enabled() const noexcept { return enabled_; }
  const std::vector<CheckRecord>& records() const noexcept { return records_; }

  void record(const std::string& module, std::string name, bool passed, std::string detail = {}) {
    records_.push_back({std::move(name), passed, detail});
    if (!passed) throw MathError(module, records_.back().name + " failed" + (detail.empty() ? "" : ": " + detail));
  }

  void append(const Checks& other) { records_.insert(records_.end(), other.records_.begin(), other.records_.end()); }

 private:
  bool enabled_;
  std::vector<CheckRecord> records_;
};

}  // namespace lazyhom
