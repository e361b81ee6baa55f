#pragma once

#include <string>
#include <vector>

namespace hodgekp {

// Outcome of an exact check: how many items were compared and which ones disagreed.
struct CheckReport {
  std::string name;
  bool passed = true;
  int checked = 0;
  std::vector<std::string> failures;  // in input order, capped at kMaxFailures
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxFailures = 8;

  void fail(std::string message) {
    passed = false;
    if (failures.size() < kMaxFailures) failures.push_back(std::move(message));
  }
  void merge(const CheckReport& o) {
    checked += o.checked;
    for (const auto& f : o.failures) fail(f);
    if (!o.passed) passed = false;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace hodgekp
