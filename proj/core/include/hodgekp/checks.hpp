#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgekp/curve.hpp"
#include "hodgekp/serialize.hpp"

namespace hodgekp {

struct CheckInfo {
  std::string name;
  std::string description;
  bool per_point = true;  // false: runs once, independent of (q, p, s)
  int default_weight = 9;
  int default_y_weight = 0;  // only the kp-* checks use it
};

// The fixed vocabulary, in listing order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(const std::string& name);  // Error for unknown names

struct CheckOptions {
  std::optional<int> weight;
  std::optional<int> order;  // series order K; must be at least 2W + 2 when given
  std::optional<int> y_weight;
  std::vector<Rational> hbars{1, rat(1, 2)};
  bool perturbed = false;    // identification: run the out-of-family control instead
};

struct CheckOutcome {
  std::string check;
  std::optional<CurveParams> point;
  bool passed = false;
  Json report;
  std::string summary;  // one line for text output
};

// Runs one (check, point) pair. Error: bad configuration. InvariantViolation: internal failure.
CheckOutcome run_check(const std::string& name, const std::optional<CurveParams>& point, const CheckOptions& options);

}  // namespace hodgekp
