#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace nco {

// Outcome record of one verification sweep. Reports with identical
// (seed, params) are byte-identical apart from runtime_ms.
struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  long trials = 0;
  long violations = 0;
  double max_violation = 0.0;  ///< largest -slack among violating trials
  double min_slack = std::numeric_limits<double>::infinity();
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  long runtime_ms = 0;
  std::vector<nlohmann::json> witnesses;  ///< present iff violations > 0 (capped)

  bool passed() const { return violations == 0; }
  nlohmann::json to_json() const;
  std::string to_text() const;  ///< fixed-order key: value rendering
};

}  // namespace nco
