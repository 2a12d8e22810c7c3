#include "ncorlicz/report.hpp"

#include <cmath>
#include <sstream>

namespace nco {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["trials"] = trials;
  j["violations"] = violations;
  j["max_violation"] = max_violation;
  j["min_slack"] = std::isfinite(min_slack) ? nlohmann::json(min_slack) : nlohmann::json(nullptr);
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  j["runtime_ms"] = runtime_ms;
  if (violations > 0) j["witnesses"] = witnesses;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "check: " << check << "\n";
  os << "params: " << params.dump() << "\n";
  os << "trials: " << trials << "\n";
  os << "violations: " << violations << "\n";
  os << "max_violation: " << max_violation << "\n";
  os << "min_slack: " << min_slack << "\n";
  os << "tolerance: " << tolerance << "\n";
  os << "seed: " << seed << "\n";
  os << "runtime_ms: " << runtime_ms << "\n";
  if (violations > 0) {
    os << "witnesses: ";
    for (const auto& w : witnesses) os << w.dump() << " ";
    os << "\n";
  }
  return os.str();
}

}  // namespace nco
