#pragma once

// Named verification suites behind the CLI and the acceptance harness.
// Every suite runs a deterministic trial-parallel sweep and folds into one
// VerificationReport; "all" runs every suite in order.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ncorlicz/report.hpp"

namespace nco {

struct SuiteConfig {
  std::uint64_t seed = 42;
  long trials = 1000;
  int dim = 3;
  double tol = std::numeric_limits<double>::quiet_NaN();  ///< NaN = per-suite default
  int threads = 0;
};

/// scalar, norms, holder, lemma21, duality, clarkson, lp-clarkson,
/// interpolation, moduli (and "all").
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite ("all" expands to every suite). Throws
/// std::invalid_argument for unknown names.
std::vector<VerificationReport> run_suites(const std::string& name, const SuiteConfig& config);

}  // namespace nco
