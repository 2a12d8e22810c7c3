#pragma once

// Trial-parallel sweep driver. Each trial derives its own seed from
// (master seed, index), so results are independent of scheduling; statistics
// merge through min/max/count and witnesses keep the lowest trial indices.
// run_sweep_serial is the reference loop; run_sweep dispatches to an OpenMP
// kernel unless a single thread is requested. Both produce identical output.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncorlicz/report.hpp"
#include "ncorlicz/rng.hpp"

namespace nco {

struct TrialOutcome {
  double slack = 0.0;
  nlohmann::json witness;  ///< dumped only if the trial violates
};

struct SweepOptions {
  long trials = 1000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  int threads = 0;  ///< 0 = library default, 1 = serial reference path
  std::size_t witness_cap = 5;
};

struct SweepStats {
  long trials = 0;
  long violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double max_violation = 0.0;
  std::vector<std::pair<long, nlohmann::json>> witness_entries;  // (index, dump)

  void absorb(long index, const TrialOutcome& out, double tol) {
    ++trials;
    min_slack = std::min(min_slack, out.slack);
    if (out.slack < -tol) {
      ++violations;
      max_violation = std::max(max_violation, -out.slack);
      witness_entries.emplace_back(index, out.witness);
    }
  }

  void finalize(std::size_t cap) {
    std::sort(witness_entries.begin(), witness_entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (witness_entries.size() > cap) witness_entries.resize(cap);
  }
};

template <class TrialFn>
SweepStats run_sweep_serial(const SweepOptions& opt, TrialFn&& fn) {
  SweepStats stats;
  for (long i = 0; i < opt.trials; ++i)
    stats.absorb(i, fn(derive_seed(opt.seed, static_cast<std::uint64_t>(i)), i), opt.tolerance);
  stats.finalize(opt.witness_cap);
  return stats;
}

template <class TrialFn>
SweepStats run_sweep(const SweepOptions& opt, TrialFn&& fn) {
#ifdef _OPENMP
  if (opt.threads != 1) {
    SweepStats stats;
    stats.trials = opt.trials;
    const int requested = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel num_threads(requested)
    {
      SweepStats local;
#pragma omp for schedule(dynamic, 8) nowait
      for (long i = 0; i < opt.trials; ++i)
        local.absorb(i, fn(derive_seed(opt.seed, static_cast<std::uint64_t>(i)), i),
                     opt.tolerance);
#pragma omp critical(nco_sweep_merge)
      {
        stats.violations += local.violations;
        stats.min_slack = std::min(stats.min_slack, local.min_slack);
        stats.max_violation = std::max(stats.max_violation, local.max_violation);
        stats.witness_entries.insert(stats.witness_entries.end(),
                                     local.witness_entries.begin(),
                                     local.witness_entries.end());
      }
    }
    stats.finalize(opt.witness_cap);
    return stats;
  }
#endif
  return run_sweep_serial(opt, std::forward<TrialFn>(fn));
}

/// Folds sweep statistics into a report skeleton.
inline VerificationReport make_report(std::string check, const SweepOptions& opt,
                                      const SweepStats& stats, nlohmann::json params) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.trials = stats.trials;
  r.violations = stats.violations;
  r.max_violation = stats.max_violation;
  r.min_slack = stats.min_slack;
  r.tolerance = opt.tolerance;
  r.seed = opt.seed;
  for (const auto& [idx, w] : stats.witness_entries) {
    nlohmann::json entry;
    entry["trial"] = idx;
    entry["witness"] = w;
    r.witnesses.push_back(entry);
  }
  return r;
}

}  // namespace nco
