#pragma once

// Norms of a single operator: the Luxemburg norm
//   ||A||_(Phi) = inf{ l > 0 : tau(Phi(|A|/l)) <= 1 },
// the Orlicz norm (computed through the Amemiya expression
//   inf_{k>0} (1 + tau(Phi(k|A|))) / k,
// validated against a dual-search oracle), and the L^p norm.

#include <cstdint>
#include <string>

#include "ncorlicz/orlicz_function.hpp"
#include "ncorlicz/tracial_algebra.hpp"

namespace nco {

enum class NormMethod { bisection, amemiya, dual_search, closed_form };

std::string to_string(NormMethod m);

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::bisection;
  double residual = 0.0;  ///< achieved relative tolerance
};

/// Bracketing (doubling/halving from the spectral norm) plus bisection on the
/// strictly decreasing map l -> tau(Phi(|A|/l)), to relative tolerance 1e-10.
NormResult luxemburg_norm(const Operator& a, const OrliczFunction& phi);

/// Amemiya minimization: log-grid scan over k in [1e-6, 1e6]/||A||_inf
/// followed by golden-section refinement (the objective is convex in 1/k).
NormResult orlicz_norm(const Operator& a, const OrliczFunction& phi);

/// (tau(|A|^p))^{1/p} from the singular values.
NormResult lp_norm(const Operator& a, double p);

struct DualSearchOptions {
  int restarts = 50;
  int ascent_steps = 120;
  std::uint64_t seed = 1;
};

/// Lower bound on the Orlicz norm by direct search over the dual constraint
/// set { B : tau(Psi(|B|)) <= 1 }. Candidates: a stationarity solve for the
/// aligned diagonal parametrization B = W D W* U*, projected gradient ascent
/// on D from random restarts, and random full-matrix draws scaled onto the
/// constraint boundary. Both sup tau(|AB|) and sup |tau(AB)| are reported.
struct DualSearchResult {
  double lower = 0.0;              ///< best sound lower bound found
  double abs_trace_objective = 0.0;  ///< best |tau(AB)|
  double trace_abs_objective = 0.0;  ///< best tau(|AB|)
};

DualSearchResult orlicz_norm_dual_search(const Operator& a, const OrliczFunction& phi,
                                         const DualSearchOptions& opts = {});

}  // namespace nco
