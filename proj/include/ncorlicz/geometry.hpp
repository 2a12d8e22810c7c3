#pragma once

// Clarkson-type inequalities and the moduli of convexity and smoothness for
// L^{(Phi_s)} with Phi_s interpolated between Phi and u^2:
//
//   (||A+B||^{2/s} + ||A-B||^{2/s})^{s/2}
//       <= 2^{s/2} (||A||^{2/(2-s)} + ||B||^{2/(2-s)})^{(2-s)/2},
//
//   delta(eps) >= 1 - (1/2)[2^{2/s} - eps^{2/s}]^{s/2},
//   rho(t)    <= (1 + t^{2/(2-s)})^{(2-s)/2} - 1.
//
// The moduli are estimated one-sidedly: sampled infima over-estimate delta
// and sampled suprema under-estimate rho, so the closed-form bounds are
// checkable without global optimization.

#include <cstdint>

#include "ncorlicz/orlicz_function.hpp"
#include "ncorlicz/tracial_algebra.hpp"

namespace nco {

/// RHS - LHS of the Clarkson inequality in L^{(Phi_s)},
/// Phi_s = intermediate(Phi, u^2, s), s in (0, 1]. Nonnegative = holds.
double clarkson_check(const Operator& a, const Operator& b, const OrliczFunction& phi, double s);

/// RHS - LHS of the L^p Clarkson inequality, p in (1, inf):
/// the q-outer form for p <= 2 and the p-outer form for p >= 2.
double lp_clarkson_check(const Operator& a, const Operator& b, double p);

/// 1 - (1/2)[2^{2/s} - eps^{2/s}]^{s/2}, s in (0,1], eps in (0,2].
double convexity_bound(double s, double eps);

/// (1 + t^{2/(2-s)})^{(2-s)/2} - 1, s in (0,1], t > 0.
double smoothness_bound(double s, double t);

struct ModulusEstimate {
  double parameter = 0.0;  ///< eps or t
  double estimate = 0.0;
  double bound = 0.0;
  long samples = 0;
  double constraint_residual = 0.0;  ///< worst deviation from unit-norm/distance constraints
};

/// min over sampled unit pairs at distance eps of 1 - ||(A+B)/2||, plus local
/// perturbation descent. Over-estimates the true modulus, so
/// estimate >= convexity_bound(s, eps) - tol is the checkable form.
ModulusEstimate convexity_modulus_estimate(const OrliczFunction& phi, double s, double eps,
                                           const TracialAlgebra& algebra, long samples,
                                           std::uint64_t seed, int threads = 0);

/// max over sampled unit pairs of (||A+tB|| + ||A-tB||)/2 - 1, plus local
/// ascent. Under-estimates the true modulus.
ModulusEstimate smoothness_modulus_estimate(const OrliczFunction& phi, double s, double t,
                                            const TracialAlgebra& algebra, long samples,
                                            std::uint64_t seed, int threads = 0);

struct LpModuliBounds {
  double delta_bound = 0.0;
  double rho_bound = 0.0;
};

/// L^p moduli bounds: delta >= eps^q/(q 2^q), rho <= t^p/p for 1 < p < 2,
/// with p and q swapped for 2 < p < inf (they agree at p = 2).
LpModuliBounds lp_moduli_bounds(double p, double eps, double t);

}  // namespace nco
