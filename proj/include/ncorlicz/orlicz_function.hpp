#pragma once

// N-functions (Orlicz functions) and the scalar constructions built on them:
// evaluation, right derivative, inverse, Young conjugate, the intermediate
// function whose inverse is the geometric interpolation of two inverses, and
// the Delta_2 growth diagnostic.
//
// An N-function is a convex Phi with Phi(0) = 0, given by the integral of a
// nondecreasing right derivative p with p(0) = 0, p(t) > 0 for t > 0 and
// p(t) -> infinity. All functions here are finite-valued up to a per-family
// domain cap; evaluation above the cap is a domain error.

#include <memory>
#include <string>
#include <vector>

namespace nco {

namespace detail {
class OrliczImpl;
}

enum class OrliczFamily { power, expm, linlog, tabulated, conjugate, intermediate };

class OrliczFunction {
 public:
  OrliczFunction() = delete;

  /// Phi(u) = u^alpha, alpha > 1.
  static OrliczFunction power(double alpha);
  /// Phi(u) = e^u - u - 1.
  static OrliczFunction expm();
  /// Phi(u) = (1+u) ln(1+u) - u.
  static OrliczFunction linlog();
  /// Monotone convex sample table (u[0] = 0, phi[0] = 0); evaluation uses a
  /// monotone piecewise-cubic interpolant. Tables violating strict
  /// monotonicity or grid convexity are rejected.
  static OrliczFunction tabulated(std::vector<double> u, std::vector<double> phi);
  /// Phi_s with inverse [phi1^{-1}(u)]^{1-s} [phi2^{-1}(u)]^{s}; s = 0 and
  /// s = 1 return phi1 and phi2 unchanged. Power pairs collapse to the exact
  /// closed form.
  static OrliczFunction intermediate(const OrliczFunction& phi1,
                                     const OrliczFunction& phi2, double s);

  double value(double u) const;             ///< Phi(u)
  double operator()(double u) const { return value(u); }
  double right_derivative(double t) const;  ///< p(t)
  double inverse(double y) const;           ///< unique u with Phi(u) = y
  double domain_cap() const;

  /// Young conjugate Psi(v) = sup_u { u v - Phi(u) }. Closed forms where the
  /// family admits one (power <-> scaled power, expm <-> linlog); otherwise
  /// the supremum is solved per evaluation.
  OrliczFunction conjugate() const;

  OrliczFamily family() const;
  std::string describe() const;

  /// Shares the underlying immutable state (cheap identity check for the
  /// s = 0 / s = 1 contracts of intermediate()).
  bool same_impl(const OrliczFunction& other) const { return impl_ == other.impl_; }

 private:
  explicit OrliczFunction(std::shared_ptr<const detail::OrliczImpl> impl);
  std::shared_ptr<const detail::OrliczImpl> impl_;
  friend class detail::OrliczImpl;
};

struct Delta2Report {
  double k_max = 0.0;   ///< max over the grid of Phi(2t)/Phi(t)
  bool holds = false;   ///< k_max stays below the configured threshold
  double threshold = 0.0;
};

/// Delta_2 growth diagnostic on a grid of positive points (all within
/// domain_cap / 2). Empty grids are an input error.
Delta2Report delta2_check(const OrliczFunction& phi, const std::vector<double>& t_grid,
                          double threshold = 1000.0);

/// Grid validation of the N-function contract: Phi(0) = 0, strict increase,
/// midpoint convexity within 1e-12 relative, nondecreasing right derivative
/// with p(0) = 0. Throws std::invalid_argument on the first failure.
void validate_n_function(const OrliczFunction& phi, const std::vector<double>& grid);

}  // namespace nco
