#pragma once

// Scalar searches used throughout: bisection on monotone maps and
// golden-section minimization. Monotonicity is guaranteed by the callers
// (N-function structure), so bisection is used everywhere a root is needed.

#include <cmath>
#include <stdexcept>

#include "ncorlicz/errors.hpp"

namespace nco {

inline constexpr double kRootRelTol = 1e-12;

// Root of a nondecreasing f on [lo, hi] with f(lo) <= target <= f(hi).
// Converges to relative bracket width rel_tol (absolute near zero).
template <class F>
double bisect_increasing(F&& f, double lo, double hi, double target,
                         double rel_tol = kRootRelTol, int max_iter = 200) {
  if (!(lo <= hi)) throw std::invalid_argument("bisect_increasing: empty bracket");
  for (int i = 0; i < max_iter; ++i) {
    if (hi - lo <= rel_tol * std::max(1.0, std::abs(hi))) break;
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Grows hi by doubling until pred(hi) holds. Returns the first hi that
// satisfies pred; lo is updated to the last failing value.
template <class Pred>
double grow_bracket(Pred&& pred, double& lo, double hi, double limit,
                    int max_doublings = 200) {
  for (int i = 0; i < max_doublings; ++i) {
    if (pred(hi)) return hi;
    lo = hi;
    hi *= 2.0;
    if (hi > limit) {
      hi = limit;
      if (pred(hi)) return hi;
      throw numeric_error("grow_bracket: predicate not reached before limit");
    }
  }
  throw numeric_error("grow_bracket: no bracket after max doublings");
}

// Minimizer of a unimodal f on [a, b] to relative interval width rel_tol.
template <class F>
double golden_minimize(F&& f, double a, double b, double rel_tol = 1e-9,
                       int max_iter = 300) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter; ++i) {
    if (b - a <= rel_tol * std::max(1.0, std::abs(b))) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace nco
