#pragma once

// Exponent interpolation schedules, linear operators on tuples, empirical
// endpoint constants, and the interpolation bound
//   ||TA||_{(Q_s),t_s,lambda} <= K1^{1-s} K2^{s} ||A||_{(Phi_s),r_s,lambda}
// checked over random operators. The built-in two-point operator
// T(A, B) = (A + B, A - B) has endpoint constants K1 = 1 (at r = 1, t = inf)
// and K2 = sqrt(2) (at r = t = 2).

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncorlicz/direct_sum.hpp"
#include "ncorlicz/report.hpp"

namespace nco {

struct InterpolationSchedule {
  double r1 = 1.0, r2 = 2.0, t1 = 1.0, t2 = 2.0;  ///< endpoint exponents in [1, inf]

  /// Harmonic interpolation 1/r_s = (1-s)/r1 + s/r2 (1/inf = 0); s in [0, 1].
  std::pair<double, double> exponents(double s) const;
};

/// (TA)_k = sum_j c_kj L_kj A_j R_kj with optional left/right multipliers
/// (empty slot = identity).
class TupleLinearOperator {
 public:
  explicit TupleLinearOperator(Eigen::MatrixXcd coeffs);

  TupleLinearOperator& set_left(int k, int j, Operator op);
  TupleLinearOperator& set_right(int k, int j, Operator op);
  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
  const std::optional<Operator>& left(int k, int j) const;
  const std::optional<Operator>& right(int k, int j) const;

  int rows() const { return static_cast<int>(coeffs_.rows()); }
  int cols() const { return static_cast<int>(coeffs_.cols()); }

  TupleOperator apply(const TupleOperator& a) const;

 private:
  Eigen::MatrixXcd coeffs_;
  std::vector<std::optional<Operator>> left_, right_;
};

/// T(A, B) = (A + B, A - B).
TupleLinearOperator clarkson_operator();

/// Empirical lower bound on sup ||TA||_cod / ||A||_dom: random trials plus
/// local perturbation ascent. Never an upper bound.
double endpoint_constant_estimate(const TupleLinearOperator& t, const TupleSpace& domain,
                                  const TupleSpace& codomain, int trials, std::uint64_t seed);

struct RieszThorinConfig {
  std::vector<OrliczFunction> phi1, phi2;  ///< domain endpoint function tuples
  std::vector<OrliczFunction> q1, q2;      ///< codomain endpoint function tuples
  std::vector<TracialAlgebra> algebras;    ///< one per component
  std::vector<double> weights;
  InterpolationSchedule schedule;
  double k1 = std::numeric_limits<double>::quiet_NaN();  ///< analytic endpoint constants;
  double k2 = std::numeric_limits<double>::quiet_NaN();  ///< NaN = report-only mode
  std::vector<double> s_values = {0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
  long trials = 500;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;  ///< slack < -tol * scale counts as a violation
  int threads = 0;
};

/// Per-s sweep of the interpolation bound for T. With analytic constants the
/// report counts violations; without them it only records the observed
/// norm ratios (an empirical endpoint estimate is a lower bound and must not
/// be asserted against).
VerificationReport riesz_thorin_check(const TupleLinearOperator& t, const RieszThorinConfig& cfg);

}  // namespace nco
