#pragma once

// Weighted n-tuple spaces over a list of (Phi_j, algebra_j) components:
// the trace nu(A) = sum_j lambda_j tau(A_j), the weighted norm
//   ||A||_{(Phi),p,lambda} = [ sum_j lambda_j ||A_j||_{(Phi_j)}^p ]^{1/p}
// (unweighted max for p = infinity), the three weighted Hoelder/modular
// inequalities, and a sampled estimate of the dual representation
//   ||A||_{(Phi),p,lambda} = sup{ nu(AB) : ||B||_{Psi,q,lambda} <= 1 }.

#include <complex>
#include <cstdint>
#include <vector>

#include "ncorlicz/norms.hpp"
#include "ncorlicz/orlicz_function.hpp"
#include "ncorlicz/tracial_algebra.hpp"

namespace nco {

enum class Gauge { luxemburg, orlicz };

struct TupleComponent {
  OrliczFunction phi;
  TracialAlgebra algebra;
};

class TupleSpace {
 public:
  TupleSpace(std::vector<TupleComponent> components, std::vector<double> weights, double p,
             Gauge gauge);

  int size() const { return static_cast<int>(components_.size()); }
  const TupleComponent& component(int j) const { return components_[static_cast<size_t>(j)]; }
  double weight(int j) const { return weights_[static_cast<size_t>(j)]; }
  const std::vector<double>& weights() const { return weights_; }
  double exponent() const { return p_; }
  Gauge gauge() const { return gauge_; }

  /// q = p/(p-1), with q = inf for p = 1 and q = 1 for p = inf.
  static double conjugate_exponent(double p);

  /// The paired space: complementary functions, conjugate exponent, Orlicz
  /// gauge, same weights.
  TupleSpace conjugate() const;

 private:
  std::vector<TupleComponent> components_;
  std::vector<double> weights_;
  double p_;
  Gauge gauge_;
};

class TupleOperator {
 public:
  explicit TupleOperator(std::vector<Operator> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  const Operator& part(int j) const { return parts_[static_cast<size_t>(j)]; }
  const std::vector<Operator>& parts() const { return parts_; }

  TupleOperator operator+(const TupleOperator& rhs) const;
  TupleOperator operator-(const TupleOperator& rhs) const;

 private:
  std::vector<Operator> parts_;
};

TupleOperator operator*(std::complex<double> c, const TupleOperator& a);
TupleOperator operator*(double c, const TupleOperator& a);

/// nu(A) = sum_j lambda_j tau(A_j).
std::complex<double> nu_trace(const TupleSpace& space, const TupleOperator& a);

/// Weighted p-mean of the per-component norms (gauge-selected); p = inf
/// gives the unweighted max.
double tuple_norm(const TupleSpace& space, const TupleOperator& a);

/// sum_j lambda_j |tau(A_j B_j)| — the coordinatewise pairing used by the
/// Hoelder bound and the duality estimate.
double tuple_pairing(const TupleSpace& space, const TupleOperator& a, const TupleOperator& b);

/// Weighted modular sum nu(Phi(A)) = sum_j lambda_j tau(Phi_j(|A_j|)).
double tuple_modular(const TupleSpace& space, const TupleOperator& a);

struct Lemma21Result {
  double norm_a = 0.0;       ///< ||A||_{(Phi),p,lambda}
  double norm_b = 0.0;       ///< ||B||_{Psi,q,lambda}
  double modular_sum = 0.0;  ///< nu(Phi(A))
  double delta1 = 0.0;       ///< (sum lambda_j)^{1/q}
  double delta2 = 0.0;       ///< [sum lambda_j^p ||A_j||^p]^{1/p}
  int part = 0;              ///< 1 if ||A|| <= 1, else 2
  double part_slack = 0.0;   ///< slack of the active inequality (>=0 means it holds)
  double holder_slack = 0.0; ///< ||A|| ||B||_Psi,q - sum lambda_j |tau(A_j B_j)|
};

/// Evaluates the weighted modular bounds and the Hoelder inequality for a
/// pair (A, B); B is measured in the conjugate space. Requires 1 <= p < inf.
Lemma21Result lemma21_check(const TupleSpace& space, const TupleOperator& a,
                            const TupleOperator& b);

struct DualNormEstimate {
  double lower = 0.0;  ///< best nu(AB) over sampled feasible B (a sound lower bound)
  double norm = 0.0;   ///< ||A||_{(Phi),p,lambda}
};

/// Random feasible B draws plus a constructive pairing witness built from the
/// right derivative of each Phi_j at the normalized spectrum, followed by
/// coordinate-ascent refinement of the budget allocation across components.
DualNormEstimate dual_norm_estimate(const TupleSpace& space, const TupleOperator& a, int budget,
                                    std::uint64_t seed);

/// Deterministic random tuple with independent parts.
TupleOperator random_tuple(const TupleSpace& space, OperatorKind kind, double scale,
                           std::uint64_t seed);

}  // namespace nco
