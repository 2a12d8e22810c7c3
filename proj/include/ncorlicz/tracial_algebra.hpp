#pragma once

// Finite-dimensional model of a tracial pair (M, tau): a direct sum of full
// complex matrix blocks with a per-block trace scale,
//   tau(A) = sum_b scale_b * Tr(A_b).
// Operators are immutable values; the single numerical kernel is the
// Hermitian eigendecomposition (residual-checked against its input).

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ncorlicz/orlicz_function.hpp"

namespace nco {

struct AlgebraBlock {
  int dim = 0;
  double trace_scale = 1.0;
  bool operator==(const AlgebraBlock&) const = default;
};

class TracialAlgebra {
 public:
  TracialAlgebra() = default;
  explicit TracialAlgebra(std::vector<AlgebraBlock> blocks);
  /// Single full matrix block M_dim with the given trace scale
  /// (1.0 = ordinary trace, 1.0/dim = normalized trace).
  static TracialAlgebra full_matrix(int dim, double trace_scale = 1.0);

  const std::vector<AlgebraBlock>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int total_dim() const;

  bool operator==(const TracialAlgebra&) const = default;

 private:
  std::vector<AlgebraBlock> blocks_;
};

class Operator {
 public:
  Operator(TracialAlgebra algebra, std::vector<Eigen::MatrixXcd> blocks);
  static Operator zero(const TracialAlgebra& algebra);
  static Operator identity(const TracialAlgebra& algebra);

  const TracialAlgebra& algebra() const { return algebra_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Eigen::MatrixXcd& block(int b) const { return blocks_[static_cast<size_t>(b)]; }
  Eigen::MatrixXcd& block(int b) { return blocks_[static_cast<size_t>(b)]; }

  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator operator-() const;
  Operator operator*(const Operator& rhs) const;  // blockwise matrix product
  Operator& operator+=(const Operator& rhs);

  double max_abs() const;        ///< entrywise max modulus over all blocks
  double frobenius() const;      ///< unweighted Frobenius norm over all blocks
  bool is_zero() const { return max_abs() == 0.0; }
  bool is_hermitian(double rel_tol = 1e-12) const;

 private:
  TracialAlgebra algebra_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

Operator operator*(std::complex<double> c, const Operator& a);
Operator operator*(double c, const Operator& a);

std::complex<double> trace(const Operator& a);
Operator adjoint(const Operator& a);

/// |A| = (A*A)^{1/2} via the Hermitian eigendecomposition of A*A; eigenvalues
/// within -1e-12 (relative to the block scale) are clamped to zero.
Operator abs(const Operator& a);

struct PolarDecomposition {
  Operator isometry;  ///< partial isometry U, zero on ker |A|
  Operator positive;  ///< |A|
};

/// A = U |A| with U a partial isometry (U*U = support projection of |A|).
PolarDecomposition polar(const Operator& a);

/// f(H) = sum_k f(alpha_k) e_k for Hermitian H with spectral pairs
/// (alpha_k, e_k). Eigenvalues within -1e-12 of zero are clamped before f is
/// applied; any domain error of f propagates.
Operator functional_calculus(const std::function<double(double)>& f, const Operator& h);

/// Complex-valued functional calculus on a Hermitian operator (used for
/// boundary twists in the interpolation tests).
Operator functional_calculus_complex(const std::function<std::complex<double>(double)>& f,
                                     const Operator& h);

/// Modular rho~_Phi(A) = tau(Phi(|A|)); evaluated on the singular values.
double modular(const OrliczFunction& phi, const Operator& a);

/// Singular values of A with their trace weights, flattened across blocks.
struct WeightedSpectrum {
  std::vector<double> values;
  std::vector<double> weights;
  double max_value = 0.0;
};
WeightedSpectrum weighted_singular_values(const Operator& a);

double spectral_norm(const Operator& a);

enum class OperatorKind { general, hermitian, positive, unitary };

/// Deterministic seeded generator. general: iid complex Gaussian entries with
/// E|z|^2 = scale^2; hermitian: (G+G*)/2; positive: G*G rescaled to spectral
/// radius = scale; unitary: polar factor of a general draw.
Operator random_operator(const TracialAlgebra& algebra, OperatorKind kind, double scale,
                         std::uint64_t seed);

}  // namespace nco
