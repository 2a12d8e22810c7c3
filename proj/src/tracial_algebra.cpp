#include "ncorlicz/tracial_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncorlicz/errors.hpp"
#include "ncorlicz/rng.hpp"

namespace nco {

namespace {

// Hermitian eigendecomposition with the accuracy contract
// ||H V - V L||_F <= 1e-10 ||H||_F.
void hermitian_eig(const Eigen::MatrixXcd& h, Eigen::VectorXd& evals, Eigen::MatrixXcd& evecs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw numeric_error("hermitian_eig: eigensolver failed to converge");
  evals = solver.eigenvalues();
  evecs = solver.eigenvectors();
  const double scale = h.norm();
  if (scale > 0.0) {
    const double residual = (h * evecs - evecs * evals.asDiagonal()).norm();
    if (residual > 1e-10 * scale) {
      std::ostringstream os;
      os << "hermitian_eig: residual " << residual << " exceeds 1e-10 * " << scale;
      throw numeric_error(os.str());
    }
  }
}

// Clamp documented rounding noise; anything more negative is a real defect.
double clamp_eigenvalue(double lambda, double scale) {
  const double tol = 1e-12 * std::max(1.0, scale);
  if (lambda >= 0.0) return lambda;
  if (lambda >= -tol) return 0.0;
  return lambda;
}

void require_same_algebra(const Operator& a, const Operator& b, const char* who) {
  if (!(a.algebra() == b.algebra())) {
    std::ostringstream os;
    os << who << ": operators live in different algebras";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

TracialAlgebra::TracialAlgebra(std::vector<AlgebraBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("TracialAlgebra: no blocks");
  for (const auto& b : blocks_) {
    if (b.dim <= 0) throw std::invalid_argument("TracialAlgebra: block dim must be positive");
    if (!(b.trace_scale > 0.0))
      throw std::invalid_argument("TracialAlgebra: trace scale must be positive");
  }
}

TracialAlgebra TracialAlgebra::full_matrix(int dim, double trace_scale) {
  return TracialAlgebra({AlgebraBlock{dim, trace_scale}});
}

int TracialAlgebra::total_dim() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.dim;
  return n;
}

Operator::Operator(TracialAlgebra algebra, std::vector<Eigen::MatrixXcd> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (blocks_.size() != algebra_.blocks().size())
    throw std::invalid_argument("Operator: block count mismatch");
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const int d = algebra_.blocks()[b].dim;
    if (blocks_[b].rows() != d || blocks_[b].cols() != d)
      throw std::invalid_argument("Operator: block dimension mismatch");
  }
}

Operator Operator::zero(const TracialAlgebra& algebra) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& b : algebra.blocks()) blocks.push_back(Eigen::MatrixXcd::Zero(b.dim, b.dim));
  return Operator(algebra, std::move(blocks));
}

Operator Operator::identity(const TracialAlgebra& algebra) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& b : algebra.blocks())
    blocks.push_back(Eigen::MatrixXcd::Identity(b.dim, b.dim));
  return Operator(algebra, std::move(blocks));
}

Operator Operator::operator+(const Operator& rhs) const {
  require_same_algebra(*this, rhs, "operator+");
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(blocks_[b] + rhs.blocks_[b]);
  return Operator(algebra_, std::move(blocks));
}

Operator Operator::operator-(const Operator& rhs) const {
  require_same_algebra(*this, rhs, "operator-");
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(blocks_[b] - rhs.blocks_[b]);
  return Operator(algebra_, std::move(blocks));
}

Operator Operator::operator-() const { return std::complex<double>(-1.0, 0.0) * *this; }

Operator Operator::operator*(const Operator& rhs) const {
  require_same_algebra(*this, rhs, "operator*");
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(blocks_[b] * rhs.blocks_[b]);
  return Operator(algebra_, std::move(blocks));
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_algebra(*this, rhs, "operator+=");
  for (int b = 0; b < block_count(); ++b) blocks_[static_cast<size_t>(b)] += rhs.blocks_[b];
  return *this;
}

double Operator::max_abs() const {
  double m = 0.0;
  for (const auto& blk : blocks_) m = std::max(m, blk.cwiseAbs().maxCoeff());
  return m;
}

double Operator::frobenius() const {
  double s = 0.0;
  for (const auto& blk : blocks_) s += blk.squaredNorm();
  return std::sqrt(s);
}

bool Operator::is_hermitian(double rel_tol) const {
  const double scale = max_abs();
  if (scale == 0.0) return true;
  double dev = 0.0;
  for (const auto& blk : blocks_) dev = std::max(dev, (blk - blk.adjoint()).cwiseAbs().maxCoeff());
  return dev <= rel_tol * scale;
}

Operator operator*(std::complex<double> c, const Operator& a) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < a.block_count(); ++b) blocks.push_back(c * a.block(b));
  return Operator(a.algebra(), std::move(blocks));
}

Operator operator*(double c, const Operator& a) { return std::complex<double>(c, 0.0) * a; }

std::complex<double> trace(const Operator& a) {
  std::complex<double> t = 0.0;
  for (int b = 0; b < a.block_count(); ++b)
    t += a.algebra().blocks()[static_cast<size_t>(b)].trace_scale * a.block(b).trace();
  return t;
}

Operator adjoint(const Operator& a) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < a.block_count(); ++b) blocks.push_back(a.block(b).adjoint().eval());
  return Operator(a.algebra(), std::move(blocks));
}

Operator abs(const Operator& a) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < a.block_count(); ++b) {
    const Eigen::MatrixXcd gram = a.block(b).adjoint() * a.block(b);
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eig(0.5 * (gram + gram.adjoint()), evals, evecs);
    const double scale = gram.norm();
    Eigen::VectorXd roots(evals.size());
    for (int i = 0; i < evals.size(); ++i) {
      const double lambda = clamp_eigenvalue(evals[i], scale);
      if (lambda < 0.0) throw numeric_error("abs: A*A has a significantly negative eigenvalue");
      roots[i] = std::sqrt(lambda);
    }
    blocks.push_back(evecs * roots.asDiagonal() * evecs.adjoint());
  }
  return Operator(a.algebra(), std::move(blocks));
}

PolarDecomposition polar(const Operator& a) {
  std::vector<Eigen::MatrixXcd> u_blocks, p_blocks;
  for (int b = 0; b < a.block_count(); ++b) {
    const Eigen::MatrixXcd gram = a.block(b).adjoint() * a.block(b);
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eig(0.5 * (gram + gram.adjoint()), evals, evecs);
    const double scale = gram.norm();
    Eigen::VectorXd roots(evals.size()), inv_roots(evals.size());
    const double kernel_tol = 1e-12 * std::max(1.0, scale);
    for (int i = 0; i < evals.size(); ++i) {
      const double lambda = std::max(0.0, clamp_eigenvalue(evals[i], scale));
      roots[i] = std::sqrt(lambda);
      inv_roots[i] = lambda > kernel_tol ? 1.0 / roots[i] : 0.0;  // zero on ker |A|
    }
    p_blocks.push_back(evecs * roots.asDiagonal() * evecs.adjoint());
    u_blocks.push_back(a.block(b) * evecs * inv_roots.asDiagonal() * evecs.adjoint());
  }
  return PolarDecomposition{Operator(a.algebra(), std::move(u_blocks)),
                            Operator(a.algebra(), std::move(p_blocks))};
}

namespace {

template <class Scalar, class Fn>
Operator apply_spectral(const Fn& f, const Operator& h) {
  if (!h.is_hermitian(1e-10))
    throw std::invalid_argument("functional_calculus: operator is not Hermitian");
  std::vector<Eigen::MatrixXcd> blocks;
  for (int b = 0; b < h.block_count(); ++b) {
    const Eigen::MatrixXcd sym = 0.5 * (h.block(b) + h.block(b).adjoint());
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eig(sym, evals, evecs);
    const double scale = sym.norm();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mapped(evals.size());
    for (int i = 0; i < evals.size(); ++i) mapped[i] = f(clamp_eigenvalue(evals[i], scale));
    blocks.push_back(evecs * mapped.asDiagonal() * evecs.adjoint());
  }
  return Operator(h.algebra(), std::move(blocks));
}

}  // namespace

Operator functional_calculus(const std::function<double(double)>& f, const Operator& h) {
  return apply_spectral<double>(f, h);
}

Operator functional_calculus_complex(const std::function<std::complex<double>(double)>& f,
                                     const Operator& h) {
  return apply_spectral<std::complex<double>>(f, h);
}

WeightedSpectrum weighted_singular_values(const Operator& a) {
  WeightedSpectrum out;
  for (int b = 0; b < a.block_count(); ++b) {
    const Eigen::MatrixXcd gram = a.block(b).adjoint() * a.block(b);
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
    hermitian_eig(0.5 * (gram + gram.adjoint()), evals, evecs);
    const double scale = gram.norm();
    const double w = a.algebra().blocks()[static_cast<size_t>(b)].trace_scale;
    for (int i = 0; i < evals.size(); ++i) {
      const double sv = std::sqrt(std::max(0.0, clamp_eigenvalue(evals[i], scale)));
      out.values.push_back(sv);
      out.weights.push_back(w);
      out.max_value = std::max(out.max_value, sv);
    }
  }
  return out;
}

double spectral_norm(const Operator& a) { return weighted_singular_values(a).max_value; }

double modular(const OrliczFunction& phi, const Operator& a) {
  const WeightedSpectrum spec = weighted_singular_values(a);
  double s = 0.0;
  for (size_t i = 0; i < spec.values.size(); ++i) s += spec.weights[i] * phi.value(spec.values[i]);
  return s;
}

Operator random_operator(const TracialAlgebra& algebra, OperatorKind kind, double scale,
                         std::uint64_t seed) {
  if (!(scale > 0.0)) throw std::invalid_argument("random_operator: scale must be positive");
  Rng rng(seed);
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& blk : algebra.blocks()) {
    Eigen::MatrixXcd g(blk.dim, blk.dim);
    for (int r = 0; r < blk.dim; ++r)
      for (int c = 0; c < blk.dim; ++c) g(r, c) = rng.complex_normal(scale);
    blocks.push_back(std::move(g));
  }
  Operator general(algebra, std::move(blocks));
  switch (kind) {
    case OperatorKind::general:
      return general;
    case OperatorKind::hermitian:
      return 0.5 * (general + adjoint(general));
    case OperatorKind::positive: {
      Operator gram = adjoint(general) * general;
      const double top = spectral_norm(gram);
      if (top <= 0.0) throw numeric_error("random_operator: degenerate positive draw");
      return (scale / top) * gram;
    }
    case OperatorKind::unitary:
      return polar(general).isometry;
  }
  throw std::invalid_argument("random_operator: unknown kind");
}

}  // namespace nco
