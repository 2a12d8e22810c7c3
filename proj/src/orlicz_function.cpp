#include "ncorlicz/orlicz_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ncorlicz/search.hpp"

namespace nco {
namespace detail {

namespace {

// Largest argument kept representable through pow/exp chains.
constexpr double kValueCeiling = 1e300;

void check_domain(double u, double cap, const char* who) {
  if (!(u >= 0.0)) {
    std::ostringstream os;
    os << who << ": negative argument " << u;
    throw std::invalid_argument(os.str());
  }
  if (u > cap * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << who << ": argument " << u << " exceeds domain cap " << cap;
    throw std::domain_error(os.str());
  }
}

}  // namespace

class OrliczImpl : public std::enable_shared_from_this<OrliczImpl> {
 public:
  explicit OrliczImpl(OrliczFamily family, double cap) : family_(family), cap_(cap) {}
  virtual ~OrliczImpl() = default;

  OrliczFamily family() const { return family_; }
  double cap() const { return cap_; }

  virtual double eval(double u) const = 0;
  virtual std::string describe() const = 0;

  // Right derivative; default is the forward difference with the spec step.
  virtual double derivative(double t) const {
    if (t >= cap_) t = cap_ * (1.0 - 1e-9);
    const double h = std::max(1e-7, 1e-7 * t);
    const double hi = std::min(t + h, cap_);
    return (eval(hi) - eval(t)) / (hi - t);
  }

  // Unique u with Phi(u) = y; default is bisection on the monotone Phi.
  virtual double inverse(double y) const {
    if (y == 0.0) return 0.0;
    double lo = 0.0;
    const double hi =
        grow_bracket([&](double x) { return eval(x) >= y; }, lo, std::min(1.0, cap_), cap_);
    return bisect_increasing([&](double x) { return eval(x); }, lo, hi, y);
  }

  virtual std::shared_ptr<const OrliczImpl> conjugate() const;

  static OrliczFunction wrap(std::shared_ptr<const OrliczImpl> impl) {
    return OrliczFunction(std::move(impl));
  }

 protected:
  void set_cap(double cap) { cap_ = cap; }

 private:
  OrliczFamily family_;
  double cap_;
};

namespace {

// coeff * u^alpha. Catalog power functions have coeff = 1; scaled versions
// arise as closed-form conjugates and collapsed intermediates.
class PowerImpl final : public OrliczImpl {
 public:
  PowerImpl(double alpha, double coeff)
      : OrliczImpl(OrliczFamily::power,
                   std::pow(kValueCeiling / std::max(coeff, 1.0), 1.0 / alpha)),
        alpha_(alpha),
        coeff_(coeff) {}

  double eval(double u) const override { return coeff_ * std::pow(u, alpha_); }
  double derivative(double t) const override {
    return coeff_ * alpha_ * std::pow(t, alpha_ - 1.0);
  }
  double inverse(double y) const override { return std::pow(y / coeff_, 1.0 / alpha_); }

  std::shared_ptr<const OrliczImpl> conjugate() const override {
    // sup_u (uv - c u^a) attained at u = (v/(c a))^{1/(a-1)}:
    //   Psi(v) = c' v^q,  q = a/(a-1),  c' = (a-1)/a * (c a)^{-1/(a-1)}.
    const double q = alpha_ / (alpha_ - 1.0);
    const double c = (alpha_ - 1.0) / alpha_ * std::pow(coeff_ * alpha_, -1.0 / (alpha_ - 1.0));
    return std::make_shared<PowerImpl>(q, c);
  }

  std::string describe() const override {
    std::ostringstream os;
    if (coeff_ == 1.0)
      os << "power(" << alpha_ << ")";
    else
      os << coeff_ << "*u^" << alpha_;
    return os.str();
  }

  double alpha() const { return alpha_; }
  double coeff() const { return coeff_; }

 private:
  double alpha_;
  double coeff_;
};

class LinLogImpl;

// e^u - u - 1. Not Delta_2; the standard example of exponential growth.
class ExpMImpl final : public OrliczImpl {
 public:
  ExpMImpl() : OrliczImpl(OrliczFamily::expm, 690.0) {}
  double eval(double u) const override { return std::expm1(u) - u; }
  double derivative(double t) const override { return std::expm1(t); }
  std::shared_ptr<const OrliczImpl> conjugate() const override;
  std::string describe() const override { return "expm"; }
};

// (1+u) ln(1+u) - u, the Young conjugate of expm.
class LinLogImpl final : public OrliczImpl {
 public:
  LinLogImpl() : OrliczImpl(OrliczFamily::linlog, 1e280) {}
  double eval(double u) const override { return (1.0 + u) * std::log1p(u) - u; }
  double derivative(double t) const override { return std::log1p(t); }
  std::shared_ptr<const OrliczImpl> conjugate() const override {
    return std::make_shared<ExpMImpl>();
  }
  std::string describe() const override { return "linlog"; }
};

std::shared_ptr<const OrliczImpl> ExpMImpl::conjugate() const {
  return std::make_shared<LinLogImpl>();
}

// Monotone piecewise-cubic (Fritsch-Carlson) interpolant of user samples.
class TabulatedImpl final : public OrliczImpl {
 public:
  TabulatedImpl(std::vector<double> u, std::vector<double> phi)
      : OrliczImpl(OrliczFamily::tabulated, u.empty() ? 0.0 : u.back()),
        u_(std::move(u)),
        phi_(std::move(phi)) {
    if (u_.size() < 3 || u_.size() != phi_.size())
      throw std::invalid_argument("tabulated: need matching grids with >= 3 samples");
    if (u_.front() != 0.0 || phi_.front() != 0.0)
      throw std::invalid_argument("tabulated: table must start at (0, 0)");
    const size_t n = u_.size();
    std::vector<double> slope(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
      if (!(u_[i + 1] > u_[i]) || !(phi_[i + 1] > phi_[i]))
        throw std::invalid_argument("tabulated: samples must be strictly increasing");
      slope[i] = (phi_[i + 1] - phi_[i]) / (u_[i + 1] - u_[i]);
    }
    // Convexity on the sample grid: divided differences nondecreasing.
    for (size_t i = 0; i + 1 < slope.size(); ++i) {
      if (slope[i + 1] < slope[i] * (1.0 - 1e-12) - 1e-15)
        throw std::invalid_argument("tabulated: sample grid is not convex");
    }
    // Fritsch-Carlson tangents: harmonic mean of adjacent slopes.
    d_.assign(n, 0.0);
    d_.front() = slope.front();
    d_.back() = slope.back();
    for (size_t i = 1; i + 1 < n; ++i) {
      if (slope[i - 1] * slope[i] > 0.0) {
        const double w1 = 2.0 * (u_[i + 1] - u_[i]) + (u_[i] - u_[i - 1]);
        const double w2 = (u_[i + 1] - u_[i]) + 2.0 * (u_[i] - u_[i - 1]);
        d_[i] = (w1 + w2) / (w1 / slope[i - 1] + w2 / slope[i]);
      }
    }
  }

  double eval(double u) const override {
    if (u >= u_.back()) return phi_.back();
    const size_t i = segment(u);
    const double h = u_[i + 1] - u_[i];
    const double t = (u - u_[i]) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * phi_[i] + h * h10 * d_[i] + h01 * phi_[i + 1] + h * h11 * d_[i + 1];
  }

  double derivative(double t) const override {
    if (t >= u_.back()) return d_.back();
    const size_t i = segment(t);
    const double h = u_[i + 1] - u_[i];
    const double x = (t - u_[i]) / h;
    const double g00 = 6 * x * (x - 1) / h;
    const double g10 = (3 * x - 1) * (x - 1);
    const double g01 = -g00;
    const double g11 = x * (3 * x - 2);
    return g00 * phi_[i] + g10 * d_[i] + g01 * phi_[i + 1] + g11 * d_[i + 1];
  }

  std::string describe() const override { return "tabulated"; }

 private:
  size_t segment(double u) const {
    auto it = std::upper_bound(u_.begin(), u_.end(), u);
    size_t i = static_cast<size_t>(it - u_.begin());
    if (i == 0) return 0;
    return std::min(i - 1, u_.size() - 2);
  }

  std::vector<double> u_, phi_, d_;
};

// Young conjugate without a closed form. Evaluation solves
// sup_u (u v - Phi(u)): bisection on the monotone right derivative, or a
// scan + golden section on the objective when the derivative cannot be
// trusted to be monotone (tabulated interpolants).
class ConjugateImpl final : public OrliczImpl {
 public:
  explicit ConjugateImpl(std::shared_ptr<const OrliczImpl> inner)
      : OrliczImpl(OrliczFamily::conjugate, conjugate_cap(*inner)), inner_(std::move(inner)) {}

  double eval(double v) const override {
    if (v == 0.0) return 0.0;
    const double u = maximizer(v);
    return u * v - inner_->eval(u);
  }

  // Psi'(v) is the maximizing abscissa (Legendre duality).
  double derivative(double t) const override { return t == 0.0 ? 0.0 : maximizer(t); }

  std::string describe() const override { return "conjugate(" + inner_->describe() + ")"; }

 private:
  static double conjugate_cap(const OrliczImpl& inner) {
    // Psi is finite up to p(cap); beyond that the restricted sup sits on the
    // boundary, which we do not model.
    double c = inner.derivative(inner.cap() * (1.0 - 1e-9));
    if (!std::isfinite(c) || c > kValueCeiling) c = kValueCeiling;
    return c;
  }

  double maximizer(double v) const {
    const double cap = inner_->cap();
    if (inner_->family() == OrliczFamily::tabulated) {
      // 64-point scan then golden refinement of u*v - Phi(u).
      auto neg = [&](double u) { return inner_->eval(u) - u * v; };
      double best_u = 0.0, best = 0.0;
      for (int i = 0; i <= 64; ++i) {
        const double u = cap * i / 64.0;
        const double g = neg(u);
        if (g < best) {
          best = g;
          best_u = u;
        }
      }
      const double lo = std::max(0.0, best_u - cap / 64.0);
      const double hi = std::min(cap, best_u + cap / 64.0);
      return golden_minimize(neg, lo, hi, 1e-12);
    }
    if (inner_->derivative(cap * (1.0 - 1e-9)) <= v) return cap;
    double lo = 0.0;
    const double hi = grow_bracket([&](double u) { return inner_->derivative(u) >= v; }, lo,
                                   std::min(1.0, cap), cap);
    return bisect_increasing([&](double u) { return inner_->derivative(u); }, lo, hi, v);
  }

  std::shared_ptr<const OrliczImpl> inner_;
};

// Phi_s with Phi_s^{-1}(y) = [phi1^{-1}(y)]^{1-s} [phi2^{-1}(y)]^{s}.
// The inverse is the closed form; evaluation inverts it by bisection.
class IntermediateImpl final : public OrliczImpl {
 public:
  IntermediateImpl(std::shared_ptr<const OrliczImpl> phi1,
                   std::shared_ptr<const OrliczImpl> phi2, double s)
      : OrliczImpl(OrliczFamily::intermediate, 0.0),
        phi1_(std::move(phi1)),
        phi2_(std::move(phi2)),
        s_(s) {
    y_cap_ = std::min({eval_capped(*phi1_), eval_capped(*phi2_), kValueCeiling});
    set_cap(inverse_raw(y_cap_));
  }

  double eval(double u) const override {
    if (u == 0.0) return 0.0;
    // Bracket: Phi_s(u) lies between Phi1(u) and Phi2(u) because the
    // interpolated inverse is a geometric mean of the two inverses.
    const double y1 = value_or_cap(*phi1_, u);
    const double y2 = value_or_cap(*phi2_, u);
    double lo = std::min(y1, y2), hi = std::max(y1, y2);
    return bisect_increasing([&](double y) { return inverse_raw(y); }, lo, hi, u);
  }

  double inverse(double y) const override { return inverse_raw(y); }

  std::string describe() const override {
    std::ostringstream os;
    os << "intermediate(" << phi1_->describe() << ", " << phi2_->describe() << ", " << s_ << ")";
    return os.str();
  }

 private:
  static double eval_capped(const OrliczImpl& f) {
    const double v = f.eval(f.cap() * (1.0 - 1e-9));
    return std::isfinite(v) ? v : kValueCeiling;
  }

  static double value_or_cap(const OrliczImpl& f, double u) {
    if (u >= f.cap()) return eval_capped(f);
    return f.eval(u);
  }

  double inverse_raw(double y) const {
    if (y == 0.0) return 0.0;
    const double a = phi1_->inverse(std::min(y, eval_capped(*phi1_)));
    const double b = phi2_->inverse(std::min(y, eval_capped(*phi2_)));
    return std::exp((1.0 - s_) * std::log(a) + s_ * std::log(b));
  }

  std::shared_ptr<const OrliczImpl> phi1_, phi2_;
  double s_;
  double y_cap_ = 0.0;
};

}  // namespace

std::shared_ptr<const OrliczImpl> OrliczImpl::conjugate() const {
  return std::make_shared<ConjugateImpl>(shared_from_this());
}

}  // namespace detail

using detail::OrliczImpl;

OrliczFunction::OrliczFunction(std::shared_ptr<const detail::OrliczImpl> impl)
    : impl_(std::move(impl)) {}

OrliczFunction OrliczFunction::power(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("power: alpha must exceed 1");
  return OrliczFunction(std::make_shared<detail::PowerImpl>(alpha, 1.0));
}

OrliczFunction OrliczFunction::expm() {
  return OrliczFunction(std::make_shared<detail::ExpMImpl>());
}

OrliczFunction OrliczFunction::linlog() {
  return OrliczFunction(std::make_shared<detail::LinLogImpl>());
}

OrliczFunction OrliczFunction::tabulated(std::vector<double> u, std::vector<double> phi) {
  return OrliczFunction(std::make_shared<detail::TabulatedImpl>(std::move(u), std::move(phi)));
}

OrliczFunction OrliczFunction::intermediate(const OrliczFunction& phi1,
                                            const OrliczFunction& phi2, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("intermediate: s must lie in [0, 1]");
  if (s == 0.0) return phi1;
  if (s == 1.0) return phi2;
  const auto* p1 = dynamic_cast<const detail::PowerImpl*>(phi1.impl_.get());
  const auto* p2 = dynamic_cast<const detail::PowerImpl*>(phi2.impl_.get());
  if (p1 && p2) {
    // [ (y/c1)^{1/a1} ]^{1-s} [ (y/c2)^{1/a2} ]^{s} = C y^{1/g}
    const double inv_g = (1.0 - s) / p1->alpha() + s / p2->alpha();
    const double g = 1.0 / inv_g;
    const double log_c = -(1.0 - s) / p1->alpha() * std::log(p1->coeff()) -
                         s / p2->alpha() * std::log(p2->coeff());
    const double coeff = std::exp(-g * log_c);
    return OrliczFunction(std::make_shared<detail::PowerImpl>(g, coeff));
  }
  return OrliczFunction(std::make_shared<detail::IntermediateImpl>(phi1.impl_, phi2.impl_, s));
}

double OrliczFunction::value(double u) const {
  detail::check_domain(u, impl_->cap(), "OrliczFunction::value");
  if (u == 0.0) return 0.0;
  return impl_->eval(u);
}

double OrliczFunction::right_derivative(double t) const {
  detail::check_domain(t, impl_->cap(), "OrliczFunction::right_derivative");
  if (t == 0.0) return 0.0;
  return impl_->derivative(t);
}

double OrliczFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw std::invalid_argument("inverse: negative value");
  if (y == 0.0) return 0.0;
  const double y_max = impl_->eval(impl_->cap() * (1.0 - 1e-12));
  if (y > y_max * (1.0 + 1e-12))
    throw std::domain_error("inverse: value beyond Phi(domain_cap)");
  return impl_->inverse(y);
}

double OrliczFunction::domain_cap() const { return impl_->cap(); }

OrliczFunction OrliczFunction::conjugate() const {
  return OrliczFunction(impl_->conjugate());
}

OrliczFamily OrliczFunction::family() const { return impl_->family(); }

std::string OrliczFunction::describe() const { return impl_->describe(); }

Delta2Report delta2_check(const OrliczFunction& phi, const std::vector<double>& t_grid,
                          double threshold) {
  if (t_grid.empty()) throw std::invalid_argument("delta2_check: empty grid");
  Delta2Report report;
  report.threshold = threshold;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("delta2_check: grid points must be positive");
    if (2.0 * t > phi.domain_cap())
      throw std::domain_error("delta2_check: grid point beyond domain_cap / 2");
    report.k_max = std::max(report.k_max, phi.value(2.0 * t) / phi.value(t));
  }
  report.holds = report.k_max <= threshold;
  return report;
}

void validate_n_function(const OrliczFunction& phi, const std::vector<double>& grid) {
  if (phi.value(0.0) != 0.0) throw std::invalid_argument("validate: Phi(0) != 0");
  if (phi.right_derivative(0.0) != 0.0) throw std::invalid_argument("validate: p(0) != 0");
  double prev_u = 0.0, prev_v = 0.0, prev_p = 0.0;
  for (double u : grid) {
    if (!(u > prev_u)) throw std::invalid_argument("validate: grid must increase");
    const double v = phi.value(u);
    const double p = phi.right_derivative(u);
    if (!(v > prev_v)) throw std::invalid_argument("validate: Phi not strictly increasing");
    if (!(p > 0.0)) throw std::invalid_argument("validate: p(t) <= 0 for t > 0");
    if (p < prev_p * (1.0 - 1e-9) - 1e-12)
      throw std::invalid_argument("validate: right derivative decreases");
    const double mid = phi.value(0.5 * (prev_u + u));
    const double chord = 0.5 * (prev_v + v);
    if (mid > chord * (1.0 + 1e-12) + 1e-15)
      throw std::invalid_argument("validate: midpoint convexity fails");
    prev_u = u;
    prev_v = v;
    prev_p = p;
  }
}

}  // namespace nco
