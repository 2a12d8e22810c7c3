#include "ncorlicz/direct_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ncorlicz/rng.hpp"

namespace nco {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double component_norm(const TupleSpace& space, const Operator& op, int j) {
  const OrliczFunction& phi = space.component(j).phi;
  return space.gauge() == Gauge::luxemburg ? luxemburg_norm(op, phi).value
                                           : orlicz_norm(op, phi).value;
}

// (sum_j w_j x_j^p)^{1/p} with the max factored out for stability.
double weighted_power_mean(const std::vector<double>& w, const std::vector<double>& x, double p) {
  double m = 0.0;
  for (double v : x) m = std::max(m, v);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (size_t j = 0; j < x.size(); ++j) s += w[j] * std::pow(x[j] / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace

TupleSpace::TupleSpace(std::vector<TupleComponent> components, std::vector<double> weights,
                       double p, Gauge gauge)
    : components_(std::move(components)), weights_(std::move(weights)), p_(p), gauge_(gauge) {
  if (components_.empty()) throw std::invalid_argument("TupleSpace: no components");
  if (components_.size() != weights_.size())
    throw std::invalid_argument("TupleSpace: components/weights length mismatch");
  for (double w : weights_)
    if (!(w > 0.0)) throw std::invalid_argument("TupleSpace: weights must be positive");
  if (!(p_ >= 1.0))  // infinity passes this test
    throw std::invalid_argument("TupleSpace: exponent must be >= 1 or infinity");
}

double TupleSpace::conjugate_exponent(double p) {
  if (p == kInf) return 1.0;
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

TupleSpace TupleSpace::conjugate() const {
  std::vector<TupleComponent> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back({c.phi.conjugate(), c.algebra});
  return TupleSpace(std::move(comps), weights_, conjugate_exponent(p_), Gauge::orlicz);
}

TupleOperator::TupleOperator(std::vector<Operator> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("TupleOperator: no parts");
}

TupleOperator TupleOperator::operator+(const TupleOperator& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("TupleOperator: size mismatch");
  std::vector<Operator> parts;
  for (int j = 0; j < size(); ++j) parts.push_back(part(j) + rhs.part(j));
  return TupleOperator(std::move(parts));
}

TupleOperator TupleOperator::operator-(const TupleOperator& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("TupleOperator: size mismatch");
  std::vector<Operator> parts;
  for (int j = 0; j < size(); ++j) parts.push_back(part(j) - rhs.part(j));
  return TupleOperator(std::move(parts));
}

TupleOperator operator*(std::complex<double> c, const TupleOperator& a) {
  std::vector<Operator> parts;
  for (int j = 0; j < a.size(); ++j) parts.push_back(c * a.part(j));
  return TupleOperator(std::move(parts));
}

TupleOperator operator*(double c, const TupleOperator& a) {
  return std::complex<double>(c, 0.0) * a;
}

namespace {

void require_shapes(const TupleSpace& space, const TupleOperator& a, const char* who) {
  if (a.size() != space.size()) throw std::invalid_argument(std::string(who) + ": arity mismatch");
  for (int j = 0; j < space.size(); ++j)
    if (!(a.part(j).algebra() == space.component(j).algebra))
      throw std::invalid_argument(std::string(who) + ": component algebra mismatch");
}

}  // namespace

std::complex<double> nu_trace(const TupleSpace& space, const TupleOperator& a) {
  require_shapes(space, a, "nu_trace");
  std::complex<double> s = 0.0;
  for (int j = 0; j < space.size(); ++j) s += space.weight(j) * trace(a.part(j));
  return s;
}

double tuple_norm(const TupleSpace& space, const TupleOperator& a) {
  require_shapes(space, a, "tuple_norm");
  std::vector<double> norms(static_cast<size_t>(space.size()));
  for (int j = 0; j < space.size(); ++j) norms[static_cast<size_t>(j)] = component_norm(space, a.part(j), j);
  if (space.exponent() == kInf) {
    double m = 0.0;
    for (double v : norms) m = std::max(m, v);
    return m;  // the definition takes the unweighted max at p = infinity
  }
  return weighted_power_mean(space.weights(), norms, space.exponent());
}

double tuple_pairing(const TupleSpace& space, const TupleOperator& a, const TupleOperator& b) {
  require_shapes(space, a, "tuple_pairing");
  require_shapes(space, b, "tuple_pairing");
  double s = 0.0;
  for (int j = 0; j < space.size(); ++j)
    s += space.weight(j) * std::abs(trace(a.part(j) * b.part(j)));
  return s;
}

double tuple_modular(const TupleSpace& space, const TupleOperator& a) {
  require_shapes(space, a, "tuple_modular");
  double s = 0.0;
  for (int j = 0; j < space.size(); ++j)
    s += space.weight(j) * modular(space.component(j).phi, a.part(j));
  return s;
}

Lemma21Result lemma21_check(const TupleSpace& space, const TupleOperator& a,
                            const TupleOperator& b) {
  if (space.exponent() == kInf)
    throw std::invalid_argument("lemma21_check: p = infinity is not covered (1 <= p < infinity)");
  if (space.gauge() != Gauge::luxemburg)
    throw std::invalid_argument("lemma21_check: A-side gauge must be luxemburg");
  require_shapes(space, a, "lemma21_check");

  const TupleSpace conj = space.conjugate();
  require_shapes(conj, b, "lemma21_check");

  const double p = space.exponent();
  const double q = TupleSpace::conjugate_exponent(p);

  Lemma21Result r;
  r.norm_a = tuple_norm(space, a);
  r.norm_b = tuple_norm(conj, b);
  r.modular_sum = tuple_modular(space, a);

  double weight_sum = 0.0;
  std::vector<double> comp_norms(static_cast<size_t>(space.size()));
  for (int j = 0; j < space.size(); ++j) {
    weight_sum += space.weight(j);
    comp_norms[static_cast<size_t>(j)] =
        luxemburg_norm(a.part(j), space.component(j).phi).value;
  }
  r.delta1 = q == kInf ? 1.0 : std::pow(weight_sum, 1.0 / q);

  std::vector<double> wp(static_cast<size_t>(space.size()));
  for (int j = 0; j < space.size(); ++j)
    wp[static_cast<size_t>(j)] = std::pow(space.weight(j), p);
  r.delta2 = weighted_power_mean(wp, comp_norms, p);  // [sum lambda_j^p ||A_j||^p]^{1/p}

  if (r.norm_a <= 1.0) {
    r.part = 1;
    r.part_slack = r.norm_a * r.delta1 - r.modular_sum;
  } else {
    r.part = 2;
    r.part_slack = r.modular_sum - r.delta2;
  }
  r.holder_slack = r.norm_a * r.norm_b - tuple_pairing(space, a, b);
  return r;
}

DualNormEstimate dual_norm_estimate(const TupleSpace& space, const TupleOperator& a, int budget,
                                    std::uint64_t seed) {
  if (space.exponent() == std::numeric_limits<double>::infinity())
    throw std::invalid_argument("dual_norm_estimate: requires 1 <= p < infinity");
  if (space.gauge() != Gauge::luxemburg)
    throw std::invalid_argument("dual_norm_estimate: A-side gauge must be luxemburg");
  require_shapes(space, a, "dual_norm_estimate");

  DualNormEstimate est;
  est.norm = tuple_norm(space, a);
  if (est.norm == 0.0) return est;

  const TupleSpace conj = space.conjugate();
  const int n = space.size();
  const double p = space.exponent();
  const double q = TupleSpace::conjugate_exponent(p);

  auto try_candidate = [&](const TupleOperator& b_raw) {
    const double nb = tuple_norm(conj, b_raw);
    if (nb <= 0.0) return;
    est.lower = std::max(est.lower, tuple_pairing(space, a, b_raw) / nb);
  };

  // Random feasible directions.
  const int random_draws = std::max(1, budget);
  for (int t = 0; t < random_draws; ++t) {
    std::vector<Operator> parts;
    for (int j = 0; j < n; ++j)
      parts.push_back(random_operator(space.component(j).algebra, OperatorKind::general, 1.0,
                                      derive_seed(seed, static_cast<std::uint64_t>(t) * 97 + j)));
    try_candidate(TupleOperator(std::move(parts)));
  }

  // Constructive witness: per component, B_j = p_j(|A_j| / ||A_j||) U_j*
  // attains the scalar Young equality; the component budgets beta_j follow
  // the Hoelder equality pattern beta_j = a_j^{p-1} (all 1 for q = inf).
  std::vector<Operator> unit_parts;
  std::vector<double> comp_norms(static_cast<size_t>(n), 0.0);
  bool have_witness = true;
  for (int j = 0; j < n; ++j) {
    const Operator& aj = a.part(j);
    const OrliczFunction& phi = space.component(j).phi;
    const double nj = luxemburg_norm(aj, phi).value;
    comp_norms[static_cast<size_t>(j)] = nj;
    if (nj <= 0.0) {
      unit_parts.push_back(Operator::zero(space.component(j).algebra));
      continue;
    }
    const PolarDecomposition pd = polar(aj);
    const double psi_cap = conj.component(j).phi.domain_cap();
    const Operator d = functional_calculus(
        [&](double x) {
          const double arg = std::min(x / nj, phi.domain_cap());
          return std::min(phi.right_derivative(arg), psi_cap);
        },
        pd.positive);
    const Operator bj = d * adjoint(pd.isometry);
    const double bn = orlicz_norm(bj, conj.component(j).phi).value;
    if (bn <= 0.0) {
      have_witness = false;
      unit_parts.push_back(Operator::zero(space.component(j).algebra));
      continue;
    }
    unit_parts.push_back((1.0 / bn) * bj);
  }

  auto assemble = [&](const std::vector<double>& beta) {
    std::vector<Operator> parts;
    for (int j = 0; j < n; ++j) parts.push_back(beta[static_cast<size_t>(j)] * unit_parts[static_cast<size_t>(j)]);
    return TupleOperator(std::move(parts));
  };

  std::vector<double> beta(static_cast<size_t>(n), 1.0);
  if (q != std::numeric_limits<double>::infinity()) {
    double scale = 0.0;
    for (int j = 0; j < n; ++j)
      scale += space.weight(j) * std::pow(comp_norms[static_cast<size_t>(j)], p);
    const double denom = std::pow(scale, 1.0 / q);
    for (int j = 0; j < n; ++j)
      beta[static_cast<size_t>(j)] =
          denom > 0.0 ? std::pow(comp_norms[static_cast<size_t>(j)], p - 1.0) / denom : 0.0;
  }
  if (have_witness) try_candidate(assemble(beta));

  // Coordinate-ascent polish of the budget allocation.
  Rng rng(derive_seed(seed, 0xACCE57ULL));
  double step = 0.25;
  std::vector<double> best_beta = beta;
  double best = est.lower;
  for (int it = 0; it < 60; ++it) {
    std::vector<double> cand = best_beta;
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    cand[static_cast<size_t>(j)] =
        std::max(0.0, cand[static_cast<size_t>(j)] * (1.0 + step * rng.normal()));
    const TupleOperator b = assemble(cand);
    const double nb = tuple_norm(conj, b);
    if (nb <= 0.0) continue;
    const double v = tuple_pairing(space, a, b) / nb;
    if (v > best) {
      best = v;
      best_beta = cand;
    } else {
      step *= 0.85;
    }
  }
  est.lower = std::max(est.lower, best);
  return est;
}

TupleOperator random_tuple(const TupleSpace& space, OperatorKind kind, double scale,
                           std::uint64_t seed) {
  std::vector<Operator> parts;
  for (int j = 0; j < space.size(); ++j)
    parts.push_back(random_operator(space.component(j).algebra, kind, scale,
                                    derive_seed(seed, 0xD17EC7ULL + static_cast<std::uint64_t>(j))));
  return TupleOperator(std::move(parts));
}

}  // namespace nco
