#include "ncorlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ncorlicz/errors.hpp"
#include "ncorlicz/rng.hpp"
#include "ncorlicz/search.hpp"

namespace nco {

namespace {

double spectrum_modular(const OrliczFunction& phi, const WeightedSpectrum& spec,
                        double inv_scale) {
  double s = 0.0;
  for (size_t i = 0; i < spec.values.size(); ++i)
    s += spec.weights[i] * phi.value(spec.values[i] * inv_scale);
  return s;
}

}  // namespace

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::bisection: return "bisection";
    case NormMethod::amemiya: return "amemiya";
    case NormMethod::dual_search: return "dual_search";
    case NormMethod::closed_form: return "closed_form";
  }
  return "?";
}

NormResult luxemburg_norm(const Operator& a, const OrliczFunction& phi) {
  const WeightedSpectrum spec = weighted_singular_values(a);
  if (spec.max_value == 0.0) return {0.0, NormMethod::bisection, 0.0};

  const double cap = phi.domain_cap();
  const double lambda_floor = spec.max_value / cap;  // below this Phi is undefined
  auto rho = [&](double lambda) { return spectrum_modular(phi, spec, 1.0 / lambda); };

  // Start where all arguments are <= min(1, cap); rho decreases in lambda.
  double lambda0 = spec.max_value / std::min(1.0, cap * (1.0 - 1e-12));
  double lo, hi;
  if (rho(lambda0) > 1.0) {
    lo = lambda0;
    hi = grow_bracket([&](double l) { return rho(l) <= 1.0; }, lo, lambda0,
                      std::numeric_limits<double>::max() / 4.0);
  } else {
    hi = lambda0;
    lo = lambda0;
    bool bracketed = false;
    for (int i = 0; i < 2000; ++i) {
      const double next = lo / 2.0;
      if (next < lambda_floor) break;
      lo = next;
      if (rho(lo) > 1.0) {
        bracketed = true;
        break;
      }
      hi = lo;
    }
    if (!bracketed) {
      if (lambda_floor > 0.0 && rho(std::max(lo, lambda_floor)) <= 1.0)
        throw std::domain_error(
            "luxemburg_norm: modular stays <= 1 down to the domain cap; "
            "use an Orlicz function with a larger domain_cap");
      lo = std::max(lo / 2.0, lambda_floor);
    }
  }

  // rho(lo) > 1 >= rho(hi); bisect on the decreasing map.
  const double rel_tol = 1e-10;
  for (int i = 0; i < 200 && hi - lo > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return {hi, NormMethod::bisection, (hi - lo) / hi};
}

NormResult orlicz_norm(const Operator& a, const OrliczFunction& phi) {
  const WeightedSpectrum spec = weighted_singular_values(a);
  if (spec.max_value == 0.0) return {0.0, NormMethod::amemiya, 0.0};

  const double cap = phi.domain_cap();
  // In t = 1/k the objective t (1 + rho(A/t)) is t + perspective of the
  // modular, hence convex; golden section is justified.
  auto objective = [&](double t) { return t * (1.0 + spectrum_modular(phi, spec, 1.0 / t)); };

  const double t_floor = spec.max_value / (cap * (1.0 - 1e-12));
  const double t_lo = std::max(t_floor, 1e-6 * spec.max_value);
  const double t_hi = 1e6 * spec.max_value;

  const int grid = 241;
  double best_t = t_lo, best = std::numeric_limits<double>::infinity();
  const double log_lo = std::log(t_lo), log_hi = std::log(t_hi);
  for (int i = 0; i < grid; ++i) {
    const double t = std::exp(log_lo + (log_hi - log_lo) * i / (grid - 1));
    const double v = objective(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  const double step = (log_hi - log_lo) / (grid - 1);
  const double ref_lo = std::max(t_lo, best_t * std::exp(-step));
  const double ref_hi = std::min(t_hi, best_t * std::exp(step));
  const double t_star = golden_minimize(objective, ref_lo, ref_hi, 1e-9);
  return {objective(t_star), NormMethod::amemiya, 1e-9};
}

NormResult lp_norm(const Operator& a, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const WeightedSpectrum spec = weighted_singular_values(a);
  if (spec.max_value == 0.0) return {0.0, NormMethod::closed_form, 0.0};
  // (sum w (v/m)^p)^{1/p} * m keeps large p stable.
  const double m = spec.max_value;
  double s = 0.0;
  for (size_t i = 0; i < spec.values.size(); ++i)
    s += spec.weights[i] * std::pow(spec.values[i] / m, p);
  return {m * std::pow(s, 1.0 / p), NormMethod::closed_form, 0.0};
}

namespace {

// Scale d onto the constraint boundary sum_i w Psi(c d_i) = 1; returns c.
double feasibility_scale(const OrliczFunction& psi, const std::vector<double>& w,
                         const std::vector<double>& d) {
  double d_max = 0.0;
  for (double x : d) d_max = std::max(d_max, x);
  if (d_max == 0.0) return 0.0;
  auto g = [&](double c) {
    double s = 0.0;
    for (size_t i = 0; i < d.size(); ++i) s += w[i] * psi.value(std::min(c * d[i], psi.domain_cap()));
    return s;
  };
  const double c_cap = psi.domain_cap() / d_max * (1.0 - 1e-12);
  if (g(c_cap) < 1.0) return c_cap;  // constraint cannot be saturated below the cap
  double lo = 0.0;
  const double hi =
      grow_bracket([&](double c) { return g(c) >= 1.0; }, lo, std::min(1.0, c_cap), c_cap);
  return bisect_increasing(g, lo, hi, 1.0, 1e-12);
}

}  // namespace

DualSearchResult orlicz_norm_dual_search(const Operator& a, const OrliczFunction& phi,
                                         const DualSearchOptions& opts) {
  DualSearchResult out;
  const WeightedSpectrum spec = weighted_singular_values(a);
  if (spec.max_value == 0.0) return out;
  const OrliczFunction psi = phi.conjugate();
  const size_t n = spec.values.size();
  const std::vector<double>& w = spec.weights;
  const std::vector<double>& sigma = spec.values;

  auto pairing = [&](const std::vector<double>& d) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += w[i] * sigma[i] * d[i];
    return s;
  };
  auto record_diagonal = [&](const std::vector<double>& d) {
    // Diagonal candidates give tau(AB) = tau(|AB|) = sum w sigma d >= 0.
    const double v = pairing(d);
    out.lower = std::max(out.lower, v);
    out.abs_trace_objective = std::max(out.abs_trace_objective, v);
    out.trace_abs_objective = std::max(out.trace_abs_objective, v);
  };

  // Stationarity candidate: d_i = p(sigma_i / mu) with mu chosen so the
  // constraint is active. h(mu) decreases in mu.
  {
    auto h = [&](double mu) {
      double s = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const double arg = std::min(sigma[i] / mu, phi.domain_cap());
        s += w[i] * psi.value(std::min(phi.right_derivative(arg), psi.domain_cap()));
      }
      return s;
    };
    double mu_lo = spec.max_value / phi.domain_cap() * (1.0 + 1e-9);
    double mu_hi = spec.max_value;
    for (int i = 0; i < 200 && h(mu_hi) > 1.0; ++i) mu_hi *= 2.0;
    if (h(mu_lo) >= 1.0 && h(mu_hi) <= 1.0) {
      // bisect the decreasing h to the active constraint
      double lo = mu_lo, hi = mu_hi;
      for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) > 1.0)
          lo = mid;
        else
          hi = mid;
      }
      const double mu = hi;
      std::vector<double> d(n);
      for (size_t i = 0; i < n; ++i)
        d[i] = phi.right_derivative(std::min(sigma[i] / mu, phi.domain_cap()));
      const double c = feasibility_scale(psi, w, d);
      for (auto& x : d) x *= c;
      record_diagonal(d);
    }
  }

  // Random-restart projected ascent on the diagonal parametrization.
  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r) + 1));
    std::vector<double> d(n);
    for (auto& x : d) x = std::exp(rng.normal());
    double c = feasibility_scale(psi, w, d);
    for (auto& x : d) x *= c;
    double value = pairing(d);
    double step = 0.5;
    for (int it = 0; it < opts.ascent_steps; ++it) {
      std::vector<double> cand(n);
      for (size_t i = 0; i < n; ++i) cand[i] = std::max(0.0, d[i] + step * w[i] * sigma[i]);
      c = feasibility_scale(psi, w, cand);
      for (auto& x : cand) x *= c;
      const double v = pairing(cand);
      if (v > value) {
        value = v;
        d = std::move(cand);
      } else {
        step *= 0.6;
        if (step < 1e-8) break;
      }
    }
    record_diagonal(d);
  }

  // Random full-matrix candidates (exercise the non-aligned directions and
  // the |tau(AB)| vs tau(|AB|) distinction).
  for (int r = 0; r < std::max(1, opts.restarts / 2); ++r) {
    const Operator b_raw = random_operator(
        a.algebra(), OperatorKind::general, 1.0,
        derive_seed(opts.seed ^ 0x5bd1e995u, static_cast<std::uint64_t>(r)));
    const WeightedSpectrum bs = weighted_singular_values(b_raw);
    if (bs.max_value == 0.0) continue;
    // scale onto tau(Psi(|cB|)) = 1
    auto g = [&](double c) {
      double s = 0.0;
      for (size_t i = 0; i < bs.values.size(); ++i)
        s += bs.weights[i] * psi.value(std::min(c * bs.values[i], psi.domain_cap()));
      return s;
    };
    const double c_cap = psi.domain_cap() / bs.max_value * (1.0 - 1e-12);
    double c;
    if (g(c_cap) < 1.0) {
      c = c_cap;  // constraint cannot be saturated below the conjugate cap
    } else {
      double lo = 0.0;
      const double hi = grow_bracket([&](double x) { return g(x) >= 1.0; }, lo,
                                     std::min(1.0, c_cap), c_cap);
      c = bisect_increasing(g, lo, hi, 1.0, 1e-12);
    }
    const Operator b = c * b_raw;
    const double abs_tr = std::abs(trace(a * b));
    const double tr_abs = std::real(trace(nco::abs(a * b)));
    out.abs_trace_objective = std::max(out.abs_trace_objective, abs_tr);
    out.trace_abs_objective = std::max(out.trace_abs_objective, tr_abs);
    out.lower = std::max(out.lower, tr_abs);
  }

  return out;
}

}  // namespace nco
