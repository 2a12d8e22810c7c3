#include "ncorlicz/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "ncorlicz/direct_sum.hpp"
#include "ncorlicz/geometry.hpp"
#include "ncorlicz/interpolation.hpp"
#include "ncorlicz/json_io.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/rng.hpp"
#include "ncorlicz/sweep.hpp"

namespace nco {

namespace {

using nlohmann::json;

double default_or(double tol, double fallback) { return std::isnan(tol) ? fallback : tol; }

std::vector<std::pair<std::string, OrliczFunction>> catalog() {
  return {{"power(1.5)", OrliczFunction::power(1.5)},
          {"power(2)", OrliczFunction::power(2.0)},
          {"power(3)", OrliczFunction::power(3.0)},
          {"expm", OrliczFunction::expm()},
          {"linlog", OrliczFunction::linlog()}};
}

// Relative slack: positive means the inequality rhs >= lhs holds.
double rel_slack(double rhs, double lhs) { return (rhs - lhs) / std::max(1.0, std::abs(rhs)); }

// ---------------------------------------------------------------- scalar ---

VerificationReport suite_scalar(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-9);
  SweepOptions opt{.trials = 0, .seed = cfg.seed, .tolerance = tol, .threads = cfg.threads};
  SweepStats stats;

  long index = 0;
  auto absorb = [&](double slack, json witness) {
    TrialOutcome out;
    out.slack = slack;
    out.witness = std::move(witness);
    stats.absorb(index++, out, tol);
  };

  // Young's inequality u v <= Phi(u) + Psi(v) on a grid, per catalog family.
  for (const auto& [name, phi] : catalog()) {
    const OrliczFunction psi = phi.conjugate();
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double u = 5.0 * i / 20.0;
        const double v = std::min(5.0 * j / 20.0, psi.domain_cap());
        absorb(phi.value(u) + psi.value(v) - u * v,
               json{{"check", "young"}, {"phi", name}, {"u", u}, {"v", v}});
      }
    }
  }

  // Conjugate round-trip Phi** = Phi within 1e-6 relative on a grid.
  for (const auto& [name, phi] : catalog()) {
    const OrliczFunction back = phi.conjugate().conjugate();
    for (int i = 1; i <= 12; ++i) {
      const double u = 0.25 * i;
      const double err = std::abs(back.value(u) - phi.value(u)) / std::max(1e-30, phi.value(u));
      absorb(1e-6 - err, json{{"check", "conjugate_round_trip"}, {"phi", name}, {"u", u}});
    }
  }

  // Delta_2: Power(p) has ratio exactly 2^p; expm grows without bound.
  for (double p : {1.5, 2.0, 3.0}) {
    const auto rep = delta2_check(OrliczFunction::power(p), {0.25, 0.5, 1.0, 2.0, 4.0, 8.0});
    const double expect = std::pow(2.0, p);
    absorb(1e-12 - std::abs(rep.k_max - expect) / expect,
           json{{"check", "delta2_power"}, {"p", p}, {"k_max", rep.k_max}});
    absorb(rep.holds ? 1.0 : -1.0, json{{"check", "delta2_power_holds"}, {"p", p}});
  }
  {
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(0.5 * i);  // up to t = 20
    const auto rep = delta2_check(OrliczFunction::expm(), grid);
    absorb(rep.k_max / rep.threshold - 1.0,  // must exceed the threshold
           json{{"check", "delta2_expm_unbounded"}, {"k_max", rep.k_max}});
    absorb(rep.holds ? -1.0 : 1.0, json{{"check", "delta2_expm_flagged"}});
  }

  stats.trials = index;
  stats.finalize(5);
  opt.trials = index;
  auto report = make_report("scalar", opt, stats, json{{"grid", "catalog"}});
  return report;
}

// ----------------------------------------------------------------- norms ---

VerificationReport suite_norms(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-9);
  json params{{"phis", {"power(1.5)", "power(3)", "expm"}},
              {"gauges", {"luxemburg", "orlicz"}}};

  SweepStats total;
  long base_index = 0;
  SweepOptions opt{.trials = 0, .seed = cfg.seed, .tolerance = tol, .threads = cfg.threads};

  auto merge = [&](const SweepStats& s) {
    total.trials += s.trials;
    total.violations += s.violations;
    total.min_slack = std::min(total.min_slack, s.min_slack);
    total.max_violation = std::max(total.max_violation, s.max_violation);
    for (const auto& [i, w] : s.witness_entries)
      total.witness_entries.emplace_back(base_index + i, w);
    base_index += s.trials;
  };

  // Luxemburg/L^p agreement over dims 2..4 and p in {1.5, 2, 3}.
  {
    SweepOptions o = opt;
    o.trials = std::min<long>(cfg.trials, 600);
    o.seed = derive_seed(cfg.seed, 0x101);
    merge(run_sweep(o, [&](std::uint64_t ts, long i) {
      const double p = (i % 3 == 0) ? 1.5 : (i % 3 == 1 ? 2.0 : 3.0);
      const int dim = 2 + static_cast<int>((i / 3) % 3);
      const Operator a =
          random_operator(TracialAlgebra::full_matrix(dim), OperatorKind::general, 1.0, ts);
      const double lux = luxemburg_norm(a, OrliczFunction::power(p)).value;
      const double ref = lp_norm(a, p).value;
      TrialOutcome out;
      const double err = std::abs(lux - ref) / std::max(1e-30, ref);
      out.slack = tol - err;
      if (out.slack < -tol)
        out.witness = json{{"check", "lux_lp_agreement"}, {"p", p}, {"lux", lux}, {"lp", ref}};
      return out;
    }));
  }

  // Norm axioms for both gauges and three catalog functions.
  const std::vector<std::pair<std::string, OrliczFunction>> phis = {
      {"power(1.5)", OrliczFunction::power(1.5)},
      {"power(3)", OrliczFunction::power(3.0)},
      {"expm", OrliczFunction::expm()}};
  for (int g = 0; g < 2; ++g) {
    const bool lux_gauge = g == 0;
    for (size_t f = 0; f < phis.size(); ++f) {
      SweepOptions o = opt;
      o.trials = cfg.trials;
      o.seed = derive_seed(cfg.seed, 0x200 + 16 * f + static_cast<std::uint64_t>(g));
      const OrliczFunction phi = phis[f].second;
      auto norm_of = [phi, lux_gauge](const Operator& x) {
        return lux_gauge ? luxemburg_norm(x, phi).value : orlicz_norm(x, phi).value;
      };
      const TracialAlgebra alg = TracialAlgebra::full_matrix(cfg.dim);
      merge(run_sweep(o, [&, phi, lux_gauge, alg, norm_of](std::uint64_t ts, long) {
        Rng rng(derive_seed(ts, 9));
        const Operator a = random_operator(alg, OperatorKind::general,
                                           std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 1));
        const Operator b = random_operator(alg, OperatorKind::general,
                                           std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 2));
        const std::complex<double> c(rng.normal(), rng.normal());
        const double na = norm_of(a), nb = norm_of(b);
        // homogeneity
        const double h_err =
            std::abs(norm_of(c * a) - std::abs(c) * na) / std::max(1.0, std::abs(c) * na);
        // triangle
        const double t_slack = rel_slack(na + nb, norm_of(a + b));
        // unitary invariance
        const Operator u = random_operator(alg, OperatorKind::unitary, 1.0, derive_seed(ts, 3));
        const Operator v = random_operator(alg, OperatorKind::unitary, 1.0, derive_seed(ts, 4));
        const double u_err = std::abs(norm_of(u * a * v) - na) / std::max(1.0, na);
        TrialOutcome out;
        out.slack = std::min({-h_err, t_slack, -u_err});
        if (out.slack < -tol)
          out.witness = json{{"check", "norm_axioms"},
                             {"gauge", lux_gauge ? "luxemburg" : "orlicz"},
                             {"phi", phis[f].first},
                             {"homogeneity_err", h_err},
                             {"triangle_slack", t_slack},
                             {"unitary_err", u_err}};
        return out;
      }));
    }
  }

  // Orlicz-norm cross-validation: Amemiya against the dual-search lower
  // bound, plus the two-sided Luxemburg bound.
  {
    SweepOptions o = opt;
    o.trials = std::min<long>(cfg.trials, 100);
    o.seed = derive_seed(cfg.seed, 0x300);
    merge(run_sweep(o, [&](std::uint64_t ts, long i) {
      const OrliczFunction phi = phis[static_cast<size_t>(i) % phis.size()].second;
      const Operator a =
          random_operator(TracialAlgebra::full_matrix(2), OperatorKind::general, 1.0, ts);
      const double am = orlicz_norm(a, phi).value;
      DualSearchOptions ds;
      ds.seed = derive_seed(ts, 5);
      const double lower = orlicz_norm_dual_search(a, phi, ds).lower;
      TrialOutcome out;
      // amemiya must sit in [lower, 1.05 lower]
      out.slack = std::min((am - lower) / std::max(1e-30, lower),
                           (1.05 * lower - am) / std::max(1e-30, lower));
      if (out.slack < -tol)
        out.witness = json{{"check", "amemiya_vs_dual"}, {"amemiya", am}, {"lower", lower}};
      return out;
    }));
  }
  {
    SweepOptions o = opt;
    o.trials = cfg.trials;
    o.seed = derive_seed(cfg.seed, 0x301);
    merge(run_sweep(o, [&](std::uint64_t ts, long i) {
      const OrliczFunction phi = phis[static_cast<size_t>(i) % phis.size()].second;
      Rng rng(derive_seed(ts, 9));
      const Operator a = random_operator(TracialAlgebra::full_matrix(cfg.dim),
                                         OperatorKind::general,
                                         std::exp(rng.uniform(-1.5, 0.7)), ts);
      const double lux = luxemburg_norm(a, phi).value;
      const double orl = orlicz_norm(a, phi).value;
      TrialOutcome out;
      out.slack = std::min(rel_slack(orl, lux), rel_slack(2.0 * lux + 1e-8, orl));
      if (out.slack < -tol)
        out.witness = json{{"check", "two_sided_bound"}, {"lux", lux}, {"orl", orl}};
      return out;
    }));
  }

  total.finalize(5);
  opt.trials = total.trials;
  return make_report("norms", opt, total, params);
}

// ---------------------------------------------------------------- holder ---

VerificationReport suite_holder(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-9);
  SweepOptions opt{.trials = cfg.trials, .seed = cfg.seed, .tolerance = tol,
                   .threads = cfg.threads};
  const auto cat = catalog();
  const TracialAlgebra alg = TracialAlgebra::full_matrix(cfg.dim);
  SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long i) {
    const OrliczFunction& phi = cat[static_cast<size_t>(i) % cat.size()].second;
    const OrliczFunction psi = phi.conjugate();
    Rng rng(derive_seed(ts, 9));
    const Operator a = random_operator(alg, OperatorKind::general,
                                       std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 1));
    const Operator b = random_operator(alg, OperatorKind::general,
                                       std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 2));
    const double rhs = luxemburg_norm(a, phi).value * orlicz_norm(b, psi).value;
    const double lhs = std::real(trace(nco::abs(a * b)));
    TrialOutcome out;
    out.slack = rel_slack(rhs, lhs);
    if (out.slack < -tol)
      out.witness = json{{"check", "holder"},
                         {"phi", cat[static_cast<size_t>(i) % cat.size()].first},
                         {"lhs", lhs},
                         {"rhs", rhs},
                         {"a", operator_to_json(a)},
                         {"b", operator_to_json(b)}};
    return out;
  });
  return make_report("holder", opt, stats,
                     json{{"dim", cfg.dim}, {"pairing", "tau(|AB|) <= ||A||_(Phi) ||B||_Psi"}});
}

// --------------------------------------------------------------- lemma21 ---

TupleSpace lemma21_space(int dim) {
  std::vector<TupleComponent> comps;
  comps.push_back({OrliczFunction::power(2.0), TracialAlgebra::full_matrix(dim)});
  comps.push_back({OrliczFunction::expm(), TracialAlgebra::full_matrix(dim)});
  return TupleSpace(std::move(comps), {0.5, 2.0}, 2.0, Gauge::luxemburg);
}

// Rescales a tuple so its norm lands at `target`.
TupleOperator scaled_to_norm(const TupleSpace& space, const TupleOperator& raw, double target) {
  const double n = tuple_norm(space, raw);
  return (target / n) * raw;
}

VerificationReport suite_lemma21(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-9);
  SweepOptions opt{.trials = cfg.trials, .seed = cfg.seed, .tolerance = tol,
                   .threads = cfg.threads};
  const TupleSpace space = lemma21_space(cfg.dim);
  const TupleSpace conj = space.conjugate();
  SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long) {
    Rng rng(derive_seed(ts, 9));
    // Norms straddle 1 so both modular bounds get exercised.
    const TupleOperator a =
        scaled_to_norm(space, random_tuple(space, OperatorKind::general, 1.0, derive_seed(ts, 1)),
                       std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
    const TupleOperator b =
        scaled_to_norm(conj, random_tuple(conj, OperatorKind::general, 1.0, derive_seed(ts, 2)),
                       std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
    const Lemma21Result r = lemma21_check(space, a, b);
    TrialOutcome out;
    const double part_scale =
        r.part == 1 ? std::max(1.0, r.norm_a * r.delta1) : std::max(1.0, r.delta2);
    out.slack = std::min(r.part_slack / part_scale,
                         r.holder_slack / std::max(1.0, r.norm_a * r.norm_b));
    if (out.slack < -tol) {
      out.witness = json{{"check", "lemma21"},
                         {"part", r.part},
                         {"norm_a", r.norm_a},
                         {"norm_b", r.norm_b},
                         {"modular_sum", r.modular_sum},
                         {"delta1", r.delta1},
                         {"delta2", r.delta2},
                         {"part_slack", r.part_slack},
                         {"holder_slack", r.holder_slack}};
      json parts_a = json::array(), parts_b = json::array();
      for (int j = 0; j < a.size(); ++j) parts_a.push_back(operator_to_json(a.part(j)));
      for (int j = 0; j < b.size(); ++j) parts_b.push_back(operator_to_json(b.part(j)));
      out.witness["a"] = parts_a;
      out.witness["b"] = parts_b;
    }
    return out;
  });
  return make_report("lemma21", opt, stats,
                     json{{"n", 2},
                          {"p", 2.0},
                          {"weights", {0.5, 2.0}},
                          {"phis", {"power(2)", "expm"}},
                          {"dim", cfg.dim}});
}

// --------------------------------------------------------------- duality ---

VerificationReport suite_duality(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-8);
  json params{{"n", 2}, {"p", 2.0}, {"weights", {0.5, 2.0}}, {"phis", {"power(2)", "expm"}}};
  const TupleSpace space = lemma21_space(cfg.dim);
  const TupleSpace conj = space.conjugate();

  SweepStats total;
  long base_index = 0;
  SweepOptions opt{.trials = 0, .seed = cfg.seed, .tolerance = tol, .threads = cfg.threads};
  auto merge = [&](const SweepStats& s) {
    total.trials += s.trials;
    total.violations += s.violations;
    total.min_slack = std::min(total.min_slack, s.min_slack);
    total.max_violation = std::max(total.max_violation, s.max_violation);
    for (const auto& [i, w] : s.witness_entries)
      total.witness_entries.emplace_back(base_index + i, w);
    base_index += s.trials;
  };

  // One-sided sandwich: nu(AB) <= ||A|| for every feasible B.
  {
    SweepOptions o = opt;
    o.trials = cfg.trials * 5;
    o.seed = derive_seed(cfg.seed, 0x501);
    merge(run_sweep(o, [&](std::uint64_t ts, long) {
      Rng rng(derive_seed(ts, 9));
      const TupleOperator a = scaled_to_norm(
          space, random_tuple(space, OperatorKind::general, 1.0, derive_seed(ts, 1)),
          std::exp(rng.uniform(std::log(0.25), std::log(4.0))));
      TupleOperator b = random_tuple(conj, OperatorKind::general, 1.0, derive_seed(ts, 2));
      const double nb = tuple_norm(conj, b);
      TrialOutcome out;
      if (nb <= 0.0) return out;
      b = (1.0 / nb) * b;
      const double pairing = tuple_pairing(space, a, b);
      const double norm = tuple_norm(space, a);
      out.slack = (norm - pairing) / std::max(1.0, norm);
      if (out.slack < -tol)
        out.witness = json{{"check", "duality_one_sided"}, {"pairing", pairing}, {"norm", norm}};
      return out;
    }));
  }

  // Attainment: the ascent reaches >= 0.95 of the norm on catalog cases.
  {
    SweepOptions o = opt;
    o.trials = std::max<long>(1, cfg.trials / 20);
    o.seed = derive_seed(cfg.seed, 0x502);
    merge(run_sweep(o, [&](std::uint64_t ts, long i) {
      const double p = (i % 3 == 0) ? 1.5 : (i % 3 == 1 ? 2.0 : 3.0);
      std::vector<TupleComponent> comps;
      comps.push_back({OrliczFunction::power(2.0), TracialAlgebra::full_matrix(cfg.dim)});
      comps.push_back({i % 2 == 0 ? OrliczFunction::expm() : OrliczFunction::power(1.5),
                       TracialAlgebra::full_matrix(cfg.dim)});
      const TupleSpace sp(std::move(comps), {0.5, 2.0}, p, Gauge::luxemburg);
      const TupleOperator a = random_tuple(sp, OperatorKind::general, 1.0, derive_seed(ts, 1));
      const DualNormEstimate est = dual_norm_estimate(sp, a, 40, derive_seed(ts, 2));
      TrialOutcome out;
      if (est.norm <= 0.0) return out;
      const double ratio = est.lower / est.norm;
      out.slack = std::min(ratio - 0.95, (1.0 + 1e-8 - ratio));
      if (out.slack < -tol)
        out.witness = json{{"check", "duality_attainment"}, {"ratio", ratio}, {"p", p}};
      return out;
    }));
  }

  total.finalize(5);
  opt.trials = total.trials;
  return make_report("duality", opt, total, params);
}

// -------------------------------------------------------------- clarkson ---

VerificationReport suite_clarkson(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-8);
  SweepOptions opt{.trials = cfg.trials * 3, .seed = cfg.seed, .tolerance = tol,
                   .threads = cfg.threads};
  const TracialAlgebra alg = TracialAlgebra::full_matrix(cfg.dim);
  const OrliczFunction phi = OrliczFunction::power(1.5);
  const std::vector<double> s_values = {0.25, 0.5, 1.0};
  SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long i) {
    const double s = s_values[static_cast<size_t>(i) % s_values.size()];
    Rng rng(derive_seed(ts, 9));
    const double scale = std::exp(rng.uniform(std::log(0.2), std::log(2.0)));
    const Operator a = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 1));
    const Operator b = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 2));
    TrialOutcome out;
    out.slack = clarkson_check(a, b, phi, s);
    if (out.slack < -tol)
      out.witness = json{{"check", "clarkson"},
                         {"s", s},
                         {"a", operator_to_json(a)},
                         {"b", operator_to_json(b)}};
    return out;
  });
  return make_report("clarkson", opt, stats,
                     json{{"phi", "power(1.5)"}, {"s_values", s_values}, {"dim", cfg.dim}});
}

VerificationReport suite_lp_clarkson(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-8);
  SweepOptions opt{.trials = cfg.trials * 3, .seed = cfg.seed, .tolerance = tol,
                   .threads = cfg.threads};
  const TracialAlgebra alg = TracialAlgebra::full_matrix(cfg.dim);
  const std::vector<double> p_values = {1.5, 2.0, 3.0};
  SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long i) {
    const double p = p_values[static_cast<size_t>(i) % p_values.size()];
    Rng rng(derive_seed(ts, 9));
    const double scale = std::exp(rng.uniform(std::log(0.2), std::log(2.0)));
    const Operator a = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 1));
    const Operator b = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 2));
    const double slack = lp_clarkson_check(a, b, p);
    TrialOutcome out;
    // p = 2 is the parallelogram identity: slack must vanish.
    out.slack = p == 2.0 ? tol - std::abs(slack) : slack;
    if (out.slack < -tol)
      out.witness = json{{"check", "lp_clarkson"},
                         {"p", p},
                         {"slack", slack},
                         {"a", operator_to_json(a)},
                         {"b", operator_to_json(b)}};
    return out;
  });
  return make_report("lp-clarkson", opt, stats,
                     json{{"p_values", p_values}, {"dim", cfg.dim}});
}

// --------------------------------------------------------- interpolation ---

VerificationReport suite_interpolation(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-8);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(cfg.dim);
  const OrliczFunction p2 = OrliczFunction::power(2.0);

  RieszThorinConfig rt;
  rt.phi1 = {p2, p2};
  rt.phi2 = {p2, p2};
  rt.q1 = {p2, p2};
  rt.q2 = {p2, p2};
  rt.algebras = {alg, alg};
  rt.weights = {1.0, 1.0};
  rt.schedule = InterpolationSchedule{1.0, 2.0, std::numeric_limits<double>::infinity(), 2.0};
  rt.k1 = 1.0;
  rt.k2 = std::sqrt(2.0);
  rt.s_values = {0.25, 0.5, 0.75, 1.0};
  rt.trials = cfg.trials / 2;
  rt.seed = cfg.seed;
  rt.tolerance = tol;
  rt.threads = cfg.threads;

  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = riesz_thorin_check(clarkson_operator(), rt);
  report.check = "interpolation";

  // Endpoint constants: K2 = sqrt(2) is attained at (r2, t2) = (2, 2); K1 = 1
  // at (1, inf). Estimates are lower bounds.
  std::vector<TupleComponent> comps = {{p2, alg}, {p2, alg}};
  const TupleSpace dom1(comps, rt.weights, 1.0, Gauge::luxemburg);
  const TupleSpace cod1(comps, rt.weights, std::numeric_limits<double>::infinity(),
                        Gauge::luxemburg);
  const TupleSpace dom2(comps, rt.weights, 2.0, Gauge::luxemburg);
  const TupleSpace cod2(comps, rt.weights, 2.0, Gauge::luxemburg);
  const double k1_est = endpoint_constant_estimate(clarkson_operator(), dom1, cod1, 200,
                                                   derive_seed(cfg.seed, 0x601));
  const double k2_est = endpoint_constant_estimate(clarkson_operator(), dom2, cod2, 200,
                                                   derive_seed(cfg.seed, 0x602));
  report.params["k1_estimate"] = k1_est;
  report.params["k2_estimate"] = k2_est;

  auto check_estimate = [&](double est, double analytic, double margin, const char* name) {
    report.trials += 1;
    const double slack = std::min(est - (analytic - margin), analytic + 1e-6 - est);
    report.min_slack = std::min(report.min_slack, slack);
    if (slack < -tol) {
      report.violations += 1;
      report.max_violation = std::max(report.max_violation, -slack);
      report.witnesses.push_back(json{{"check", name}, {"estimate", est}});
    }
  };
  check_estimate(k2_est, std::sqrt(2.0), 1e-3, "endpoint_k2");
  check_estimate(k1_est, 1.0, 1e-2, "endpoint_k1");

  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

// ---------------------------------------------------------------- moduli ---

VerificationReport suite_moduli(const SuiteConfig& cfg) {
  const double tol = default_or(cfg.tol, 1e-7);
  VerificationReport report;
  report.check = "moduli";
  report.seed = cfg.seed;
  report.tolerance = tol;
  report.params["phi"] = "power(1.5)";
  const OrliczFunction phi = OrliczFunction::power(1.5);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(2);
  const long samples = std::max<long>(200, cfg.trials);
  report.params["samples_per_point"] = samples;

  json points = json::array();
  const std::vector<double> s_values = {0.5, 1.0};
  const std::vector<double> eps_values = {0.5, 1.0, std::sqrt(2.0)};
  const std::vector<double> t_values = {0.1, 0.5, 1.0};

  auto note = [&](double slack, json detail) {
    report.trials += 1;
    report.min_slack = std::min(report.min_slack, slack);
    if (slack < -tol) {
      report.violations += 1;
      report.max_violation = std::max(report.max_violation, -slack);
      if (report.witnesses.size() < 5) report.witnesses.push_back(detail);
    }
    points.push_back(std::move(detail));
  };

  int point = 0;
  for (double s : s_values) {
    for (double eps : eps_values) {
      const auto est = convexity_modulus_estimate(
          phi, s, eps, alg, samples, derive_seed(cfg.seed, 0x700 + point++), cfg.threads);
      json detail{{"kind", "convexity"}, {"s", s},     {"eps", eps},
                  {"estimate", est.estimate}, {"bound", est.bound},
                  {"constraint_residual", est.constraint_residual}};
      note(est.estimate - est.bound, detail);
      if (s == 1.0) {
        // L^2 anchor: delta(eps) = 1 - sqrt(1 - eps^2/4) exactly.
        const double exact = 1.0 - std::sqrt(1.0 - eps * eps / 4.0);
        note(1e-4 - std::abs(est.estimate - exact),
             json{{"kind", "convexity_l2_anchor"}, {"eps", eps}, {"estimate", est.estimate},
                  {"exact", exact}});
      }
    }
    for (double t : t_values) {
      const auto est = smoothness_modulus_estimate(
          phi, s, t, alg, samples, derive_seed(cfg.seed, 0x740 + point++), cfg.threads);
      json detail{{"kind", "smoothness"}, {"s", s},     {"t", t},
                  {"estimate", est.estimate}, {"bound", est.bound},
                  {"constraint_residual", est.constraint_residual}};
      note(est.bound - est.estimate, detail);
      if (s == 1.0) {
        // L^2 anchor: rho(t) = sqrt(1 + t^2) - 1 exactly.
        const double exact = std::sqrt(1.0 + t * t) - 1.0;
        note(1e-4 - std::abs(est.estimate - exact),
             json{{"kind", "smoothness_l2_anchor"}, {"t", t}, {"estimate", est.estimate},
                  {"exact", exact}});
      }
    }
  }
  report.params["points"] = points;
  return report;
}

using SuiteFn = std::function<VerificationReport(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"scalar", suite_scalar},       {"norms", suite_norms},
      {"holder", suite_holder},       {"lemma21", suite_lemma21},
      {"duality", suite_duality},     {"clarkson", suite_clarkson},
      {"lp-clarkson", suite_lp_clarkson}, {"interpolation", suite_interpolation},
      {"moduli", suite_moduli},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<VerificationReport> run_suites(const std::string& name, const SuiteConfig& config) {
  std::vector<VerificationReport> out;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = fn(config);
    if (r.runtime_ms == 0)
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    out.push_back(std::move(r));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace nco
