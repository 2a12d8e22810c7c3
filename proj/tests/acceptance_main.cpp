// Acceptance suite: one line per criterion, PASS/FAIL with diagnostics.
// Each criterion pins its own tolerances and runtime budget; the process
// exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ncorlicz/direct_sum.hpp"
#include "ncorlicz/geometry.hpp"
#include "ncorlicz/interpolation.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/rng.hpp"
#include "ncorlicz/sweep.hpp"

using namespace nco;

namespace {

constexpr std::uint64_t kSeed = 20240817ULL;
const double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string label;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// --- 1: Luxemburg/L^p agreement ------------------------------------------

Outcome criterion_lux_lp() {
  double worst = 0.0;
  long count = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    for (int i = 0; i < 200; ++i) {
      const int dim = 2 + i % 3;
      const Operator a = random_operator(TracialAlgebra::full_matrix(dim),
                                         OperatorKind::general, 1.0,
                                         derive_seed(kSeed, 1000 + 10 * i + static_cast<int>(p * 4)));
      const double lux = luxemburg_norm(a, OrliczFunction::power(p)).value;
      const double ref = lp_norm(a, p).value;
      worst = std::max(worst, std::abs(lux - ref) / ref);
      ++count;
    }
  }
  Outcome out;
  out.pass = worst <= 1e-9;
  out.detail = "max relative deviation " + fmt(worst) + " over " + std::to_string(count) +
               " operators (tolerance 1e-9)";
  return out;
}

// --- 2: norm axioms --------------------------------------------------------

Outcome criterion_axioms() {
  const std::vector<std::pair<std::string, OrliczFunction>> phis = {
      {"power(1.5)", OrliczFunction::power(1.5)},
      {"power(3)", OrliczFunction::power(3.0)},
      {"expm", OrliczFunction::expm()}};
  const TracialAlgebra alg = TracialAlgebra::full_matrix(3);
  long violations = 0;
  double min_slack = kInf;
  for (int g = 0; g < 2; ++g) {
    const bool lux = g == 0;
    for (size_t f = 0; f < phis.size(); ++f) {
      const OrliczFunction phi = phis[f].second;
      auto norm_of = [&](const Operator& x) {
        return lux ? luxemburg_norm(x, phi).value : orlicz_norm(x, phi).value;
      };
      SweepOptions opt{.trials = 1000,
                       .seed = derive_seed(kSeed, 2000 + 8 * f + static_cast<std::uint64_t>(g)),
                       .tolerance = 1e-9,
                       .threads = 0};
      const SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long) {
        Rng rng(derive_seed(ts, 9));
        const Operator a = random_operator(alg, OperatorKind::general,
                                           std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 1));
        const Operator b = random_operator(alg, OperatorKind::general,
                                           std::exp(rng.uniform(-1.5, 0.7)), derive_seed(ts, 2));
        const std::complex<double> c(rng.normal(), rng.normal());
        const double na = norm_of(a), nb = norm_of(b);
        const double h_err =
            std::abs(norm_of(c * a) - std::abs(c) * na) / std::max(1.0, std::abs(c) * na);
        const double t_slack = (na + nb - norm_of(a + b)) / std::max(1.0, na + nb);
        const Operator u = random_operator(alg, OperatorKind::unitary, 1.0, derive_seed(ts, 3));
        const Operator v = random_operator(alg, OperatorKind::unitary, 1.0, derive_seed(ts, 4));
        const double u_err = std::abs(norm_of(u * a * v) - na) / std::max(1.0, na);
        TrialOutcome res;
        res.slack = std::min({-h_err, t_slack, -u_err});
        return res;
      });
      violations += stats.violations;
      min_slack = std::min(min_slack, stats.min_slack);
    }
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "6000 trials (2 gauges x 3 functions x 1000), violations " +
               std::to_string(violations) + ", min slack " + fmt(min_slack);
  return out;
}

// --- 3: Orlicz-norm cross-validation --------------------------------------

Outcome criterion_orlicz_cross() {
  const std::vector<OrliczFunction> phis = {OrliczFunction::power(1.5), OrliczFunction::power(3.0),
                                            OrliczFunction::expm()};
  double worst_ratio_low = kInf, worst_ratio_high = 0.0;
  bool pass = true;
  for (int i = 0; i < 100; ++i) {
    const OrliczFunction& phi = phis[static_cast<size_t>(i) % phis.size()];
    const Operator a = random_operator(TracialAlgebra::full_matrix(2), OperatorKind::general,
                                       1.0, derive_seed(kSeed, 3000 + i));
    const double am = orlicz_norm(a, phi).value;
    DualSearchOptions opts;
    opts.seed = derive_seed(kSeed, 3200 + i);
    const double lower = orlicz_norm_dual_search(a, phi, opts).lower;
    const double ratio = am / lower;
    worst_ratio_low = std::min(worst_ratio_low, ratio);
    worst_ratio_high = std::max(worst_ratio_high, ratio);
    if (ratio < 1.0 - 1e-9 || ratio > 1.05) pass = false;
  }
  long band_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const OrliczFunction& phi = phis[static_cast<size_t>(i) % phis.size()];
    Rng rng(derive_seed(kSeed, 3500 + i));
    const Operator a = random_operator(TracialAlgebra::full_matrix(3), OperatorKind::general,
                                       std::exp(rng.uniform(-1.5, 0.7)),
                                       derive_seed(kSeed, 3900 + i));
    const double lux = luxemburg_norm(a, phi).value;
    const double orl = orlicz_norm(a, phi).value;
    if (!(lux <= orl * (1.0 + 1e-9) && orl <= 2.0 * lux + 1e-8)) ++band_violations;
  }
  Outcome out;
  out.pass = pass && band_violations == 0;
  out.detail = "amemiya/lower in [" + fmt(worst_ratio_low) + ", " + fmt(worst_ratio_high) +
               "] over 100 cases; two-sided band violations " + std::to_string(band_violations) +
               "/1000";
  return out;
}

// --- 4: weighted modular bounds (lemma21) ----------------------------------

Outcome criterion_lemma21() {
  std::vector<TupleComponent> comps;
  comps.push_back({OrliczFunction::power(2.0), TracialAlgebra::full_matrix(3)});
  comps.push_back({OrliczFunction::expm(), TracialAlgebra::full_matrix(3)});
  const TupleSpace space(comps, {0.5, 2.0}, 2.0, Gauge::luxemburg);
  const TupleSpace conj = space.conjugate();

  SweepOptions opt{.trials = 1000, .seed = derive_seed(kSeed, 4000), .tolerance = 1e-9,
                   .threads = 0};
  long part1 = 0, part2 = 0;  // tallied in a deterministic serial recount below
  const SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long) {
    Rng rng(derive_seed(ts, 9));
    TupleOperator a = random_tuple(space, OperatorKind::general, 1.0, derive_seed(ts, 1));
    a = (std::exp(rng.uniform(std::log(0.25), std::log(4.0))) / tuple_norm(space, a)) * a;
    TupleOperator b = random_tuple(conj, OperatorKind::general, 1.0, derive_seed(ts, 2));
    b = (std::exp(rng.uniform(std::log(0.25), std::log(4.0))) / tuple_norm(conj, b)) * b;
    const Lemma21Result r = lemma21_check(space, a, b);
    TrialOutcome out;
    const double part_scale =
        r.part == 1 ? std::max(1.0, r.norm_a * r.delta1) : std::max(1.0, r.delta2);
    out.slack = std::min(r.part_slack / part_scale,
                         r.holder_slack / std::max(1.0, r.norm_a * r.norm_b));
    if (out.slack < -1e-9)
      out.witness = nlohmann::json{{"part", r.part},
                                   {"norm_a", r.norm_a},
                                   {"modular_sum", r.modular_sum},
                                   {"delta2", r.delta2},
                                   {"part_slack", r.part_slack}};
    return out;
  });
  for (long i = 0; i < 64; ++i) {
    const std::uint64_t ts = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(derive_seed(ts, 9));
    TupleOperator a = random_tuple(space, OperatorKind::general, 1.0, derive_seed(ts, 1));
    a = (std::exp(rng.uniform(std::log(0.25), std::log(4.0))) / tuple_norm(space, a)) * a;
    (tuple_norm(space, a) <= 1.0 ? part1 : part2) += 1;
  }
  Outcome out;
  out.pass = stats.violations == 0;
  std::ostringstream os;
  os << "1000 trials straddling the unit sphere (sampled split ~" << part1 << ":" << part2
     << " of 64), violations " << stats.violations << ", min slack " << fmt(stats.min_slack);
  if (!stats.witness_entries.empty()) {
    const auto& w = stats.witness_entries.front().second;
    os << "; first witness: part " << w.at("part") << ", ||A|| = "
       << fmt(w.at("norm_a").get<double>())
       << ", modular sum " << fmt(w.at("modular_sum").get<double>()) << " vs delta2 "
       << fmt(w.at("delta2").get<double>())
       << " (the weighted modular lower bound admits counterexamples when a weight exceeds 1)";
  }
  out.detail = os.str();
  return out;
}

// --- 5: duality -------------------------------------------------------------

Outcome criterion_duality() {
  std::vector<TupleComponent> comps;
  comps.push_back({OrliczFunction::power(2.0), TracialAlgebra::full_matrix(3)});
  comps.push_back({OrliczFunction::expm(), TracialAlgebra::full_matrix(3)});
  const TupleSpace space(comps, {0.5, 2.0}, 2.0, Gauge::luxemburg);
  const TupleSpace conj = space.conjugate();

  SweepOptions opt{.trials = 5000, .seed = derive_seed(kSeed, 5000), .tolerance = 1e-8,
                   .threads = 0};
  const SweepStats one_sided = run_sweep(opt, [&](std::uint64_t ts, long) {
    Rng rng(derive_seed(ts, 9));
    TupleOperator a = random_tuple(space, OperatorKind::general, 1.0, derive_seed(ts, 1));
    a = (std::exp(rng.uniform(std::log(0.25), std::log(4.0))) / tuple_norm(space, a)) * a;
    TupleOperator b = random_tuple(conj, OperatorKind::general, 1.0, derive_seed(ts, 2));
    TrialOutcome out;
    const double nb = tuple_norm(conj, b);
    if (nb <= 0.0) return out;
    b = (1.0 / nb) * b;
    out.slack = tuple_norm(space, a) + 1e-8 - tuple_pairing(space, a, b);
    return out;
  });

  double worst_ratio = kInf;
  for (int i = 0; i < 50; ++i) {
    const double p = (i % 3 == 0) ? 1.5 : (i % 3 == 1 ? 2.0 : 3.0);
    std::vector<TupleComponent> cs;
    cs.push_back({OrliczFunction::power(2.0), TracialAlgebra::full_matrix(2 + i % 3)});
    cs.push_back({i % 2 == 0 ? OrliczFunction::expm() : OrliczFunction::power(1.5),
                  TracialAlgebra::full_matrix(2 + (i + 1) % 3)});
    const TupleSpace sp(cs, {0.5, 2.0}, p, Gauge::luxemburg);
    const TupleOperator a = random_tuple(sp, OperatorKind::general, 1.0, derive_seed(kSeed, 5100 + i));
    const DualNormEstimate est = dual_norm_estimate(sp, a, 40, derive_seed(kSeed, 5200 + i));
    if (est.norm > 0.0) worst_ratio = std::min(worst_ratio, est.lower / est.norm);
  }
  Outcome out;
  out.pass = one_sided.violations == 0 && worst_ratio >= 0.95;
  out.detail = "one-sided violations " + std::to_string(one_sided.violations) +
               "/5000, worst attainment ratio " + fmt(worst_ratio) + " over 50 cases";
  return out;
}

// --- 6: interpolation --------------------------------------------------------

Outcome criterion_interpolation() {
  const auto p2 = OrliczFunction::power(2.0);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(3);
  RieszThorinConfig cfg;
  cfg.phi1 = {p2, p2};
  cfg.phi2 = {p2, p2};
  cfg.q1 = {p2, p2};
  cfg.q2 = {p2, p2};
  cfg.algebras = {alg, alg};
  cfg.weights = {1.0, 1.0};
  cfg.schedule = InterpolationSchedule{1.0, 2.0, kInf, 2.0};
  cfg.k1 = 1.0;
  cfg.k2 = std::sqrt(2.0);
  cfg.s_values = {0.25, 0.5, 0.75, 1.0};
  cfg.trials = 500;
  cfg.seed = derive_seed(kSeed, 6000);
  cfg.tolerance = 1e-8;
  const VerificationReport rep = riesz_thorin_check(clarkson_operator(), cfg);

  std::vector<TupleComponent> comps = {{p2, alg}, {p2, alg}};
  const TupleSpace dom2(comps, {1.0, 1.0}, 2.0, Gauge::luxemburg);
  const double k2_est = endpoint_constant_estimate(clarkson_operator(), dom2, dom2, 200,
                                                   derive_seed(kSeed, 6100));
  Outcome out;
  const bool k2_ok = std::abs(k2_est - std::sqrt(2.0)) <= 1e-3;
  out.pass = rep.violations == 0 && rep.min_slack >= -1e-8 && k2_ok;
  out.detail = "2000 trials over s in {0.25,0.5,0.75,1}, violations " +
               std::to_string(rep.violations) + ", min slack " + fmt(rep.min_slack) +
               ", K2 estimate " + fmt(k2_est);
  return out;
}

// --- 7: Clarkson inequalities ------------------------------------------------

Outcome criterion_clarkson() {
  const TracialAlgebra alg = TracialAlgebra::full_matrix(3);
  const OrliczFunction phi = OrliczFunction::power(1.5);
  long violations = 0;
  double min_slack = kInf, worst_p2 = 0.0;
  for (double s : {0.25, 0.5, 1.0}) {
    SweepOptions opt{.trials = 1000,
                     .seed = derive_seed(kSeed, 7000 + static_cast<std::uint64_t>(s * 100)),
                     .tolerance = 1e-8,
                     .threads = 0};
    const SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long) {
      Rng rng(derive_seed(ts, 9));
      const double scale = std::exp(rng.uniform(std::log(0.2), std::log(2.0)));
      const Operator a = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 1));
      const Operator b = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 2));
      TrialOutcome out;
      out.slack = clarkson_check(a, b, phi, s);
      return out;
    });
    violations += stats.violations;
    min_slack = std::min(min_slack, stats.min_slack);
  }
  for (double p : {1.5, 2.0, 3.0}) {
    SweepOptions opt{.trials = 1000,
                     .seed = derive_seed(kSeed, 7500 + static_cast<std::uint64_t>(p * 100)),
                     .tolerance = 1e-8,
                     .threads = 0};
    const SweepStats stats = run_sweep(opt, [&](std::uint64_t ts, long) {
      Rng rng(derive_seed(ts, 9));
      const double scale = std::exp(rng.uniform(std::log(0.2), std::log(2.0)));
      const Operator a = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 1));
      const Operator b = random_operator(alg, OperatorKind::general, scale, derive_seed(ts, 2));
      TrialOutcome out;
      const double slack = lp_clarkson_check(a, b, p);
      out.slack = p == 2.0 ? 1e-8 - std::abs(slack) : slack;
      return out;
    });
    violations += stats.violations;
    if (p == 2.0)
      worst_p2 = 1e-8 - stats.min_slack;  // largest |slack| seen at p = 2
    else
      min_slack = std::min(min_slack, stats.min_slack);
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "6000 pairs, violations " + std::to_string(violations) + ", min slack " +
               fmt(min_slack) + ", worst |p=2 slack| " + fmt(worst_p2);
  return out;
}

// --- 8: moduli ---------------------------------------------------------------

Outcome criterion_moduli() {
  const OrliczFunction phi = OrliczFunction::power(1.5);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(2);
  const long samples = 2000;
  bool pass = true;
  std::ostringstream os;
  int point = 0;
  for (double s : {0.5, 1.0}) {
    for (double eps : {0.5, 1.0, std::sqrt(2.0)}) {
      const auto est = convexity_modulus_estimate(phi, s, eps, alg, samples,
                                                  derive_seed(kSeed, 8000 + point++));
      const bool ok = est.estimate >= est.bound - 1e-7 && est.constraint_residual <= 1e-6;
      bool anchor_ok = true;
      if (s == 1.0) {
        const double exact = 1.0 - std::sqrt(1.0 - eps * eps / 4.0);
        anchor_ok = std::abs(est.estimate - exact) <= 1e-4;
      }
      if (!(ok && anchor_ok)) {
        pass = false;
        os << " [conv s=" << s << " eps=" << fmt(eps) << " est=" << fmt(est.estimate)
           << " bound=" << fmt(est.bound) << "]";
      }
    }
    for (double t : {0.1, 0.5, 1.0}) {
      const auto est = smoothness_modulus_estimate(phi, s, t, alg, samples,
                                                   derive_seed(kSeed, 8100 + point++));
      const bool ok = est.estimate <= est.bound + 1e-7;
      bool anchor_ok = true;
      if (s == 1.0) {
        const double exact = std::sqrt(1.0 + t * t) - 1.0;
        anchor_ok = std::abs(est.estimate - exact) <= 1e-4;
      }
      if (!(ok && anchor_ok)) {
        pass = false;
        os << " [smooth s=" << s << " t=" << fmt(t) << " est=" << fmt(est.estimate)
           << " bound=" << fmt(est.bound) << "]";
      }
    }
  }
  Outcome out;
  out.pass = pass;
  out.detail = pass ? "12 parameter points x 2000 samples, all one-sided bounds and L2 anchors hold"
                    : "failing points:" + os.str();
  return out;
}

// --- 9: scalar oracles --------------------------------------------------------

Outcome criterion_scalar() {
  long young_violations = 0;
  double worst_round_trip = 0.0;
  const std::vector<OrliczFunction> phis = {OrliczFunction::power(1.5), OrliczFunction::power(2.0),
                                            OrliczFunction::power(3.0), OrliczFunction::expm(),
                                            OrliczFunction::linlog()};
  for (const auto& phi : phis) {
    const OrliczFunction psi = phi.conjugate();
    for (int i = 0; i <= 30; ++i)
      for (int j = 0; j <= 30; ++j) {
        const double u = 6.0 * i / 30.0;
        const double v = std::min(6.0 * j / 30.0, psi.domain_cap());
        if (phi.value(u) + psi.value(v) - u * v < -1e-9) ++young_violations;
      }
    const OrliczFunction back = psi.conjugate();
    for (double u : {0.3, 0.9, 1.7, 4.0})
      worst_round_trip = std::max(
          worst_round_trip, std::abs(back.value(u) - phi.value(u)) / std::max(1e-30, phi.value(u)));
  }
  bool delta2_ok = true;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto rep = delta2_check(OrliczFunction::power(p), {0.25, 1.0, 4.0, 16.0});
    if (std::abs(rep.k_max - std::pow(2.0, p)) > 1e-12 * std::pow(2.0, p)) delta2_ok = false;
  }
  std::vector<double> grid;
  for (int i = 1; i <= 40; ++i) grid.push_back(0.5 * i);
  const auto expm_rep = delta2_check(OrliczFunction::expm(), grid);
  const bool expm_flagged = !expm_rep.holds && expm_rep.k_max > 1000.0;

  Outcome out;
  out.pass = young_violations == 0 && worst_round_trip <= 1e-6 && delta2_ok && expm_flagged;
  out.detail = "young violations " + std::to_string(young_violations) + ", worst round trip " +
               fmt(worst_round_trip) + ", power ratios exact, expm K_max " + fmt(expm_rep.k_max) +
               " flagged non-Delta2";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria = {
      {1, "Luxemburg/L^p agreement", 5.0, criterion_lux_lp},
      {2, "norm axioms (homogeneity, triangle, unitary invariance)", 60.0, criterion_axioms},
      {3, "Orlicz norm cross-validation (Amemiya vs dual search)", 60.0, criterion_orlicz_cross},
      {4, "weighted modular and Hoelder bounds (n-tuple, lambda = (0.5, 2))", 60.0,
       criterion_lemma21},
      {5, "dual representation of the weighted norm", 120.0, criterion_duality},
      {6, "interpolation bound with Clarkson endpoints", 120.0, criterion_interpolation},
      {7, "Clarkson inequalities (Orlicz and L^p forms)", 60.0, criterion_clarkson},
      {8, "moduli of convexity and smoothness", 300.0, criterion_moduli},
      {9, "scalar-layer oracles (Young, conjugacy, Delta2)", 5.0, criterion_scalar},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!filter.empty() && filter != std::to_string(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count() /
        1000.0;
    const bool in_budget = secs < c.limit_seconds;
    const bool pass = out.pass && in_budget;
    std::printf("%s criterion %d: %s [%.1fs / %.0fs] %s\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), secs, c.limit_seconds, out.detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
