#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace nco {

// Seeded scalar generator. The Gaussian transform is hand-rolled (Box-Muller
// over raw 53-bit uniforms) so that streams are reproducible across standard
// library implementations; std::normal_distribution is not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Complex Gaussian with E|z|^2 = sigma^2.
  std::complex<double> complex_normal(double sigma) {
    const double s = sigma / std::sqrt(2.0);
    return {s * normal(), s * normal()};
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Per-trial seed derivation: trials are independent streams keyed by
// (master seed, trial index), so parallel sweeps are order-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master ^ (index + 0x9E3779B97F4A7C15ULL + (index << 17));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace nco
