#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncorlicz/orlicz_function.hpp"
#include "oracles.hpp"

using nco::OrliczFunction;

namespace {
const double kE = std::exp(1.0);

std::vector<double> test_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 40; ++i) g.push_back(0.15 * i);
  return g;
}
}  // namespace

TEST_CASE("catalog evaluation") {
  CHECK(OrliczFunction::power(2.0)(3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(OrliczFunction::power(2.0)(0.0) == 0.0);
  CHECK(OrliczFunction::expm()(0.0) == 0.0);
  CHECK(OrliczFunction::linlog()(0.0) == 0.0);
  CHECK(OrliczFunction::expm()(1.0) == doctest::Approx(kE - 2.0).epsilon(1e-14));
  CHECK(OrliczFunction::linlog()(1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("right derivative") {
  CHECK(OrliczFunction::power(2.0).right_derivative(3.0) == doctest::Approx(6.0));
  CHECK(OrliczFunction::power(1.5).right_derivative(0.0) == 0.0);
  CHECK(OrliczFunction::expm().right_derivative(0.0) == 0.0);
  CHECK(OrliczFunction::linlog().right_derivative(1.0) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("inverse") {
  CHECK(OrliczFunction::power(2.0).inverse(9.0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(OrliczFunction::expm().inverse(0.0) == 0.0);
  CHECK(OrliczFunction::expm().inverse(kE - 2.0) == doctest::Approx(1.0).epsilon(1e-10));
  // round trip on every family
  for (const auto& phi : {OrliczFunction::power(1.5), OrliczFunction::power(3.0),
                          OrliczFunction::expm(), OrliczFunction::linlog()}) {
    for (double y : {0.1, 0.5, 1.0, 3.0, 10.0})
      CHECK(phi.value(phi.inverse(y)) == doctest::Approx(y).epsilon(1e-10));
  }
}

TEST_CASE("domain and input errors") {
  const auto phi = OrliczFunction::expm();
  CHECK_THROWS_AS(phi.value(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(phi.value(2.0 * phi.domain_cap()), std::domain_error);
  CHECK_THROWS_AS(phi.inverse(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(OrliczFunction::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(OrliczFunction::power(0.5), std::invalid_argument);
  CHECK_THROWS_AS(
      OrliczFunction::intermediate(OrliczFunction::power(2.0), OrliczFunction::expm(), 1.5),
      std::invalid_argument);
}

TEST_CASE("conjugate closed forms") {
  const auto phi2 = OrliczFunction::power(2.0);
  const auto psi = phi2.conjugate();
  CHECK(psi.value(2.0) == doctest::Approx(1.0).epsilon(1e-12));  // v^2/4
  CHECK(psi.value(0.0) == 0.0);
  const auto psi_expm = OrliczFunction::expm().conjugate();
  CHECK(psi_expm.value(1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("conjugate against the Legendre grid oracle") {
  for (const auto& phi : {OrliczFunction::power(1.5), OrliczFunction::power(3.0),
                          OrliczFunction::expm(), OrliczFunction::linlog()}) {
    const auto psi = phi.conjugate();
    for (double v : {0.25, 0.7, 1.0, 2.0, 4.5}) {
      // the maximizer is p^{-1}(v); for linlog that is e^v - 1, so the grid
      // must reach past e^{4.5}
      const double expect = oracles::legendre_grid(phi, v, 200.0);
      CHECK(psi.value(v) == doctest::Approx(expect).epsilon(1e-6));
    }
  }
}

TEST_CASE("conjugate round trip") {
  for (const auto& phi : {OrliczFunction::power(1.5), OrliczFunction::power(2.0),
                          OrliczFunction::power(3.0), OrliczFunction::expm(),
                          OrliczFunction::linlog()}) {
    const auto back = phi.conjugate().conjugate();
    for (double u : {0.3, 0.9, 1.7, 4.0})
      CHECK(back.value(u) == doctest::Approx(phi.value(u)).epsilon(1e-6));
  }
}

TEST_CASE("tabulated family") {
  std::vector<double> u, v;
  for (int i = 0; i <= 60; ++i) {
    u.push_back(0.1 * i);
    v.push_back(std::pow(0.1 * i, 2.0));
  }
  const auto tab = OrliczFunction::tabulated(u, v);
  CHECK(tab.value(1.23) == doctest::Approx(1.23 * 1.23).epsilon(1e-4));
  CHECK(tab.inverse(4.0) == doctest::Approx(2.0).epsilon(1e-6));
  // conjugate through the golden-section path
  const auto psi = tab.conjugate();
  CHECK(psi.value(2.0) == doctest::Approx(1.0).epsilon(1e-4));
  // double conjugation recovers the sampled function on interior points
  const auto back = psi.conjugate();
  CHECK(back.value(1.5) == doctest::Approx(2.25).epsilon(1e-3));

  CHECK_THROWS_AS(OrliczFunction::tabulated({0.0, 1.0, 2.0}, {0.0, 1.5, 2.0}),
                  std::invalid_argument);  // concave data
  CHECK_THROWS_AS(OrliczFunction::tabulated({0.0, 1.0, 0.5}, {0.0, 1.0, 2.0}),
                  std::invalid_argument);  // non-monotone grid
  CHECK_THROWS_AS(OrliczFunction::tabulated({0.5, 1.0, 2.0}, {0.1, 1.0, 4.0}),
                  std::invalid_argument);  // must start at (0, 0)
}

TEST_CASE("intermediate function") {
  const auto p15 = OrliczFunction::power(1.5);
  const auto p2 = OrliczFunction::power(2.0);

  SUBCASE("endpoints are exact") {
    CHECK(OrliczFunction::intermediate(p15, p2, 0.0).same_impl(p15));
    CHECK(OrliczFunction::intermediate(p15, p2, 1.0).same_impl(p2));
  }
  SUBCASE("power pairs collapse to the closed form") {
    // exponent (1-s)/1.5 + s/2 with s = 0.4 gives u^{5/3}
    const auto mid = OrliczFunction::intermediate(p15, p2, 0.4);
    for (double x : {0.4, 1.0, 2.5}) CHECK(mid.value(x) == doctest::Approx(std::pow(x, 5.0 / 3.0)).epsilon(1e-12));
  }
  SUBCASE("schedule hitting a target power") {
    // alpha = 1.5, target p = 1.8: s = 2(p - alpha)/(p(2 - alpha)) = 2/3
    const double alpha = 1.5, p = 1.8;
    const double s = 2.0 * (p - alpha) / (p * (2.0 - alpha));
    CHECK(s == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    const auto mid = OrliczFunction::intermediate(OrliczFunction::power(alpha), p2, s);
    for (double x : {0.5, 1.3, 3.0}) CHECK(mid.value(x) == doctest::Approx(std::pow(x, p)).epsilon(1e-12));
  }
  SUBCASE("identical endpoints reproduce the function through the generic path") {
    const auto phi = OrliczFunction::expm();
    const auto other = OrliczFunction::expm();  // distinct instance, generic path
    const auto mid = OrliczFunction::intermediate(phi, other, 0.5);
    for (double x : {0.3, 1.0, 2.4})
      CHECK(mid.value(x) == doctest::Approx(phi.value(x)).epsilon(1e-10));
  }
  SUBCASE("inverse is the geometric interpolation") {
    const auto mid = OrliczFunction::intermediate(OrliczFunction::expm(), p2, 0.3);
    for (double y : {0.2, 1.0, 5.0}) {
      const double expect = std::pow(OrliczFunction::expm().inverse(y), 0.7) *
                            std::pow(p2.inverse(y), 0.3);
      CHECK(mid.inverse(y) == doctest::Approx(expect).epsilon(1e-10));
      CHECK(mid.value(mid.inverse(y)) == doctest::Approx(y).epsilon(1e-10));
    }
  }
}

TEST_CASE("delta2 diagnostics") {
  using nco::delta2_check;
  SUBCASE("powers have ratio exactly 2^p") {
    const auto rep = delta2_check(OrliczFunction::power(2.0), {1.0, 2.0, 4.0});
    CHECK(rep.k_max == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(rep.holds);
    for (double p : {1.5, 3.0}) {
      const auto r = delta2_check(OrliczFunction::power(p), {0.3, 1.0, 5.0, 20.0});
      CHECK(r.k_max == doctest::Approx(std::pow(2.0, p)).epsilon(1e-13));
    }
  }
  SUBCASE("expm ratio blows up") {
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(0.5 * i);
    const auto rep = delta2_check(OrliczFunction::expm(), grid);
    CHECK(rep.k_max > 1000.0);
    CHECK_FALSE(rep.holds);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(delta2_check(OrliczFunction::power(2.0), {}), std::invalid_argument);
    const auto expm = OrliczFunction::expm();
    CHECK_THROWS_AS(delta2_check(expm, {expm.domain_cap()}), std::domain_error);
  }
}

TEST_CASE("Young's inequality on a grid") {
  for (const auto& phi : {OrliczFunction::power(1.5), OrliczFunction::power(2.0),
                          OrliczFunction::power(3.0), OrliczFunction::expm(),
                          OrliczFunction::linlog()}) {
    const auto psi = phi.conjugate();
    for (int i = 0; i <= 25; ++i)
      for (int j = 0; j <= 25; ++j) {
        const double u = 6.0 * i / 25.0;
        const double v = std::min(6.0 * j / 25.0, psi.domain_cap());
        CHECK(phi.value(u) + psi.value(v) - u * v >= -1e-9);
      }
  }
}

TEST_CASE("N-function contract holds across families") {
  const auto grid = test_grid();
  CHECK_NOTHROW(nco::validate_n_function(OrliczFunction::power(1.5), grid));
  CHECK_NOTHROW(nco::validate_n_function(OrliczFunction::power(3.0), grid));
  CHECK_NOTHROW(nco::validate_n_function(OrliczFunction::expm(), grid));
  CHECK_NOTHROW(nco::validate_n_function(OrliczFunction::linlog(), grid));
  CHECK_NOTHROW(nco::validate_n_function(
      OrliczFunction::intermediate(OrliczFunction::expm(), OrliczFunction::power(2.0), 0.5),
      grid));
  CHECK_NOTHROW(nco::validate_n_function(OrliczFunction::power(2.0).conjugate(), grid));
}
