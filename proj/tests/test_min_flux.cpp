/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/min_flux.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "hsentropy/errors.hpp"
#include "hsentropy/kernels.hpp"

using namespace hsentropy;

namespace {

constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Wide-bracket bisection on the shape equation, used as an independent check
// that the seeded solver lands on the same (unique) root.
double bisect_shape(double ups, const GasParams& gas) {
  double lo = -200.0, hi = 2e4;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (shape_function(mid, gas).phi > ups) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("solve_shape_parameter examples") {
  const GasParams mono = GasParams::from_delta(0.0);
  CHECK(std::abs(solve_shape_parameter(8.0 / M_PI, mono)) < 1e-12);

  // near-1 ratio: validated by the round trip, not by the asymptote
  const double s_flat = solve_shape_parameter(1.0 + 1e-4, mono);
  CHECK(s_flat == doctest::Approx(std::sqrt(1.5e4)).epsilon(0.05));
  CHECK(std::abs(shape_function(s_flat, mono).phi - (1.0 + 1e-4)) <=
        1e-12 * (1.0 + 1e-4));

  const GasParams di = GasParams::from_delta(2.0);
  const double s_tail = solve_shape_parameter(1000.0, di);
  CHECK(s_tail == doctest::Approx(-std::sqrt(2000.0 / 4.0)).epsilon(0.05));
  CHECK(std::abs(shape_function(s_tail, di).phi - 1000.0) <= 1e-9 * 1000.0);

  CHECK_THROWS_AS(solve_shape_parameter(1.0, mono), InfeasibleError);
  CHECK_THROWS_AS(solve_shape_parameter(0.5, mono), InfeasibleError);
}

TEST_CASE("shape round trip on s in [-25, 25]") {
  for (double delta : {0.5, 2.0, 3.0, 5.0}) {
    const GasParams gas = GasParams::from_delta(delta);
    for (int i = 0; i <= 100; ++i) {
      const double s = -25.0 + 0.5 * i;
      const double back = solve_shape_parameter(shape_function(s, gas).phi, gas);
      CHECK_MESSAGE(std::abs(back - s) <= 1e-9, "delta=", delta, " s=", s);
    }
  }
}

TEST_CASE("root matches a wide-bracket bisection (uniqueness)") {
  const GasParams gas = GasParams::from_delta(3.0);
  for (double ups : {1.001, 1.5, 2.0, 2.8, 10.0, 250.0}) {
    const double a = solve_shape_parameter(ups, gas);
    const double b = bisect_shape(ups, gas);
    CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("maxwellian_from_moments at the boundary state") {
  const GasParams mono = GasParams::from_delta(0.0);
  const HalfMoments b = boundary_half_moments(mono);
  const ShapeSolution sol = maxwellian_from_moments(b, mono);
  CHECK(std::abs(sol.s) < 1e-12);
  CHECK(std::abs(sol.w) < 1e-12);
  CHECK(sol.beta == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sol.log_a == doctest::Approx(-0.5 * std::log(M_PI)).epsilon(1e-12));
  CHECK(sol.theta == theta(sol.s));  // exact, same code path
}

TEST_CASE("moment reconstruction round trip") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ud(0.2, 6.0), un(0.05, 4.0);
  for (int i = 0; i < 300; ++i) {
    const GasParams gas = GasParams::from_delta(ud(rng));
    // random feasible moments: build them from a Maxwellian, then perturb a
    // (scale invariance keeps the ratio above 1)
    HalfMoments m{un(rng), un(rng), 0.0};
    const double ups = 1.0 + std::exp(std::uniform_real_distribution<double>(-6.0, 5.0)(rng));
    m.n5 = ups * m.n2 * m.n2 / m.n1;

    const ShapeSolution sol = maxwellian_from_moments(m, gas);
    const DriftedMaxwellian mx{sol.log_a, sol.beta, sol.w};
    const HalfMoments back = analytic_half_moments(mx, gas);
    CHECK(std::abs(back.n1 - m.n1) <= 1e-9 * m.n1);
    CHECK(std::abs(back.n2 - m.n2) <= 1e-9 * m.n2);
    CHECK(std::abs(back.n5 - m.n5) <= 1e-9 * m.n5);
  }
}

TEST_CASE("moment scaling moves only the amplitude") {
  const GasParams gas = GasParams::from_delta(2.0);
  const HalfMoments m{0.7, 0.9, 2.9};
  const ShapeSolution a = maxwellian_from_moments(m, gas);
  const double lambda = 37.5;
  const ShapeSolution b =
      maxwellian_from_moments({lambda * m.n1, lambda * m.n2, lambda * m.n5}, gas);
  CHECK(b.s == doctest::Approx(a.s).epsilon(1e-12));
  CHECK(b.beta == doctest::Approx(a.beta).epsilon(1e-12));
  CHECK(b.log_a - a.log_a == doctest::Approx(std::log(lambda)).epsilon(1e-12));
}

TEST_CASE("min_flux at the boundary state matches the closed form, delta = 2") {
  const GasParams di = GasParams::from_delta(2.0);
  const HalfMoments b = boundary_half_moments(di);
  const MinFluxValue f = min_flux(b, di);
  // Entropy half-flux of the normalized resting Maxwellian.
  const double closed =
      -kInvSqrt2Pi * (1.5 * kLog2Pi + std::lgamma(1.0) + 2.0 + 1.0);
  CHECK(f.f_value == doctest::Approx(closed).epsilon(1e-12));

  // and the quadrature oracle agrees
  const ShapeSolution sol = f.shape;
  const MaxwellianMixture single{{{1.0, {sol.log_a, sol.beta, sol.w}}}};
  const double quad = psi_plus_quadrature(single, di, 1e-11);
  CHECK(std::abs(quad - f.f_value) <= 1e-9);
}

TEST_CASE("min_flux standalone rejects delta = 0") {
  const GasParams mono = GasParams::from_delta(0.0);
  CHECK_THROWS_AS(min_flux(boundary_half_moments(mono), mono),
                  MonatomicUnsupportedError);
  // the Gamma-factored value stays available
  CHECK(std::isfinite(min_flux_gamma_reduced(boundary_half_moments(mono), mono)));
}

TEST_CASE("min_flux is idempotent under reconstruct-and-reevaluate") {
  const GasParams gas = GasParams::from_delta(3.0);
  const HalfMoments m{0.45, 0.61, 1.7};
  const MinFluxValue f1 = min_flux(m, gas);
  const HalfMoments back = analytic_half_moments(
      {f1.shape.log_a, f1.shape.beta, f1.shape.w}, gas);
  const MinFluxValue f2 = min_flux(back, gas);
  CHECK(std::abs(f2.f_value - f1.f_value) <= 1e-10 * std::max(1.0, std::abs(f1.f_value)));
}

TEST_CASE("psi_plus of a mixture exceeds the minimal flux of its pooled moments") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ubeta(0.4, 1.8), uw(-0.8, 0.8),
      uloga(-1.0, 1.0), uwt(0.15, 0.85);
  for (double delta : {2.0, 3.0, 5.0}) {
    const GasParams gas = GasParams::from_delta(delta);
    for (int i = 0; i < 12; ++i) {
      const DriftedMaxwellian m1{uloga(rng), ubeta(rng), uw(rng)};
      const DriftedMaxwellian m2{uloga(rng), ubeta(rng), uw(rng)};
      const double c1 = uwt(rng);
      const MaxwellianMixture mix{{{c1, m1}, {1.0 - c1, m2}}};

      const HalfMoments h1 = analytic_half_moments(m1, gas);
      const HalfMoments h2 = analytic_half_moments(m2, gas);
      const HalfMoments pooled{c1 * h1.n1 + (1.0 - c1) * h2.n1,
                               c1 * h1.n2 + (1.0 - c1) * h2.n2,
                               c1 * h1.n5 + (1.0 - c1) * h2.n5};

      const double f = min_flux(pooled, gas).f_value;
      const double psi = psi_plus_quadrature(mix, gas, 1e-10);
      CHECK(psi >= f - 1e-8);
    }
  }
}

TEST_CASE("psi_plus attains the minimum exactly on a single Maxwellian") {
  const GasParams gas = GasParams::from_delta(3.0);
  for (double w : {-0.6, 0.0, 0.9}) {
    const DriftedMaxwellian mx{0.2, 0.8, w};
    const HalfMoments h = analytic_half_moments(mx, gas);
    const double f = min_flux(h, gas).f_value;
    const double psi = psi_plus_quadrature({{{1.0, mx}}}, gas, 1e-11);
    CHECK(std::abs(psi - f) <= 1e-9);
  }
}

TEST_CASE("mixture with distinct betas is strictly above the minimum") {
  const GasParams gas = GasParams::from_delta(2.0);
  const DriftedMaxwellian m1{0.0, 0.6, 0.1};
  const DriftedMaxwellian m2{0.0, 1.4, 0.1};
  const MaxwellianMixture mix{{{0.5, m1}, {0.5, m2}}};
  const HalfMoments h1 = analytic_half_moments(m1, gas);
  const HalfMoments h2 = analytic_half_moments(m2, gas);
  const HalfMoments pooled{0.5 * (h1.n1 + h2.n1), 0.5 * (h1.n2 + h2.n2),
                           0.5 * (h1.n5 + h2.n5)};
  const double f = min_flux(pooled, gas).f_value;
  const double psi = psi_plus_quadrature(mix, gas, 1e-10);
  CHECK(psi > f + 1e-6);
}
