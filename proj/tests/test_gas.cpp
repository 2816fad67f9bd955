/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/gas.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace hsentropy;

TEST_CASE("heat capacity ratio") {
  CHECK(heat_capacity_ratio(0.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(heat_capacity_ratio(2.0) == doctest::Approx(7.0 / 5.0).epsilon(1e-15));
  CHECK(heat_capacity_ratio(1e6) - 1.0 <= 3e-6);
  CHECK_THROWS_AS(heat_capacity_ratio(-0.1), std::invalid_argument);

  // strictly decreasing in delta
  double prev = heat_capacity_ratio(0.0);
  for (double d = 0.25; d <= 12.0; d += 0.25) {
    const double g = heat_capacity_ratio(d);
    CHECK(g < prev);
    CHECK(g > 1.0);
    prev = g;
  }
}

TEST_CASE("boundary half moments") {
  const HalfMoments mono = boundary_half_moments(GasParams::from_delta(0.0));
  CHECK(mono.n1 == doctest::Approx(0.3989423).epsilon(1e-6));
  CHECK(mono.n2 == 0.5);
  CHECK(mono.n5 == doctest::Approx(1.5957691).epsilon(1e-6));

  const HalfMoments di = boundary_half_moments(GasParams::from_delta(2.0));
  CHECK(di.n5 == doctest::Approx(6.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
  // n1, n2 carry no delta dependence
  CHECK(di.n1 == mono.n1);
  CHECK(di.n2 == mono.n2);
}

TEST_CASE("flux moments") {
  const GasParams mono = GasParams::from_delta(0.0);
  const FluxMoments rest = flux_moments({1.0, 1.0, 0.0}, mono);
  CHECK(rest.l1 == 0.0);
  CHECK(rest.l2 == 1.0);
  CHECK(rest.l3 == 0.0);
  CHECK(rest.l4 == 0.0);
  CHECK(rest.l5 == 0.0);

  const FluxMoments sonic = flux_moments({1.0, 1.0, 1.0}, mono);
  CHECK(sonic.l1 == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));

  // sign of the energy flux equals the sign of the Mach number
  for (double m : {-1.5, -0.3, 0.2, 1.1}) {
    const FluxMoments f = flux_moments({0.7, 1.3, m}, mono);
    CHECK(std::signbit(f.l5) == std::signbit(m));
  }
}

TEST_CASE("incoming half moments at rest and conservation identities") {
  const GasParams mono = GasParams::from_delta(0.0);
  const HalfMoments at_rest = incoming_half_moments({1.0, 1.0, 0.0}, mono);
  CHECK(at_rest.n1 == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
  CHECK(at_rest.n2 == 0.5);
  CHECK(at_rest.n5 == doctest::Approx(4.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));

  // M = 0 leaves n1 and n5 at the boundary values for any p, T
  for (double p : {0.3, 1.0, 2.5}) {
    for (double T : {0.4, 1.0, 2.0}) {
      const HalfMoments m = incoming_half_moments({p, T, 0.0}, mono);
      const HalfMoments b = boundary_half_moments(mono);
      CHECK(m.n1 == b.n1);
      CHECK(m.n5 == b.n5);
    }
  }

  // large positive M drives n1 negative
  CHECK(incoming_half_moments({1.0, 1.0, 3.0}, mono).n1 < 0.0);
  // low pressure at rest violates the momentum balance
  CHECK(incoming_half_moments({0.25, 1.0, 0.0}, mono).n2 ==
        doctest::Approx(-0.25).epsilon(1e-15));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> up(0.05, 5.0), ut(0.1, 3.0), um(-2.5, 2.5);
  for (int i = 0; i < 2000; ++i) {
    const GasParams gas = GasParams::from_delta(up(rng));
    const FarFieldState st{up(rng), ut(rng), um(rng)};
    const HalfMoments plus = boundary_half_moments(gas);
    const HalfMoments minus = incoming_half_moments(st, gas);
    const FluxMoments l = flux_moments(st, gas);
    CHECK(plus.n1 - minus.n1 == doctest::Approx(l.l1).epsilon(1e-13));
    CHECK(plus.n2 + minus.n2 == doctest::Approx(l.l2).epsilon(1e-13));
    CHECK(plus.n5 - minus.n5 == doctest::Approx(l.l5).epsilon(1e-13));
  }
}

TEST_CASE("regime classification") {
  const RegimeReport a = classify_regime(1.2);
  CHECK(a.regime == FlowRegime::supersonic_evaporation);
  CHECK(a.k_plus == 5);
  CHECK(a.free_parameters == 0);

  const RegimeReport b = classify_regime(-0.5);
  CHECK(b.regime == FlowRegime::subsonic_condensation);
  CHECK(b.k_plus == 1);
  CHECK(b.free_parameters == 2);

  const RegimeReport c = classify_regime(-2.0);
  CHECK(c.regime == FlowRegime::supersonic_condensation);
  CHECK(c.k_plus == 0);
  CHECK(c.free_parameters == 3);

  const RegimeReport d = classify_regime(0.5);
  CHECK(d.regime == FlowRegime::subsonic_evaporation);
  CHECK(d.k_plus == 4);
  CHECK(d.free_parameters == 1);

  // degenerate cases carry zeros and no free-parameter count
  const RegimeReport rest = classify_regime(0.0);
  CHECK(rest.regime == FlowRegime::rest);
  CHECK(rest.k_plus == 1);
  CHECK(rest.l_zero == 3);
  CHECK(!rest.free_parameters.has_value());

  const RegimeReport sonic = classify_regime(1.0);
  CHECK(sonic.regime == FlowRegime::sonic_evaporation);
  CHECK(sonic.k_plus == 4);
  CHECK(sonic.l_zero == 1);
  CHECK(!sonic.free_parameters.has_value());

  const RegimeReport anti = classify_regime(-1.0);
  CHECK(anti.regime == FlowRegime::sonic_condensation);
  CHECK(anti.k_plus == 0);
  CHECK(anti.l_zero == 1);
  CHECK(!anti.free_parameters.has_value());

  CHECK_THROWS_AS(classify_regime(std::nan("")), std::invalid_argument);

  // partition: positives + zeros + negatives = 5
  for (double m : {-2.0, -1.0, -0.3, 0.0, 0.4, 1.0, 1.7}) {
    const RegimeReport r = classify_regime(m);
    int negatives = 0;
    for (double e : {m - 1.0, m, m, m, m + 1.0}) {
      if (e < 0.0) ++negatives;
    }
    CHECK(r.k_plus + r.l_zero + negatives == 5);
  }
}
