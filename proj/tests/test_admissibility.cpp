/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/admissibility.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace hsentropy;

namespace {

// Largest condensation bound over T by direct golden-section search.
double condensation_bound_sup(double mach, const GasParams& gas) {
  auto bound = [&](double T) {
    const double d = gas.delta;
    return std::exp(0.5 * (5.0 + d) *
                    (std::log(T) + 1.0 - (1.0 + mach * mach / (3.0 + d)) * T));
  };
  double a = 0.05, b = 3.0;
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = b - kInvPhi * (b - a), dd = a + kInvPhi * (b - a);
  while (b - a > 1e-12) {
    if (bound(c) > bound(dd)) {
      b = dd;
    } else {
      a = c;
    }
    c = b - kInvPhi * (b - a);
    dd = a + kInvPhi * (b - a);
  }
  return bound(0.5 * (a + b));
}

}  // namespace

TEST_CASE("overall condition margins") {
  const GasParams mono = GasParams::from_delta(0.0);
  const ConditionResult fail = check_overall({0.4, 1.0, 0.0}, mono);
  CHECK(!fail.satisfied);
  CHECK(fail.margin == doctest::Approx(-0.1).epsilon(1e-12));

  const ConditionResult edge = check_overall({0.5, 1.0, 0.0}, mono);
  CHECK(edge.satisfied);
  CHECK(edge.margin == 0.0);
}

TEST_CASE("overall condition is momentum-moment nonnegativity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> up(0.05, 4.0), ut(0.1, 3.0), um(-2.5, 2.5),
      ud(0.0, 6.0);
  for (int i = 0; i < 5000; ++i) {
    const GasParams gas = GasParams::from_delta(ud(rng));
    const FarFieldState st{up(rng), ut(rng), um(rng)};
    const ConditionResult c = check_overall(st, gas);
    const double n2 = incoming_half_moments(st, gas).n2;
    if (std::abs(c.margin) > 1e-12) {
      CHECK(c.satisfied == (n2 >= 0.0));
    }
  }
}

TEST_CASE("evaporation conditions") {
  const GasParams mono = GasParams::from_delta(0.0);

  const EvaporationConditions near_sat = check_evaporation({1.0, 1.0, 0.1}, mono);
  CHECK(!near_sat.pressure.satisfied);
  CHECK(near_sat.pressure.margin ==
        doctest::Approx(std::pow(1.0 + 0.01 / 3.0, -2.5) - 1.0).epsilon(1e-12));
  CHECK(near_sat.pressure.margin == doctest::Approx(-0.0083).epsilon(2e-2));

  const EvaporationConditions low_p = check_evaporation({0.2, 1.0, 0.1}, mono);
  CHECK(low_p.flux.satisfied);
  CHECK(low_p.energy.satisfied);
  CHECK(low_p.pressure.satisfied);
  CHECK(low_p.energy_forms_agree);

  CHECK_THROWS_AS(check_evaporation({1.0, 1.0, -0.1}, mono), std::invalid_argument);
  CHECK_THROWS_AS(check_evaporation({1.0, 1.0, 0.0}, mono), std::invalid_argument);
}

TEST_CASE("evaporation conditions are moment-sign identities") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> up(0.02, 3.0), ut(0.1, 3.0), um(0.01, 2.5),
      ud(0.0, 6.0);
  for (int i = 0; i < 5000; ++i) {
    const GasParams gas = GasParams::from_delta(ud(rng));
    const FarFieldState st{up(rng), ut(rng), um(rng)};
    const EvaporationConditions e = check_evaporation(st, gas);
    const HalfMoments m = incoming_half_moments(st, gas);
    if (std::abs(e.flux.margin) > 1e-12) {
      CHECK(e.flux.satisfied == (m.n1 >= 0.0));
    }
    CHECK(e.energy_forms_agree);
    if (std::abs(e.energy.margin) > 1e-12) {
      CHECK(e.energy.satisfied == (m.n5 >= 0.0));
    }
  }
}

TEST_CASE("condensation condition") {
  const GasParams mono = GasParams::from_delta(0.0);

  // bound tends to 1 as M -> 0- at T = 1
  const ConditionResult tiny = check_condensation({1.0, 1.0, -1e-8}, mono);
  CHECK(tiny.satisfied);
  CHECK(std::abs(tiny.margin) < 1e-12);

  const double bound = std::pow(2.0, 2.5) *
                       std::exp(2.5 * (1.0 - (1.0 + 0.25 / 3.0) * 2.0));
  const ConditionResult c = check_condensation({1.0, 2.0, -0.5}, mono);
  CHECK(c.margin == doctest::Approx(1.0 - bound).epsilon(1e-12));

  CHECK_THROWS_AS(check_condensation({1.0, 1.0, 0.1}, mono), std::invalid_argument);
}

TEST_CASE("condensation bound supremum over T equals the evaporation pressure bound") {
  for (double d : {0.0, 2.0, 5.0}) {
    const GasParams gas = GasParams::from_delta(d);
    for (double mach : {0.2, 0.7, 1.3}) {
      const double sup = condensation_bound_sup(mach, gas);
      const double evap_bound =
          std::exp(-0.5 * (5.0 + d) * std::log1p(mach * mach / (3.0 + d)));
      CHECK(sup == doctest::Approx(evap_bound).epsilon(1e-9));
    }
  }
}

TEST_CASE("evaporation pressure bound is nondecreasing in delta") {
  for (double mach : {0.2, 0.6, 1.0, 1.5}) {
    double prev = 0.0;
    for (double d : {0.0, 1.0, 2.0, 3.0, 5.0, 8.0}) {
      const double bound =
          std::exp(-0.5 * (5.0 + d) * std::log1p(mach * mach / (3.0 + d)));
      CHECK(bound >= prev);
      prev = bound;
    }
  }
}

TEST_CASE("stationary condition") {
  CHECK(check_stationary({1.0, 1.0, 0.0}).satisfied);
  CHECK(!check_stationary({1.1, 1.0, 0.0}).satisfied);
  CHECK(!check_stationary({1.0, 0.9, 0.0}).satisfied);
  CHECK_THROWS_AS(check_stationary({1.0, 1.0, 0.1}), std::invalid_argument);
}

TEST_CASE("check_all applies the conditions for the sign of M") {
  const GasParams mono = GasParams::from_delta(0.0);

  const AdmissibilityReport eq = check_all({1.0, 1.0, 0.0}, mono);
  CHECK(eq.admissible);
  CHECK(eq.stationary.has_value());
  CHECK(!eq.evaporation.has_value());
  CHECK(!eq.condensation.has_value());

  const AdmissibilityReport evap = check_all({1.0, 1.0, 0.1}, mono);
  CHECK(!evap.admissible);
  CHECK(evap.evaporation.has_value());
  CHECK(!evap.evaporation->pressure.satisfied);

  const AdmissibilityReport cond = check_all({0.4, 1.0, -0.01}, mono);
  CHECK(!cond.admissible);
  CHECK(!cond.overall.satisfied);
  CHECK(cond.condensation.has_value());
}
