/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/admissibility.hpp"

#include <cmath>
#include <stdexcept>

namespace hsentropy {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kStationaryTol = 1e-12;
}  // namespace

ConditionResult check_overall(const FarFieldState& state, const GasParams& gas) {
  const double bound = 1.0 / (2.0 * (1.0 + gas.gamma * state.mach * state.mach));
  const double margin = state.p - bound;
  return ConditionResult{margin >= 0.0, margin};
}

EvaporationConditions check_evaporation(const FarFieldState& state, const GasParams& gas) {
  if (!(state.mach > 0.0)) {
    throw std::invalid_argument("check_evaporation: requires mach > 0");
  }
  const double p = state.p;
  const double T = state.T;
  const double m = state.mach;
  const double g = gas.gamma;
  const double d = gas.delta;

  EvaporationConditions out;

  const double flux_margin = std::sqrt(T) / (std::sqrt(kTwoPi * g) * p) - m;
  out.flux = ConditionResult{flux_margin >= 0.0, flux_margin};

  const double energy_margin =
      (4.0 + d) / (g * std::sqrt(kTwoPi * g) * p * std::sqrt(T)) -
      m * (3.0 + d + m * m);
  // Decide from the energy half moment itself; the displayed margin above is
  // the same quantity times a positive factor.
  const double n5 = incoming_half_moments(state, gas).n5;
  out.energy = ConditionResult{n5 >= 0.0, energy_margin};
  out.energy_forms_agree = (n5 >= 0.0) == (energy_margin >= 0.0);

  const double pressure_bound =
      std::exp(-0.5 * (5.0 + d) * std::log1p(m * m / (3.0 + d)));
  const double pressure_margin = pressure_bound - p;
  out.pressure = ConditionResult{pressure_margin >= 0.0, pressure_margin};

  return out;
}

ConditionResult check_condensation(const FarFieldState& state, const GasParams& gas) {
  if (!(state.mach < 0.0)) {
    throw std::invalid_argument("check_condensation: requires mach < 0");
  }
  const double d = gas.delta;
  const double T = state.T;
  const double m2 = state.mach * state.mach;
  const double log_bound =
      0.5 * (5.0 + d) * (std::log(T) + 1.0 - (1.0 + m2 / (3.0 + d)) * T);
  const double margin = state.p - std::exp(log_bound);
  return ConditionResult{margin >= 0.0, margin};
}

ConditionResult check_stationary(const FarFieldState& state) {
  if (state.mach != 0.0) {
    throw std::invalid_argument("check_stationary: requires mach == 0");
  }
  const double deviation = std::max(std::abs(state.p - 1.0), std::abs(state.T - 1.0));
  const double margin = kStationaryTol - deviation;
  return ConditionResult{margin >= 0.0, margin};
}

AdmissibilityReport check_all(const FarFieldState& state, const GasParams& gas) {
  AdmissibilityReport report;
  report.overall = check_overall(state, gas);
  report.regime = classify_regime(state.mach);

  bool ok = report.overall.satisfied;
  if (state.mach > 0.0) {
    report.evaporation = check_evaporation(state, gas);
    ok = ok && report.evaporation->flux.satisfied &&
         report.evaporation->energy.satisfied &&
         report.evaporation->pressure.satisfied;
  } else if (state.mach < 0.0) {
    report.condensation = check_condensation(state, gas);
    ok = ok && report.condensation->satisfied;
  } else {
    report.stationary = check_stationary(state);
    ok = ok && report.stationary->satisfied;
  }
  report.admissible = ok;
  return report;
}

}  // namespace hsentropy
