/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/gas.hpp"

#include <cmath>
#include <stdexcept>

namespace hsentropy {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}

double heat_capacity_ratio(double delta) {
  if (!(delta >= 0.0)) {
    throw std::invalid_argument("heat_capacity_ratio: delta must be >= 0");
  }
  return (5.0 + delta) / (3.0 + delta);
}

GasParams GasParams::from_delta(double delta) {
  return GasParams{delta, heat_capacity_ratio(delta)};
}

const char* to_string(FlowRegime regime) {
  switch (regime) {
    case FlowRegime::supersonic_evaporation: return "supersonic_evaporation";
    case FlowRegime::subsonic_evaporation: return "subsonic_evaporation";
    case FlowRegime::rest: return "rest";
    case FlowRegime::subsonic_condensation: return "subsonic_condensation";
    case FlowRegime::supersonic_condensation: return "supersonic_condensation";
    case FlowRegime::sonic_evaporation: return "sonic_evaporation";
    case FlowRegime::sonic_condensation: return "sonic_condensation";
  }
  return "unknown";
}

HalfMoments boundary_half_moments(const GasParams& gas) {
  return HalfMoments{kInvSqrt2Pi, 0.5, (4.0 + gas.delta) * kInvSqrt2Pi};
}

FluxMoments flux_moments(const FarFieldState& state, const GasParams& gas) {
  const double p = state.p;
  const double T = state.T;
  const double m = state.mach;
  const double g = gas.gamma;
  FluxMoments f;
  f.l1 = p * std::sqrt(g / T) * m;
  f.l2 = p * (1.0 + g * m * m);
  f.l3 = 0.0;
  f.l4 = 0.0;
  f.l5 = p * std::sqrt(g * T) * m * (5.0 + gas.delta + g * m * m);
  return f;
}

HalfMoments incoming_half_moments(const FarFieldState& state, const GasParams& gas) {
  const HalfMoments plus = boundary_half_moments(gas);
  const FluxMoments l = flux_moments(state, gas);
  return HalfMoments{plus.n1 - l.l1, l.l2 - plus.n2, plus.n5 - l.l5};
}

RegimeReport classify_regime(double mach) {
  if (!std::isfinite(mach)) {
    throw std::invalid_argument("classify_regime: mach must be finite");
  }
  // Sign pattern of {u-c, u, u, u, u+c} in units of the sound speed.
  const double entries[5] = {mach - 1.0, mach, mach, mach, mach + 1.0};
  int k_plus = 0;
  int l_zero = 0;
  for (double e : entries) {
    if (e > 0.0) ++k_plus;
    if (e == 0.0) ++l_zero;
  }

  RegimeReport r;
  r.k_plus = k_plus;
  r.l_zero = l_zero;
  if (mach > 1.0) {
    r.regime = FlowRegime::supersonic_evaporation;
    r.free_parameters = 0;
  } else if (mach == 1.0) {
    r.regime = FlowRegime::sonic_evaporation;
  } else if (mach > 0.0) {
    r.regime = FlowRegime::subsonic_evaporation;
    r.free_parameters = 1;
  } else if (mach == 0.0) {
    r.regime = FlowRegime::rest;
  } else if (mach > -1.0) {
    r.regime = FlowRegime::subsonic_condensation;
    r.free_parameters = 2;
  } else if (mach == -1.0) {
    r.regime = FlowRegime::sonic_condensation;
  } else {
    r.regime = FlowRegime::supersonic_condensation;
    r.free_parameters = 3;
  }
  return r;
}

}  // namespace hsentropy
