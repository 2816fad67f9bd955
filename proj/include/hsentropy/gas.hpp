/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_GAS_HPP
#define HSENTROPY_GAS_HPP

#include <optional>

namespace hsentropy {

// Heat-capacity ratio (5+delta)/(3+delta) for delta >= 0 internal degrees
// of freedom. Strictly decreasing in delta, range (1, 5/3].
double heat_capacity_ratio(double delta);

struct GasParams {
  double delta;  // internal degrees of freedom, >= 0
  double gamma;  // derived: (5+delta)/(3+delta)

  static GasParams from_delta(double delta);
  bool monatomic() const { return delta == 0.0; }
};

// Normalized far-field state: pressure ratio p_inf/p_0, temperature ratio
// T_inf/T_0 and Mach number at infinity. mach > 0 is evaporation (flow away
// from the interface), mach < 0 condensation. Units are fixed once and for
// all: m = k_B = 1 and the interface Maxwellian has n_0 = T_0 = 1.
struct FarFieldState {
  double p;
  double T;
  double mach;
};

// Fluxes of mass, normal momentum and total energy carried by molecules
// moving in one normal direction (half-space moments).
struct HalfMoments {
  double n1;
  double n2;
  double n5;
};

// Conserved fluxes of the far-field Maxwellian; l3 = l4 = 0 for the
// symmetric flows considered here.
struct FluxMoments {
  double l1;
  double l2;
  double l3;
  double l4;
  double l5;
};

enum class FlowRegime {
  supersonic_evaporation,
  subsonic_evaporation,
  rest,
  subsonic_condensation,
  supersonic_condensation,
  sonic_evaporation,
  sonic_condensation,
};

const char* to_string(FlowRegime regime);

// Signature of the flux quadratic form on the kernel of the linearized
// collision operator: k_plus positive and l_zero vanishing entries among
// {u-c, u, u, u, u+c}. free_parameters is the number of free macroscopic
// parameters of the solution family in the four generic regimes and is left
// unset in the degenerate sonic/rest cases (mach in {0, -1, +1}), where the
// slowly varying modes admit no such count.
struct RegimeReport {
  FlowRegime regime;
  int k_plus;
  int l_zero;
  std::optional<int> free_parameters;
};

// Half moments of the resting interface Maxwellian in normalized units:
// N1+ = 1/sqrt(2 pi), N2+ = 1/2, N5+ = (4+delta)/sqrt(2 pi).
HalfMoments boundary_half_moments(const GasParams& gas);

// Conserved fluxes of the far-field Maxwellian in normalized units.
FluxMoments flux_moments(const FarFieldState& state, const GasParams& gas);

// Half moments of the incoming (towards the interface) part of the solution
// forced by conservation. No sign constraint is enforced here; signs are the
// admissibility module's business.
HalfMoments incoming_half_moments(const FarFieldState& state, const GasParams& gas);

// Regime classification from the sign pattern of mach relative to {-1, 0, 1}
// alone; the sound speed never enters numerically.
RegimeReport classify_regime(double mach);

}  // namespace hsentropy

#endif
