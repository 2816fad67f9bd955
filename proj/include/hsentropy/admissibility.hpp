/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_ADMISSIBILITY_HPP
#define HSENTROPY_ADMISSIBILITY_HPP

#include <optional>

#include "hsentropy/gas.hpp"

namespace hsentropy {

// Outcome of one necessary condition with its signed slack. Equality counts
// as satisfied, matching the non-strict inequalities: satisfied <=> margin >= 0.
struct ConditionResult {
  bool satisfied;
  double margin;
};

struct EvaporationConditions {
  ConditionResult flux;      // M <= sqrt(T) / (sqrt(2 pi gamma) p)
  ConditionResult energy;    // M (3 + delta + M^2) <= (4+delta)/(gamma sqrt(2 pi gamma) p sqrt(T))
  ConditionResult pressure;  // p <= (1 + M^2/(3+delta))^{-(5+delta)/2}
  // The energy condition is decided from the sign of the incoming energy
  // half moment; its margin is reported in the displayed form above. The two
  // are proportional, so this flag should never drop -- it is kept so a
  // numerical discrepancy would be surfaced instead of silently resolved.
  bool energy_forms_agree = true;
};

struct AdmissibilityReport {
  ConditionResult overall;
  std::optional<EvaporationConditions> evaporation;  // set iff mach > 0
  std::optional<ConditionResult> condensation;       // set iff mach < 0
  std::optional<ConditionResult> stationary;         // set iff mach == 0
  RegimeReport regime;
  bool admissible;
};

// Overall condition, any Mach number: p >= 1/(2 (1 + gamma M^2)).
// Equivalent to nonnegativity of the incoming momentum half moment.
ConditionResult check_overall(const FarFieldState& state, const GasParams& gas);

// The three evaporation conditions; requires state.mach > 0.
EvaporationConditions check_evaporation(const FarFieldState& state, const GasParams& gas);

// Condensation condition, requires state.mach < 0:
// p >= T^{(5+delta)/2} exp(((5+delta)/2) (1 - (1 + M^2/(3+delta)) T)).
ConditionResult check_condensation(const FarFieldState& state, const GasParams& gas);

// Rest case (mach = 0): the only admissible state is p = T = 1. Floating
// inputs are accepted within 1e-12; margin = 1e-12 - max(|p-1|, |T-1|).
ConditionResult check_stationary(const FarFieldState& state);

// All conditions applicable to the sign of mach, plus the regime report.
AdmissibilityReport check_all(const FarFieldState& state, const GasParams& gas);

}  // namespace hsentropy

#endif
