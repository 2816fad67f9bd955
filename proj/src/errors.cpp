/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/errors.hpp"

namespace hsentropy {

const char* to_string(Infeasibility reason) {
  switch (reason) {
    case Infeasibility::negative_mass_flux: return "N1 <= 0";
    case Infeasibility::negative_momentum_flux: return "N2 <= 0";
    case Infeasibility::negative_energy_flux: return "N5 <= 0";
    case Infeasibility::moment_ratio_not_above_one: return "N1*N5/N2^2 <= 1";
    case Infeasibility::zero_denominator: return "zero denominator";
  }
  return "unknown";
}

}  // namespace hsentropy
