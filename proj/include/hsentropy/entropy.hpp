/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_ENTROPY_HPP
#define HSENTROPY_ENTROPY_HPP

#include <optional>

#include "hsentropy/gas.hpp"

namespace hsentropy {

enum class LambdaForm { direct, recast, checked };

const char* to_string(LambdaForm form);

// Entropy-production upper bound with its additive pieces. For either form,
// value = boundary_term + far_field_term - min_flux_term exactly as computed.
// The three log Gamma(delta/2) occurrences of the direct formula cancel (their
// coefficients sum to zero by the mass-flux balance), so the terms are
// reported in the Gamma-cancelled grouping and stay finite at delta = 0.
struct LambdaBreakdown {
  double value;
  double boundary_term;
  double far_field_term;
  double min_flux_term;
  double upsilon;
  double s;
  LambdaForm form;
};

// Upsilon(p, T, M) = 2 (1 - p sqrt(2 pi gamma / T) M)
//                      (4 + delta - p sqrt(2 pi gamma T) M (5 + delta + gamma M^2))
//                    / (pi (2 p (1 + gamma M^2) - 1)^2);
// identical to N1 N5 / N2^2 of the incoming half moments.
double upsilon(const FarFieldState& state, const GasParams& gas);

// The bound evaluated from the defining formula: boundary entropy flux minus
// the minimal incoming flux minus the far-field flux term.
LambdaBreakdown lambda_direct(const FarFieldState& state, const GasParams& gas);

// The recast evaluation, expressed through s, Upsilon and the auxiliary
// quantities theta_tilde and Delta instead of the raw moment integrals.
LambdaBreakdown lambda_recast(const FarFieldState& state, const GasParams& gas);

// form = checked evaluates both routes, enforces agreement (absolute 1e-10
// when |value| < 1e-2, relative 1e-8 otherwise) and returns the direct result.
LambdaBreakdown lambda(const FarFieldState& state, const GasParams& gas,
                       LambdaForm form = LambdaForm::checked);

// Non-throwing direct evaluation for scan loops: nullopt on any
// infeasibility or numerical failure.
std::optional<LambdaBreakdown> try_lambda(const FarFieldState& state,
                                          const GasParams& gas) noexcept;

}  // namespace hsentropy

#endif
