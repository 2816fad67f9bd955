/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/entropy.hpp"

#include <cmath>
#include <string>

#include "hsentropy/errors.hpp"
#include "hsentropy/kernels.hpp"
#include "hsentropy/min_flux.hpp"

namespace hsentropy {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;

HalfMoments checked_incoming(const FarFieldState& state, const GasParams& gas) {
  const HalfMoments m = incoming_half_moments(state, gas);
  if (!(m.n1 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_mass_flux,
                          "lambda: incoming mass half moment N1 <= 0");
  }
  if (!(m.n2 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_momentum_flux,
                          "lambda: incoming momentum half moment N2 <= 0");
  }
  if (!(m.n5 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_energy_flux,
                          "lambda: incoming energy half moment N5 <= 0");
  }
  return m;
}

}  // namespace

const char* to_string(LambdaForm form) {
  switch (form) {
    case LambdaForm::direct: return "direct";
    case LambdaForm::recast: return "recast";
    case LambdaForm::checked: return "checked";
  }
  return "unknown";
}

double upsilon(const FarFieldState& state, const GasParams& gas) {
  const double p = state.p;
  const double T = state.T;
  const double m = state.mach;
  const double g = gas.gamma;
  const double d = gas.delta;
  const double den_root = 2.0 * p * (1.0 + g * m * m) - 1.0;
  if (den_root == 0.0) {
    throw InfeasibleError(Infeasibility::zero_denominator,
                          "upsilon: incoming momentum half moment vanishes");
  }
  const double num = 2.0 * (1.0 - p * std::sqrt(kTwoPi * g / T) * m) *
                     (4.0 + d - p * std::sqrt(kTwoPi * g * T) * m * (5.0 + d + g * m * m));
  return num / (kPi * den_root * den_root);
}

LambdaBreakdown lambda_direct(const FarFieldState& state, const GasParams& gas) {
  const HalfMoments n = checked_incoming(state, gas);
  const double d = gas.delta;

  ShapeSolution shape;
  const double f_reduced = min_flux_gamma_reduced(n, gas, &shape);

  const double far =
      state.p * std::sqrt(gas.gamma / state.T) * state.mach *
      (1.5 * kLog2Pi + 0.5 * (3.0 + d) + 0.5 * (5.0 + d) * std::log(state.T) -
       std::log(state.p));
  const double boundary = -kInvSqrt2Pi * (1.5 * kLog2Pi + 2.0 + 0.5 * d);

  LambdaBreakdown out;
  out.boundary_term = boundary;
  out.far_field_term = far;
  out.min_flux_term = f_reduced;
  out.value = boundary + far - f_reduced;
  out.upsilon = n.n1 * n.n5 / (n.n2 * n.n2);
  out.s = shape.s;
  out.form = LambdaForm::direct;
  return out;
}

LambdaBreakdown lambda_recast(const FarFieldState& state, const GasParams& gas) {
  const HalfMoments n = checked_incoming(state, gas);
  const double d = gas.delta;
  const double ups = upsilon(state, gas);
  if (!(ups > 1.0)) {
    throw InfeasibleError(Infeasibility::moment_ratio_not_above_one,
                          "lambda: N1 N5 / N2^2 <= 1");
  }
  const double s = solve_shape_parameter(ups, gas);

  const double q = std::sqrt(s * s + 2.0 * (4.0 + d) * ups);
  // r = s + q; the conjugate form avoids cancellation for s < 0.
  const double r = s >= 0.0 ? s + q : 2.0 * (4.0 + d) * ups / (q - s);
  const double theta_tilde = 0.5 - s * r / (2.0 * ups);

  // Delta = D * r^{4+delta} with D = (1+2s^2) Upsilon - s^2 - s q. The
  // printed polynomial cancels to the exp(-s^2) scale for large positive s,
  // so there the identity D = 2 Upsilon (theta - 1/2) takes over in log form.
  double log_d;
  if (s <= 1.5) {
    const double d_poly = (1.0 + 2.0 * s * s) * ups - s * s - s * q;
    if (!(d_poly > 0.0)) {
      throw NumericalError("lambda_recast: nonpositive Delta factor");
    }
    log_d = std::log(d_poly);
  } else {
    log_d = std::log(2.0 * ups) + log_theta_minus_half(s);
  }
  const double log_delta = log_d + (4.0 + d) * std::log(r);

  const double log_t = std::log(state.T);
  const double log_arg = kLog2 + (6.0 + d) * (0.5 * kLogPi + std::log(n.n2)) +
                         0.5 * (5.0 + d) * log_t + log_delta - theta_tilde -
                         std::log(state.p) -
                         (5.0 + d) * (0.5 * kLog2Pi + std::log(n.n5));

  LambdaBreakdown out;
  out.boundary_term = 0.0;
  out.far_field_term = kInvSqrt2Pi * (0.5 * (5.0 + d) * log_t - std::log(state.p) - 0.5);
  out.min_flux_term = n.n1 * log_arg;
  out.value = out.boundary_term + out.far_field_term - out.min_flux_term;
  out.upsilon = ups;
  out.s = s;
  out.form = LambdaForm::recast;
  return out;
}

LambdaBreakdown lambda(const FarFieldState& state, const GasParams& gas, LambdaForm form) {
  switch (form) {
    case LambdaForm::direct:
      return lambda_direct(state, gas);
    case LambdaForm::recast:
      return lambda_recast(state, gas);
    case LambdaForm::checked:
      break;
  }
  const LambdaBreakdown direct = lambda_direct(state, gas);
  const LambdaBreakdown recast = lambda_recast(state, gas);
  const double diff = std::abs(direct.value - recast.value);
  const double tol =
      std::abs(direct.value) < 1e-2 ? 1e-10 : 1e-8 * std::abs(direct.value);
  if (!(diff <= tol)) {
    throw CrossCheckError(direct.value, recast.value,
                          "lambda: direct and recast formulations disagree: " +
                              std::to_string(direct.value) + " vs " +
                              std::to_string(recast.value));
  }
  return direct;
}

std::optional<LambdaBreakdown> try_lambda(const FarFieldState& state,
                                          const GasParams& gas) noexcept {
  const HalfMoments m = incoming_half_moments(state, gas);
  if (!(m.n1 > 0.0) || !(m.n2 > 0.0) || !(m.n5 > 0.0)) return std::nullopt;
  if (!(m.n1 * m.n5 > m.n2 * m.n2)) return std::nullopt;
  try {
    return lambda_direct(state, gas);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace hsentropy
