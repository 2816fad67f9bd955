/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_KERNELS_HPP
#define HSENTROPY_KERNELS_HPP

#include "hsentropy/gas.hpp"

namespace hsentropy {

// Scaled complementary error function erfc(x) * exp(x^2) for x >= 0.
// Below x = 6 this is the plain product; above, a Laplace continued
// fraction, so no overflow occurs for any representable x.
double erfcx(double x);

// One half-Gaussian moment I_n(s) = int_0^inf z^n exp(-(z-s)^2) dz held as
// mantissa * exp(log_scale). In the deep tail (s << 0) the moments shrink
// like exp(-s^2); keeping the scale separate lets ratios and logarithms of
// moments stay accurate far beyond the range of plain doubles.
struct ScaledMoment {
  double mantissa = 0.0;   // in [1, e) for positive values, 0 for zero
  double log_scale = 0.0;  // value() = mantissa * exp(log_scale)

  double value() const;  // may underflow to 0 deep in the tail; prefer log_value()
  double log_value() const;

  static ScaledMoment from_parts(double raw, double base_log_scale);
};

// I_n(s) for n in 0..5, any finite s. Built on I_0(s) = (sqrt(pi)/2) erfc(-s)
// and the two-term recursion I_n = s I_{n-1} + ((n-1)/2) I_{n-2}. For s >= -1
// the recursion runs upward; for s < -1 it runs downward (the wanted sequence
// is the minimal solution of the recurrence there, so upward evaluation would
// cancel catastrophically) and is pinned to the erfcx-based I_0.
ScaledMoment half_gauss_moment(int n, double s);

// I_num(s) / I_den(s) with the common exp(-s^2) tail factor cancelled
// analytically; finite for all s in the working range.
double moment_ratio(int num_n, int den_n, double s);

// theta(s) = (s I_0 + e^{-s^2}) / (2 s I_0 + e^{-s^2}), evaluated per branch
// as 1/2 + e^{-s^2}/(4 I_1) for s >= 0 and 1 - s I_0 / (2 I_1) for s < 0 so
// that no two nearly equal quantities are subtracted. theta > 1/2 always.
double theta(double s);

// log(theta(s) - 1/2), usable where theta itself has rounded to 1/2.
double log_theta_minus_half(double s);

struct ShapeFunctionValue {
  double phi;  // > 1 for all finite s
};

// Shape function Phi(s) = I_1 [I_3 + I_1 (1 + delta/2)] / I_2^2, the quantity
// matched against N1 N5 / N2^2 when recovering the constrained Maxwellian.
// Evaluated through moment ratios, so the tail scales cancel.
ShapeFunctionValue shape_function(double s, const GasParams& gas);

namespace detail {
// All six scaled moments at once, sharing one log-scale base.
// out[n] * exp(base) = I_n(s).
void moment_set(double s, double out[6], double& base);
}  // namespace detail

}  // namespace hsentropy

#endif
