/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsentropy {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kE = 2.71828182845904523536;

// Downward (Miller) evaluation of the scaled tail moments
// I_n(-sigma) * exp(sigma^2), sigma >= 1. The recurrence
// f_{k-1} = 2 (f_{k+1} + sigma f_k) / k has only positive terms, so it is
// cancellation-free, and the wanted sequence is its minimal solution as k
// grows, so seeding high and recursing down converges onto it. The result is
// pinned to the erfcx-based I_0.
void tail_moment_set(double sigma, double out[6]) {
  const double d = 2.3 + 12.0 / sigma;
  const int depth = std::clamp(static_cast<int>(d * d) + 8, 48, 400);

  double f_up = 0.0;   // f_{k+1}
  double f_cur = 1.0;  // f_k
  double collected[6] = {0, 0, 0, 0, 0, 0};
  for (int k = depth; k >= 1; --k) {
    const double f_down = 2.0 * (f_up + sigma * f_cur) / static_cast<double>(k);
    f_up = f_cur;
    f_cur = f_down;  // now holds f_{k-1}
    if (k - 1 <= 5) collected[k - 1] = f_cur;
    if (f_cur > 1e280) {
      f_up *= 1e-280;
      f_cur *= 1e-280;
      for (double& c : collected) c *= 1e-280;
    }
  }

  const double scaled_i0 = 0.5 * kSqrtPi * erfcx(sigma);
  const double ratio = scaled_i0 / collected[0];
  for (int n = 0; n < 6; ++n) out[n] = collected[n] * ratio;
}

}  // namespace

double erfcx(double x) {
  if (x < 6.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  // Laplace continued fraction 1/sqrtpi / (x + (1/2)/(x + 1/(x + (3/2)/(...))))
  double cf = 0.0;
  for (int k = 60; k >= 1; --k) {
    cf = (0.5 * k) / (x + cf);
  }
  return kInvSqrtPi / (x + cf);
}

double ScaledMoment::value() const { return mantissa * std::exp(log_scale); }

double ScaledMoment::log_value() const { return std::log(mantissa) + log_scale; }

ScaledMoment ScaledMoment::from_parts(double raw, double base_log_scale) {
  if (raw == 0.0) return ScaledMoment{0.0, 0.0};
  const double total = std::log(raw) + base_log_scale;
  double shift = std::floor(total);
  double mant = std::exp(total - shift);
  while (mant >= kE) {
    mant /= kE;
    shift += 1.0;
  }
  return ScaledMoment{mant, shift};
}

namespace detail {

void moment_set(double s, double out[6], double& base) {
  if (s >= 0.0) {
    const double i0 = 0.5 * kSqrtPi * std::erfc(-s);
    const double e = std::exp(-s * s);  // flushes to 0 for s > ~26.6, harmless
    out[0] = i0;
    out[1] = s * i0 + 0.5 * e;
    for (int n = 2; n < 6; ++n) {
      out[n] = s * out[n - 1] + 0.5 * (n - 1) * out[n - 2];
    }
    base = 0.0;
    return;
  }
  base = -s * s;
  if (s > -1.0) {
    // Mild tail: the upward recursion on exp(s^2)-scaled values loses at most
    // a few digits of the last moment here; beyond s = -1 it would not.
    const double g = 0.5 * kSqrtPi * erfcx(-s);
    out[0] = g;
    out[1] = s * g + 0.5;
    for (int n = 2; n < 6; ++n) {
      out[n] = s * out[n - 1] + 0.5 * (n - 1) * out[n - 2];
    }
    return;
  }
  tail_moment_set(-s, out);
}

}  // namespace detail

ScaledMoment half_gauss_moment(int n, double s) {
  if (n < 0 || n > 5) {
    throw std::invalid_argument("half_gauss_moment: n must be in 0..5");
  }
  if (!std::isfinite(s)) {
    throw std::invalid_argument("half_gauss_moment: s must be finite");
  }
  double m[6];
  double base;
  detail::moment_set(s, m, base);
  return ScaledMoment::from_parts(m[n], base);
}

double moment_ratio(int num_n, int den_n, double s) {
  if (num_n < 0 || num_n > 5 || den_n < 0 || den_n > 5) {
    throw std::invalid_argument("moment_ratio: indices must be in 0..5");
  }
  double m[6];
  double base;
  detail::moment_set(s, m, base);
  return m[num_n] / m[den_n];
}

double theta(double s) {
  if (!std::isfinite(s)) {
    throw std::invalid_argument("theta: s must be finite");
  }
  if (s >= 0.0) {
    const double i0 = 0.5 * kSqrtPi * std::erfc(-s);
    const double e = std::exp(-s * s);
    const double i1 = s * i0 + 0.5 * e;
    return 0.5 + e / (4.0 * i1);
  }
  double m[6];
  double base;
  detail::moment_set(s, m, base);
  return 1.0 - 0.5 * s * (m[0] / m[1]);  // s < 0: sum of positive terms
}

double log_theta_minus_half(double s) {
  if (s >= 0.0) {
    const double i0 = 0.5 * kSqrtPi * std::erfc(-s);
    const double e = std::exp(-s * s);
    const double i1 = s * i0 + 0.5 * e;
    return -s * s - std::log(4.0 * i1);
  }
  double m[6];
  double base;
  detail::moment_set(s, m, base);
  return std::log(0.5 - 0.5 * s * (m[0] / m[1]));
}

ShapeFunctionValue shape_function(double s, const GasParams& gas) {
  if (!std::isfinite(s)) {
    throw std::invalid_argument("shape_function: s must be finite");
  }
  double m[6];
  double base;
  detail::moment_set(s, m, base);
  const double phi =
      m[1] * (m[3] + m[1] * (1.0 + 0.5 * gas.delta)) / (m[2] * m[2]);
  return ShapeFunctionValue{phi};
}

}  // namespace hsentropy
