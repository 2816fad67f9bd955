/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/min_flux.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsentropy/errors.hpp"
#include "hsentropy/kernels.hpp"
#include "solvers.hpp"

namespace hsentropy {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;

void require_feasible(const HalfMoments& m) {
  if (!(m.n1 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_mass_flux,
                          "incoming mass half moment N1 must be positive");
  }
  if (!(m.n2 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_momentum_flux,
                          "incoming momentum half moment N2 must be positive");
  }
  if (!(m.n5 > 0.0)) {
    throw InfeasibleError(Infeasibility::negative_energy_flux,
                          "incoming energy half moment N5 must be positive");
  }
}

// ---- 15-point Kronrod / 7-point Gauss core for psi_plus_quadrature ----

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& kron, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fsum = f(c - dx) + f(c + dx);
    k += kWgk[i] * fsum;
    if (i % 2 == 1) g += kWg[i / 2] * fsum;
  }
  kron = k * h;
  err = std::abs((k - g) * h);
}

template <class F>
double adaptive_gk(const F& f, double a, double b, double tol, int depth = 0) {
  double kron, err;
  gk15(f, a, b, kron, err);
  if (err <= tol || depth >= 40) {
    if (depth >= 40 && err > 1e3 * tol) {
      throw NumericalError("psi_plus_quadrature: integration did not converge");
    }
    return kron;
  }
  const double m = 0.5 * (a + b);
  return adaptive_gk(f, a, m, 0.5 * tol, depth + 1) +
         adaptive_gk(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

double solve_shape_parameter(double upsilon, const GasParams& gas) {
  if (!(upsilon > 1.0)) {
    throw InfeasibleError(Infeasibility::moment_ratio_not_above_one,
                          "shape equation requires N1 N5 / N2^2 > 1");
  }
  const double delta = gas.delta;
  const double phi_at_zero = (8.0 + 2.0 * delta) / kPi;

  double seed;
  if (upsilon > phi_at_zero) {
    seed = -std::sqrt(2.0 * upsilon / (2.0 + delta));
  } else if (upsilon < phi_at_zero) {
    seed = std::sqrt(0.5 * (3.0 + delta) / (upsilon - 1.0));
  } else {
    return 0.0;
  }

  auto g = [&](double s) { return shape_function(s, gas).phi - upsilon; };

  // Phi is decreasing, so the residual must change sign from the left end of
  // the bracket (positive) to the right end (negative).
  const double cap = 60.0 + 2.0 * std::abs(seed);
  double step = std::max(0.5, 0.25 * std::abs(seed));
  double lo = seed - step, hi = seed + step;
  double glo = g(lo), ghi = g(hi);
  while (glo < 0.0) {
    hi = lo;
    ghi = glo;
    lo -= step;
    step *= 1.7;
    if (seed - lo > cap) {
      throw NumericalError("solve_shape_parameter: no sign change left of seed");
    }
    glo = g(lo);
  }
  while (ghi > 0.0) {
    lo = hi;
    glo = ghi;
    hi += step;
    step *= 1.7;
    if (hi - seed > cap) {
      throw NumericalError("solve_shape_parameter: no sign change right of seed");
    }
    ghi = g(hi);
  }

  const double xtol = 1e-13 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  const double root = detail::brent_root(g, lo, hi, glo, ghi, xtol);
  if (!(std::abs(g(root)) <= 1e-12 * upsilon)) {
    throw NumericalError("solve_shape_parameter: residual above tolerance");
  }
  return root;
}

ShapeSolution maxwellian_from_moments(const HalfMoments& m, const GasParams& gas) {
  require_feasible(m);
  const double ups = m.n1 * m.n5 / (m.n2 * m.n2);
  const double s = solve_shape_parameter(ups, gas);

  double mm[6];
  double base;
  detail::moment_set(s, mm, base);
  const double lv1 = std::log(mm[1]) + base;
  const double lv2 = std::log(mm[2]) + base;
  const double d = gas.delta;

  ShapeSolution sol;
  sol.s = s;
  sol.beta = (m.n1 / m.n2) * (mm[2] / mm[1]);
  sol.w = s / sol.beta;
  sol.log_a = 2.0 * std::log(m.n1) - std::log(m.n2) + lv2 - 2.0 * lv1;
  sol.theta = theta(s);

  // (4+d) log I2 - (5+d) log I1 - theta(s): in the tail both log I_n and
  // theta carry s^2-sized parts that must cancel symbolically (s^2 can reach
  // 1e19 near the momentum-flux wall, far beyond double cancellation).
  // With theta = 1 + s^2 - s I2/I1 and the common scale base = -s^2,
  //   (4+d) lv2 - (5+d) lv1 - theta
  //     = (4+d) log m2 - (5+d) log m1 + (-base - s^2) + s (m2/m1) - 1,
  // and -base - s^2 vanishes exactly on the scaled branch.
  const double kernel_part =
      s < 0.0 ? (4.0 + d) * std::log(mm[2]) - (5.0 + d) * std::log(mm[1]) +
                    s * (mm[2] / mm[1]) - 1.0
              : (4.0 + d) * lv2 - (5.0 + d) * lv1 - sol.theta;
  sol.log_f_argument = (5.0 + d) * std::log(m.n1) - (4.0 + d) * std::log(m.n2) +
                       0.5 * d * kLog2 + kernel_part - kLogPi - (1.0 + 0.5 * d);
  return sol;
}

double min_flux_gamma_reduced(const HalfMoments& m, const GasParams& gas,
                              ShapeSolution* shape_out) {
  const ShapeSolution sol = maxwellian_from_moments(m, gas);
  if (shape_out != nullptr) *shape_out = sol;
  return m.n1 * sol.log_f_argument;
}

MinFluxValue min_flux(const HalfMoments& m, const GasParams& gas) {
  if (gas.delta == 0.0) {
    throw MonatomicUnsupportedError(
        "min_flux: the standalone value diverges at delta = 0; use the "
        "Gamma-cancelled grouping in the entropy-production module");
  }
  ShapeSolution sol;
  const double f_reduced = min_flux_gamma_reduced(m, gas, &sol);
  return MinFluxValue{f_reduced - m.n1 * std::lgamma(0.5 * gas.delta), sol};
}

HalfMoments analytic_half_moments(const DriftedMaxwellian& mx, const GasParams& gas) {
  if (!(mx.beta > 0.0)) {
    throw std::invalid_argument("analytic_half_moments: beta must be positive");
  }
  const double s = mx.beta * mx.w;
  double mm[6];
  double base;
  detail::moment_set(s, mm, base);
  const double log_beta = std::log(mx.beta);
  const double lv1 = std::log(mm[1]) + base;
  const double lv2 = std::log(mm[2]) + base;
  const double lv5 = std::log(mm[3] + (1.0 + 0.5 * gas.delta) * mm[1]) + base;
  return HalfMoments{std::exp(mx.log_a - log_beta + lv1),
                     std::exp(mx.log_a - 2.0 * log_beta + lv2),
                     std::exp(mx.log_a - 3.0 * log_beta + lv5)};
}

double psi_plus_quadrature(const MaxwellianMixture& mixture, const GasParams& gas,
                           double abs_tol) {
  if (gas.delta <= 0.0) {
    throw MonatomicUnsupportedError(
        "psi_plus_quadrature: requires delta > 0 (the internal-energy weight "
        "degenerates at delta = 0)");
  }
  if (mixture.components.empty()) {
    throw std::invalid_argument("psi_plus_quadrature: empty mixture");
  }
  const double d = gas.delta;

  struct Prepared {
    double log_c;  // log of weight * amplitude prefactor
    double beta2;
    double w;
  };
  std::vector<Prepared> comps;
  comps.reserve(mixture.components.size());
  double z_hi = 1.0;
  double beta2_min = std::numeric_limits<double>::infinity();
  for (const auto& c : mixture.components) {
    if (!(c.weight > 0.0) || !(c.maxwellian.beta > 0.0)) {
      throw std::invalid_argument("psi_plus_quadrature: weights and betas must be positive");
    }
    const double b = c.maxwellian.beta;
    const double log_amp = 0.5 * d * kLog2 + c.maxwellian.log_a +
                           (3.0 + d) * std::log(b) - std::lgamma(0.5 * d) - kLogPi;
    comps.push_back(Prepared{std::log(c.weight) + log_amp, b * b, c.maxwellian.w});
    z_hi = std::max(z_hi, c.maxwellian.w + 14.0 / b);
    beta2_min = std::min(beta2_min, b * b);
  }
  const double u_hi = (40.0 + 6.0 * d) / beta2_min;

  auto g_of = [&](double z, double u) {
    double g = 0.0;
    for (const auto& c : comps) {
      const double dz = z - c.w;
      g += std::exp(c.log_c - c.beta2 * (dz * dz + u));
    }
    return g;
  };

  // Psi_+ = pi Int z dz Int (2/d) (u/2)^{d/2} G log G du, with
  // G(z, u) = sum_k weight_k A_k exp(-beta_k^2 ((z-w_k)^2 + u)).
  const double u_weight = 2.0 / d / std::pow(2.0, 0.5 * d);
  auto inner = [&](double z) {
    auto f = [&](double u) {
      const double g = g_of(z, u);
      if (g <= 0.0) return 0.0;
      return u_weight * std::pow(u, 0.5 * d) * g * std::log(g);
    };
    return adaptive_gk(f, 0.0, u_hi, abs_tol / (8.0 * z_hi * std::max(z_hi, 1.0)));
  };
  auto outer = [&](double z) { return z * inner(z); };
  return kPi * adaptive_gk(outer, 0.0, z_hi, 0.25 * abs_tol / kPi);
}

}  // namespace hsentropy
