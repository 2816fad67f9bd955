/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_MIN_FLUX_HPP
#define HSENTROPY_MIN_FLUX_HPP

#include <vector>

#include "hsentropy/gas.hpp"

namespace hsentropy {

// Parameters of the constrained Maxwellian recovered from half moments: the
// root s of the shape equation, amplitude a (kept in log form -- it scales
// like exp(s^2) in the tail), inverse thermal speed beta, axial drift
// w = s/beta, theta(s), and the log argument of the minimal entropy flux.
struct ShapeSolution {
  double s;
  double log_a;
  double beta;
  double w;
  double theta;
  // log of F/N1 with the log Gamma(delta/2) term factored out, so it stays
  // finite for delta = 0 as well.
  double log_f_argument;
};

struct MinFluxValue {
  double f_value;
  ShapeSolution shape;
};

// The unique s with shape_function(s) = upsilon. Requires upsilon > 1
// (infeasible-moments error otherwise). Seeded from the asymptotes
// s ~ sqrt((3+delta)/2) (upsilon-1)^{-1/2} (upsilon near 1) and
// s ~ -sqrt(2 upsilon / (2+delta)) (upsilon large), bracketed and refined
// by a Brent solve; |Phi(s) - upsilon| <= 1e-12 upsilon on return.
double solve_shape_parameter(double upsilon, const GasParams& gas);

// Invert the moment equations: requires n1, n2, n5 > 0 and n1 n5 / n2^2 > 1.
ShapeSolution maxwellian_from_moments(const HalfMoments& moments, const GasParams& gas);

// Minimal entropy half-flux F(N1, N2, N5) over distributions with the given
// half moments (attained by the constrained Maxwellian). The standalone value
// carries log Gamma(delta/2) and therefore requires delta > 0; the delta = 0
// case is served through the Gamma-cancelled grouping in the
// entropy-production module.
MinFluxValue min_flux(const HalfMoments& moments, const GasParams& gas);

// F + N1 * lgamma(delta/2), finite for all delta >= 0. This is the grouping
// the entropy-production bound consumes.
double min_flux_gamma_reduced(const HalfMoments& moments, const GasParams& gas,
                              ShapeSolution* shape_out = nullptr);

// Drifted axial Maxwellian in (z, r, I) variables; amplitude in log form.
struct DriftedMaxwellian {
  double log_a;
  double beta;
  double w;
};

// Convex mixture of drifted Maxwellians.
struct MaxwellianMixture {
  struct Component {
    double weight;
    DriftedMaxwellian maxwellian;
  };
  std::vector<Component> components;
};

// Forward evaluation of the moment equations for one Maxwellian.
HalfMoments analytic_half_moments(const DriftedMaxwellian& maxwellian, const GasParams& gas);

// Entropy half-flux Psi_+ of a Maxwellian mixture by numerical quadrature.
// The axisymmetric 3-D integral collapses analytically to two dimensions
// (the integrand depends on r and I only through r^2 + 2I), which is what
// makes the stated tolerance practical. Requires delta > 0.
double psi_plus_quadrature(const MaxwellianMixture& mixture, const GasParams& gas,
                           double abs_tol = 1e-10);

}  // namespace hsentropy

#endif
