/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_ERRORS_HPP
#define HSENTROPY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsentropy {

// Which feasibility requirement a state failed. The incoming half moments
// must be positive and their ratio N1*N5/N2^2 must exceed 1 before the
// constrained Maxwellian (and hence the minimal entropy flux) exists.
enum class Infeasibility {
  negative_mass_flux,      // N1 <= 0
  negative_momentum_flux,  // N2 <= 0
  negative_energy_flux,    // N5 <= 0
  moment_ratio_not_above_one,
  zero_denominator,
};

const char* to_string(Infeasibility reason);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(Infeasibility reason, const std::string& what)
      : Error(what), reason_(reason) {}
  Infeasibility reason() const { return reason_; }

 private:
  Infeasibility reason_;
};

// A numerical procedure (bracketing, quadrature, ...) failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// min_flux called standalone at delta = 0, where the log Gamma(delta/2)
// term diverges; callers must go through the Gamma-cancelled grouping of
// the entropy-production module instead.
class MonatomicUnsupportedError : public Error {
 public:
  using Error::Error;
};

// The two formulations of the entropy-production bound disagreed beyond
// tolerance; carries both values for diagnosis.
class CrossCheckError : public Error {
 public:
  CrossCheckError(double direct_value, double recast_value, const std::string& what)
      : Error(what), direct_(direct_value), recast_(recast_value) {}
  double direct_value() const { return direct_; }
  double recast_value() const { return recast_; }

 private:
  double direct_;
  double recast_;
};

// An optimization search box contained no feasible point.
class NoFeasiblePointError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsentropy

#endif
