/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_EXPLORER_HPP
#define HSENTROPY_EXPLORER_HPP

#include <span>
#include <utility>
#include <vector>

#include "hsentropy/gas.hpp"

namespace hsentropy {

// (p, T) search box for the evaporation-side maximization.
struct SearchBox {
  double p_min = 0.005;
  double p_max = 1.3;
  double t_min = 0.05;
  double t_max = 3.0;
};

// p-range for the condensation-side maximization and the boundary scans.
// The 7.0 cap matches the plotted range of the condensation figures.
struct PBounds {
  double p_min = 1e-3;
  double p_max = 7.0;
};

// One point of the maximal-entropy-production curve p#(M), T#(M).
struct CurvePoint {
  double mach;
  double p_sharp;
  double t_sharp;
  double lambda_max;
};

// One sample of the maximal-entropy-production surface p*(T, M).
// boundary_flag marks maximizers pinned against a feasibility edge, where
// stationarity cannot hold.
struct SurfaceSample {
  double mach;
  double temperature;
  double p_star;
  double lambda_max;
  bool boundary_flag;
};

// One p-interval of positive entropy production at fixed (T, M). Endpoints
// are zeros of the bound unless the corresponding truncation flag is set
// (positive region cut off by the p-cap or a feasibility edge rather than by
// a zero crossing). A degenerate interval (p_lower == p_upper) marks a
// grazing zero.
struct BoundarySample {
  double mach;
  double temperature;
  double p_lower;
  double p_upper;
  bool lower_truncated;
  bool upper_truncated;
};

// Derivative-free 2-D maximization of the entropy bound over (p, T) at fixed
// mach >= 0: coarse log-spaced scan, then simplex refinement with infeasible
// probes scored at -inf. Throws NoFeasiblePointError if the box contains no
// feasible state.
CurvePoint maximize_lambda_pt(double mach, const GasParams& gas,
                              const SearchBox& box = SearchBox{});

// Maximal-entropy-production curve over an ascending grid of mach >= 0.
// Grid points whose maximum is negative are excluded; if rejected is given,
// the excluded mach values are appended to it. Each point warm-starts the
// next maximization.
std::vector<CurvePoint> evaporation_curve(const GasParams& gas,
                                          std::span<const double> mach_grid,
                                          const SearchBox& box = SearchBox{},
                                          std::vector<double>* rejected = nullptr);

// Largest mach with max_{p,T} Lambda >= 0, located by bisection to mach_tol.
// Throws NumericalError if the predicate still holds at the upper probe.
double max_positive_mach(const GasParams& gas, const SearchBox& box = SearchBox{},
                         double upper_probe = 3.0, double mach_tol = 1e-3);

// 1-D maximization over p at fixed temperature > 0 and mach < 0: coarse
// log-spaced scan, then golden-section refinement to 1e-10 in p.
SurfaceSample maximize_lambda_p(double temperature, double mach, const GasParams& gas,
                                const PBounds& bounds = PBounds{});

// Row-major surface samples over (t_grid x mach_grid), warm-started along
// mach within each temperature row; infeasible cells are skipped and, if
// requested, reported as (T, mach) pairs.
std::vector<SurfaceSample> condensation_surface(
    const GasParams& gas, std::span<const double> t_grid,
    std::span<const double> mach_grid, const PBounds& bounds = PBounds{},
    std::vector<std::pair<double, double>>* infeasible_cells = nullptr);

// Zero-level intervals of the entropy bound: for each (T, M), scan p on a log
// grid over the admissibility-intersected range, bracket the sign changes and
// refine each root to |Lambda| <= 1e-10.
std::vector<BoundarySample> boundary_surface(const GasParams& gas,
                                             std::span<const double> t_grid,
                                             std::span<const double> mach_grid,
                                             const PBounds& bounds = PBounds{},
                                             int p_points = 400);

}  // namespace hsentropy

#endif
