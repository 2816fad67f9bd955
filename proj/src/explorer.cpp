/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/explorer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsentropy/admissibility.hpp"
#include "hsentropy/entropy.hpp"
#include "hsentropy/errors.hpp"
#include "solvers.hpp"

namespace hsentropy {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  }
  return g;
}

double score(double p, double t, double mach, const GasParams& gas) {
  const auto r = try_lambda(FarFieldState{p, t, mach}, gas);
  return r ? r->value : kNegInf;
}

struct PtOptimum {
  double p;
  double t;
  double value;
};

// Coarse log-spaced scan of the search box; nullopt when nothing is feasible.
std::optional<PtOptimum> scan_box(double mach, const GasParams& gas,
                                  const SearchBox& box, int np, int nt) {
  const std::vector<double> ps = log_grid(box.p_min, box.p_max, np);
  const std::vector<double> ts = log_grid(box.t_min, box.t_max, nt);
  PtOptimum best{0.0, 0.0, kNegInf};
  for (double t : ts) {
    for (double p : ps) {
      const double v = score(p, t, mach, gas);
      if (v > best.value) best = PtOptimum{p, t, v};
    }
  }
  if (best.value == kNegInf) return std::nullopt;
  return best;
}

PtOptimum refine_pt(double mach, const GasParams& gas, const SearchBox& box,
                    const PtOptimum& start, double step_p, double step_t) {
  auto objective = [&](double p, double t) {
    if (p < box.p_min || p > box.p_max || t < box.t_min || t > box.t_max) {
      return kNegInf;
    }
    return score(p, t, mach, gas);
  };
  const auto r = detail::nelder_mead_2d(objective, {start.p, start.t},
                                        {step_p, step_t}, 1e-8);
  if (r.value >= start.value) return PtOptimum{r.x[0], r.x[1], r.value};
  return start;
}

PtOptimum maximize_pt_full(double mach, const GasParams& gas, const SearchBox& box) {
  constexpr int kNp = 56;
  constexpr int kNt = 48;
  // At rest the bound does not depend on T; report the unique admissible
  // rest temperature instead of an arbitrary point of the flat direction.
  if (mach == 0.0 && box.t_min <= 1.0 && box.t_max >= 1.0) {
    const std::vector<double> ps = log_grid(box.p_min, box.p_max, 4 * kNp);
    int best = -1;
    double best_v = kNegInf;
    for (int i = 0; i < 4 * kNp; ++i) {
      const double v = score(ps[i], 1.0, 0.0, gas);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best < 0) {
      throw NoFeasiblePointError("maximize_lambda_pt: no feasible state in the search box");
    }
    auto f = [&](double p) { return score(p, 1.0, 0.0, gas); };
    const double p_hat = detail::golden_max(f, ps[std::max(0, best - 1)],
                                            ps[std::min(4 * kNp - 1, best + 1)], 1e-10);
    return PtOptimum{p_hat, 1.0, f(p_hat)};
  }
  const auto coarse = scan_box(mach, gas, box, kNp, kNt);
  if (!coarse) {
    throw NoFeasiblePointError("maximize_lambda_pt: no feasible state in the search box");
  }
  const double ratio_p = std::pow(box.p_max / box.p_min, 1.0 / (kNp - 1));
  const double ratio_t = std::pow(box.t_max / box.t_min, 1.0 / (kNt - 1));
  return refine_pt(mach, gas, box, *coarse, 0.5 * coarse->p * (ratio_p - 1.0),
                   0.5 * coarse->t * (ratio_t - 1.0));
}

struct POptimum {
  double p;
  double value;
  bool boundary;
};

// 1-D maximization over p inside [lo, hi] starting from an npts log scan.
std::optional<POptimum> maximize_p_core(double t, double mach, const GasParams& gas,
                                        double lo, double hi, int npts) {
  const std::vector<double> ps = log_grid(lo, hi, npts);
  int best = -1;
  double best_v = kNegInf;
  for (int i = 0; i < npts; ++i) {
    const double v = score(ps[i], t, mach, gas);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best < 0) return std::nullopt;

  const double a = ps[std::max(0, best - 1)];
  const double b = ps[std::min(npts - 1, best + 1)];
  auto f = [&](double p) { return score(p, t, mach, gas); };
  const double p_star = detail::golden_max(f, a, b, 1e-10);
  const double v_star = f(p_star);
  POptimum out;
  if (v_star >= best_v) {
    out.p = p_star;
    out.value = v_star;
  } else {
    out.p = ps[best];
    out.value = best_v;
  }

  const double probe = 1e-7 * std::max(1.0, out.p);
  out.boundary = best == 0 || best == npts - 1 ||
                 out.p - probe < lo || out.p + probe > hi ||
                 score(out.p - probe, t, mach, gas) == kNegInf ||
                 score(out.p + probe, t, mach, gas) == kNegInf;
  return out;
}

// Admissibility-intersected p-range for the boundary scan (the NC1 wall from
// below; for evaporation also the three NCP1 cuts from above).
bool boundary_scan_range(double t, double mach, const GasParams& gas,
                         const PBounds& bounds, double& lo, double& hi) {
  const double g = gas.gamma;
  const double d = gas.delta;
  const double wall = 1.0 / (2.0 * (1.0 + g * mach * mach));
  lo = std::max(bounds.p_min, wall * (1.0 + 1e-9));
  hi = bounds.p_max;
  if (mach > 0.0) {
    const double cut_flux = std::sqrt(t) / (std::sqrt(kTwoPi * g) * mach);
    const double cut_energy = (4.0 + d) / (g * std::sqrt(kTwoPi * g) * std::sqrt(t) *
                                           mach * (3.0 + d + mach * mach));
    const double cut_pressure =
        std::exp(-0.5 * (5.0 + d) * std::log1p(mach * mach / (3.0 + d)));
    hi = std::min(hi, std::min(cut_flux, cut_energy) * (1.0 - 1e-12));
    hi = std::min(hi, cut_pressure);
  }
  return lo < hi;
}

struct ZeroResult {
  double p;
  bool genuine;  // false when the bisection ran into a feasibility edge
};

// Bisect between a feasible positive pressure and a nonpositive (or
// infeasible) one. The positive side is kept feasible throughout, so the
// returned point either sits on a genuine zero or exposes a feasibility
// truncation (the bound jumps to -inf across the edge instead of crossing 0).
ZeroResult refine_zero(double p_other, double p_pos, double t, double mach,
                       const GasParams& gas) {
  auto value = [&](double p) { return score(p, t, mach, gas); };
  for (int iter = 0; iter < 120; ++iter) {
    const double mid = 0.5 * (p_other + p_pos);
    const double vm = value(mid);
    if (vm != kNegInf && std::abs(vm) <= 1e-12) return ZeroResult{mid, true};
    if (vm > 0.0) {
      p_pos = mid;
    } else {
      p_other = mid;
    }
    if (std::abs(p_pos - p_other) < 4e-16 * std::max(1.0, std::abs(p_pos))) break;
  }
  return ZeroResult{p_pos, std::abs(value(p_pos)) <= 1e-10};
}

std::vector<BoundarySample> boundary_row(double t, double mach, const GasParams& gas,
                                         const PBounds& bounds, int p_points) {
  std::vector<BoundarySample> out;

  // At rest the bound loses its temperature dependence and vanishes on the
  // whole line p = 1, so the applicable necessary condition is the
  // trivial-solution one: only (p, T) = (1, 1) survives the cut.
  if (mach == 0.0) {
    if (check_stationary({1.0, t, 0.0}).satisfied &&
        std::abs(score(1.0, t, 0.0, gas)) <= 1e-10) {
      out.push_back(BoundarySample{0.0, t, 1.0, 1.0, false, false});
    }
    return out;
  }

  double lo, hi;
  if (!boundary_scan_range(t, mach, gas, bounds, lo, hi)) return out;

  const std::vector<double> ps = log_grid(lo, hi, p_points);
  std::vector<double> vals(ps.size());
  int best = -1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    vals[i] = score(ps[i], t, mach, gas);
    if (vals[i] != kNegInf && (best < 0 || vals[i] > vals[best])) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) return out;

  bool open = false;
  BoundarySample cur{mach, t, 0.0, 0.0, false, false};
  auto feasible = [&](std::size_t i) { return vals[i] != kNegInf; };
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const bool pos = feasible(i) && vals[i] > 0.0;
    if (!open && pos) {
      open = true;
      if (i > 0 && feasible(i - 1)) {
        const ZeroResult z = refine_zero(ps[i - 1], ps[i], t, mach, gas);
        cur.p_lower = z.p;
        cur.lower_truncated = !z.genuine;
      } else {
        cur.p_lower = ps[i];
        cur.lower_truncated = true;
      }
    } else if (open && !pos) {
      if (feasible(i)) {
        const ZeroResult z = refine_zero(ps[i], ps[i - 1], t, mach, gas);
        cur.p_upper = z.p;
        cur.upper_truncated = !z.genuine;
      } else {
        cur.p_upper = ps[i - 1];
        cur.upper_truncated = true;
      }
      out.push_back(cur);
      open = false;
      cur.lower_truncated = cur.upper_truncated = false;
    }
  }
  if (open) {
    cur.p_upper = ps.back();
    cur.upper_truncated = true;
    out.push_back(cur);
  }

  // Grazing zero: the bound stays negative on the whole grid but its maximum
  // sits within refinement reach of zero (the M = 0 pinch at (1,1) is the
  // canonical case).
  if (out.empty() && vals[best] > -1e-3) {
    const double a = ps[std::max(0, best - 1)];
    const double b = ps[std::min<int>(static_cast<int>(ps.size()) - 1, best + 1)];
    auto f = [&](double p) { return score(p, t, mach, gas); };
    const double pk = detail::golden_max(f, a, b, 1e-11);
    const double vk = f(pk);
    if (vk != kNegInf && std::abs(vk) <= 1e-10) {
      out.push_back(BoundarySample{mach, t, pk, pk, false, false});
    }
  }
  return out;
}

}  // namespace

CurvePoint maximize_lambda_pt(double mach, const GasParams& gas, const SearchBox& box) {
  if (!(mach >= 0.0)) {
    throw std::invalid_argument("maximize_lambda_pt: requires mach >= 0");
  }
  const PtOptimum o = maximize_pt_full(mach, gas, box);
  return CurvePoint{mach, o.p, o.t, o.value};
}

std::vector<CurvePoint> evaporation_curve(const GasParams& gas,
                                          std::span<const double> mach_grid,
                                          const SearchBox& box,
                                          std::vector<double>* rejected) {
  std::vector<CurvePoint> out;
  bool have_prev = false;
  PtOptimum prev{0.0, 0.0, 0.0};
  for (double mach : mach_grid) {
    std::optional<PtOptimum> opt;
    if (have_prev) {
      const PtOptimum warm = refine_pt(mach, gas, box, PtOptimum{prev.p, prev.t, kNegInf},
                                       0.01 * prev.p, 0.01 * prev.t);
      // Branch-jump guard: fall back to the full scan when the warm-started
      // optimum loses more than 10% against the neighbouring point.
      if (warm.value == kNegInf ||
          warm.value < prev.value - 0.1 * std::abs(prev.value)) {
        try {
          const PtOptimum full = maximize_pt_full(mach, gas, box);
          opt = (full.value > warm.value) ? full : warm;
        } catch (const NoFeasiblePointError&) {
          if (warm.value != kNegInf) opt = warm;
        }
      } else {
        opt = warm;
      }
    } else {
      try {
        opt = maximize_pt_full(mach, gas, box);
      } catch (const NoFeasiblePointError&) {
        opt.reset();
      }
    }

    if (opt && opt->value >= 0.0) {
      out.push_back(CurvePoint{mach, opt->p, opt->t, opt->value});
      prev = *opt;
      have_prev = true;
    } else {
      if (rejected != nullptr) rejected->push_back(mach);
      if (opt) {
        prev = *opt;  // still a useful warm start for the next grid point
        have_prev = true;
      }
    }
  }
  return out;
}

double max_positive_mach(const GasParams& gas, const SearchBox& box,
                         double upper_probe, double mach_tol) {
  auto positive_max = [&](double mach) {
    try {
      return maximize_lambda_pt(mach, gas, box).lambda_max >= 0.0;
    } catch (const NoFeasiblePointError&) {
      return false;
    }
  };
  double lo = 0.01;
  if (!positive_max(lo)) {
    throw NumericalError("max_positive_mach: no positive entropy production near rest");
  }
  double hi = upper_probe;
  if (positive_max(hi)) {
    throw NumericalError("max_positive_mach: predicate still true at the upper probe");
  }
  while (hi - lo > mach_tol) {
    const double mid = 0.5 * (lo + hi);
    if (positive_max(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SurfaceSample maximize_lambda_p(double temperature, double mach, const GasParams& gas,
                                const PBounds& bounds) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("maximize_lambda_p: requires temperature > 0");
  }
  if (!(mach < 0.0)) {
    throw std::invalid_argument("maximize_lambda_p: requires mach < 0");
  }
  const double wall = 1.0 / (2.0 * (1.0 + gas.gamma * mach * mach));
  const double lo = std::max(bounds.p_min, wall * (1.0 + 1e-9));
  if (!(lo < bounds.p_max)) {
    throw NoFeasiblePointError("maximize_lambda_p: empty pressure range");
  }
  const auto o = maximize_p_core(temperature, mach, gas, lo, bounds.p_max, 200);
  if (!o) {
    throw NoFeasiblePointError("maximize_lambda_p: no feasible pressure");
  }
  return SurfaceSample{mach, temperature, o->p, o->value, o->boundary};
}

std::vector<SurfaceSample> condensation_surface(
    const GasParams& gas, std::span<const double> t_grid,
    std::span<const double> mach_grid, const PBounds& bounds,
    std::vector<std::pair<double, double>>* infeasible_cells) {
  std::vector<std::vector<SurfaceSample>> rows(t_grid.size());
  std::vector<std::vector<std::pair<double, double>>> missing(t_grid.size());

  detail::parallel_for_index(t_grid.size(), [&](std::size_t ti) {
    const double t = t_grid[ti];
    bool have_prev = false;
    POptimum prev{0.0, 0.0, false};
    for (double mach : mach_grid) {
      const double wall = 1.0 / (2.0 * (1.0 + gas.gamma * mach * mach));
      const double lo = std::max(bounds.p_min, wall * (1.0 + 1e-9));
      std::optional<POptimum> o;
      if (lo < bounds.p_max) {
        if (have_prev) {
          const double nlo = std::max(lo, prev.p / 1.4);
          const double nhi = std::min(bounds.p_max, prev.p * 1.4);
          if (nlo < nhi) o = maximize_p_core(t, mach, gas, nlo, nhi, 48);
          // Branch-jump guard as for the evaporation curve.
          if (!o || o->value < prev.value - 0.1 * std::abs(prev.value)) {
            const auto full = maximize_p_core(t, mach, gas, lo, bounds.p_max, 200);
            if (full && (!o || full->value > o->value)) o = full;
          }
        } else {
          o = maximize_p_core(t, mach, gas, lo, bounds.p_max, 200);
        }
      }
      if (o) {
        rows[ti].push_back(SurfaceSample{mach, t, o->p, o->value, o->boundary});
        prev = *o;
        have_prev = true;
      } else {
        missing[ti].emplace_back(t, mach);
        have_prev = false;
      }
    }
  });

  std::vector<SurfaceSample> out;
  for (std::size_t ti = 0; ti < rows.size(); ++ti) {
    out.insert(out.end(), rows[ti].begin(), rows[ti].end());
    if (infeasible_cells != nullptr) {
      infeasible_cells->insert(infeasible_cells->end(), missing[ti].begin(),
                               missing[ti].end());
    }
  }
  return out;
}

std::vector<BoundarySample> boundary_surface(const GasParams& gas,
                                             std::span<const double> t_grid,
                                             std::span<const double> mach_grid,
                                             const PBounds& bounds, int p_points) {
  if (p_points < 8) {
    throw std::invalid_argument("boundary_surface: p_points too small");
  }
  const std::size_t cells = t_grid.size() * mach_grid.size();
  std::vector<std::vector<BoundarySample>> per_cell(cells);
  detail::parallel_for_index(cells, [&](std::size_t i) {
    const double t = t_grid[i / mach_grid.size()];
    const double mach = mach_grid[i % mach_grid.size()];
    per_cell[i] = boundary_row(t, mach, gas, bounds, p_points);
  });
  std::vector<BoundarySample> out;
  for (const auto& cell : per_cell) {
    out.insert(out.end(), cell.begin(), cell.end());
  }
  return out;
}

}  // namespace hsentropy
