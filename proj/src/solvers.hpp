/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_SRC_SOLVERS_HPP
#define HSENTROPY_SRC_SOLVERS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

// Internal scalar solvers and a deterministic parallel loop. Header-private
// to the library sources.
namespace hsentropy::detail {

// Brent root finder. Requires fa * fb <= 0. Converges to |b-a| <= xtol.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, double xtol,
                  int max_iter = 200) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant step
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

// Golden-section maximization of a unimodal f on [a, b] to |b-a| <= xtol.
template <class F>
double golden_max(F&& f, double a, double b, double xtol) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct Simplex2dResult {
  std::array<double, 2> x;
  double value;
};

// Nelder-Mead maximization in two dimensions. Converges when the vertex
// spread is below diam_tol in each coordinate separately.
template <class F>
Simplex2dResult nelder_mead_2d(F&& f, std::array<double, 2> start,
                               std::array<double, 2> step, double diam_tol,
                               int max_iter = 600) {
  using Vec = std::array<double, 2>;
  struct Vertex {
    Vec x;
    double v;
  };
  auto eval = [&](const Vec& x) { return Vertex{x, f(x[0], x[1])}; };

  std::array<Vertex, 3> vx = {
      eval(start),
      eval({start[0] + step[0], start[1]}),
      eval({start[0], start[1] + step[1]})};

  auto order = [&]() {
    std::sort(vx.begin(), vx.end(),
              [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
  };
  order();

  for (int iter = 0; iter < max_iter; ++iter) {
    const double dx = std::max({std::abs(vx[0].x[0] - vx[1].x[0]),
                                std::abs(vx[0].x[0] - vx[2].x[0]),
                                std::abs(vx[1].x[0] - vx[2].x[0])});
    const double dy = std::max({std::abs(vx[0].x[1] - vx[1].x[1]),
                                std::abs(vx[0].x[1] - vx[2].x[1]),
                                std::abs(vx[1].x[1] - vx[2].x[1])});
    if (dx < diam_tol && dy < diam_tol) break;

    const Vec centroid = {0.5 * (vx[0].x[0] + vx[1].x[0]),
                          0.5 * (vx[0].x[1] + vx[1].x[1])};
    auto along = [&](double t) {
      return Vec{centroid[0] + t * (centroid[0] - vx[2].x[0]),
                 centroid[1] + t * (centroid[1] - vx[2].x[1])};
    };

    const Vertex refl = eval(along(1.0));
    if (refl.v > vx[0].v) {
      const Vertex expd = eval(along(2.0));
      vx[2] = (expd.v > refl.v) ? expd : refl;
    } else if (refl.v > vx[1].v) {
      vx[2] = refl;
    } else {
      const Vertex contr = eval(along(refl.v > vx[2].v ? 0.5 : -0.5));
      if (contr.v > std::max(refl.v, vx[2].v)) {
        vx[2] = contr;
      } else {
        // shrink towards the best vertex
        for (int i = 1; i < 3; ++i) {
          vx[i] = eval({0.5 * (vx[i].x[0] + vx[0].x[0]),
                        0.5 * (vx[i].x[1] + vx[0].x[1])});
        }
      }
    }
    order();
  }
  return Simplex2dResult{vx[0].x, vx[0].v};
}

// Static block partition over [0, n); results written by index stay in
// deterministic order regardless of the thread count.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t workers = std::min<std::size_t>(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hsentropy::detail

#endif
