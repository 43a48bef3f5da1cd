// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "supent/error.hpp"

namespace supent {

namespace {

double checked(const ScalarFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    fail(ErrorKind::NonFiniteObjective, "objective is not finite at x = " + std::to_string(x));
  }
  return y;
}

void require_interval(double a, double b, std::size_t grid_n) {
  if (!(a < b)) fail(ErrorKind::DomainError, "search interval must satisfy a < b");
  if (grid_n < 3) fail(ErrorKind::DomainError, "grid needs at least 3 points");
}

}  // namespace

OptimizerResult minimize_scalar(const ScalarFunction& f, double a, double b, std::size_t grid_n,
                                double tol) {
  require_interval(a, b, grid_n);
  const double step = (b - a) / static_cast<double>(grid_n - 1);
  auto grid_x = [&](std::size_t k) { return k + 1 == grid_n ? b : a + step * static_cast<double>(k); };

  std::size_t best_k = 0;
  double best_x = a;
  double best_y = checked(f, a);
  for (std::size_t k = 1; k < grid_n; ++k) {
    const double x = grid_x(k);
    const double y = checked(f, x);
    if (y < best_y) {
      best_k = k;
      best_x = x;
      best_y = y;
    }
  }

  double lo = grid_x(best_k == 0 ? 0 : best_k - 1);
  double hi = grid_x(std::min(best_k + 1, grid_n - 1));
  auto consider = [&](double x, double y) {
    if (y < best_y) {
      best_x = x;
      best_y = y;
    }
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double y1 = checked(f, x1);
  double y2 = checked(f, x2);
  consider(x1, y1);
  consider(x2, y2);

  OptimizerResult r;
  while (hi - lo > tol && r.iterations < kMaxOptimizerIterations) {
    ++r.iterations;
    if (y1 <= y2) {
      hi = x2;
      x2 = x1;
      y2 = y1;
      x1 = hi - inv_phi * (hi - lo);
      y1 = checked(f, x1);
      consider(x1, y1);
    } else {
      lo = x1;
      x1 = x2;
      y1 = y2;
      x2 = lo + inv_phi * (hi - lo);
      y2 = checked(f, x2);
      consider(x2, y2);
    }
  }
  r.converged = hi - lo <= tol;
  r.x_star = best_x;
  r.value = best_y;
  return r;
}

OptimizerResult maximize_scalar(const ScalarFunction& f, double a, double b, std::size_t grid_n,
                                double tol) {
  OptimizerResult r = minimize_scalar([&f](double x) { return -f(x); }, a, b, grid_n, tol);
  r.value = -r.value;
  return r;
}

OptimizerResult find_root_bisect(const ScalarFunction& g, double a, double b, double tol) {
  if (!(a < b)) fail(ErrorKind::DomainError, "bisection interval must satisfy a < b");
  double ga = checked(g, a);
  const double gb = checked(g, b);
  OptimizerResult r;
  if (ga == 0.0 || gb == 0.0) {
    r.x_star = ga == 0.0 ? a : b;
    r.converged = true;
    return r;
  }
  if ((ga > 0.0) == (gb > 0.0)) {
    fail(ErrorKind::NoSignChange, "g has the same sign at both ends of the bracket");
  }
  double lo = a;
  double hi = b;
  while (hi - lo > tol && r.iterations < kMaxOptimizerIterations) {
    ++r.iterations;
    const double mid = 0.5 * (lo + hi);
    const double gm = checked(g, mid);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((gm > 0.0) == (ga > 0.0)) {
      lo = mid;
      ga = gm;
    } else {
      hi = mid;
    }
  }
  r.converged = hi - lo <= tol;
  r.x_star = 0.5 * (lo + hi);
  r.value = checked(g, r.x_star);
  return r;
}

}  // namespace supent
