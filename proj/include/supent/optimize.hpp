// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace supent {

struct OptimizerResult {
  double x_star = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ScalarFunction = std::function<double(double)>;

inline constexpr std::size_t kDefaultGridPoints = 257;
inline constexpr double kDefaultXTol = 1e-10;
inline constexpr int kMaxOptimizerIterations = 200;

/// Minimum of f on [a, b]: sample grid_n uniform points, then golden-section
/// search inside the two grid cells around the best sample. The returned value
/// never exceeds the best grid sample. NonFiniteObjective if f returns NaN/Inf.
OptimizerResult minimize_scalar(const ScalarFunction& f, double a, double b,
                                std::size_t grid_n = kDefaultGridPoints,
                                double tol = kDefaultXTol);

/// Same search applied to -f; value is reported in terms of f.
OptimizerResult maximize_scalar(const ScalarFunction& f, double a, double b,
                                std::size_t grid_n = kDefaultGridPoints,
                                double tol = kDefaultXTol);

/// Bisection for g(x) = 0 on [a, b]. NoSignChange if g(a) g(b) > 0.
OptimizerResult find_root_bisect(const ScalarFunction& g, double a, double b,
                                 double tol = kDefaultXTol);

}  // namespace supent
