/*
 * Copyright 2026 The pcrform Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */

#ifndef PCRFORM_LBFGS_HPP
#define PCRFORM_LBFGS_HPP

#include <Eigen/Core>

#include <functional>
#include <string>

#include "pcrform/common.hpp"

namespace pcrform {

/// Objective callback: returns f(x) and fills grad (same size as x).
/// Non-finite returns are treated as out-of-domain trial points by the
/// line search.
using Objective =
    std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

enum class LbfgsStatus {
  kGradientConverged,
  kCostConverged,
  kMaxIterations,
  kLineSearchFailed,
};

struct LbfgsParams {
  int history = 8;
  int max_iterations = 500;
  double gradient_tolerance = 1e-5;
  double relative_cost_tolerance = 1e-8;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  int max_line_search_steps = 40;
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double cost = 0.0;
  int iterations = 0;
  int evaluations = 0;
  LbfgsStatus status = LbfgsStatus::kMaxIterations;
  /// Accepted-iterate cost sequence, starting at the seed point.
  std::vector<double> cost_history;
};

const char* toString(LbfgsStatus status);

/// Limited-memory BFGS with a strong-Wolfe bracketing line search.
/// Throws NonFiniteCost when the seed point itself is non-finite; a failed
/// line search is reported through the result status, keeping the best
/// iterate found.
LbfgsResult lbfgsMinimize(const Objective& objective, Eigen::VectorXd x0,
                          const LbfgsParams& params = {});

}  // namespace pcrform

#endif  // PCRFORM_LBFGS_HPP
