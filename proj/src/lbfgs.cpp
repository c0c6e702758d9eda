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

#include "pcrform/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace pcrform {

namespace {

struct Correction {
  Eigen::VectorXd s;
  Eigen::VectorXd y;
  double rho = 0.0;
};

struct LinePoint {
  double alpha = 0.0;
  double f = 0.0;
  double df = 0.0;  // directional derivative
};

class LineObjective {
 public:
  LineObjective(const Objective& objective, const Eigen::VectorXd& x,
                const Eigen::VectorXd& direction, int* evaluations)
      : objective_(objective),
        x_(x),
        direction_(direction),
        evaluations_(evaluations),
        grad_(x.size()) {}

  /// Evaluates phi(alpha); returns false for non-finite cost.
  bool eval(double alpha, LinePoint& point, Eigen::VectorXd& x_out,
            Eigen::VectorXd& grad_out) {
    x_out = x_ + alpha * direction_;
    ++*evaluations_;
    const double f = objective_(x_out, grad_);
    if (!std::isfinite(f)) return false;
    point.alpha = alpha;
    point.f = f;
    point.df = grad_.dot(direction_);
    grad_out = grad_;
    return true;
  }

 private:
  const Objective& objective_;
  const Eigen::VectorXd& x_;
  const Eigen::VectorXd& direction_;
  int* evaluations_;
  Eigen::VectorXd grad_;
};

/// Strong-Wolfe line search, bracketing + zoom (Nocedal & Wright alg. 3.5/3.6).
/// Returns true on success with the accepted point in (pt, x_out, grad_out).
bool strongWolfe(LineObjective& line, const LinePoint& origin, double c1,
                 double c2, int max_steps, LinePoint& pt,
                 Eigen::VectorXd& x_out, Eigen::VectorXd& grad_out) {
  const double f0 = origin.f;
  const double df0 = origin.df;
  if (df0 >= 0.0) return false;

  auto zoom = [&](LinePoint lo, LinePoint hi, int budget) -> bool {
    for (int i = 0; i < budget; ++i) {
      // Bisection with a quadratic-interpolation bias toward lo.
      double alpha = 0.5 * (lo.alpha + hi.alpha);
      LinePoint trial;
      if (!line.eval(alpha, trial, x_out, grad_out)) {
        hi = LinePoint{alpha, std::numeric_limits<double>::infinity(), 0.0};
        continue;
      }
      if (trial.f > f0 + c1 * alpha * df0 || trial.f >= lo.f) {
        hi = trial;
        continue;
      }
      if (std::abs(trial.df) <= -c2 * df0) {
        pt = trial;
        return true;
      }
      if (trial.df * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
      lo = trial;
    }
    return false;
  };

  double alpha_prev = 0.0;
  LinePoint prev = origin;
  double alpha = 1.0;
  for (int i = 0; i < max_steps; ++i) {
    LinePoint trial;
    if (!line.eval(alpha, trial, x_out, grad_out)) {
      // Out-of-domain step: shrink hard toward the last finite point.
      alpha = alpha_prev + 0.25 * (alpha - alpha_prev);
      continue;
    }
    if (trial.f > f0 + c1 * alpha * df0 || (i > 0 && trial.f >= prev.f))
      return zoom(prev, trial, max_steps);
    if (std::abs(trial.df) <= -c2 * df0) {
      pt = trial;
      return true;
    }
    if (trial.df >= 0.0) return zoom(trial, prev, max_steps);
    alpha_prev = alpha;
    prev = trial;
    alpha = std::min(2.0 * alpha, 1e8);
  }
  return false;
}

}  // namespace

const char* toString(LbfgsStatus status) {
  switch (status) {
    case LbfgsStatus::kGradientConverged:
      return "gradient_converged";
    case LbfgsStatus::kCostConverged:
      return "cost_converged";
    case LbfgsStatus::kMaxIterations:
      return "max_iterations";
    case LbfgsStatus::kLineSearchFailed:
      return "line_search_failed";
  }
  return "unknown";
}

LbfgsResult lbfgsMinimize(const Objective& objective, Eigen::VectorXd x0,
                          const LbfgsParams& params) {
  const int n = static_cast<int>(x0.size());
  LbfgsResult result;
  result.x = std::move(x0);

  Eigen::VectorXd grad(n);
  ++result.evaluations;
  double f = objective(result.x, grad);
  if (!std::isfinite(f))
    throw NonFiniteCost("lbfgsMinimize: non-finite cost at the seed point");
  result.cost = f;
  result.cost_history.push_back(f);

  std::deque<Correction> history;
  Eigen::VectorXd direction(n), alpha_stack(params.history);

  for (int iter = 0; iter < params.max_iterations; ++iter) {
    if (grad.norm() < params.gradient_tolerance) {
      result.status = LbfgsStatus::kGradientConverged;
      result.iterations = iter;
      return result;
    }

    // Two-loop recursion.
    direction = -grad;
    const int k = static_cast<int>(history.size());
    for (int i = k - 1; i >= 0; --i) {
      const Correction& c = history[i];
      alpha_stack(i) = c.rho * c.s.dot(direction);
      direction -= alpha_stack(i) * c.y;
    }
    if (k > 0) {
      const Correction& last = history.back();
      direction *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (int i = 0; i < k; ++i) {
      const Correction& c = history[i];
      const double beta = c.rho * c.y.dot(direction);
      direction += (alpha_stack(i) - beta) * c.s;
    }
    if (direction.dot(grad) >= 0.0) direction = -grad;  // safeguard

    LineObjective line(objective, result.x, direction, &result.evaluations);
    LinePoint origin{0.0, f, grad.dot(direction)};
    LinePoint accepted;
    Eigen::VectorXd x_new(n), grad_new(n);
    if (!strongWolfe(line, origin, params.wolfe_c1, params.wolfe_c2,
                     params.max_line_search_steps, accepted, x_new,
                     grad_new)) {
      result.status = LbfgsStatus::kLineSearchFailed;
      result.iterations = iter;
      return result;
    }

    Correction c;
    c.s = x_new - result.x;
    c.y = grad_new - grad;
    const double sy = c.s.dot(c.y);
    if (sy > 1e-12 * c.s.norm() * c.y.norm()) {
      c.rho = 1.0 / sy;
      history.push_back(std::move(c));
      if (static_cast<int>(history.size()) > params.history)
        history.pop_front();
    }

    const double f_prev = f;
    result.x = std::move(x_new);
    grad = grad_new;
    f = accepted.f;
    result.cost = f;
    result.cost_history.push_back(f);
    result.iterations = iter + 1;

    if (std::abs(f_prev - f) <=
        params.relative_cost_tolerance * std::max(1.0, std::abs(f_prev))) {
      result.status = LbfgsStatus::kCostConverged;
      return result;
    }
  }
  result.status = LbfgsStatus::kMaxIterations;
  return result;
}

}  // namespace pcrform
