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

#ifndef PCRFORM_MINCO_HPP
#define PCRFORM_MINCO_HPP

#include <Eigen/Core>

#include <memory>
#include <span>
#include <vector>

#include "pcrform/banded.hpp"
#include "pcrform/trajectory.hpp"

namespace pcrform {

/// Minimum-jerk piecewise quintic determined by boundary states, interior
/// waypoints and piece durations. The coefficient mapping solves one banded
/// linear system; the factorization is kept so cost gradients can be pulled
/// back from coefficients to (waypoints, durations) through the same
/// factors.
class MincoJerk {
 public:
  /// Fixes boundary conditions and the piece count M (waypoint count M-1).
  void reset(const BoundaryState& initial, const BoundaryState& terminal,
             int piece_count);

  /// Assembles and solves the system for the given waypoints/durations.
  /// Throws SingularSystem for non-positive or sub-1e-4 durations and for
  /// numerically singular systems.
  void update(std::span<const Vec3> waypoints,
              std::span<const double> durations);

  int pieceCount() const { return piece_count_; }

  /// Stacked coefficient matrix, 6M x 3, valid after update().
  const Eigen::MatrixXd& coefficients() const;

  PolyTrajectory trajectory(double start_time = 0.0) const;

  /// Pulls a coefficient-space gradient and the direct duration gradient
  /// back to waypoint and duration gradients through the cached
  /// factorization. Throws StaleCache before the first update().
  void propagateGradients(const Eigen::MatrixXd& grad_coeffs,
                          const Eigen::VectorXd& grad_duration_direct,
                          Eigen::MatrixX3d& grad_waypoints,
                          Eigen::VectorXd& grad_durations) const;

 private:
  int rowOfWaypoint(int joint) const { return 3 + 6 * joint; }

  BoundaryState initial_;
  BoundaryState terminal_;
  int piece_count_ = 0;
  std::vector<double> durations_;
  std::unique_ptr<BandedLU> system_;
  Eigen::MatrixXd coeffs_;  // 6M x 3
  bool solved_ = false;
};

/// One-shot convenience wrapper around MincoJerk.
PolyTrajectory mincoMap(std::span<const Vec3> waypoints,
                        std::span<const double> durations,
                        const BoundaryState& initial,
                        const BoundaryState& terminal,
                        double start_time = 0.0);

}  // namespace pcrform

#endif  // PCRFORM_MINCO_HPP
