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

#ifndef PCRFORM_TRAJECTORY_HPP
#define PCRFORM_TRAJECTORY_HPP

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

#include "pcrform/common.hpp"

namespace pcrform {

/// One quintic piece sigma(u) = coeffs^T * (1, u, ..., u^5) on [0, duration].
struct TrajPiece {
  Eigen::Matrix<double, 6, 3> coeffs = Eigen::Matrix<double, 6, 3>::Zero();
  double duration = 0.0;
};

struct BoundaryState {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
};

/// Basis derivative (d^order/du^order)(1, u, ..., u^5). Orders above the
/// polynomial degree evaluate to zero.
Eigen::Matrix<double, 6, 1> quinticBasis(double u, int order);

/// Immutable piecewise quintic. Pieces use half-open local intervals
/// [t_{i-1}, t_i); the final piece is closed at the right endpoint.
class PolyTrajectory {
 public:
  PolyTrajectory() = default;
  PolyTrajectory(std::vector<TrajPiece> pieces, double start_time);

  int pieceCount() const { return static_cast<int>(pieces_.size()); }
  const TrajPiece& piece(int i) const { return pieces_[i]; }
  double startTime() const { return start_time_; }
  double duration() const { return total_duration_; }
  double endTime() const { return start_time_ + total_duration_; }

  /// Global piece start time t_{i-1}.
  double pieceStart(int i) const { return start_time_ + cumulative_[i]; }

  /// order-th derivative at global time t. Throws OutOfDomain outside
  /// [startTime, endTime] beyond a 1e-9 tolerance.
  Vec3 eval(double t, int order = 0) const;

  /// Same as eval but clamps t to the trajectory domain; used where stale
  /// broadcasts may be sampled past their horizon. Derivatives clamp to
  /// zero beyond the ends.
  Vec3 evalClamped(double t, int order = 0) const;

  /// Derivative at local time u on a given piece, no domain checks.
  Vec3 evalLocal(int piece, double u, int order) const;

  /// Piece index containing t and the local offset within it.
  int locate(double t, double* local) const;

 private:
  std::vector<TrajPiece> pieces_;
  std::vector<double> cumulative_;  // size pieceCount()+1
  double start_time_ = 0.0;
  double total_duration_ = 0.0;
};

struct ConstraintSample {
  double t = 0.0;  // global time
  int piece = 0;
  double fraction = 0.0;  // sample position as a fraction of the piece
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  Vec3 jerk = Vec3::Zero();
};

/// Uniform per-piece samples at fractions j/kappa for j = 0..kappa-1.
std::vector<ConstraintSample> sampleConstraintPoints(const PolyTrajectory& traj,
                                                     int kappa);

/// Per-piece sample counts; kappas.size() must equal pieceCount().
std::vector<ConstraintSample> sampleConstraintPoints(
    const PolyTrajectory& traj, std::span<const int> kappas);

/// Canonical text serialization for the broadcast bus and logs. Versioned,
/// locale-independent, and exact: doubles round-trip bit-for-bit.
std::string serializeTrajectory(const PolyTrajectory& traj);
PolyTrajectory deserializeTrajectory(const std::string& text);

/// Constant single-piece trajectory holding `position` for `duration`.
PolyTrajectory makeHoldTrajectory(const Vec3& position, double start_time,
                                  double duration);

}  // namespace pcrform

#endif  // PCRFORM_TRAJECTORY_HPP
