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

#include "pcrform/minco.hpp"

#include <cmath>

namespace pcrform {

namespace {
constexpr double kMinDuration = 1e-4;
constexpr int kLowerBandwidth = 8;
constexpr int kUpperBandwidth = 7;
}  // namespace

void MincoJerk::reset(const BoundaryState& initial,
                      const BoundaryState& terminal, int piece_count) {
  if (piece_count < 1)
    throw SingularSystem("MincoJerk: need at least one piece");
  initial_ = initial;
  terminal_ = terminal;
  piece_count_ = piece_count;
  const int n = 6 * piece_count_;
  system_ = std::make_unique<BandedLU>(n, kLowerBandwidth, kUpperBandwidth);
  coeffs_.resize(n, 3);
  durations_.assign(piece_count_, 0.0);
  solved_ = false;
}

void MincoJerk::update(std::span<const Vec3> waypoints,
                       std::span<const double> durations) {
  if (piece_count_ == 0) throw StaleCache("MincoJerk: reset() first");
  if (static_cast<int>(waypoints.size()) != piece_count_ - 1)
    throw LengthMismatch("MincoJerk: waypoint count must be pieces-1");
  if (static_cast<int>(durations.size()) != piece_count_)
    throw LengthMismatch("MincoJerk: duration count must equal pieces");
  for (double d : durations)
    if (!(d >= kMinDuration) || !std::isfinite(d))
      throw SingularSystem("MincoJerk: piece duration below 1e-4 s");

  const int n = 6 * piece_count_;
  system_->setZero();
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 3);

  // Initial boundary: position, velocity, acceleration of piece 1 at u=0.
  for (int d = 0; d < 3; ++d) {
    const auto beta = quinticBasis(0.0, d);
    for (int k = d; k < 6; ++k)
      if (beta(k) != 0.0) system_->entry(d, k) = beta(k);
  }
  rhs.row(0) = initial_.position.transpose();
  rhs.row(1) = initial_.velocity.transpose();
  rhs.row(2) = initial_.acceleration.transpose();

  // Interior joints: waypoint pass-through plus continuity through order 4.
  for (int joint = 0; joint < piece_count_ - 1; ++joint) {
    const double T = durations[joint];
    const int row0 = rowOfWaypoint(joint);
    const int col_left = 6 * joint;
    const int col_right = 6 * (joint + 1);

    const auto beta0 = quinticBasis(T, 0);
    for (int k = 0; k < 6; ++k) system_->entry(row0, col_left + k) = beta0(k);
    rhs.row(row0) = waypoints[joint].transpose();

    for (int d = 0; d < 5; ++d) {
      const int row = row0 + 1 + d;
      const auto beta = quinticBasis(T, d);
      for (int k = 0; k < 6; ++k)
        system_->entry(row, col_left + k) = beta(k);
      double factorial = 1.0;
      for (int f = 2; f <= d; ++f) factorial *= f;
      system_->entry(row, col_right + d) = -factorial;
    }
  }

  // Terminal boundary on the last piece at u = T_M.
  const double tail = durations[piece_count_ - 1];
  const int tail_col = 6 * (piece_count_ - 1);
  for (int d = 0; d < 3; ++d) {
    const int row = n - 3 + d;
    const auto beta = quinticBasis(tail, d);
    for (int k = 0; k < 6; ++k) system_->entry(row, tail_col + k) = beta(k);
  }
  rhs.row(n - 3) = terminal_.position.transpose();
  rhs.row(n - 2) = terminal_.velocity.transpose();
  rhs.row(n - 1) = terminal_.acceleration.transpose();

  system_->factorize();
  coeffs_ = rhs;
  system_->solveInPlace(coeffs_);
  durations_.assign(durations.begin(), durations.end());
  solved_ = true;
}

const Eigen::MatrixXd& MincoJerk::coefficients() const {
  if (!solved_) throw StaleCache("MincoJerk: no solved coefficients");
  return coeffs_;
}

PolyTrajectory MincoJerk::trajectory(double start_time) const {
  if (!solved_) throw StaleCache("MincoJerk: no solved coefficients");
  std::vector<TrajPiece> pieces(piece_count_);
  for (int i = 0; i < piece_count_; ++i) {
    pieces[i].coeffs = coeffs_.block<6, 3>(6 * i, 0);
    pieces[i].duration = durations_[i];
  }
  return PolyTrajectory(std::move(pieces), start_time);
}

void MincoJerk::propagateGradients(const Eigen::MatrixXd& grad_coeffs,
                                   const Eigen::VectorXd& grad_duration_direct,
                                   Eigen::MatrixX3d& grad_waypoints,
                                   Eigen::VectorXd& grad_durations) const {
  if (!solved_) throw StaleCache("MincoJerk: propagate before update");
  const int n = 6 * piece_count_;
  if (grad_coeffs.rows() != n || grad_coeffs.cols() != 3)
    throw LengthMismatch("MincoJerk: coefficient gradient shape mismatch");
  if (grad_duration_direct.size() != piece_count_)
    throw LengthMismatch("MincoJerk: duration gradient size mismatch");

  // Adjoint solve: lambda = A^-T dJ/dc, so dJ/db = lambda.
  Eigen::MatrixXd adjoint = grad_coeffs;
  system_->solveTransposeInPlace(adjoint);

  grad_waypoints.resize(std::max(piece_count_ - 1, 0), 3);
  for (int joint = 0; joint < piece_count_ - 1; ++joint)
    grad_waypoints.row(joint) = adjoint.row(rowOfWaypoint(joint));

  grad_durations = grad_duration_direct;
  // dJ/dT_i -= lambda^T (dA/dT_i) c; only rows evaluated at u = T_i move.
  for (int joint = 0; joint < piece_count_ - 1; ++joint) {
    const double T = durations_[joint];
    const int row0 = rowOfWaypoint(joint);
    const auto block = coeffs_.block<6, 3>(6 * joint, 0);
    double acc = adjoint.row(row0).dot(
        (block.transpose() * quinticBasis(T, 1)).transpose());
    for (int d = 0; d < 5; ++d)
      acc += adjoint.row(row0 + 1 + d)
                 .dot((block.transpose() * quinticBasis(T, d + 1)).transpose());
    grad_durations(joint) -= acc;
  }
  {
    const double T = durations_[piece_count_ - 1];
    const auto block = coeffs_.block<6, 3>(6 * (piece_count_ - 1), 0);
    double acc = 0.0;
    for (int d = 0; d < 3; ++d)
      acc += adjoint.row(n - 3 + d)
                 .dot((block.transpose() * quinticBasis(T, d + 1)).transpose());
    grad_durations(piece_count_ - 1) -= acc;
  }
}

PolyTrajectory mincoMap(std::span<const Vec3> waypoints,
                        std::span<const double> durations,
                        const BoundaryState& initial,
                        const BoundaryState& terminal, double start_time) {
  MincoJerk minco;
  minco.reset(initial, terminal, static_cast<int>(durations.size()));
  minco.update(waypoints, durations);
  return minco.trajectory(start_time);
}

}  // namespace pcrform
