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

#include "pcrform/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pcrform {

namespace {
constexpr double kDomainTol = 1e-9;

void appendDouble(std::string& out, double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  out += buffer;
}
}  // namespace

Eigen::Matrix<double, 6, 1> quinticBasis(double u, int order) {
  Eigen::Matrix<double, 6, 1> beta = Eigen::Matrix<double, 6, 1>::Zero();
  if (order > 5) return beta;
  double power = 1.0;
  for (int k = order; k < 6; ++k) {
    double factorial = 1.0;
    for (int d = 0; d < order; ++d) factorial *= static_cast<double>(k - d);
    beta(k) = factorial * power;
    power *= u;
  }
  return beta;
}

PolyTrajectory::PolyTrajectory(std::vector<TrajPiece> pieces,
                               double start_time)
    : pieces_(std::move(pieces)), start_time_(start_time) {
  cumulative_.reserve(pieces_.size() + 1);
  cumulative_.push_back(0.0);
  for (const TrajPiece& p : pieces_) {
    if (!(p.duration > 0.0))
      throw OutOfDomain("PolyTrajectory: piece duration must be positive");
    cumulative_.push_back(cumulative_.back() + p.duration);
  }
  total_duration_ = cumulative_.back();
}

int PolyTrajectory::locate(double t, double* local) const {
  double rel = t - start_time_;
  rel = std::clamp(rel, 0.0, total_duration_);
  // Half-open pieces, final piece closed.
  int idx = static_cast<int>(
                std::upper_bound(cumulative_.begin(), cumulative_.end(), rel) -
                cumulative_.begin()) -
            1;
  idx = std::clamp(idx, 0, pieceCount() - 1);
  if (local) *local = rel - cumulative_[idx];
  return idx;
}

Vec3 PolyTrajectory::evalLocal(int piece, double u, int order) const {
  return pieces_[piece].coeffs.transpose() * quinticBasis(u, order);
}

Vec3 PolyTrajectory::eval(double t, int order) const {
  if (pieces_.empty()) throw OutOfDomain("PolyTrajectory: empty trajectory");
  if (t < start_time_ - kDomainTol || t > endTime() + kDomainTol)
    throw OutOfDomain("PolyTrajectory: time outside trajectory domain");
  double u = 0.0;
  const int idx = locate(t, &u);
  return evalLocal(idx, u, order);
}

Vec3 PolyTrajectory::evalClamped(double t, int order) const {
  if (pieces_.empty()) throw OutOfDomain("PolyTrajectory: empty trajectory");
  if (t <= start_time_) return evalLocal(0, 0.0, order);
  if (t >= endTime())
    return evalLocal(pieceCount() - 1, pieces_.back().duration, order);
  double u = 0.0;
  const int idx = locate(t, &u);
  return evalLocal(idx, u, order);
}

std::vector<ConstraintSample> sampleConstraintPoints(const PolyTrajectory& traj,
                                                     int kappa) {
  std::vector<int> kappas(traj.pieceCount(), kappa);
  return sampleConstraintPoints(traj, kappas);
}

std::vector<ConstraintSample> sampleConstraintPoints(
    const PolyTrajectory& traj, std::span<const int> kappas) {
  if (static_cast<int>(kappas.size()) != traj.pieceCount())
    throw LengthMismatch("sampleConstraintPoints: kappa count mismatch");
  std::vector<ConstraintSample> samples;
  for (int i = 0; i < traj.pieceCount(); ++i) {
    const int kappa = kappas[i];
    if (kappa < 1)
      throw OutOfDomain("sampleConstraintPoints: kappa must be >= 1");
    const double duration = traj.piece(i).duration;
    for (int j = 0; j < kappa; ++j) {
      ConstraintSample s;
      s.piece = i;
      s.fraction = static_cast<double>(j) / kappa;
      const double u = s.fraction * duration;
      s.t = traj.pieceStart(i) + u;
      s.position = traj.evalLocal(i, u, 0);
      s.velocity = traj.evalLocal(i, u, 1);
      s.acceleration = traj.evalLocal(i, u, 2);
      s.jerk = traj.evalLocal(i, u, 3);
      samples.push_back(s);
    }
  }
  return samples;
}

std::string serializeTrajectory(const PolyTrajectory& traj) {
  std::string out = "pcrform-traj 1\n";
  out += "start ";
  appendDouble(out, traj.startTime());
  out += "\npieces " + std::to_string(traj.pieceCount()) + "\n";
  for (int i = 0; i < traj.pieceCount(); ++i) {
    const TrajPiece& p = traj.piece(i);
    out += "T ";
    appendDouble(out, p.duration);
    out += "\n";
    for (int row = 0; row < 6; ++row) {
      for (int col = 0; col < 3; ++col) {
        if (col) out += ' ';
        appendDouble(out, p.coeffs(row, col));
      }
      out += "\n";
    }
  }
  return out;
}

PolyTrajectory deserializeTrajectory(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "pcrform-traj" || version != 1)
    throw ConfigError("deserializeTrajectory: bad header");
  std::string key;
  double start_time = 0.0;
  int count = 0;
  in >> key >> start_time;
  if (key != "start") throw ConfigError("deserializeTrajectory: missing start");
  in >> key >> count;
  if (key != "pieces" || count < 1)
    throw ConfigError("deserializeTrajectory: missing pieces");
  std::vector<TrajPiece> pieces(count);
  for (TrajPiece& p : pieces) {
    in >> key >> p.duration;
    if (key != "T" || !in)
      throw ConfigError("deserializeTrajectory: malformed piece");
    for (int row = 0; row < 6; ++row)
      for (int col = 0; col < 3; ++col) in >> p.coeffs(row, col);
  }
  if (!in) throw ConfigError("deserializeTrajectory: truncated payload");
  return PolyTrajectory(std::move(pieces), start_time);
}

PolyTrajectory makeHoldTrajectory(const Vec3& position, double start_time,
                                  double duration) {
  TrajPiece piece;
  piece.duration = duration;
  piece.coeffs.row(0) = position.transpose();
  return PolyTrajectory({piece}, start_time);
}

}  // namespace pcrform
