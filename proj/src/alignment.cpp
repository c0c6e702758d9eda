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

#include "pcrform/alignment.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace pcrform {

namespace {

constexpr double kScaleFloor = 1e-9;
constexpr double kRankRelTol = 1e-9;

struct WeightedMoments {
  double total = 0.0;
  Vec3 mean_src = Vec3::Zero();
  Vec3 mean_dst = Vec3::Zero();
  Mat3 cross = Mat3::Zero();    // E[ dst' src'^T ]
  Mat3 src_cov = Mat3::Zero();  // E[ src' src'^T ]
  double src_var = 0.0;         // E[ |src'|^2 ]
};

WeightedMoments computeMoments(std::span<const Vec3> src,
                               std::span<const Vec3> dst,
                               std::span<const double> weights) {
  WeightedMoments m;
  const std::size_t n = src.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    m.total += w;
    m.mean_src += w * src[i];
    m.mean_dst += w * dst[i];
  }
  m.mean_src /= m.total;
  m.mean_dst /= m.total;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    const Vec3 ps = src[i] - m.mean_src;
    const Vec3 pd = dst[i] - m.mean_dst;
    m.cross += w * pd * ps.transpose();
    m.src_cov += w * ps * ps.transpose();
    m.src_var += w * ps.squaredNorm();
  }
  m.cross /= m.total;
  m.src_cov /= m.total;
  m.src_var /= m.total;
  return m;
}

}  // namespace

bool hasFullPlanarRank(std::span<const Vec3> points,
                       std::span<const double> weights, double rel_tol) {
  if (points.size() < 3) return false;
  double total = 0.0;
  Vec3 mean = Vec3::Zero();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    total += w;
    mean += w * points[i];
  }
  if (total <= 0.0) return false;
  mean /= total;
  Mat3 cov = Mat3::Zero();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    const Vec3 p = points[i] - mean;
    cov += w * p * p.transpose();
  }
  cov /= total;
  Eigen::JacobiSVD<Mat3> svd(cov);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0) return false;
  return sv(1) >= rel_tol * sv(0);
}

Sim3d alignClosedForm(std::span<const Vec3> src, std::span<const Vec3> dst,
                      std::span<const double> weights,
                      const AlignOptions& options) {
  if (src.size() != dst.size())
    throw LengthMismatch("alignClosedForm: src/dst size mismatch");
  if (src.size() < 3)
    throw TooFewPoints("alignClosedForm: need at least 3 point pairs");
  if (!weights.empty() && weights.size() != src.size())
    throw LengthMismatch("alignClosedForm: weight size mismatch");

  const WeightedMoments m = computeMoments(src, dst, weights);
  if (!(m.total > 0.0))
    throw DegenerateConfiguration("alignClosedForm: weights sum to zero");

  {
    Eigen::JacobiSVD<Mat3> cov_svd(m.src_cov);
    const auto& sv = cov_svd.singularValues();
    if (sv(0) <= 0.0 || sv(1) < kRankRelTol * sv(0))
      throw DegenerateConfiguration(
          "alignClosedForm: source points collinear or coincident");
  }

  Eigen::JacobiSVD<Mat3> svd(m.cross,
                             Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 s_fix = Mat3::Identity();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0)
    s_fix(2, 2) = -1.0;

  const Mat3 rotation = svd.matrixU() * s_fix * svd.matrixV().transpose();
  double scale = (svd.singularValues().asDiagonal() * s_fix).trace() /
                 m.src_var;
  if (!(scale > kScaleFloor))
    throw NonPositiveScale("alignClosedForm: recovered scale collapsed");
  if (options.scale_min) scale = std::max(scale, *options.scale_min);
  if (options.scale_max) scale = std::min(scale, *options.scale_max);

  const Vec3 translation = m.mean_dst - scale * (rotation * m.mean_src);
  return Sim3d(rotation, translation, scale);
}

std::vector<double> residuals(const Sim3d& transform,
                              std::span<const Vec3> src,
                              std::span<const Vec3> dst) {
  if (src.size() != dst.size())
    throw LengthMismatch("residuals: src/dst size mismatch");
  std::vector<double> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    out[i] = (dst[i] - transform.apply(src[i])).norm();
  return out;
}

InfluenceSummary influence(const Vec3& p_centered, double scale) {
  InfluenceSummary summary;
  summary.scale_info = p_centered.squaredNorm();
  summary.rotation_info = scale * scale * summary.scale_info;
  return summary;
}

}  // namespace pcrform
