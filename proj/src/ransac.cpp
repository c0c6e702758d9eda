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

#include "pcrform/ransac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pcrform {

namespace {

struct Score {
  int count = 0;
  double rms = std::numeric_limits<double>::infinity();
  std::vector<bool> mask;
};

Score scoreHypothesis(const Sim3d& transform, std::span<const Vec3> src,
                      std::span<const Vec3> dst, double threshold) {
  Score score;
  score.mask.assign(src.size(), false);
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double r = (dst[i] - transform.apply(src[i])).norm();
    if (r <= threshold) {
      score.mask[i] = true;
      ++score.count;
      sq_sum += r * r;
    }
  }
  if (score.count > 0) score.rms = std::sqrt(sq_sum / score.count);
  return score;
}

}  // namespace

std::int64_t requiredIterations(double confidence, double inlier_ratio,
                                int sample_size) {
  if (!(confidence > 0.0) || !(confidence < 1.0))
    throw InvalidRatio("requiredIterations: confidence must be in (0,1)");
  if (!(inlier_ratio > 0.0) || inlier_ratio > 1.0)
    throw InvalidRatio("requiredIterations: inlier_ratio must be in (0,1]");
  if (inlier_ratio >= 1.0) return 1;
  const double denom = std::log1p(-std::pow(inlier_ratio, sample_size));
  if (!(denom < 0.0)) return std::numeric_limits<std::int64_t>::max();
  const double k = std::ceil(std::log1p(-confidence) / denom);
  if (k >= static_cast<double>(std::numeric_limits<std::int64_t>::max()))
    return std::numeric_limits<std::int64_t>::max();
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(k));
}

Sim3d refitInliers(std::span<const Vec3> src, std::span<const Vec3> dst,
                   const std::vector<bool>& mask,
                   const AlignOptions& options) {
  if (mask.size() != src.size() || src.size() != dst.size())
    throw LengthMismatch("refitInliers: mask/point size mismatch");
  std::vector<Vec3> sub_src, sub_dst;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    sub_src.push_back(src[i]);
    sub_dst.push_back(dst[i]);
  }
  return alignClosedForm(sub_src, sub_dst, {}, options);
}

RobustRegistration ransacRegister(std::span<const Vec3> src,
                                  std::span<const Vec3> dst,
                                  const RansacConfig& config) {
  const std::size_t n = src.size();
  const int k = config.min_sample_size;
  if (n != dst.size())
    throw LengthMismatch("ransacRegister: src/dst size mismatch");
  if (static_cast<int>(n) < k)
    throw TooFewPoints("ransacRegister: fewer correspondences than sample size");

  std::mt19937_64 rng(config.rng_seed);
  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i;

  std::vector<Vec3> sample_src(k), sample_dst(k);
  Score best;
  Sim3d best_transform;
  int valid_iterations = 0;
  std::int64_t target = config.max_iterations;
  const std::int64_t draw_cap =
      static_cast<std::int64_t>(config.max_iterations) * 10;
  std::int64_t draws = 0;
  std::vector<int> history;

  while (valid_iterations < target && draws < draw_cap) {
    ++draws;
    // Partial Fisher-Yates over the index pool; draws k distinct indices.
    for (int j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, n - 1);
      std::swap(indices[j], indices[pick(rng)]);
      sample_src[j] = src[indices[j]];
      sample_dst[j] = dst[indices[j]];
    }

    Sim3d hypothesis;
    try {
      hypothesis = alignClosedForm(sample_src, sample_dst, {}, config.align);
    } catch (const Error&) {
      continue;  // degenerate sample, does not consume the budget
    }
    ++valid_iterations;

    Score score =
        scoreHypothesis(hypothesis, src, dst, config.inlier_threshold);
    const bool better =
        score.count > best.count ||
        (score.count == best.count && score.count > 0 && score.rms < best.rms);
    if (better) {
      best = std::move(score);
      best_transform = hypothesis;
      const double ratio = static_cast<double>(best.count) / n;
      if (ratio > 0.0)
        target = std::min<std::int64_t>(
            config.max_iterations, requiredIterations(config.confidence,
                                                      ratio, k));
    }
    history.push_back(best.count);
  }

  if (valid_iterations == 0)
    throw DegenerateConfiguration(
        "ransacRegister: every sampled hypothesis was degenerate");
  if (best.count < k)
    throw NoConsensus("ransacRegister: no hypothesis reached minimal consensus");

  // Refit on the consensus set, then re-classify once; if the mask moved,
  // refit a second time (bounded two-pass polish).
  RobustRegistration result;
  result.consensus_mask = best.mask;
  result.consensus_history = std::move(history);
  result.iterations_used = valid_iterations;

  Sim3d transform = best_transform;
  std::vector<bool> mask = best.mask;
  for (int pass = 0; pass < 2; ++pass) {
    Sim3d refit;
    try {
      refit = refitInliers(src, dst, mask, config.align);
    } catch (const Error&) {
      break;  // keep the last consistent (transform, mask) pair
    }
    transform = refit;
    Score rescored =
        scoreHypothesis(transform, src, dst, config.inlier_threshold);
    const bool changed = rescored.mask != mask;
    mask = std::move(rescored.mask);
    if (!changed) break;
  }

  const Score final_score =
      scoreHypothesis(transform, src, dst, config.inlier_threshold);
  if (final_score.count < k)
    throw NoConsensus("ransacRegister: consensus collapsed during refit");

  result.transform = transform;
  result.inlier_mask = final_score.mask;
  result.inlier_residual_rms = final_score.rms;
  return result;
}

}  // namespace pcrform
