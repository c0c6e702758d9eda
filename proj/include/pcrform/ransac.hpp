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

#ifndef PCRFORM_RANSAC_HPP
#define PCRFORM_RANSAC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pcrform/alignment.hpp"
#include "pcrform/common.hpp"
#include "pcrform/sim3.hpp"

namespace pcrform {

struct RansacConfig {
  double inlier_threshold = 0.15;  // tau, meters
  double confidence = 0.99;
  int max_iterations = 1000;
  int min_sample_size = 3;
  std::uint64_t rng_seed = 0;
  AlignOptions align;
};

struct RobustRegistration {
  Sim3d transform;
  /// Final mask, consistent with `transform`: every flagged pair has
  /// residual <= inlier_threshold under it.
  std::vector<bool> inlier_mask;
  /// Consensus mask of the winning hypothesis before the refit polish,
  /// kept so the two stages can be compared when they disagree.
  std::vector<bool> consensus_mask;
  int iterations_used = 0;
  double inlier_residual_rms = 0.0;
  /// Best consensus count after each valid hypothesis, non-decreasing.
  std::vector<int> consensus_history;

  int inlierCount() const {
    int n = 0;
    for (bool b : inlier_mask) n += b;
    return n;
  }
};

/// Standard RANSAC stopping bound: ceil(log(1-confidence) /
/// log(1 - inlier_ratio^sample_size)), floored at 1. Saturates instead of
/// overflowing for vanishing inlier ratios.
std::int64_t requiredIterations(double confidence, double inlier_ratio,
                                int sample_size);

/// RANSAC similarity registration over index-matched correspondences.
/// Hypotheses are minimal samples of correspondence indices fitted with
/// alignClosedForm; consensus is counted against inlier_threshold; the
/// winner is refit on its full inlier set with a single re-classification
/// pass. Deterministic for a fixed rng_seed.
RobustRegistration ransacRegister(std::span<const Vec3> src,
                                  std::span<const Vec3> dst,
                                  const RansacConfig& config);

/// Least-squares polish restricted to masked pairs.
Sim3d refitInliers(std::span<const Vec3> src, std::span<const Vec3> dst,
                   const std::vector<bool>& mask,
                   const AlignOptions& options = {});

}  // namespace pcrform

#endif  // PCRFORM_RANSAC_HPP
