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

#ifndef PCRFORM_ALIGNMENT_HPP
#define PCRFORM_ALIGNMENT_HPP

#include <optional>
#include <span>
#include <vector>

#include "pcrform/common.hpp"
#include "pcrform/sim3.hpp"

namespace pcrform {

struct AlignOptions {
  /// Optional clamp on the recovered scale, disabled by default.
  std::optional<double> scale_min;
  std::optional<double> scale_max;
};

/// Weighted least-squares similarity alignment (Umeyama-style closed form).
/// Returns the minimizer of sum_i w_i * |dst_i - (s R src_i + t)|^2 with
/// det(R) = +1 and s > 0.
///
/// Throws TooFewPoints for fewer than 3 pairs, DegenerateConfiguration when
/// the centered source covariance has rank < 2 (collinear or coincident
/// sources), NonPositiveScale when the recovered scale collapses.
Sim3d alignClosedForm(std::span<const Vec3> src, std::span<const Vec3> dst,
                      std::span<const double> weights = {},
                      const AlignOptions& options = {});

/// Per-pair Euclidean residual norms |dst_i - T(src_i)|, order-preserving.
std::vector<double> residuals(const Sim3d& transform,
                              std::span<const Vec3> src,
                              std::span<const Vec3> dst);

/// Per-point contribution to the registration information matrix.
/// For a centered point p' the scale block contributes |p'|^2 and the
/// rotation block s^2 |p'|^2; the translation block is the identity and
/// carries no position dependence.
struct InfluenceSummary {
  double scale_info = 0.0;     // |p'|^2, m^2
  double rotation_info = 0.0;  // s^2 |p'|^2, m^2
  double translation_info = 3.0;  // trace of the constant identity block
};

InfluenceSummary influence(const Vec3& p_centered, double scale);

/// Second moment rank test used for degeneracy detection: true when the
/// centered covariance of `points` (optionally weighted) has effective
/// rank >= 2, i.e. the points are not collinear or coincident.
bool hasFullPlanarRank(std::span<const Vec3> points,
                       std::span<const double> weights = {},
                       double rel_tol = 1e-9);

}  // namespace pcrform

#endif  // PCRFORM_ALIGNMENT_HPP
