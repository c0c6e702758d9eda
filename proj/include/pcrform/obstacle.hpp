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

#ifndef PCRFORM_OBSTACLE_HPP
#define PCRFORM_OBSTACLE_HPP

#include <vector>

#include "pcrform/common.hpp"

namespace pcrform {

struct SphereObstacle {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};

struct BoxObstacle {
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Ones();
};

struct SignedDistance {
  double distance = 0.0;
  Vec3 gradient = Vec3::UnitX();
};

/// Analytic sphere + axis-aligned-box obstacle set. Distances are exact;
/// gradients fall back to documented subgradients at symmetry points
/// (sphere center -> +x, ties across primitives -> lowest index).
class ObstacleField {
 public:
  ObstacleField() = default;

  void addSphere(const Vec3& center, double radius);
  void addBox(const Vec3& min, const Vec3& max);

  bool empty() const { return spheres_.empty() && boxes_.empty(); }
  const std::vector<SphereObstacle>& spheres() const { return spheres_; }
  const std::vector<BoxObstacle>& boxes() const { return boxes_; }

  /// Signed distance to the nearest primitive (negative inside) and its
  /// spatial gradient. Empty fields report +infinity with a zero gradient.
  SignedDistance signedDistance(const Vec3& p) const;

 private:
  std::vector<SphereObstacle> spheres_;
  std::vector<BoxObstacle> boxes_;
};

SignedDistance sphereSignedDistance(const SphereObstacle& sphere,
                                    const Vec3& p);
SignedDistance boxSignedDistance(const BoxObstacle& box, const Vec3& p);

}  // namespace pcrform

#endif  // PCRFORM_OBSTACLE_HPP
