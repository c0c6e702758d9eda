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

#ifndef PCRFORM_SIM3_HPP
#define PCRFORM_SIM3_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "pcrform/common.hpp"

namespace pcrform {

/// Similarity transform p -> scale * rotation * p + translation.
/// rotation is in SO(3) (orthonormal, det +1) and scale is strictly positive.
template <typename Scalar>
class Sim3 {
 public:
  using Mat3t = Eigen::Matrix<Scalar, 3, 3>;
  using Vec3t = Eigen::Matrix<Scalar, 3, 1>;

  Sim3()
      : rotation_(Mat3t::Identity()),
        translation_(Vec3t::Zero()),
        scale_(Scalar(1)) {}

  Sim3(const Mat3t& rotation, const Vec3t& translation, Scalar scale)
      : rotation_(rotation), translation_(translation), scale_(scale) {}

  static Sim3 Identity() { return Sim3(); }

  const Mat3t& rotation() const { return rotation_; }
  const Vec3t& translation() const { return translation_; }
  Scalar scale() const { return scale_; }

  /// Applies the transform: s * R * p + t.
  Vec3t apply(const Vec3t& p) const {
    return scale_ * (rotation_ * p) + translation_;
  }

  Vec3t operator*(const Vec3t& p) const { return apply(p); }

  Sim3 inverse() const {
    const Scalar inv_s = Scalar(1) / scale_;
    const Mat3t rt = rotation_.transpose();
    return Sim3(rt, -inv_s * (rt * translation_), inv_s);
  }

  /// Orthonormality, determinant and positivity checks within `tol`.
  bool isValid(Scalar tol = Scalar(1e-9)) const {
    if (!(scale_ > Scalar(0))) return false;
    const Mat3t rtr = rotation_.transpose() * rotation_;
    if ((rtr - Mat3t::Identity()).template lpNorm<Eigen::Infinity>() > tol)
      return false;
    return std::abs(rotation_.determinant() - Scalar(1)) <= tol;
  }

 private:
  Mat3t rotation_;
  Vec3t translation_;
  Scalar scale_;
};

using Sim3d = Sim3<double>;

template <typename Scalar>
typename Sim3<Scalar>::Vec3t apply(const Sim3<Scalar>& transform,
                                   const typename Sim3<Scalar>::Vec3t& p) {
  return transform.apply(p);
}

/// compose(A, B) maps p to A(B(p)).
template <typename Scalar>
Sim3<Scalar> compose(const Sim3<Scalar>& a, const Sim3<Scalar>& b) {
  return Sim3<Scalar>(a.rotation() * b.rotation(),
                      a.scale() * (a.rotation() * b.translation()) +
                          a.translation(),
                      a.scale() * b.scale());
}

template <typename Scalar>
Sim3<Scalar> inverse(const Sim3<Scalar>& transform) {
  return transform.inverse();
}

}  // namespace pcrform

#endif  // PCRFORM_SIM3_HPP
