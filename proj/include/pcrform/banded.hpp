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

#ifndef PCRFORM_BANDED_HPP
#define PCRFORM_BANDED_HPP

#include <Eigen/Core>

#include <vector>

#include "pcrform/common.hpp"

namespace pcrform {

/// Banded LU factorization with partial pivoting, LAPACK-style band
/// storage: entry (i, j) of the n x n matrix with lower bandwidth kl and
/// upper bandwidth ku lives at row kl + ku + i - j of a (2 kl + ku + 1) x n
/// array. The extra kl rows hold pivoting fill. Supports plain and
/// transposed solves against the same factorization, which is what the
/// trajectory coefficient mapping and its adjoint need.
class BandedLU {
 public:
  BandedLU(int n, int lower_bandwidth, int upper_bandwidth);

  int size() const { return n_; }

  /// Assembly access. Only positions with -ku <= i - j <= kl are valid.
  double& entry(int i, int j) {
    return storage_(kl_ + ku_ + i - j, j);
  }
  double entry(int i, int j) const { return storage_(kl_ + ku_ + i - j, j); }

  void setZero();

  /// Factorizes in place. Throws SingularSystem on a zero pivot.
  void factorize();

  bool factorized() const { return factorized_; }

  /// Solves A x = b in place (multiple right-hand sides).
  void solveInPlace(Eigen::Ref<Eigen::MatrixXd> b) const;

  /// Solves A^T x = b in place.
  void solveTransposeInPlace(Eigen::Ref<Eigen::MatrixXd> b) const;

 private:
  int n_;
  int kl_;
  int ku_;
  Eigen::MatrixXd storage_;
  std::vector<int> pivots_;
  bool factorized_ = false;
};

}  // namespace pcrform

#endif  // PCRFORM_BANDED_HPP
