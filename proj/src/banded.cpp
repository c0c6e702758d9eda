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

#include "pcrform/banded.hpp"

#include <algorithm>
#include <cmath>

namespace pcrform {

BandedLU::BandedLU(int n, int lower_bandwidth, int upper_bandwidth)
    : n_(n),
      kl_(std::min(lower_bandwidth, n - 1)),
      ku_(std::min(upper_bandwidth, n - 1)),
      storage_(2 * kl_ + ku_ + 1, n),
      pivots_(n) {
  storage_.setZero();
}

void BandedLU::setZero() {
  storage_.setZero();
  factorized_ = false;
}

void BandedLU::factorize() {
  // Unblocked banded LU with row interchanges (dgbtf2 layout).
  const int diag = kl_ + ku_;
  int last_col = 0;
  for (int j = 0; j < n_; ++j) {
    const int below = std::min(kl_, n_ - 1 - j);
    int pivot_offset = 0;
    double pivot_mag = std::abs(storage_(diag, j));
    for (int i = 1; i <= below; ++i) {
      const double mag = std::abs(storage_(diag + i, j));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_offset = i;
      }
    }
    pivots_[j] = j + pivot_offset;
    if (pivot_mag == 0.0)
      throw SingularSystem("BandedLU: zero pivot at column " +
                           std::to_string(j));

    last_col = std::max(last_col, std::min(j + ku_ + pivot_offset, n_ - 1));
    if (pivot_offset != 0) {
      for (int c = j; c <= last_col; ++c)
        std::swap(storage_(diag + j - c, c),
                  storage_(diag + j + pivot_offset - c, c));
    }

    const double pivot = storage_(diag, j);
    for (int i = 1; i <= below; ++i) storage_(diag + i, j) /= pivot;
    for (int c = j + 1; c <= last_col; ++c) {
      const double ujc = storage_(diag + j - c, c);
      if (ujc == 0.0) continue;
      for (int i = 1; i <= below; ++i)
        storage_(diag + j + i - c, c) -= storage_(diag + i, j) * ujc;
    }
  }
  factorized_ = true;
}

void BandedLU::solveInPlace(Eigen::Ref<Eigen::MatrixXd> b) const {
  if (!factorized_) throw SingularSystem("BandedLU: solve before factorize");
  const int diag = kl_ + ku_;
  const int nrhs = static_cast<int>(b.cols());

  for (int j = 0; j < n_; ++j) {
    if (pivots_[j] != j) b.row(j).swap(b.row(pivots_[j]));
    const int below = std::min(kl_, n_ - 1 - j);
    for (int i = 1; i <= below; ++i)
      for (int r = 0; r < nrhs; ++r)
        b(j + i, r) -= storage_(diag + i, j) * b(j, r);
  }
  for (int j = n_ - 1; j >= 0; --j) {
    const double pivot = storage_(diag, j);
    for (int r = 0; r < nrhs; ++r) b(j, r) /= pivot;
    const int above = std::min(kl_ + ku_, j);
    for (int i = 1; i <= above; ++i)
      for (int r = 0; r < nrhs; ++r)
        b(j - i, r) -= storage_(diag - i, j) * b(j, r);
  }
}

void BandedLU::solveTransposeInPlace(Eigen::Ref<Eigen::MatrixXd> b) const {
  if (!factorized_) throw SingularSystem("BandedLU: solve before factorize");
  const int diag = kl_ + ku_;
  const int nrhs = static_cast<int>(b.cols());

  // U^T y = b, lower-triangular in the transposed view.
  for (int j = 0; j < n_; ++j) {
    const int above = std::min(kl_ + ku_, j);
    for (int i = 1; i <= above; ++i)
      for (int r = 0; r < nrhs; ++r)
        b(j, r) -= storage_(diag - i, j) * b(j - i, r);
    const double pivot = storage_(diag, j);
    for (int r = 0; r < nrhs; ++r) b(j, r) /= pivot;
  }
  // L^T z = y with interleaved row interchanges, descending.
  for (int j = n_ - 1; j >= 0; --j) {
    const int below = std::min(kl_, n_ - 1 - j);
    for (int i = 1; i <= below; ++i)
      for (int r = 0; r < nrhs; ++r)
        b(j, r) -= storage_(diag + i, j) * b(j + i, r);
    if (pivots_[j] != j) b.row(j).swap(b.row(pivots_[j]));
  }
}

}  // namespace pcrform
