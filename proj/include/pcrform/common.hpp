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

#ifndef PCRFORM_COMMON_HPP
#define PCRFORM_COMMON_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcrform {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using AgentId = int;

/// Base class for all recoverable library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TooFewPoints : Error {
  using Error::Error;
};
struct DegenerateConfiguration : Error {
  using Error::Error;
};
struct NonPositiveScale : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct InvalidRatio : Error {
  using Error::Error;
};
struct NoConsensus : Error {
  using Error::Error;
};
struct EmptyPeerSet : Error {
  using Error::Error;
};
struct NonConvergence : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct OutOfDomain : Error {
  using Error::Error;
};
struct StaleCache : Error {
  using Error::Error;
};
struct TimestampOutOfDomain : Error {
  using Error::Error;
};
struct NonFiniteCost : Error {
  using Error::Error;
};
struct UnknownAgent : Error {
  using Error::Error;
};
struct InsufficientPeers : Error {
  using Error::Error;
};
struct UnsupportedCount : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct SimulationDiverged : Error {
  using Error::Error;
};

/// Per-timestamp registration failure, carries the frame index.
class RegistrationFailed : public Error {
 public:
  RegistrationFailed(int frame_index, const std::string& what)
      : Error("frame " + std::to_string(frame_index) + ": " + what),
        frame_index_(frame_index) {}
  int frameIndex() const { return frame_index_; }

 private:
  int frame_index_;
};

}  // namespace pcrform

#endif  // PCRFORM_COMMON_HPP
