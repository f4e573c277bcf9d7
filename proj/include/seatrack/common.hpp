// Copyright 2025 the seatrack authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEATRACK_COMMON_HPP
#define SEATRACK_COMMON_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace seatrack {

inline constexpr double kPi = std::numbers::pi;

/// Error categories surfaced by the library. The CLI maps these to
/// distinct process exit codes.
enum class Errc {
  InsufficientCorrespondences,
  NoConsensus,
  DegenerateGeometry,
  PointAtInfinity,
  InvalidWarp,
  EmptyPointSet,
  CoincidentWithSensor,
  NondegenerateCovarianceRequired,
  AllWeightsDegenerate,
  NoDetectionInBin,
  NoSensorAvailable,
  EmptyZone,
  BadWaypoints,
  BadConfig,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& what) {
  throw Error(code, what);
}

/// Maps an angle onto (-pi, pi]. The lower boundary folds to +pi so that
/// a bearing of exactly pi has a single representation.
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/// Shortest signed difference a - b wrapped onto (-pi, pi].
inline double angle_difference(double a, double b) { return wrap_angle(a - b); }

}  // namespace seatrack

#endif  // SEATRACK_COMMON_HPP
