// Copyright 2026 The chainplan Authors
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

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "chainplan/core.hpp"
#include "chainplan/trajectory.hpp"

namespace chainplan {

/// The three position/rate blocks of the dynamics. (z2,z5) and (z1,z4) are
/// plain double integrators under u2 and u1; (z3,z6) is driven by z2 * u1.
enum class SubsystemId { Z2Z5, Z1Z4, Z3Z6 };

/// (position, rate) of the chosen block.
inline std::pair<double, double> project(const State6& z, SubsystemId which) {
  switch (which) {
    case SubsystemId::Z2Z5: return {z.z2, z.z5};
    case SubsystemId::Z1Z4: return {z.z1, z.z4};
    case SubsystemId::Z3Z6: return {z.z3, z.z6};
  }
  throw std::logic_error("project: bad subsystem id");
}

/// Input coefficient of the (z3,z6) block. At 1 the block mirrors (z1,z4)
/// under the shared u1; at 0 it is inert and (z1,z4) moves alone.
inline double coupling_gain(const State6& z) { return z.z2; }

/// True when both components of the chosen block stay within tol of their
/// first-sample values at every sample.
inline bool check_frozen(const Trajectory& traj, SubsystemId which, double tol) {
  if (traj.empty()) {
    throw std::invalid_argument("check_frozen: empty trajectory");
  }
  const auto [p0, v0] = project(traj.samples.front().state, which);
  for (const TrajectorySample& s : traj.samples) {
    const auto [p, v] = project(s.state, which);
    if (std::abs(p - p0) > tol || std::abs(v - v0) > tol) return false;
  }
  return true;
}

/// True when the (z3,z6) increments track the (z1,z4) increments within tol
/// at every sample, as they do while z2 is held at 1. Compares increments,
/// not values, so differing starting points do not matter.
inline bool check_mirrored(const Trajectory& traj, double tol) {
  if (traj.empty()) {
    throw std::invalid_argument("check_mirrored: empty trajectory");
  }
  const State6& z0 = traj.samples.front().state;
  for (const TrajectorySample& s : traj.samples) {
    const State6& z = s.state;
    if (std::abs((z.z3 - z0.z3) - (z.z1 - z0.z1)) > tol) return false;
    if (std::abs((z.z6 - z0.z6) - (z.z4 - z0.z4)) > tol) return false;
  }
  return true;
}

}  // namespace chainplan
