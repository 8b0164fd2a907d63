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

namespace chainplan {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Velocities below this count as "at rest".
inline constexpr double kEquilibriumTol = 1e-9;

/// Full state of the second-order chained form system:
/// (z1, z2, z3) are the configuration variables, (z4, z5, z6) their rates.
struct State6 {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 0.0;
  double z4 = 0.0;
  double z5 = 0.0;
  double z6 = 0.0;
};

/// The two acceleration inputs.
struct Input2 {
  double u1 = 0.0;
  double u2 = 0.0;
};

/// A rest configuration. Expands to a State6 with zero velocities.
struct EquilibriumPoint {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 0.0;

  State6 to_state() const { return State6{z1, z2, z3, 0.0, 0.0, 0.0}; }
};

inline bool all_finite(const State6& z) {
  return std::isfinite(z.z1) && std::isfinite(z.z2) && std::isfinite(z.z3) &&
         std::isfinite(z.z4) && std::isfinite(z.z5) && std::isfinite(z.z6);
}

inline bool all_finite(const Input2& u) {
  return std::isfinite(u.u1) && std::isfinite(u.u2);
}

/// Time derivative of the chained form dynamics:
///
///   zdot = (z4, z5, z6, u1, u2, z2 * u1)
///
/// The system is affine in u; the only nonlinearity is the z2-scaled
/// coupling of u1 into the z6 rate.
inline State6 dynamics(const State6& z, const Input2& u) {
  if (!all_finite(z) || !all_finite(u)) {
    throw std::invalid_argument("dynamics: non-finite state or input");
  }
  return State6{z.z4, z.z5, z.z6, u.u1, u.u2, z.z2 * u.u1};
}

/// True when every velocity component is within tol of zero. Positions are
/// free: any (z1, z2, z3) with zero rates holds still under zero input.
inline bool is_equilibrium(const State6& z, double tol = kEquilibriumTol) {
  return std::abs(z.z4) <= tol && std::abs(z.z5) <= tol && std::abs(z.z6) <= tol;
}

}  // namespace chainplan
