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
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainplan/core.hpp"
#include "chainplan/errors.hpp"
#include "chainplan/steering.hpp"

namespace chainplan {

/// An equilibrium-to-equilibrium transfer request. Every phase of the
/// produced maneuver lasts `phase_duration` and uses the same angular
/// frequency `omega`.
struct PlanningProblem {
  EquilibriumPoint start;
  EquilibriumPoint goal;
  double phase_duration = 1.0;  // T
  double omega = kTwoPi;        // rad/s, omega*T must be a multiple of 2*pi

  void validate() const {
    if (!all_finite(start.to_state()) || !all_finite(goal.to_state())) {
      throw std::invalid_argument("PlanningProblem: non-finite endpoint");
    }
    detail::require_whole_periods(omega, phase_duration, "PlanningProblem");
  }
};

/// An ordered maneuver plus the analytically predicted state at every phase
/// boundary. `predicted_waypoints.front()` is the assumed start state, so
/// the list holds one more entry than `phases`.
struct Plan {
  std::vector<Phase> phases;
  std::vector<State6> predicted_waypoints;
  double total_duration = 0.0;

  bool empty() const { return phases.empty(); }
  std::size_t size() const { return phases.size(); }
};

/// Exact state at local time t into `phase` when entering it at `entry`.
/// While u2 drives the system, (z1,z3) coast on their entry rates. While u1
/// drives it, z2 coasts on z5 and the (z3,z6) block responds with the entry
/// value of z2 as its input coefficient; that value is exact whenever the
/// phase is entered at rest, since u2 == 0 keeps z2 constant then.
inline State6 closed_form_state(const State6& entry, const Phase& phase, double t) {
  const Sinusoid& s = phase.signal;
  State6 out = entry;
  if (phase.channel == Channel::U2) {
    const auto [x2, v2] = rest_to_rest_closed_form(entry.z2, entry.z5, s, 1.0, t);
    out.z2 = x2;
    out.z5 = v2;
    out.z1 = entry.z1 + entry.z4 * t;
    out.z3 = entry.z3 + entry.z6 * t;
  } else {
    const auto [x1, v1] = rest_to_rest_closed_form(entry.z1, entry.z4, s, 1.0, t);
    const auto [x3, v3] = rest_to_rest_closed_form(entry.z3, entry.z6, s, entry.z2, t);
    out.z1 = x1;
    out.z4 = v1;
    out.z3 = x3;
    out.z6 = v3;
    out.z2 = entry.z2 + entry.z5 * t;
  }
  return out;
}

/// State at the end of `phase` when entering it at `entry`.
inline State6 phase_endpoint(const State6& entry, const Phase& phase) {
  return closed_form_state(entry, phase, phase.signal.duration);
}

/// Builds the five-step switching maneuver between two rest configurations:
///
///   Step 1  (u2)  raise z2 to 1; the (z3,z6) block now mirrors (z1,z4)
///   Step 2  (u1)  move z3 to its goal; z1 tags along by the same amount
///   Step 3  (u2)  lower z2 to 0; the (z3,z6) block is now inert
///   Step 4  (u1)  move z1 to its goal, absorbing the step-2 drift
///   Step 5  (u2)  move z2 to its goal
///
/// Each step is one whole sinusoid period, so every phase boundary is a
/// rest state. Steps with zero displacement are kept; see compress().
inline Plan synthesize(const PlanningProblem& problem) {
  problem.validate();
  const double T = problem.phase_duration;
  const double omega = problem.omega;
  const double dz3 = problem.goal.z3 - problem.start.z3;

  const double displacements[5] = {
      1.0 - problem.start.z2,
      dz3,
      -1.0,
      problem.goal.z1 - (problem.start.z1 + dz3),
      problem.goal.z2,
  };
  const Channel channels[5] = {Channel::U2, Channel::U1, Channel::U2,
                               Channel::U1, Channel::U2};

  Plan plan;
  plan.predicted_waypoints.push_back(problem.start.to_state());
  for (int i = 0; i < 5; ++i) {
    const double a = amplitude_for_displacement(displacements[i], omega, T);
    Phase phase{channels[i], Sinusoid(a, omega, T), "Step " + std::to_string(i + 1)};
    plan.predicted_waypoints.push_back(phase_endpoint(plan.predicted_waypoints.back(), phase));
    plan.phases.push_back(std::move(phase));
    plan.total_duration += T;
  }
  return plan;
}

/// Drops phases whose amplitude magnitude is <= tol and rebuilds the
/// waypoint predictions from the original start. A dropped phase is a
/// no-op up to tol, so the endpoints are preserved (bitwise for tol == 0,
/// where only exact zero amplitudes go).
inline Plan compress(const Plan& plan, double tol = 0.0) {
  Plan out;
  out.predicted_waypoints.push_back(
      plan.predicted_waypoints.empty() ? State6{} : plan.predicted_waypoints.front());
  for (const Phase& phase : plan.phases) {
    if (std::abs(phase.signal.amplitude) <= tol) continue;
    out.predicted_waypoints.push_back(phase_endpoint(out.predicted_waypoints.back(), phase));
    out.phases.push_back(phase);
    out.total_duration += phase.signal.duration;
  }
  return out;
}

/// Final state after running `plan` from `start`, composing the phase
/// closed forms. `start` must be a rest state; the composition is exact
/// because every phase of a synthesized plan begins and ends at rest.
inline State6 predict_final_state(const Plan& plan, const State6& start) {
  if (!is_equilibrium(start)) {
    throw std::invalid_argument("predict_final_state: start must be an equilibrium");
  }
  State6 z = start;
  for (const Phase& phase : plan.phases) z = phase_endpoint(z, phase);
  return z;
}

}  // namespace chainplan
