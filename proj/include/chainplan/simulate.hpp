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

#include "chainplan/core.hpp"
#include "chainplan/errors.hpp"
#include "chainplan/planner.hpp"
#include "chainplan/steering.hpp"
#include "chainplan/trajectory.hpp"

namespace chainplan {

/// Target sample count of the default step size.
inline constexpr std::size_t kDefaultSampleTarget = 4000;

/// Relative tolerance for "dt divides the phase duration".
inline constexpr double kStepAlignRelTol = 1e-9;

namespace detail {

inline std::size_t steps_for(double duration, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidStepError("simulate: dt must be positive and finite");
  }
  const double n = std::round(duration / dt);
  if (n < 1.0 || std::abs(n * dt - duration) > kStepAlignRelTol * duration) {
    throw InvalidStepError("simulate: dt does not divide the phase duration");
  }
  return static_cast<std::size_t>(n);
}

inline State6 add_scaled(const State6& z, double s, const State6& d) {
  return State6{z.z1 + s * d.z1, z.z2 + s * d.z2, z.z3 + s * d.z3,
                z.z4 + s * d.z4, z.z5 + s * d.z5, z.z6 + s * d.z6};
}

/// Classic fourth-order Runge-Kutta step over [t0, t_end] of one phase.
/// t_end is passed explicitly so the last step of a phase lands exactly on
/// the phase duration.
inline State6 rk4_step(const State6& z, const Phase& phase, double t0,
                       double t_end, double dt) {
  const Input2 ua = input_at(phase, t0);
  const Input2 um = input_at(phase, t0 + 0.5 * dt);
  const Input2 ub = input_at(phase, t_end);
  const State6 k1 = dynamics(z, ua);
  const State6 k2 = dynamics(add_scaled(z, 0.5 * dt, k1), um);
  const State6 k3 = dynamics(add_scaled(z, 0.5 * dt, k2), um);
  const State6 k4 = dynamics(add_scaled(z, dt, k3), ub);
  const State6 sum{k1.z1 + 2.0 * k2.z1 + 2.0 * k3.z1 + k4.z1,
                   k1.z2 + 2.0 * k2.z2 + 2.0 * k3.z2 + k4.z2,
                   k1.z3 + 2.0 * k2.z3 + 2.0 * k3.z3 + k4.z3,
                   k1.z4 + 2.0 * k2.z4 + 2.0 * k3.z4 + k4.z4,
                   k1.z5 + 2.0 * k2.z5 + 2.0 * k3.z5 + k4.z5,
                   k1.z6 + 2.0 * k2.z6 + 2.0 * k3.z6 + k4.z6};
  return add_scaled(z, dt / 6.0, sum);
}

inline void require_equilibrium_start(const State6& start, const char* who) {
  if (!all_finite(start) || !is_equilibrium(start)) {
    throw std::invalid_argument(std::string(who) + ": start must be an equilibrium");
  }
}

/// Input recorded at a sample: the one applied from that time forward.
/// Boundary samples carry the next phase's (zero-valued) switch-on input.
inline Input2 recorded_input(const Plan& plan, std::size_t phase_idx,
                             double t_local, bool last_step_of_phase) {
  if (last_step_of_phase && phase_idx + 1 < plan.phases.size()) {
    return input_at(plan.phases[phase_idx + 1], 0.0);
  }
  return input_at(plan.phases[phase_idx], t_local);
}

}  // namespace detail

/// Step size for `plan` giving at least kDefaultSampleTarget samples while
/// dividing every phase exactly. Requires a shared phase duration (always
/// the case for synthesized plans); 0.0 for an empty plan.
inline double default_dt(const Plan& plan) {
  if (plan.empty()) return 0.0;
  const double T = plan.phases.front().signal.duration;
  for (const Phase& phase : plan.phases) {
    if (phase.signal.duration != T) {
      throw InvalidStepError("default_dt: phases have mixed durations, pass dt explicitly");
    }
  }
  const std::size_t k = plan.phases.size();
  const std::size_t steps_per_phase = (kDefaultSampleTarget + k - 1) / k;
  return T / static_cast<double>(steps_per_phase);
}

/// Integrates the full nonlinear dynamics under the plan's inputs with a
/// fixed-step fourth-order Runge-Kutta scheme. Steps are aligned with the
/// phase boundaries, so no step straddles an input switch. Samples are
/// recorded at every step on the uniform grid t_i = i * dt.
inline Trajectory simulate(const Plan& plan, const State6& start,
                           const SimConfig& config = {}) {
  detail::require_equilibrium_start(start, "simulate");
  Trajectory traj;
  traj.dt = config.dt > 0.0 ? config.dt : default_dt(plan);

  State6 z = start;
  Input2 u0{};
  if (!plan.empty() && config.record_inputs) {
    u0 = input_at(plan.phases.front(), 0.0);
  }
  traj.samples.push_back(TrajectorySample{0.0, z, u0});
  if (plan.empty()) return traj;

  std::size_t global = 0;
  for (std::size_t p = 0; p < plan.phases.size(); ++p) {
    const Phase& phase = plan.phases[p];
    const double T = phase.signal.duration;
    const std::size_t n = detail::steps_for(T, traj.dt);
    if (p > 0) traj.phase_boundaries.push_back(global);
    for (std::size_t j = 0; j < n; ++j) {
      const double t0 = static_cast<double>(j) * traj.dt;
      const bool last = j + 1 == n;
      const double t1 = last ? T : static_cast<double>(j + 1) * traj.dt;
      z = detail::rk4_step(z, phase, t0, t1, traj.dt);
      ++global;
      Input2 u{};
      if (config.record_inputs) u = detail::recorded_input(plan, p, t1, last);
      traj.samples.push_back(
          TrajectorySample{static_cast<double>(global) * traj.dt, z, u});
    }
  }
  return traj;
}

/// Samples the exact analytic solution on the same grid simulate() uses:
/// the per-phase closed forms composed across phases, with z2 frozen at its
/// phase-entry value acting as the (z3,z6) input coefficient during u1
/// phases. This is the reference the integrator is checked against.
inline Trajectory oracle_trajectory(const Plan& plan, const State6& start, double dt) {
  detail::require_equilibrium_start(start, "oracle_trajectory");
  Trajectory traj;
  traj.dt = dt > 0.0 ? dt : default_dt(plan);

  Input2 u0{};
  if (!plan.empty()) u0 = input_at(plan.phases.front(), 0.0);
  traj.samples.push_back(TrajectorySample{0.0, start, u0});
  if (plan.empty()) return traj;

  State6 entry = start;
  std::size_t global = 0;
  for (std::size_t p = 0; p < plan.phases.size(); ++p) {
    const Phase& phase = plan.phases[p];
    const double T = phase.signal.duration;
    const std::size_t n = detail::steps_for(T, traj.dt);
    if (p > 0) traj.phase_boundaries.push_back(global);
    State6 z = entry;
    for (std::size_t j = 1; j <= n; ++j) {
      const bool last = j == n;
      const double t = last ? T : static_cast<double>(j) * traj.dt;
      z = closed_form_state(entry, phase, t);
      ++global;
      traj.samples.push_back(TrajectorySample{
          static_cast<double>(global) * traj.dt, z,
          detail::recorded_input(plan, p, t, last)});
    }
    entry = z;
  }
  return traj;
}

}  // namespace chainplan
