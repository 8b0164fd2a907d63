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
#include <string>
#include <utility>

#include "chainplan/core.hpp"
#include "chainplan/errors.hpp"

namespace chainplan {

/// Relative tolerance for deciding that omega * T is a whole number of
/// periods (absorbs the rounding of pi).
inline constexpr double kFrequencyRelTol = 1e-9;

/// Number of full periods the sinusoid completes over [0, duration], or 0
/// when omega * duration is not a positive multiple of 2*pi within
/// kFrequencyRelTol.
inline long period_multiple(double omega, double duration) {
  if (!(omega > 0.0) || !(duration > 0.0)) return 0;
  const double wt = omega * duration;
  if (!std::isfinite(wt)) return 0;
  const double k = std::round(wt / kTwoPi);
  if (k < 1.0) return 0;
  if (std::abs(wt - k * kTwoPi) > kFrequencyRelTol * wt) return 0;
  return static_cast<long>(k);
}

namespace detail {
inline void require_whole_periods(double omega, double duration, const char* who) {
  if (period_multiple(omega, duration) == 0) {
    throw InvalidFrequencyError(std::string(who) +
                                ": omega*T must be a positive multiple of 2*pi");
  }
}
}  // namespace detail

/// One sinusoidal acceleration pulse,
///
///   u(t) = amplitude * omega^2 * sin(omega * t),   t in [0, duration],
///
/// covering whole periods only, so a double integrator driven by it starts
/// and ends at rest. The sign of the pulse lives in the amplitude.
struct Sinusoid {
  Sinusoid(double amplitude_, double omega_, double duration_)
      : amplitude(amplitude_), omega(omega_), duration(duration_) {
    detail::require_whole_periods(omega, duration, "Sinusoid");
  }

  double amplitude;  // signed, position units
  double omega;      // rad/s
  double duration;   // s
};

enum class Channel { U1, U2 };

/// One maneuver segment. The chosen channel carries the sinusoid; the other
/// input is identically zero for the whole phase.
struct Phase {
  Channel channel;
  Sinusoid signal;
  std::string label;  // e.g. "Step 2"
};

/// Amplitude a such that u(t) = a * omega^2 * sin(omega*t) over [0, T]
/// moves a double integrator starting at rest by exactly delta, ending at
/// rest again. Integrating the pulse twice gives a net displacement of
/// a * omega * T per run, hence a = delta / (omega * T).
inline double amplitude_for_displacement(double delta, double omega, double duration) {
  detail::require_whole_periods(omega, duration, "amplitude_for_displacement");
  return delta / (omega * duration);
}

/// Inputs of `phase` at local time t in [0, duration].
inline Input2 input_at(const Phase& phase, double t) {
  const Sinusoid& s = phase.signal;
  if (!(t >= 0.0) || t > s.duration) {
    throw std::out_of_range("input_at: t outside [0, duration]");
  }
  const double u = s.amplitude * s.omega * s.omega * std::sin(s.omega * t);
  return phase.channel == Channel::U1 ? Input2{u, 0.0} : Input2{0.0, u};
}

/// Exact solution of xddot = gain * a * omega^2 * sin(omega*t) from
/// (x0, v0):
///
///   v(t) = v0 + gain * a * omega * (1 - cos(omega*t))
///   x(t) = x0 + v0*t + gain * a * (omega*t - sin(omega*t))
///
/// gain is the constant coefficient multiplying the input (1 for a plain
/// double integrator). Returns (x, v).
inline std::pair<double, double> rest_to_rest_closed_form(double x0, double v0,
                                                          const Sinusoid& s,
                                                          double gain, double t) {
  if (!(t >= 0.0) || t > s.duration) {
    throw std::out_of_range("rest_to_rest_closed_form: t outside [0, duration]");
  }
  const double wt = s.omega * t;
  const double x = x0 + v0 * t + gain * s.amplitude * (wt - std::sin(wt));
  const double v = v0 + gain * s.amplitude * s.omega * (1.0 - std::cos(wt));
  return {x, v};
}

}  // namespace chainplan
