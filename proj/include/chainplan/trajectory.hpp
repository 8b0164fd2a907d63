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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chainplan/core.hpp"

namespace chainplan {

struct TrajectorySample {
  double t = 0.0;
  State6 state;
  Input2 input;  // the inputs applied from this sample until the next one
};

/// Uniformly sampled time history of one run. `phase_boundaries` holds the
/// sample indices where one phase hands over to the next (interior
/// boundaries only: a k-phase trajectory has k-1 entries).
struct Trajectory {
  std::vector<TrajectorySample> samples;
  double dt = 0.0;
  std::vector<std::size_t> phase_boundaries;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  double duration() const { return samples.empty() ? 0.0 : samples.back().t; }
  std::size_t phase_count() const { return phase_boundaries.size() + 1; }

  /// First and last sample index (inclusive) covered by the given phase.
  std::pair<std::size_t, std::size_t> phase_sample_range(std::size_t phase) const {
    if (phase >= phase_count() || samples.empty()) {
      throw std::out_of_range("Trajectory: phase index out of range");
    }
    const std::size_t first = phase == 0 ? 0 : phase_boundaries[phase - 1];
    const std::size_t last =
        phase + 1 == phase_count() ? samples.size() - 1 : phase_boundaries[phase];
    return {first, last};
  }

  /// Copy of the samples in [first, last], boundaries remapped.
  Trajectory segment(std::size_t first, std::size_t last) const {
    if (first > last || last >= samples.size()) {
      throw std::out_of_range("Trajectory::segment: bad sample range");
    }
    Trajectory out;
    out.dt = dt;
    out.samples.assign(samples.begin() + static_cast<std::ptrdiff_t>(first),
                       samples.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    for (std::size_t b : phase_boundaries) {
      if (b > first && b < last) out.phase_boundaries.push_back(b - first);
    }
    return out;
  }

  Trajectory phase_segment(std::size_t phase) const {
    const auto [first, last] = phase_sample_range(phase);
    return segment(first, last);
  }
};

/// Largest state deviation between two trajectories on the same grid:
/// max over samples and state components of |a - b|.
inline double compare(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size() || a.dt != b.dt) {
    throw std::invalid_argument("compare: trajectories are on different grids");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const State6& x = a.samples[i].state;
    const State6& y = b.samples[i].state;
    worst = std::max(worst, std::abs(x.z1 - y.z1));
    worst = std::max(worst, std::abs(x.z2 - y.z2));
    worst = std::max(worst, std::abs(x.z3 - y.z3));
    worst = std::max(worst, std::abs(x.z4 - y.z4));
    worst = std::max(worst, std::abs(x.z5 - y.z5));
    worst = std::max(worst, std::abs(x.z6 - y.z6));
  }
  return worst;
}

/// Simulation options. dt <= 0 selects the per-plan default step.
struct SimConfig {
  double dt = 0.0;
  bool record_inputs = true;
};

}  // namespace chainplan
