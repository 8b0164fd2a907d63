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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "chainplan/planner.hpp"
#include "chainplan/simulate.hpp"
#include "testutil.hpp"

using namespace chainplan;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("synthesize reproduces the demo maneuver amplitudes", "[planner]") {
  const Plan plan = synthesize(testutil::demo_problem());
  REQUIRE(plan.size() == 5);
  REQUIRE(plan.total_duration == 5.0);

  REQUIRE_THAT(plan.phases[0].signal.amplitude, WithinRel(0.5 / kTwoPi, 1e-15));
  REQUIRE_THAT(plan.phases[1].signal.amplitude, WithinRel(-1.0 / kTwoPi, 1e-15));
  REQUIRE_THAT(plan.phases[2].signal.amplitude, WithinRel(-1.0 / kTwoPi, 1e-15));
  REQUIRE_THAT(plan.phases[3].signal.amplitude, WithinRel(-2.0 / kTwoPi, 1e-15));
  REQUIRE(plan.phases[4].signal.amplitude == 0.0);

  REQUIRE(plan.phases[0].channel == Channel::U2);
  REQUIRE(plan.phases[1].channel == Channel::U1);
  REQUIRE(plan.phases[2].channel == Channel::U2);
  REQUIRE(plan.phases[3].channel == Channel::U1);
  REQUIRE(plan.phases[4].channel == Channel::U2);

  REQUIRE(plan.phases[0].label == "Step 1");
  REQUIRE(plan.phases[4].label == "Step 5");
}

TEST_CASE("synthesize on the identity transfer only cycles z2", "[planner]") {
  PlanningProblem p;
  p.start = EquilibriumPoint{0.0, 0.0, 0.0};
  p.goal = EquilibriumPoint{0.0, 0.0, 0.0};
  const Plan plan = synthesize(p);
  REQUIRE_THAT(plan.phases[0].signal.amplitude, WithinRel(1.0 / kTwoPi, 1e-15));
  REQUIRE(plan.phases[1].signal.amplitude == 0.0);
  REQUIRE_THAT(plan.phases[2].signal.amplitude, WithinRel(-1.0 / kTwoPi, 1e-15));
  REQUIRE(plan.phases[3].signal.amplitude == 0.0);
  REQUIRE(plan.phases[4].signal.amplitude == 0.0);
}

TEST_CASE("step 4 absorbs the z1 drift picked up in step 2", "[planner]") {
  PlanningProblem p;
  p.start = EquilibriumPoint{0.0, 0.0, 0.0};
  p.goal = EquilibriumPoint{0.0, 0.0, 1.0};
  const Plan plan = synthesize(p);
  REQUIRE_THAT(plan.phases[1].signal.amplitude, WithinRel(1.0 / kTwoPi, 1e-15));
  REQUIRE_THAT(plan.phases[3].signal.amplitude, WithinRel(-1.0 / kTwoPi, 1e-15));
}

TEST_CASE("synthesize validates the problem", "[planner]") {
  PlanningProblem p = testutil::demo_problem();
  p.omega = 3.0;
  REQUIRE_THROWS_AS(synthesize(p), InvalidFrequencyError);
  p = testutil::demo_problem();
  p.phase_duration = -1.0;
  REQUIRE_THROWS_AS(synthesize(p), InvalidFrequencyError);
}

TEST_CASE("compress drops only zero-amplitude phases", "[planner]") {
  SECTION("demo maneuver shrinks to four steps") {
    const Plan plan = compress(synthesize(testutil::demo_problem()));
    REQUIRE(plan.size() == 4);
    REQUIRE(plan.total_duration == 4.0);
    REQUIRE(plan.phases[0].label == "Step 1");
    REQUIRE(plan.phases[3].label == "Step 4");
  }
  SECTION("plans without zero amplitudes are untouched") {
    PlanningProblem p;
    p.start = EquilibriumPoint{1.0, 0.5, 2.0};
    p.goal = EquilibriumPoint{-1.0, 0.25, 3.0};
    const Plan plan = synthesize(p);
    const Plan same = compress(plan);
    REQUIRE(same.size() == plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) {
      REQUIRE(same.phases[i].signal.amplitude == plan.phases[i].signal.amplitude);
    }
  }
  SECTION("identity transfer keeps just the z2 round trip") {
    PlanningProblem p;
    const Plan plan = compress(synthesize(p));
    REQUIRE(plan.size() == 2);
    REQUIRE(plan.phases[0].label == "Step 1");
    REQUIRE(plan.phases[1].label == "Step 3");
    const State6 fin = predict_final_state(plan, p.start.to_state());
    REQUIRE_THAT(testutil::max_abs_dev(fin, p.goal.to_state()), WithinAbs(0.0, 1e-12));
  }
  SECTION("tol = 0 leaves predictions bitwise identical") {
    const Plan plan = synthesize(testutil::demo_problem());
    const Plan packed = compress(plan, 0.0);
    const State6 start = plan.predicted_waypoints.front();
    const State6 a = predict_final_state(plan, start);
    const State6 b = predict_final_state(packed, start);
    REQUIRE(a.z1 == b.z1);
    REQUIRE(a.z2 == b.z2);
    REQUIRE(a.z3 == b.z3);
    REQUIRE(a.z4 == b.z4);
    REQUIRE(a.z5 == b.z5);
    REQUIRE(a.z6 == b.z6);
  }
}

TEST_CASE("predict_final_state composes the closed forms", "[planner]") {
  SECTION("demo maneuver lands on the origin") {
    const Plan plan = synthesize(testutil::demo_problem());
    const State6 fin = predict_final_state(plan, State6{3.0, 0.5, 1.0, 0.0, 0.0, 0.0});
    REQUIRE_THAT(testutil::max_abs_dev(fin, State6{}), WithinAbs(0.0, 1e-12));
  }
  SECTION("empty plan returns the start") {
    const State6 start{1.0, 2.0, 3.0, 0.0, 0.0, 0.0};
    const State6 fin = predict_final_state(Plan{}, start);
    REQUIRE(testutil::max_abs_dev(fin, start) == 0.0);
  }
  SECTION("pure z3 transfer, cross-checked by integration") {
    PlanningProblem p;
    p.goal = EquilibriumPoint{0.0, 0.0, 1.0};
    const Plan plan = synthesize(p);
    const State6 want{0.0, 0.0, 1.0, 0.0, 0.0, 0.0};
    const State6 fin = predict_final_state(plan, p.start.to_state());
    REQUIRE_THAT(testutil::max_abs_dev(fin, want), WithinAbs(0.0, 1e-12));

    SimConfig cfg;
    cfg.dt = 1e-3;
    const Trajectory traj = simulate(plan, p.start.to_state(), cfg);
    REQUIRE_THAT(testutil::max_abs_dev(traj.samples.back().state, want),
                 WithinAbs(0.0, 1e-6));
  }
  SECTION("moving start is rejected") {
    REQUIRE_THROWS_AS(predict_final_state(Plan{}, State6{0, 0, 0, 0.1, 0, 0}),
                      std::invalid_argument);
  }
}

TEST_CASE("random transfers all land on their goal", "[planner][prop]") {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  for (int i = 0; i < 300; ++i) {
    PlanningProblem p;
    p.start = EquilibriumPoint{pos(rng), pos(rng), pos(rng)};
    p.goal = EquilibriumPoint{pos(rng), pos(rng), pos(rng)};
    const Plan plan = synthesize(p);

    // rest at every boundary
    for (const State6& w : plan.predicted_waypoints) {
      REQUIRE(is_equilibrium(w, 1e-12));
    }

    // step 2 moves z1 and z3 in lockstep (z2 held at 1, up to one ulp)
    const State6& before = plan.predicted_waypoints[1];
    const State6& after = plan.predicted_waypoints[2];
    REQUIRE_THAT((after.z3 - before.z3) - (after.z1 - before.z1),
                 WithinAbs(0.0, 1e-12));

    // u2 on odd steps, u1 on even steps
    for (std::size_t k = 0; k < plan.size(); ++k) {
      REQUIRE(plan.phases[k].channel == (k % 2 == 0 ? Channel::U2 : Channel::U1));
    }

    const State6 fin = predict_final_state(plan, p.start.to_state());
    REQUIRE_THAT(testutil::max_abs_dev(fin, p.goal.to_state()), WithinAbs(0.0, 1e-9));
  }
}
