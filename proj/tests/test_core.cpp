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

#include <limits>
#include <random>

#include "chainplan/core.hpp"
#include "testutil.hpp"

using namespace chainplan;
using Catch::Matchers::WithinAbs;

TEST_CASE("dynamics evaluates the chained form", "[core]") {
  SECTION("rest state with zero input is stationary") {
    const State6 zdot = dynamics(State6{3.0, 0.5, 1.0, 0.0, 0.0, 0.0}, Input2{0.0, 0.0});
    REQUIRE(testutil::max_abs_dev(zdot, State6{}) == 0.0);
  }
  SECTION("z2 = 0 decouples u1 from the z6 rate") {
    const State6 zdot = dynamics(State6{}, Input2{1.0, 0.0});
    REQUIRE(zdot.z4 == 1.0);
    REQUIRE(zdot.z5 == 0.0);
    REQUIRE(zdot.z6 == 0.0);
    REQUIRE(zdot.z1 == 0.0);
  }
  SECTION("z2 scales u1 into the z6 rate") {
    const State6 zdot = dynamics(State6{0.0, 1.0, 0.0, 0.0, 0.0, 0.0}, Input2{2.0, 3.0});
    REQUIRE(zdot.z1 == 0.0);
    REQUIRE(zdot.z2 == 0.0);
    REQUIRE(zdot.z3 == 0.0);
    REQUIRE(zdot.z4 == 2.0);
    REQUIRE(zdot.z5 == 3.0);
    REQUIRE(zdot.z6 == 2.0);
  }
}

TEST_CASE("dynamics rejects non-finite arguments", "[core]") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  REQUIRE_THROWS_AS(dynamics(State6{nan, 0, 0, 0, 0, 0}, Input2{}), std::invalid_argument);
  REQUIRE_THROWS_AS(dynamics(State6{}, Input2{0.0, inf}), std::invalid_argument);
}

TEST_CASE("is_equilibrium checks velocities only", "[core]") {
  REQUIRE(is_equilibrium(State6{3.0, 0.5, 1.0, 0.0, 0.0, 0.0}, 0.0));
  REQUIRE_FALSE(is_equilibrium(State6{0, 0, 0, 1e-3, 0, 0}, 1e-9));
  REQUIRE(is_equilibrium(State6{1, 2, 3, 1e-12, -1e-12, 0}, 1e-9));
}

TEST_CASE("every rest state is an equilibrium of the flow", "[core][prop]") {
  std::mt19937 rng(7041);
  std::uniform_real_distribution<double> pos(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const State6 z{pos(rng), pos(rng), pos(rng), 0.0, 0.0, 0.0};
    REQUIRE(testutil::max_abs_dev(dynamics(z, Input2{}), State6{}) == 0.0);
  }
}

TEST_CASE("dynamics is affine in the input", "[core][prop]") {
  std::mt19937 rng(7042);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const State6 z{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
    const Input2 u{dist(rng), dist(rng)};
    const Input2 v{dist(rng), dist(rng)};
    const double alpha = dist(rng);
    const double beta = dist(rng);

    const State6 drift = dynamics(z, Input2{});
    const State6 mixed =
        dynamics(z, Input2{alpha * u.u1 + beta * v.u1, alpha * u.u2 + beta * v.u2});
    const State6 du = dynamics(z, u);
    const State6 dv = dynamics(z, v);

    const State6 recombined{
        drift.z1 + alpha * (du.z1 - drift.z1) + beta * (dv.z1 - drift.z1),
        drift.z2 + alpha * (du.z2 - drift.z2) + beta * (dv.z2 - drift.z2),
        drift.z3 + alpha * (du.z3 - drift.z3) + beta * (dv.z3 - drift.z3),
        drift.z4 + alpha * (du.z4 - drift.z4) + beta * (dv.z4 - drift.z4),
        drift.z5 + alpha * (du.z5 - drift.z5) + beta * (dv.z5 - drift.z5),
        drift.z6 + alpha * (du.z6 - drift.z6) + beta * (dv.z6 - drift.z6)};
    REQUIRE_THAT(testutil::max_abs_dev(mixed, recombined), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("z2 = 1 makes the z6 rate equal the z4 rate", "[core][prop]") {
  std::mt19937 rng(7043);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    State6 z{dist(rng), 1.0, dist(rng), dist(rng), dist(rng), dist(rng)};
    const Input2 u{dist(rng), dist(rng)};
    const State6 zdot = dynamics(z, u);
    REQUIRE(zdot.z6 == zdot.z4);
  }
}
