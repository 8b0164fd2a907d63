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

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainplan/core.hpp"
#include "chainplan/errors.hpp"
#include "chainplan/planner.hpp"
#include "chainplan/steering.hpp"
#include "chainplan/trajectory.hpp"

namespace chainplan {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(std::string(what) + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

inline const char* channel_name(Channel c) {
  return c == Channel::U1 ? "u1" : "u2";
}

inline Channel channel_from_name(std::string_view name) {
  if (name == "u1") return Channel::U1;
  if (name == "u2") return Channel::U2;
  throw ParseError("channel must be \"u1\" or \"u2\"");
}

// ---------------------------------------------------------------------------
// Problem files
// ---------------------------------------------------------------------------

/// A planning request as read from disk. omega defaults to one period per
/// phase (2*pi/T); dt defaults to the simulator's own choice.
struct ProblemFile {
  EquilibriumPoint start;
  EquilibriumPoint goal;
  double T = 1.0;
  std::optional<double> omega;
  std::optional<double> dt;
  bool compress = true;

  double resolved_omega() const { return omega ? *omega : kTwoPi / T; }

  PlanningProblem to_problem() const {
    return PlanningProblem{start, goal, T, resolved_omega()};
  }
};

namespace detail {

inline EquilibriumPoint point_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("problem: missing \"") + key + "\"");
  const nlohmann::json& arr = j.at(key);
  if (!arr.is_array() || arr.size() != 3 || !arr[0].is_number() ||
      !arr[1].is_number() || !arr[2].is_number()) {
    throw ParseError(std::string("problem: \"") + key + "\" must be an array of 3 numbers");
  }
  return EquilibriumPoint{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
}

inline double number_field(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ParseError(std::string("problem: \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace detail

inline ProblemFile problem_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("problem: top level must be a JSON object");
  ProblemFile p;
  p.start = detail::point_from_json(j, "start");
  p.goal = detail::point_from_json(j, "goal");
  p.T = detail::number_field(j, "T", 1.0);
  if (j.contains("omega")) p.omega = detail::number_field(j, "omega", 0.0);
  if (j.contains("dt")) p.dt = detail::number_field(j, "dt", 0.0);
  if (j.contains("compress")) {
    if (!j.at("compress").is_boolean()) {
      throw ParseError("problem: \"compress\" must be a boolean");
    }
    p.compress = j.at("compress").get<bool>();
  }
  return p;
}

inline ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("problem file " + path.string() + ": " + e.what());
  } catch (const std::ios_base::failure& e) {
    throw ParseError("problem file " + path.string() + ": " + e.what());
  }
  return problem_from_json(j);
}

// ---------------------------------------------------------------------------
// Plan JSON
// ---------------------------------------------------------------------------

inline nlohmann::json plan_to_json(const Plan& plan) {
  nlohmann::json j;
  j["total_duration"] = plan.total_duration;
  j["phases"] = nlohmann::json::array();
  for (const Phase& phase : plan.phases) {
    j["phases"].push_back({{"label", phase.label},
                           {"channel", channel_name(phase.channel)},
                           {"amplitude", phase.signal.amplitude},
                           {"omega", phase.signal.omega},
                           {"duration", phase.signal.duration}});
  }
  j["waypoints"] = nlohmann::json::array();
  for (const State6& w : plan.predicted_waypoints) {
    j["waypoints"].push_back({w.z1, w.z2, w.z3, w.z4, w.z5, w.z6});
  }
  return j;
}

inline Plan plan_from_json(const nlohmann::json& j) {
  try {
    Plan plan;
    plan.total_duration = j.at("total_duration").get<double>();
    for (const nlohmann::json& p : j.at("phases")) {
      plan.phases.push_back(Phase{
          channel_from_name(p.at("channel").get<std::string>()),
          Sinusoid(p.at("amplitude").get<double>(), p.at("omega").get<double>(),
                   p.at("duration").get<double>()),
          p.at("label").get<std::string>()});
    }
    for (const nlohmann::json& w : j.at("waypoints")) {
      if (!w.is_array() || w.size() != 6) {
        throw ParseError("plan: waypoint must be an array of 6 numbers");
      }
      plan.predicted_waypoints.push_back(State6{w[0].get<double>(), w[1].get<double>(),
                                                w[2].get<double>(), w[3].get<double>(),
                                                w[4].get<double>(), w[5].get<double>()});
    }
    if (plan.predicted_waypoints.size() != plan.phases.size() + 1) {
      throw ParseError("plan: expected one more waypoint than phases");
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("plan: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Trajectory CSV
// ---------------------------------------------------------------------------

inline constexpr const char* kTrajectoryCsvHeader =
    "t,z1,z2,z3,z4,z5,z6,u1,u2,phase_index";

inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryCsvHeader << '\n';
  std::size_t boundary = 0;
  std::size_t phase = 0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    while (boundary < traj.phase_boundaries.size() &&
           traj.phase_boundaries[boundary] <= i) {
      ++phase;
      ++boundary;
    }
    const TrajectorySample& s = traj.samples[i];
    out << format_double(s.t) << ',' << format_double(s.state.z1) << ','
        << format_double(s.state.z2) << ',' << format_double(s.state.z3) << ','
        << format_double(s.state.z4) << ',' << format_double(s.state.z5) << ','
        << format_double(s.state.z6) << ',' << format_double(s.input.u1) << ','
        << format_double(s.input.u2) << ',' << phase << '\n';
  }
}

inline Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("trajectory csv: empty stream");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader) {
    throw ParseError("trajectory csv: unexpected header '" + line + "'");
  }

  Trajectory traj;
  std::size_t prev_phase = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const std::size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 10) {
      throw ParseError("trajectory csv: expected 10 fields, got " +
                       std::to_string(fields.size()));
    }

    TrajectorySample s;
    s.t = parse_double(fields[0], "trajectory csv");
    s.state.z1 = parse_double(fields[1], "trajectory csv");
    s.state.z2 = parse_double(fields[2], "trajectory csv");
    s.state.z3 = parse_double(fields[3], "trajectory csv");
    s.state.z4 = parse_double(fields[4], "trajectory csv");
    s.state.z5 = parse_double(fields[5], "trajectory csv");
    s.state.z6 = parse_double(fields[6], "trajectory csv");
    s.input.u1 = parse_double(fields[7], "trajectory csv");
    s.input.u2 = parse_double(fields[8], "trajectory csv");
    const auto phase =
        static_cast<std::size_t>(parse_double(fields[9], "trajectory csv"));
    if (phase != prev_phase) {
      if (phase != prev_phase + 1) {
        throw ParseError("trajectory csv: phase_index must step by one");
      }
      traj.phase_boundaries.push_back(traj.samples.size());
      prev_phase = phase;
    }
    traj.samples.push_back(s);
  }
  if (traj.samples.size() >= 2) traj.dt = traj.samples[1].t - traj.samples[0].t;
  return traj;
}

// ---------------------------------------------------------------------------
// Run reports
// ---------------------------------------------------------------------------

struct PhaseSummary {
  std::string label;
  Channel channel = Channel::U1;
  double amplitude = 0.0;
  double displacement = 0.0;  // amplitude * omega * duration
};

struct RunReport {
  std::vector<PhaseSummary> phases;
  double final_state_error = 0.0;   // inf-norm of simulated final state vs goal
  double oracle_deviation = 0.0;    // compare(integrator, oracle)
  std::string trajectory_csv;
  std::string plan_json;
  std::string report_json;
  std::string plot_svg;
};

inline nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["phases"] = nlohmann::json::array();
  for (const PhaseSummary& p : report.phases) {
    j["phases"].push_back({{"label", p.label},
                           {"channel", channel_name(p.channel)},
                           {"amplitude", p.amplitude},
                           {"displacement", p.displacement}});
  }
  j["final_state_error"] = report.final_state_error;
  j["oracle_deviation"] = report.oracle_deviation;
  j["outputs"] = {{"trajectory_csv", report.trajectory_csv},
                  {"plan_json", report.plan_json},
                  {"report_json", report.report_json},
                  {"plot_svg", report.plot_svg}};
  return j;
}

}  // namespace chainplan
