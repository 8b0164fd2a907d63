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

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "chainplan/chainplan.hpp"

namespace {

namespace fs = std::filesystem;
using namespace chainplan;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

double require_positive_dt(double dt) {
  if (!(dt > 0.0)) throw InvalidStepError("dt must be positive");
  return dt;
}

Plan build_plan(const ProblemFile& problem, bool do_compress) {
  Plan plan = synthesize(problem.to_problem());
  if (do_compress) plan = compress(plan);
  return plan;
}

double final_state_error(const Trajectory& traj, const EquilibriumPoint& goal) {
  const State6& z = traj.samples.back().state;
  const State6 g = goal.to_state();
  double err = 0.0;
  err = std::max(err, std::abs(z.z1 - g.z1));
  err = std::max(err, std::abs(z.z2 - g.z2));
  err = std::max(err, std::abs(z.z3 - g.z3));
  err = std::max(err, std::abs(z.z4));
  err = std::max(err, std::abs(z.z5));
  err = std::max(err, std::abs(z.z6));
  return err;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing: " + path.string());
}

int cmd_plan(const std::string& problem_path) {
  const ProblemFile problem = load_problem(problem_path);
  const Plan plan = build_plan(problem, problem.compress);
  std::cout << plan_to_json(plan).dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const std::string& problem_path, const std::string& out_dir,
                 std::optional<double> dt_override, bool no_compress) {
  const ProblemFile problem = load_problem(problem_path);
  const Plan plan = build_plan(problem, problem.compress && !no_compress);

  double dt = default_dt(plan);
  if (problem.dt) dt = require_positive_dt(*problem.dt);
  if (dt_override) dt = require_positive_dt(*dt_override);

  const State6 start = problem.start.to_state();
  SimConfig config;
  config.dt = dt;
  const Trajectory traj = simulate(plan, start, config);
  const Trajectory oracle = oracle_trajectory(plan, start, dt);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

  RunReport report;
  for (const Phase& phase : plan.phases) {
    report.phases.push_back(PhaseSummary{
        phase.label, phase.channel, phase.signal.amplitude,
        phase.signal.amplitude * phase.signal.omega * phase.signal.duration});
  }
  report.final_state_error = final_state_error(traj, problem.goal);
  report.oracle_deviation = compare(traj, oracle);
  report.trajectory_csv = (fs::path(out_dir) / "trajectory.csv").string();
  report.plan_json = (fs::path(out_dir) / "plan.json").string();
  report.report_json = (fs::path(out_dir) / "report.json").string();
  report.plot_svg = (fs::path(out_dir) / "plot.svg").string();

  {
    std::ostringstream csv;
    write_trajectory_csv(csv, traj);
    write_file(report.trajectory_csv, csv.str());
  }
  write_file(report.plan_json, plan_to_json(plan).dump(2) + "\n");
  write_file(report.report_json, report_to_json(report).dump(2) + "\n");
  emit_plot(traj, report.plot_svg);

  std::cout << report_to_json(report).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinusoidal state-switching motion planner for the second-order chained form system"};
  app.require_subcommand(1);

  std::string problem_path;
  CLI::App* plan_cmd = app.add_subcommand("plan", "Synthesize a maneuver and print it as JSON");
  plan_cmd->add_option("problem", problem_path, "problem JSON file")->required();

  std::string sim_problem_path;
  std::string out_dir;
  double dt_flag = 0.0;
  bool no_compress = false;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Plan, integrate, and write trajectory/report/plot files");
  sim_cmd->add_option("problem", sim_problem_path, "problem JSON file")->required();
  sim_cmd->add_option("--out", out_dir, "output directory")->required();
  CLI::Option* dt_opt = sim_cmd->add_option("--dt", dt_flag, "integration step [s]");
  sim_cmd->add_flag("--no-compress", no_compress, "keep zero-amplitude phases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan_cmd->parsed()) return cmd_plan(problem_path);
    std::optional<double> dt_override;
    if (dt_opt->count() > 0) dt_override = dt_flag;
    return cmd_simulate(sim_problem_path, out_dir, dt_override, no_compress);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
}
