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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainplan/errors.hpp"
#include "chainplan/trajectory.hpp"

namespace chainplan {

namespace detail {

inline std::string plot_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct PlotSeries {
  const char* label;
  const char* color;
  std::function<double(const TrajectorySample&)> value;
};

struct PanelLayout {
  double x0, y0, width, height;  // plot area in svg coordinates
};

inline void render_panel(std::ostringstream& svg, const Trajectory& traj,
                         const PanelLayout& box, const char* title,
                         const std::vector<PlotSeries>& series) {
  const double t0 = traj.samples.front().t;
  const double t1 = traj.samples.back().t;
  const double t_span = t1 > t0 ? t1 - t0 : 1.0;

  double lo = series.front().value(traj.samples.front());
  double hi = lo;
  for (const TrajectorySample& s : traj.samples) {
    for (const PlotSeries& ser : series) {
      lo = std::min(lo, ser.value(s));
      hi = std::max(hi, ser.value(s));
    }
  }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const auto sx = [&](double t) { return box.x0 + (t - t0) / t_span * box.width; };
  const auto sy = [&](double v) {
    return box.y0 + box.height - (v - lo) / (hi - lo) * box.height;
  };

  svg << "<rect x='" << box.x0 << "' y='" << box.y0 << "' width='" << box.width
      << "' height='" << box.height << "' fill='white' stroke='#888'/>\n";
  svg << "<text x='" << box.x0 << "' y='" << box.y0 - 8
      << "' font-size='13' fill='#222'>" << title << "</text>\n";

  // y extents and zero line
  svg << "<text x='" << box.x0 - 6 << "' y='" << box.y0 + 10
      << "' font-size='10' text-anchor='end' fill='#444'>" << plot_num(hi)
      << "</text>\n";
  svg << "<text x='" << box.x0 - 6 << "' y='" << box.y0 + box.height
      << "' font-size='10' text-anchor='end' fill='#444'>" << plot_num(lo)
      << "</text>\n";
  if (lo < 0.0 && hi > 0.0) {
    svg << "<line x1='" << box.x0 << "' y1='" << sy(0.0) << "' x2='"
        << box.x0 + box.width << "' y2='" << sy(0.0)
        << "' stroke='#ccc' stroke-width='1'/>\n";
  }

  // phase boundaries
  for (std::size_t b : traj.phase_boundaries) {
    const double x = sx(traj.samples[b].t);
    svg << "<line x1='" << x << "' y1='" << box.y0 << "' x2='" << x << "' y2='"
        << box.y0 + box.height
        << "' stroke='#999' stroke-width='1' stroke-dasharray='4 3'/>\n";
  }

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& ser = series[k];
    if (traj.samples.size() == 1) {
      svg << "<circle cx='" << sx(traj.samples[0].t) << "' cy='"
          << sy(ser.value(traj.samples[0])) << "' r='3' fill='" << ser.color
          << "'/>\n";
    } else {
      svg << "<polyline fill='none' stroke='" << ser.color
          << "' stroke-width='1.5' points='";
      for (const TrajectorySample& s : traj.samples) {
        svg << plot_num(sx(s.t)) << ',' << plot_num(sy(ser.value(s))) << ' ';
      }
      svg << "'/>\n";
    }
    svg << "<text x='" << box.x0 + box.width - 14 - 40.0 * static_cast<double>(series.size() - 1 - k)
        << "' y='" << box.y0 + 14 << "' font-size='11' fill='" << ser.color
        << "'>" << ser.label << "</text>\n";
  }
}

}  // namespace detail

/// Renders the trajectory as a static SVG document with three stacked
/// panels: positions, velocities, inputs. Phase boundaries show as vertical
/// dashed rules in every panel.
inline std::string render_plot_svg(const Trajectory& traj) {
  if (traj.empty()) {
    throw std::invalid_argument("render_plot_svg: empty trajectory");
  }

  constexpr double kWidth = 860.0;
  constexpr double kPanelHeight = 180.0;
  constexpr double kLeft = 64.0;
  constexpr double kRight = 24.0;
  constexpr double kTop = 34.0;
  constexpr double kGap = 40.0;
  constexpr double kBottom = 44.0;
  const double height = kTop + 3 * kPanelHeight + 2 * kGap + kBottom;

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << height << "' viewBox='0 0 " << kWidth << ' ' << height
      << "' font-family='sans-serif'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";

  const double plot_w = kWidth - kLeft - kRight;
  const std::vector<detail::PlotSeries> positions = {
      {"z1", "#1f77b4", [](const TrajectorySample& s) { return s.state.z1; }},
      {"z2", "#ff7f0e", [](const TrajectorySample& s) { return s.state.z2; }},
      {"z3", "#2ca02c", [](const TrajectorySample& s) { return s.state.z3; }}};
  const std::vector<detail::PlotSeries> velocities = {
      {"z4", "#1f77b4", [](const TrajectorySample& s) { return s.state.z4; }},
      {"z5", "#ff7f0e", [](const TrajectorySample& s) { return s.state.z5; }},
      {"z6", "#2ca02c", [](const TrajectorySample& s) { return s.state.z6; }}};
  const std::vector<detail::PlotSeries> inputs = {
      {"u1", "#d62728", [](const TrajectorySample& s) { return s.input.u1; }},
      {"u2", "#9467bd", [](const TrajectorySample& s) { return s.input.u2; }}};

  detail::render_panel(svg, traj, {kLeft, kTop, plot_w, kPanelHeight},
                       "positions", positions);
  detail::render_panel(svg, traj,
                       {kLeft, kTop + kPanelHeight + kGap, plot_w, kPanelHeight},
                       "velocities", velocities);
  const double inputs_y0 = kTop + 2 * (kPanelHeight + kGap);
  detail::render_panel(svg, traj, {kLeft, inputs_y0, plot_w, kPanelHeight},
                       "inputs", inputs);

  // time axis under the last panel
  const double axis_y = inputs_y0 + kPanelHeight + 16.0;
  svg << "<text x='" << kLeft << "' y='" << axis_y
      << "' font-size='10' fill='#444'>t = "
      << detail::plot_num(traj.samples.front().t) << "</text>\n";
  svg << "<text x='" << kLeft + plot_w << "' y='" << axis_y
      << "' font-size='10' text-anchor='end' fill='#444'>t = "
      << detail::plot_num(traj.samples.back().t) << "</text>\n";
  svg << "<text x='" << kLeft + plot_w / 2 << "' y='" << axis_y + 16
      << "' font-size='12' text-anchor='middle' fill='#222'>time [s]</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

/// Writes render_plot_svg() output to `path`.
inline void emit_plot(const Trajectory& traj, const std::filesystem::path& path) {
  const std::string svg = render_plot_svg(traj);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open plot file for writing: " + path.string());
  out << svg;
  out.flush();
  if (!out) throw IoError("failed writing plot file: " + path.string());
}

}  // namespace chainplan
