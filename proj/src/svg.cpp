/*
  Copyright (c) 2026 the dubins-interval authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "sampling.hpp"

namespace dip {

namespace {

// Locale-independent fixed-point formatting keeps the output byte-stable.
void append_fixed(std::string& out, double v, int precision = 2) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed,
                           precision);
  out.append(buf, res.ptr);
}

struct Mapper {
  double min_x = 0.0, max_y = 0.0, s = 1.0, margin = 0.0;

  void map(std::string& out, Vec2 p) const {
    append_fixed(out, (p.x - min_x) * s + margin);
    out += ',';
    append_fixed(out, (max_y - p.y) * s + margin);
  }
};

void polyline_element(std::string& out, const Mapper& m,
                      const std::vector<Vec2>& pts, const char* style) {
  out += "<polyline points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    m.map(out, pts[i]);
  }
  out += "\" ";
  out += style;
  out += "/>\n";
}

std::vector<Vec2> wedge_outline(Vec2 center, const AngleInterval& iv,
                                double radius) {
  std::vector<Vec2> pts{center};
  const int kArcSteps = 24;
  double w = iv.width();
  int steps = iv.zero_width() ? 0 : kArcSteps;
  for (int i = 0; i <= steps; ++i) {
    double a = iv.lo + (steps == 0 ? 0.0 : w * i / steps);
    pts.push_back(center + radius * polar(a));
  }
  pts.push_back(center);
  return pts;
}

}  // namespace

std::string render_svg(const std::vector<InstanceRecord>& instances,
                       const std::vector<SolutionRecord>& solutions,
                       const SvgOptions& opts) {
  if (solutions.size() > instances.size()) {
    throw std::invalid_argument("render_svg: more solutions than instances");
  }
  std::string out;
  if (instances.empty()) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"100\" height=\"100\" viewBox=\"0 0 100 100\"></svg>\n";
  }

  // Sample all paths first so the bounding box covers them.
  std::vector<std::vector<Vec2>> paths(instances.size());
  std::vector<double> fan_radius(instances.size());
  for (size_t i = 0; i < instances.size(); ++i) {
    const InstanceRecord& rec = instances[i];
    fan_radius[i] = 1.5 * rec.instance.rho;
    if (i < solutions.size()) {
      SolvedPath path = path_from_record(solutions[i]);
      double step = opts.max_step > 0.0 ? opts.max_step
                                        : rec.instance.rho / 8.0;
      Pose start = make_pose(rec.instance.p1, path.depart);
      paths[i] = sample_polyline(path, start, rec.instance.rho, step);
    }
  }

  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  auto grow = [&](Vec2 p, double pad) {
    min_x = std::min(min_x, p.x - pad);
    min_y = std::min(min_y, p.y - pad);
    max_x = std::max(max_x, p.x + pad);
    max_y = std::max(max_y, p.y + pad);
  };
  for (size_t i = 0; i < instances.size(); ++i) {
    grow(instances[i].instance.p1, fan_radius[i]);
    grow(instances[i].instance.p2, fan_radius[i]);
    for (Vec2 p : paths[i]) grow(p, 0.0);
  }

  double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double s = opts.scale > 0.0 ? opts.scale : 720.0 / extent;
  double width = (max_x - min_x) * s + 2.0 * opts.margin;
  double height = (max_y - min_y) * s + 2.0 * opts.margin;
  Mapper m{min_x, max_y, s, opts.margin};

  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  append_fixed(out, width);
  out += "\" height=\"";
  append_fixed(out, height);
  out += "\" viewBox=\"0 0 ";
  append_fixed(out, width);
  out += ' ';
  append_fixed(out, height);
  out += "\">\n";

  for (size_t i = 0; i < instances.size(); ++i) {
    const IntervalInstance& inst = instances[i].instance;
    out += "<g>\n";
    // Heading interval fans.
    polyline_element(out, m, wedge_outline(inst.p1, inst.theta1, fan_radius[i]),
                     "fill=\"#f2a65a\" fill-opacity=\"0.35\" "
                     "stroke=\"#c77b2e\" stroke-width=\"1\"");
    polyline_element(out, m, wedge_outline(inst.p2, inst.theta2, fan_radius[i]),
                     "fill=\"#7fb2d9\" fill-opacity=\"0.35\" "
                     "stroke=\"#3c78a8\" stroke-width=\"1\"");
    if (!paths[i].empty()) {
      polyline_element(out, m, paths[i],
                       "fill=\"none\" stroke=\"#1f4f82\" stroke-width=\"2\"");
    }
    for (Vec2 p : {inst.p1, inst.p2}) {
      out += "<circle cx=\"";
      std::string coords;
      m.map(coords, p);
      size_t comma = coords.find(',');
      out += coords.substr(0, comma);
      out += "\" cy=\"";
      out += coords.substr(comma + 1);
      out += p.x == inst.p1.x && p.y == inst.p1.y
                 ? "\" r=\"4\" fill=\"#2a7d3a\"/>\n"
                 : "\" r=\"4\" fill=\"#b03a33\"/>\n";
    }
    out += "<text x=\"";
    std::string coords;
    m.map(coords, inst.p1);
    size_t comma = coords.find(',');
    out += coords.substr(0, comma);
    out += "\" y=\"";
    out += coords.substr(comma + 1);
    out += "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" font-size=\"11\">";
    out += instances[i].id;
    out += "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dip
