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

#include "sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace dip {

std::vector<Vec2> sample_polyline(const SolvedPath& path, const Pose& start,
                                  double rho, double max_step) {
  if (!(max_step > 0.0) || !std::isfinite(max_step)) {
    throw std::invalid_argument("sample_polyline: max_step must be positive");
  }
  Pose pose = make_pose(start.x, start.y, path.depart);
  std::vector<Vec2> points{pose.pos()};
  for (int i = 0; i < path.num_segments; ++i) {
    const Segment& seg = path.segments[static_cast<size_t>(i)];
    double arc_len = seg.kind == SegKind::kStraight ? seg.magnitude
                                                    : seg.magnitude * rho;
    if (arc_len <= 0.0) continue;
    auto steps = static_cast<size_t>(std::ceil(arc_len / max_step));
    if (steps < 1) steps = 1;
    for (size_t k = 1; k <= steps; ++k) {
      double frac = static_cast<double>(k) / static_cast<double>(steps);
      Pose sampled = advance(pose, seg.kind, seg.magnitude * frac, rho);
      points.push_back(sampled.pos());
    }
    pose = advance(pose, seg.kind, seg.magnitude, rho);
  }
  return points;
}

}  // namespace dip
