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

#pragma once

#include <string>
#include <vector>

#include "records.hpp"

namespace dip {

struct SvgOptions {
  double max_step = 0.0;  // polyline sampling step; 0 -> rho / 8 per record
  double scale = 0.0;     // pixels per world unit; 0 -> auto-fit
  double margin = 24.0;   // pixels
};

/// One SVG 1.1 document with, per record: target markers, heading
/// interval fans and the sampled optimal path. Output is byte-stable
/// for fixed input and options. `solutions` pairs with `instances` by
/// index; an empty list yields a valid empty canvas.
std::string render_svg(const std::vector<InstanceRecord>& instances,
                       const std::vector<SolutionRecord>& solutions,
                       const SvgOptions& opts = {});

}  // namespace dip
