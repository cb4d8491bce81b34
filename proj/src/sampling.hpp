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

#include <vector>

#include "words.hpp"

namespace dip {

/// Ordered points along the path from its start to its endpoint, with
/// consecutive arc-length spacing <= max_step. Every sampled point lies
/// on the true path, so chord deviation is bounded by the sagitta
/// max_step^2 / (8 * rho). A zero-length path yields a single point.
/// Throws std::invalid_argument for max_step <= 0.
std::vector<Vec2> sample_polyline(const SolvedPath& path, const Pose& start,
                                  double rho, double max_step);

}  // namespace dip
