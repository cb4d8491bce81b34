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

#include <cstdint>

#include "geometry.hpp"

namespace dip {

struct OracleResult {
  double length = 0.0;
  double argmin_depart = 0.0;
  double argmin_arrive = 0.0;
  uint32_t samples_per_axis = 0;
};

/// Brute-force reference: evaluate the classical solver on an inclusive
/// (n+1) x (n+1) heading grid over theta1 x theta2 (zero-width axes
/// collapse to one sample) and return the minimum. Always an upper
/// bound on the exact optimum; the inclusive endpoints guarantee the
/// interval boundaries are sampled. Deliberately has no refinement so
/// it shares no machinery with the exact solver beyond solve_classic.
///
/// Internally parallelized over grid rows; the result is independent of
/// the thread count. Throws std::invalid_argument for n = 0 or an
/// invalid instance.
OracleResult oracle_grid(const IntervalInstance& inst, uint32_t n);

}  // namespace dip
