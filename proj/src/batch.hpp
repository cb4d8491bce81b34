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
#include <string>
#include <vector>

#include "records.hpp"

namespace dip {

/// Solve every record (interval or fixed-departure mode), in input
/// order. `with_timing` stamps per-record wall time in seconds.
std::vector<SolutionRecord> solve_records(
    const std::vector<InstanceRecord>& records, bool with_timing);

/// Per-record solver vs oracle comparison as json-lines: solver length,
/// grid length, gap and the grid argmin headings.
std::string compare_records_jsonl(const std::vector<InstanceRecord>& records,
                                  uint32_t grid_n);

struct CheckOutcome {
  size_t checked = 0;
  size_t failures = 0;
  std::string report_jsonl;                   // one report line per record
  std::vector<std::string> failure_messages;  // "id: failed: ..." lines
};

/// Re-validate serialized solutions against their embedded instances.
CheckOutcome check_solutions(const std::vector<SolutionRecord>& solutions);

}  // namespace dip
