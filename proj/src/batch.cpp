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

#include "batch.hpp"

#include <chrono>

#include <json.hpp>

#include "interval_solver.hpp"
#include "oracle.hpp"

namespace dip {

namespace {

SolvedPath solve_record(const InstanceRecord& rec) {
  if (rec.fixed_departure) {
    Pose start = make_pose(rec.instance.p1, *rec.fixed_departure);
    return solve_fixed_departure(start, rec.instance.p2, rec.instance.theta2,
                                 rec.instance.rho);
  }
  return solve_interval(rec.instance);
}

}  // namespace

std::vector<SolutionRecord> solve_records(
    const std::vector<InstanceRecord>& records, bool with_timing) {
  std::vector<SolutionRecord> out;
  out.reserve(records.size());
  for (const InstanceRecord& rec : records) {
    std::optional<double> wall;
    if (with_timing) {
      auto t0 = std::chrono::steady_clock::now();
      SolvedPath path = solve_record(rec);
      auto t1 = std::chrono::steady_clock::now();
      wall = std::chrono::duration<double>(t1 - t0).count();
      out.push_back(make_solution_record(rec, path, wall));
    } else {
      out.push_back(make_solution_record(rec, solve_record(rec), wall));
    }
  }
  return out;
}

std::string compare_records_jsonl(const std::vector<InstanceRecord>& records,
                                  uint32_t grid_n) {
  std::string out;
  for (const InstanceRecord& rec : records) {
    SolvedPath path = solve_record(rec);
    OracleResult oracle = oracle_grid(rec.instance, grid_n);
    nlohmann::json j;
    j["id"] = rec.id;
    j["solver_length"] = path.length;
    j["oracle_length"] = oracle.length;
    j["gap"] = oracle.length - path.length;
    j["oracle_depart"] = oracle.argmin_depart;
    j["oracle_arrive"] = oracle.argmin_arrive;
    j["samples_per_axis"] = oracle.samples_per_axis;
    out += j.dump();
    out += '\n';
  }
  return out;
}

CheckOutcome check_solutions(const std::vector<SolutionRecord>& solutions) {
  CheckOutcome outcome;
  for (const SolutionRecord& rec : solutions) {
    SolvedPath path = path_from_record(rec);
    ValidationReport report = validate_path(path, rec.source.instance);
    nlohmann::json j;
    j["id"] = rec.id;
    j["ok"] = report.ok();
    j["checks"] = {{"endpoint_closure", report.endpoint_closure},
                   {"interval_membership", report.interval_membership},
                   {"arc_conditions", report.arc_conditions},
                   {"cc_geometry", report.cc_geometry},
                   {"word_shape", report.word_shape}};
    j["closure_error"] = report.closure_error;
    outcome.report_jsonl += j.dump();
    outcome.report_jsonl += '\n';
    ++outcome.checked;
    if (!report.ok()) {
      ++outcome.failures;
      outcome.failure_messages.push_back(rec.id + ": " + report.describe());
    }
  }
  return outcome;
}

}  // namespace dip
