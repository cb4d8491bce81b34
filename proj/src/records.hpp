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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "words.hpp"

namespace dip {

/// Malformed input syntax. `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed input with invalid content; names the record and field.
class RecordValidationError : public std::runtime_error {
 public:
  RecordValidationError(std::string id, std::string field,
                        const std::string& what)
      : std::runtime_error("record '" + id + "': " + what),
        id_(std::move(id)),
        field_(std::move(field)) {}
  const std::string& id() const { return id_; }
  const std::string& field() const { return field_; }

 private:
  std::string id_;
  std::string field_;
};

/// One problem statement as ingested. Angles are radians after parsing.
/// For fixed-departure records, theta1 is the zero-width interval at
/// the given heading.
struct InstanceRecord {
  std::string id;
  IntervalInstance instance;
  std::optional<double> fixed_departure;
};

enum class InputFormat { kAuto, kJsonLines, kJsonArray };

/// Parse and validate instance records. `degrees_default` sets the
/// angle unit for records without an explicit "angle_unit" field.
/// Throws ParseError / RecordValidationError.
std::vector<InstanceRecord> parse_instances(std::string_view bytes,
                                            InputFormat format = InputFormat::kAuto,
                                            bool degrees_default = false);

std::string instance_record_to_json(const InstanceRecord& rec);

struct SolutionRecord {
  std::string id;
  std::string case_label;
  std::string word;     // full constructed word, e.g. "LSL"
  std::string display;  // zero-magnitude segments collapsed
  std::vector<Segment> segments;
  double depart = 0.0;
  double arrive = 0.0;
  double length = 0.0;
  std::optional<double> wall_time;  // seconds
  InstanceRecord source;            // echo of the solved instance
};

SolutionRecord make_solution_record(const InstanceRecord& rec,
                                    const SolvedPath& path,
                                    std::optional<double> wall_time);

std::string solution_to_json(const SolutionRecord& rec);
std::string solutions_to_jsonl(const std::vector<SolutionRecord>& recs);
std::vector<SolutionRecord> parse_solutions(std::string_view bytes);

/// Rebuild the geometric path from a serialized solution, for
/// re-validation and rendering.
SolvedPath path_from_record(const SolutionRecord& rec);

}  // namespace dip
