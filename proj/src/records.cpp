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

#include "records.hpp"

#include <cmath>
#include <unordered_set>

#include <json.hpp>

namespace dip {

namespace {

using nlohmann::json;

constexpr double kAngleSlack = 1e-12;

double require_number(const json& j, const std::string& id,
                      const char* field) {
  if (!j.is_number()) {
    throw RecordValidationError(id, field,
                                std::string(field) + " must be a number");
  }
  double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw RecordValidationError(id, field,
                                std::string(field) + " must be finite");
  }
  return v;
}

Vec2 require_point(const json& j, const std::string& id, const char* field) {
  if (!j.is_array() || j.size() != 2) {
    throw RecordValidationError(
        id, field, std::string(field) + " must be an [x, y] pair");
  }
  return Vec2{require_number(j[0], id, field), require_number(j[1], id, field)};
}

double checked_angle(double v, bool degrees, const std::string& id,
                     const char* field) {
  if (degrees) v *= kPi / 180.0;
  if (v < 0.0 && v >= -kAngleSlack) v = 0.0;
  if (v > kTwoPi && v <= kTwoPi + kAngleSlack) v = kTwoPi;
  if (v < 0.0 || v > kTwoPi) {
    throw RecordValidationError(
        id, field, std::string(field) + " angle out of [0, 2*pi] (radians)");
  }
  return v;
}

AngleInterval require_interval(const json& j, bool degrees,
                               const std::string& id, const char* field) {
  if (!j.is_array() || j.size() != 2) {
    throw RecordValidationError(
        id, field, std::string(field) + " must be a [lo, hi] pair");
  }
  double lo = checked_angle(require_number(j[0], id, field), degrees, id, field);
  double hi = checked_angle(require_number(j[1], id, field), degrees, id, field);
  if (lo > hi) {
    throw RecordValidationError(
        id, field,
        std::string(field) + " must satisfy lo <= hi (wrapping intervals are "
                             "expressed as two records)");
  }
  return AngleInterval{lo, hi};
}

InstanceRecord record_from_json(const json& j, size_t ordinal,
                                bool degrees_default) {
  if (!j.is_object()) {
    throw RecordValidationError(std::to_string(ordinal), "record",
                                "record must be a JSON object");
  }
  InstanceRecord rec;
  rec.id = j.contains("id") && j["id"].is_string()
               ? j["id"].get<std::string>()
               : std::to_string(ordinal);
  if (j.contains("id") && !j["id"].is_string()) {
    throw RecordValidationError(std::to_string(ordinal), "id",
                                "id must be a string");
  }

  bool degrees = degrees_default;
  if (j.contains("angle_unit")) {
    std::string unit = j["angle_unit"].is_string()
                           ? j["angle_unit"].get<std::string>()
                           : std::string();
    if (unit == "degrees") {
      degrees = true;
    } else if (unit == "radians") {
      degrees = false;
    } else {
      throw RecordValidationError(rec.id, "angle_unit",
                                  "angle_unit must be \"radians\" or "
                                  "\"degrees\"");
    }
  }

  if (!j.contains("p1") || !j.contains("p2")) {
    throw RecordValidationError(rec.id, "p1", "p1 and p2 are required");
  }
  rec.instance.p1 = require_point(j["p1"], rec.id, "p1");
  rec.instance.p2 = require_point(j["p2"], rec.id, "p2");

  bool has_theta1 = j.contains("theta1");
  bool has_fixed = j.contains("fixed_departure");
  if (has_theta1 == has_fixed) {
    throw RecordValidationError(rec.id, "theta1",
                                "exactly one of theta1 and fixed_departure "
                                "is required");
  }
  if (has_fixed) {
    double fd = checked_angle(
        require_number(j["fixed_departure"], rec.id, "fixed_departure"),
        degrees, rec.id, "fixed_departure");
    fd = normalize_angle(fd);
    rec.fixed_departure = fd;
    rec.instance.theta1 = AngleInterval{fd, fd};
  } else {
    rec.instance.theta1 = require_interval(j["theta1"], degrees, rec.id,
                                           "theta1");
  }
  if (!j.contains("theta2")) {
    throw RecordValidationError(rec.id, "theta2", "theta2 is required");
  }
  rec.instance.theta2 = require_interval(j["theta2"], degrees, rec.id,
                                         "theta2");

  if (!j.contains("rho")) {
    throw RecordValidationError(rec.id, "rho", "rho is required");
  }
  double rho = require_number(j["rho"], rec.id, "rho");
  if (!(rho > 0.0)) {
    throw RecordValidationError(rec.id, "rho", "rho must be positive");
  }
  rec.instance.rho = rho;
  return rec;
}

json parse_json_document(std::string_view text, int line) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    // Re-parse with exceptions for the precise byte offset.
    try {
      json reparsed = json::parse(text);
      (void)reparsed;
    } catch (const json::parse_error& e) {
      throw ParseError(line, "parse error at line " + std::to_string(line) +
                                 ": " + e.what());
    }
    throw ParseError(line, "parse error at line " + std::to_string(line));
  }
  return j;
}

std::vector<json> split_documents(std::string_view bytes, InputFormat format) {
  size_t first = bytes.find_first_not_of(" \t\r\n");
  bool array = format == InputFormat::kJsonArray ||
               (format == InputFormat::kAuto && first != std::string_view::npos &&
                bytes[first] == '[');
  std::vector<json> docs;
  if (array) {
    json all = parse_json_document(bytes, 1);
    if (!all.is_array()) {
      throw ParseError(1, "parse error: top-level value must be an array");
    }
    for (json& item : all) docs.push_back(std::move(item));
    return docs;
  }
  int line = 0;
  size_t pos = 0;
  while (pos <= bytes.size()) {
    size_t nl = bytes.find('\n', pos);
    std::string_view row = bytes.substr(
        pos, nl == std::string_view::npos ? bytes.size() - pos : nl - pos);
    ++line;
    if (row.find_first_not_of(" \t\r") != std::string_view::npos) {
      docs.push_back(parse_json_document(row, line));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return docs;
}

json instance_json(const InstanceRecord& rec) {
  json j;
  j["p1"] = {rec.instance.p1.x, rec.instance.p1.y};
  if (rec.fixed_departure) {
    j["fixed_departure"] = *rec.fixed_departure;
  } else {
    j["theta1"] = {rec.instance.theta1.lo, rec.instance.theta1.hi};
  }
  j["p2"] = {rec.instance.p2.x, rec.instance.p2.y};
  j["theta2"] = {rec.instance.theta2.lo, rec.instance.theta2.hi};
  j["rho"] = rec.instance.rho;
  return j;
}

json solution_json(const SolutionRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["case_label"] = rec.case_label;
  j["word"] = rec.word;
  j["display"] = rec.display;
  json segs = json::array();
  for (const Segment& s : rec.segments) {
    segs.push_back({{"kind", std::string(1, kind_char(s.kind))},
                    {"magnitude", s.magnitude}});
  }
  j["segments"] = segs;
  j["depart"] = rec.depart;
  j["arrive"] = rec.arrive;
  j["length"] = rec.length;
  if (rec.wall_time) j["wall_time"] = *rec.wall_time;
  j["instance"] = instance_json(rec.source);
  return j;
}

SolutionRecord solution_from_json(const json& j, size_t ordinal) {
  std::string id = j.contains("id") && j["id"].is_string()
                       ? j["id"].get<std::string>()
                       : std::to_string(ordinal);
  auto fail = [&id](const char* field, const char* what) -> double {
    throw RecordValidationError(id, field, what);
  };
  SolutionRecord rec;
  rec.id = id;
  if (!j.contains("case_label") || !j["case_label"].is_string()) {
    fail("case_label", "case_label is required");
  }
  rec.case_label = j["case_label"].get<std::string>();
  rec.word = j.value("word", std::string());
  rec.display = j.value("display", std::string());
  if (!j.contains("segments") || !j["segments"].is_array()) {
    fail("segments", "segments array is required");
  }
  for (const json& s : j["segments"]) {
    std::string kind = s.value("kind", std::string());
    if (kind.size() != 1 ||
        (kind[0] != 'L' && kind[0] != 'R' && kind[0] != 'S')) {
      fail("segments", "segment kind must be L, R or S");
    }
    if (!s.contains("magnitude")) fail("segments", "magnitude is required");
    rec.segments.push_back(Segment{static_cast<SegKind>(kind[0]),
                                   require_number(s["magnitude"], id,
                                                  "segments")});
  }
  for (const char* field : {"depart", "arrive", "length"}) {
    if (!j.contains(field)) fail(field, "field is required");
  }
  rec.depart = require_number(j["depart"], id, "depart");
  rec.arrive = require_number(j["arrive"], id, "arrive");
  rec.length = require_number(j["length"], id, "length");
  if (j.contains("wall_time")) {
    rec.wall_time = require_number(j["wall_time"], id, "wall_time");
  }
  if (!j.contains("instance")) {
    fail("instance", "instance echo is required");
  }
  rec.source = record_from_json(j["instance"], ordinal, false);
  rec.source.id = rec.id;
  return rec;
}

}  // namespace

std::vector<InstanceRecord> parse_instances(std::string_view bytes,
                                            InputFormat format,
                                            bool degrees_default) {
  std::vector<json> docs = split_documents(bytes, format);
  std::vector<InstanceRecord> out;
  out.reserve(docs.size());
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < docs.size(); ++i) {
    InstanceRecord rec = record_from_json(docs[i], i, degrees_default);
    validate_instance(rec.instance);
    if (!seen.insert(rec.id).second) {
      throw RecordValidationError(rec.id, "id", "duplicate id");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string instance_record_to_json(const InstanceRecord& rec) {
  json j = instance_json(rec);
  j["id"] = rec.id;
  return j.dump();
}

SolutionRecord make_solution_record(const InstanceRecord& rec,
                                    const SolvedPath& path,
                                    std::optional<double> wall_time) {
  SolutionRecord out;
  out.id = rec.id;
  out.case_label = case_label_name(path.label);
  out.word = path.word_string();
  out.display = path.display_word();
  for (int i = 0; i < path.num_segments; ++i) {
    out.segments.push_back(path.segments[static_cast<size_t>(i)]);
  }
  out.depart = path.depart;
  out.arrive = path.arrive;
  out.length = path.length;
  out.wall_time = wall_time;
  out.source = rec;
  return out;
}

std::string solution_to_json(const SolutionRecord& rec) {
  return solution_json(rec).dump();
}

std::string solutions_to_jsonl(const std::vector<SolutionRecord>& recs) {
  std::string out;
  for (const SolutionRecord& r : recs) {
    out += solution_to_json(r);
    out += '\n';
  }
  return out;
}

std::vector<SolutionRecord> parse_solutions(std::string_view bytes) {
  std::vector<json> docs = split_documents(bytes, InputFormat::kAuto);
  std::vector<SolutionRecord> out;
  out.reserve(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    out.push_back(solution_from_json(docs[i], i));
  }
  return out;
}

SolvedPath path_from_record(const SolutionRecord& rec) {
  SolvedPath p;
  std::optional<CaseLabel> label = case_label_from_name(rec.case_label);
  if (!label) {
    throw RecordValidationError(rec.id, "case_label",
                                "unknown case label '" + rec.case_label + "'");
  }
  p.label = *label;
  if (rec.segments.size() > 3) {
    throw RecordValidationError(rec.id, "segments",
                                "a path has at most 3 segments");
  }
  for (size_t i = 0; i < rec.segments.size(); ++i) {
    p.segments[i] = rec.segments[i];
    ++p.num_segments;
  }
  p.depart = rec.depart;
  p.arrive = rec.arrive;
  p.length = rec.length;
  return p;
}

}  // namespace dip
