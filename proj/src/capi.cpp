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

#include "dubins_interval.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "batch.hpp"
#include "interval_solver.hpp"
#include "oracle.hpp"
#include "records.hpp"
#include "sampling.hpp"
#include "svg.hpp"
#include "words.hpp"

struct dip_path {
  dip::SolvedPath path;
  dip::Vec2 start;
  double rho = 1.0;
};

struct dip_batch {
  std::vector<dip::InstanceRecord> records;
  std::vector<dip::SolutionRecord> solutions;
  bool solved = false;
};

namespace {

thread_local std::string g_last_error;

dip_status fail(dip_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

dip_status ok() {
  g_last_error.clear();
  return DIP_OK;
}

/// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
dip_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const dip::ParseError& e) {
    return fail(DIP_ERR_PARSE, e.what());
  } catch (const dip::RecordValidationError& e) {
    return fail(DIP_ERR_VALIDATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DIP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DIP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DIP_ERR_INTERNAL, e.what());
  }
}

dip::IntervalInstance to_instance(const dip_instance& in) {
  return dip::IntervalInstance{
      dip::Vec2{in.x1, in.y1},
      dip::AngleInterval{in.theta1.lo, in.theta1.hi},
      dip::Vec2{in.x2, in.y2},
      dip::AngleInterval{in.theta2.lo, in.theta2.hi},
      in.rho};
}

dip_instance from_instance(const dip::IntervalInstance& in) {
  dip_instance out;
  out.x1 = in.p1.x;
  out.y1 = in.p1.y;
  out.theta1 = {in.theta1.lo, in.theta1.hi};
  out.x2 = in.p2.x;
  out.y2 = in.p2.y;
  out.theta2 = {in.theta2.lo, in.theta2.hi};
  out.rho = in.rho;
  return out;
}

dip_status copy_string(const std::string& text, char** out, size_t* len) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) return fail(DIP_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  *out = buf;
  if (len != nullptr) *len = text.size();
  return ok();
}

}  // namespace

extern "C" {

const char* dip_version(void) { return "0.1.0"; }

const char* dip_status_name(dip_status status) {
  switch (status) {
    case DIP_OK:
      return "ok";
    case DIP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DIP_ERR_PARSE:
      return "parse error";
    case DIP_ERR_VALIDATION:
      return "validation error";
    case DIP_ERR_INFEASIBLE:
      return "infeasible";
    case DIP_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case DIP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* dip_last_error(void) { return g_last_error.c_str(); }

void dip_free(void* buffer) { std::free(buffer); }

dip_status dip_solve_interval(const dip_instance* instance, dip_path** out) {
  if (instance == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::IntervalInstance inst = to_instance(*instance);
    dip::SolvedPath path = dip::solve_interval(inst);
    *out = new dip_path{path, inst.p1, inst.rho};
    return ok();
  });
}

dip_status dip_solve_classic(const dip_pose* start, const dip_pose* goal,
                             double rho, dip_path** out) {
  if (start == nullptr || goal == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::SolvedPath path = dip::solve_classic(
        dip::Pose{start->x, start->y, start->theta},
        dip::Pose{goal->x, goal->y, goal->theta}, rho);
    *out = new dip_path{path, dip::Vec2{start->x, start->y}, rho};
    return ok();
  });
}

dip_status dip_solve_word(const dip_pose* start, const dip_pose* goal,
                          double rho, const char* word, dip_path** out) {
  if (start == nullptr || goal == nullptr || word == nullptr ||
      out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto parsed = dip::PathWord::parse(word);
    if (!parsed) {
      return fail(DIP_ERR_INVALID_ARGUMENT,
                  std::string("unknown word '") + word + "'");
    }
    auto path = dip::solve_word(dip::Pose{start->x, start->y, start->theta},
                                dip::Pose{goal->x, goal->y, goal->theta}, rho,
                                *parsed);
    if (!path) {
      return fail(DIP_ERR_INFEASIBLE,
                  std::string("word '") + word +
                      "' admits no candidate solution here");
    }
    *out = new dip_path{*path, dip::Vec2{start->x, start->y}, rho};
    return ok();
  });
}

dip_status dip_solve_fixed_departure(const dip_pose* start, double x2,
                                     double y2, dip_interval theta2,
                                     double rho, dip_path** out) {
  if (start == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::SolvedPath path = dip::solve_fixed_departure(
        dip::Pose{start->x, start->y, start->theta}, dip::Vec2{x2, y2},
        dip::AngleInterval{theta2.lo, theta2.hi}, rho);
    *out = new dip_path{path, dip::Vec2{start->x, start->y}, rho};
    return ok();
  });
}

dip_status dip_oracle_grid(const dip_instance* instance,
                           uint32_t samples_per_axis, dip_oracle_result* out) {
  if (instance == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::OracleResult r =
        dip::oracle_grid(to_instance(*instance), samples_per_axis);
    out->length = r.length;
    out->argmin_depart = r.argmin_depart;
    out->argmin_arrive = r.argmin_arrive;
    out->samples_per_axis = r.samples_per_axis;
    return ok();
  });
}

void dip_path_free(dip_path* path) { delete path; }

double dip_path_length(const dip_path* path) {
  return path != nullptr ? path->path.length : 0.0;
}

double dip_path_depart(const dip_path* path) {
  return path != nullptr ? path->path.depart : 0.0;
}

double dip_path_arrive(const dip_path* path) {
  return path != nullptr ? path->path.arrive : 0.0;
}

int dip_path_segment_count(const dip_path* path) {
  return path != nullptr ? path->path.num_segments : 0;
}

dip_status dip_path_segment(const dip_path* path, int index,
                            dip_segment* out) {
  if (path == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index < 0 || index >= path->path.num_segments) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "segment index out of range");
  }
  const dip::Segment& s = path->path.segments[static_cast<size_t>(index)];
  out->kind = dip::kind_char(s.kind);
  out->magnitude = s.magnitude;
  return ok();
}

dip_status dip_path_word(const dip_path* path, int display_form, char* buf,
                         size_t cap) {
  if (path == nullptr || buf == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::string word = display_form != 0 ? path->path.display_word()
                                       : path->path.word_string();
  if (cap < word.size() + 1) {
    return fail(DIP_ERR_BUFFER_TOO_SMALL, "word buffer too small");
  }
  std::memcpy(buf, word.c_str(), word.size() + 1);
  return ok();
}

const char* dip_path_case_label(const dip_path* path) {
  return path != nullptr ? dip::case_label_name(path->path.label) : "unknown";
}

dip_status dip_path_sample(const dip_path* path, double max_step, double** xy,
                           size_t* num_points) {
  if (path == nullptr || xy == nullptr || num_points == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::Pose start = dip::make_pose(path->start, path->path.depart);
    std::vector<dip::Vec2> pts =
        dip::sample_polyline(path->path, start, path->rho, max_step);
    auto* buf =
        static_cast<double*>(std::malloc(sizeof(double) * 2 * pts.size()));
    if (buf == nullptr) return fail(DIP_ERR_INTERNAL, "out of memory");
    for (size_t i = 0; i < pts.size(); ++i) {
      buf[2 * i] = pts[i].x;
      buf[2 * i + 1] = pts[i].y;
    }
    *xy = buf;
    *num_points = pts.size();
    return ok();
  });
}

dip_status dip_path_validate(const dip_path* path,
                             const dip_instance* instance,
                             dip_validation* out) {
  if (path == nullptr || instance == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::ValidationReport r =
        dip::validate_path(path->path, to_instance(*instance));
    out->endpoint_closure = r.endpoint_closure ? 1 : 0;
    out->interval_membership = r.interval_membership ? 1 : 0;
    out->arc_conditions = r.arc_conditions ? 1 : 0;
    out->cc_geometry = r.cc_geometry ? 1 : 0;
    out->word_shape = r.word_shape ? 1 : 0;
    out->closure_error = r.closure_error;
    return ok();
  });
}

dip_status dip_batch_parse(const char* data, size_t len, dip_format format,
                           int degrees_default, dip_batch** out) {
  if (data == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    dip::InputFormat fmt = dip::InputFormat::kAuto;
    if (format == DIP_FORMAT_JSON_LINES) fmt = dip::InputFormat::kJsonLines;
    if (format == DIP_FORMAT_JSON_ARRAY) fmt = dip::InputFormat::kJsonArray;
    auto records = dip::parse_instances(std::string_view(data, len), fmt,
                                        degrees_default != 0);
    *out = new dip_batch{std::move(records), {}, false};
    return ok();
  });
}

void dip_batch_free(dip_batch* batch) { delete batch; }

size_t dip_batch_size(const dip_batch* batch) {
  return batch != nullptr ? batch->records.size() : 0;
}

const char* dip_batch_record_id(const dip_batch* batch, size_t index) {
  if (batch == nullptr || index >= batch->records.size()) return nullptr;
  return batch->records[index].id.c_str();
}

dip_status dip_batch_instance(const dip_batch* batch, size_t index,
                              dip_instance* out) {
  if (batch == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= batch->records.size()) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "record index out of range");
  }
  *out = from_instance(batch->records[index].instance);
  return ok();
}

dip_status dip_batch_solve(dip_batch* batch, int with_timing) {
  if (batch == nullptr) return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    batch->solutions = dip::solve_records(batch->records, with_timing != 0);
    batch->solved = true;
    return ok();
  });
}

dip_status dip_batch_solutions_jsonl(const dip_batch* batch, char** out,
                                     size_t* len) {
  if (batch == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (!batch->solved) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "batch not solved yet");
  }
  return guarded(
      [&] { return copy_string(dip::solutions_to_jsonl(batch->solutions), out, len); });
}

dip_status dip_batch_compare_jsonl(const dip_batch* batch, uint32_t grid_n,
                                   char** out, size_t* len) {
  if (batch == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    return copy_string(dip::compare_records_jsonl(batch->records, grid_n), out,
                       len);
  });
}

dip_status dip_batch_render_svg(const dip_batch* batch,
                                const dip_svg_options* options, char** out,
                                size_t* len) {
  if (batch == nullptr || out == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (!batch->solved) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "batch not solved yet");
  }
  return guarded([&] {
    dip::SvgOptions opts;
    if (options != nullptr) {
      if (options->max_step > 0.0) opts.max_step = options->max_step;
      if (options->scale > 0.0) opts.scale = options->scale;
      if (options->margin > 0.0) opts.margin = options->margin;
    }
    return copy_string(dip::render_svg(batch->records, batch->solutions, opts),
                       out, len);
  });
}

dip_status dip_check_solutions(const char* data, size_t len, char** report,
                               size_t* report_len, size_t* failures) {
  if (data == nullptr || report == nullptr || failures == nullptr) {
    return fail(DIP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto solutions = dip::parse_solutions(std::string_view(data, len));
    dip::CheckOutcome outcome = dip::check_solutions(solutions);
    dip_status st = copy_string(outcome.report_jsonl, report, report_len);
    if (st != DIP_OK) return st;
    *failures = outcome.failures;
    if (outcome.failures > 0) {
      std::string msg;
      for (const std::string& m : outcome.failure_messages) {
        if (!msg.empty()) msg += "; ";
        msg += m;
      }
      g_last_error = msg;
    }
    return st;
  });
}

}  // extern "C"
