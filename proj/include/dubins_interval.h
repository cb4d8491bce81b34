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

/*
  C interface of the dubins-interval shared library.

  The library computes shortest planar paths of bounded curvature
  between two targets where the departure and arrival headings are
  constrained to closed intervals, plus the classical fixed-heading
  problem, a fixed-departure variant, and a brute-force grid reference.

  Conventions:
    - angles are radians in [0, 2*pi], measured counterclockwise from
      the x axis; intervals are closed and never wrap (a wrapping
      constraint is expressed as two instances);
    - every function returning dip_status reports failure through the
      code and leaves outputs untouched; dip_last_error() returns a
      thread-local description of the most recent failure;
    - objects returned through out-pointers are owned by the caller and
      released with the matching *_free function; buffers allocated by
      the library are released with dip_free().
*/

#ifndef DUBINS_INTERVAL_H
#define DUBINS_INTERVAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dip_status {
  DIP_OK = 0,
  DIP_ERR_INVALID_ARGUMENT = 1,
  DIP_ERR_PARSE = 2,
  DIP_ERR_VALIDATION = 3,
  DIP_ERR_INFEASIBLE = 4, /* requested word admits no geometric solution */
  DIP_ERR_BUFFER_TOO_SMALL = 5,
  DIP_ERR_INTERNAL = 6
} dip_status;

typedef struct dip_pose {
  double x;
  double y;
  double theta;
} dip_pose;

typedef struct dip_interval {
  double lo;
  double hi;
} dip_interval;

typedef struct dip_instance {
  double x1;
  double y1;
  dip_interval theta1;
  double x2;
  double y2;
  dip_interval theta2;
  double rho;
} dip_instance;

/* kind is 'L', 'R' or 'S'; magnitude is the turn angle for arcs
   (arc length = rho * magnitude) and the length for straights. */
typedef struct dip_segment {
  char kind;
  double magnitude;
} dip_segment;

typedef struct dip_oracle_result {
  double length;
  double argmin_depart;
  double argmin_arrive;
  uint32_t samples_per_axis;
} dip_oracle_result;

typedef struct dip_validation {
  int endpoint_closure;
  int interval_membership;
  int arc_conditions;
  int cc_geometry;
  int word_shape;
  double closure_error;
} dip_validation;

typedef struct dip_path dip_path;   /* a solved path, plus its frame */
typedef struct dip_batch dip_batch; /* parsed records and solutions */

const char* dip_version(void);
const char* dip_status_name(dip_status status);
const char* dip_last_error(void);
void dip_free(void* buffer);

/* ---- solvers ---- */

dip_status dip_solve_interval(const dip_instance* instance, dip_path** out);

dip_status dip_solve_classic(const dip_pose* start, const dip_pose* goal,
                             double rho, dip_path** out);

/* word is one of "LSL", "RSR", "LSR", "RSL", "LRL", "RLR". Returns
   DIP_ERR_INFEASIBLE when the word admits no candidate solution. */
dip_status dip_solve_word(const dip_pose* start, const dip_pose* goal,
                          double rho, const char* word, dip_path** out);

dip_status dip_solve_fixed_departure(const dip_pose* start, double x2,
                                     double y2, dip_interval theta2,
                                     double rho, dip_path** out);

dip_status dip_oracle_grid(const dip_instance* instance,
                           uint32_t samples_per_axis,
                           dip_oracle_result* out);

/* ---- path accessors ---- */

void dip_path_free(dip_path* path);
double dip_path_length(const dip_path* path);
double dip_path_depart(const dip_path* path);
double dip_path_arrive(const dip_path* path);
int dip_path_segment_count(const dip_path* path);
dip_status dip_path_segment(const dip_path* path, int index,
                            dip_segment* out);
/* display_form != 0 collapses zero-magnitude segments. */
dip_status dip_path_word(const dip_path* path, int display_form, char* buf,
                         size_t cap);
const char* dip_path_case_label(const dip_path* path);

/* Polyline along the path; *xy receives 2 * *num_points doubles
   (x0, y0, x1, y1, ...) to release with dip_free(). */
dip_status dip_path_sample(const dip_path* path, double max_step, double** xy,
                           size_t* num_points);

dip_status dip_path_validate(const dip_path* path,
                             const dip_instance* instance,
                             dip_validation* out);

/* ---- batch & file formats ---- */

typedef enum dip_format {
  DIP_FORMAT_AUTO = 0,
  DIP_FORMAT_JSON_LINES = 1,
  DIP_FORMAT_JSON_ARRAY = 2
} dip_format;

typedef struct dip_svg_options {
  double max_step; /* <= 0: rho / 8 per record */
  double scale;    /* pixels per unit; <= 0: auto-fit */
  double margin;   /* pixels; <= 0: default 24 */
} dip_svg_options;

/* Parse instance records (json-lines or a json array). Angle fields are
   radians unless the record carries "angle_unit": "degrees" or
   degrees_default is nonzero. */
dip_status dip_batch_parse(const char* data, size_t len, dip_format format,
                           int degrees_default, dip_batch** out);
void dip_batch_free(dip_batch* batch);
size_t dip_batch_size(const dip_batch* batch);
const char* dip_batch_record_id(const dip_batch* batch, size_t index);
dip_status dip_batch_instance(const dip_batch* batch, size_t index,
                              dip_instance* out);

/* Solve every record in input order. with_timing != 0 stamps per-record
   wall time into the solution records. */
dip_status dip_batch_solve(dip_batch* batch, int with_timing);

/* Solutions as json-lines; requires dip_batch_solve first. */
dip_status dip_batch_solutions_jsonl(const dip_batch* batch, char** out,
                                     size_t* len);

/* Per-record solver vs oracle comparison as json-lines. */
dip_status dip_batch_compare_jsonl(const dip_batch* batch, uint32_t grid_n,
                                   char** out, size_t* len);

/* SVG with targets, interval fans and solved paths; requires
   dip_batch_solve first. options may be NULL for defaults. */
dip_status dip_batch_render_svg(const dip_batch* batch,
                                const dip_svg_options* options, char** out,
                                size_t* len);

/* Re-validate serialized solution records (the output of a solve).
   *failures receives the number of failing records; *report receives a
   json-lines report (release with dip_free()). */
dip_status dip_check_solutions(const char* data, size_t len, char** report,
                               size_t* report_len, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* DUBINS_INTERVAL_H */
