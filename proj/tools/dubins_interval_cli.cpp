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

// Command-line front end over the dubins_interval C API.
//
// Exit codes: 0 success, 1 validation failure (including check
// failures and I/O errors), 2 parse error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dubins_interval.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

int exit_code_for(dip_status status) {
  switch (status) {
    case DIP_OK:
      return kExitOk;
    case DIP_ERR_PARSE:
      return kExitParse;
    default:
      return kExitValidation;
  }
}

int report_failure(dip_status status) {
  std::cerr << "error (" << dip_status_name(status)
            << "): " << dip_last_error() << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const char* data, size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(data, static_cast<std::streamsize>(len));
  return static_cast<bool>(out);
}

struct BatchDeleter {
  void operator()(dip_batch* b) const { dip_batch_free(b); }
};
using BatchPtr = std::unique_ptr<dip_batch, BatchDeleter>;

struct BufferDeleter {
  void operator()(char* p) const { dip_free(p); }
};
using BufferPtr = std::unique_ptr<char, BufferDeleter>;

dip_format parse_format(const std::string& name) {
  if (name == "jsonl") return DIP_FORMAT_JSON_LINES;
  if (name == "array") return DIP_FORMAT_JSON_ARRAY;
  return DIP_FORMAT_AUTO;
}

int load_batch(const std::string& file, const std::string& format,
               bool degrees, BatchPtr& batch) {
  std::string data;
  if (!read_file(file, data)) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return kExitValidation;
  }
  dip_batch* raw = nullptr;
  dip_status st = dip_batch_parse(data.data(), data.size(),
                                  parse_format(format), degrees ? 1 : 0, &raw);
  if (st != DIP_OK) return report_failure(st);
  batch.reset(raw);
  return kExitOk;
}

int emit(const std::string& out_file, const char* data, size_t len) {
  if (out_file.empty()) {
    std::fwrite(data, 1, len, stdout);
    return kExitOk;
  }
  if (!write_file(out_file, data, len)) {
    std::cerr << "error: cannot write '" << out_file << "'\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run_solve(const std::string& file, const std::string& format, bool degrees,
              const std::string& out_file, const std::string& svg_file,
              double step, double scale, bool no_timing) {
  BatchPtr batch;
  if (int rc = load_batch(file, format, degrees, batch); rc != kExitOk) {
    return rc;
  }
  dip_status st = dip_batch_solve(batch.get(), no_timing ? 0 : 1);
  if (st != DIP_OK) return report_failure(st);

  char* jsonl = nullptr;
  size_t len = 0;
  st = dip_batch_solutions_jsonl(batch.get(), &jsonl, &len);
  if (st != DIP_OK) return report_failure(st);
  BufferPtr jsonl_owner(jsonl);
  if (int rc = emit(out_file, jsonl, len); rc != kExitOk) return rc;

  if (!svg_file.empty()) {
    dip_svg_options opts{step, scale, 0.0};
    char* svg = nullptr;
    size_t svg_len = 0;
    st = dip_batch_render_svg(batch.get(), &opts, &svg, &svg_len);
    if (st != DIP_OK) return report_failure(st);
    BufferPtr svg_owner(svg);
    if (!write_file(svg_file, svg, svg_len)) {
      std::cerr << "error: cannot write '" << svg_file << "'\n";
      return kExitValidation;
    }
  }
  return kExitOk;
}

int run_compare(const std::string& file, const std::string& format,
                bool degrees, uint32_t grid, const std::string& out_file) {
  BatchPtr batch;
  if (int rc = load_batch(file, format, degrees, batch); rc != kExitOk) {
    return rc;
  }
  char* jsonl = nullptr;
  size_t len = 0;
  dip_status st = dip_batch_compare_jsonl(batch.get(), grid, &jsonl, &len);
  if (st != DIP_OK) return report_failure(st);
  BufferPtr owner(jsonl);
  return emit(out_file, jsonl, len);
}

int run_check(const std::string& file) {
  std::string data;
  if (!read_file(file, data)) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return kExitValidation;
  }
  char* report = nullptr;
  size_t report_len = 0;
  size_t failures = 0;
  dip_status st = dip_check_solutions(data.data(), data.size(), &report,
                                      &report_len, &failures);
  if (st != DIP_OK) return report_failure(st);
  BufferPtr owner(report);
  std::fwrite(report, 1, report_len, stdout);
  if (failures > 0) {
    std::cerr << "check: " << failures << " failing record(s): "
              << dip_last_error() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest bounded-curvature paths with heading intervals"};
  app.require_subcommand(1);

  bool degrees = false;
  app.add_flag("--degrees", degrees,
               "treat input angles as degrees unless a record says otherwise");

  std::string file, out_file, svg_file, format = "auto";
  double step = 0.0, scale = 0.0;
  bool no_timing = false;
  uint32_t grid = 64;

  CLI::App* solve = app.add_subcommand(
      "solve", "solve each record and emit solution records as json-lines");
  solve->add_option("file", file, "instance file (json-lines or json array)")
      ->required();
  solve->add_option("--out", out_file, "output file (default: stdout)");
  solve->add_option("--svg", svg_file, "also render the solutions as SVG");
  solve->add_option("--step", step, "polyline sampling step for the SVG");
  solve->add_option("--scale", scale, "SVG pixels per unit (default: fit)");
  solve->add_flag("--no-timing", no_timing,
                  "omit wall_time fields for byte-stable output");
  solve->add_option("--format", format, "input format: auto|jsonl|array")
      ->check(CLI::IsMember({"auto", "jsonl", "array"}));

  CLI::App* compare = app.add_subcommand(
      "compare", "per record: solver length vs oracle grid length and gap");
  compare->add_option("file", file, "instance file")->required();
  compare->add_option("--grid", grid, "oracle samples per axis")->required();
  compare->add_option("--out", out_file, "output file (default: stdout)");
  compare->add_option("--format", format, "input format: auto|jsonl|array")
      ->check(CLI::IsMember({"auto", "jsonl", "array"}));

  CLI::App* check = app.add_subcommand(
      "check", "re-validate solution records produced by solve");
  check->add_option("file", file, "solution file (json-lines)")->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    return run_solve(file, format, degrees, out_file, svg_file, step, scale,
                     no_timing);
  }
  if (compare->parsed()) {
    return run_compare(file, format, degrees, grid, out_file);
  }
  if (check->parsed()) {
    return run_check(file);
  }
  return kExitOk;
}
