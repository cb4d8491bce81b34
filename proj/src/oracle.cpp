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

#include "oracle.hpp"

#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "words.hpp"

namespace dip {

namespace {

std::vector<double> axis_samples(const AngleInterval& iv, uint32_t n) {
  if (iv.zero_width()) return {iv.lo};
  std::vector<double> out;
  out.reserve(n + 1);
  double w = iv.width();
  for (uint32_t i = 0; i <= n; ++i) {
    out.push_back(iv.lo + w * static_cast<double>(i) / static_cast<double>(n));
  }
  return out;
}

struct CellBest {
  double length = std::numeric_limits<double>::infinity();
  size_t index = 0;

  void consider(double len, size_t idx) {
    if (len < length || (len == length && idx < index)) {
      length = len;
      index = idx;
    }
  }
};

}  // namespace

OracleResult oracle_grid(const IntervalInstance& inst, uint32_t n) {
  validate_instance(inst);
  if (n == 0) throw std::invalid_argument("oracle_grid: n must be >= 1");

  std::vector<double> s1 = axis_samples(inst.theta1, n);
  std::vector<double> s2 = axis_samples(inst.theta2, n);
  const size_t rows = s1.size();
  const size_t cols = s2.size();

  std::vector<detail::PoseFrame> starts;
  starts.reserve(rows);
  for (double th : s1) {
    starts.push_back(detail::make_frame(make_pose(inst.p1, th), inst.rho));
  }
  std::vector<detail::PoseFrame> ends;
  ends.reserve(cols);
  for (double th : s2) {
    ends.push_back(detail::make_frame(make_pose(inst.p2, th), inst.rho));
  }

  static const PathWord kWords[] = {
      PathWord::parse("LSL").value(), PathWord::parse("RSR").value(),
      PathWord::parse("LSR").value(), PathWord::parse("RSL").value(),
      PathWord::parse("LRL").value(), PathWord::parse("RLR").value()};

  auto scan_rows = [&](size_t row_begin, size_t row_end, CellBest& best) {
    SolvedPath buf[2];
    for (size_t i = row_begin; i < row_end; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        double len = std::numeric_limits<double>::infinity();
        for (const PathWord& w : kWords) {
          int k = detail::solve_word_into(starts[i], ends[j], inst.rho, w,
                                          /*candidate_filter=*/true, buf);
          for (int b = 0; b < k; ++b) {
            if (buf[b].length < len) len = buf[b].length;
          }
        }
        best.consider(len, i * cols + j);
      }
    }
  };

  size_t hw = std::thread::hardware_concurrency();
  size_t num_threads = std::max<size_t>(1, std::min(hw, rows));
  if (rows * cols < 4096) num_threads = 1;

  std::vector<CellBest> bests(num_threads);
  if (num_threads == 1) {
    scan_rows(0, rows, bests[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(num_threads);
    size_t chunk = (rows + num_threads - 1) / num_threads;
    for (size_t t = 0; t < num_threads; ++t) {
      size_t b = t * chunk;
      size_t e = std::min(rows, b + chunk);
      if (b >= e) break;
      workers.emplace_back([&, b, e, t] { scan_rows(b, e, bests[t]); });
    }
    for (std::thread& w : workers) w.join();
  }

  CellBest global;
  for (const CellBest& b : bests) {
    if (std::isfinite(b.length)) global.consider(b.length, b.index);
  }

  OracleResult result;
  result.length = global.length;
  result.argmin_depart = s1[global.index / cols];
  result.argmin_arrive = s2[global.index % cols];
  result.samples_per_axis = n;
  return result;
}

}  // namespace dip
