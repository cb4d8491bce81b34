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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace dip {

enum class SegKind : char {
  kLeft = 'L',      // minimum-radius counterclockwise arc
  kRight = 'R',     // minimum-radius clockwise arc
  kStraight = 'S',  // straight line
};

inline char kind_char(SegKind k) { return static_cast<char>(k); }
SegKind mirror_kind(SegKind k);  // swaps L and R

/// One path segment. For arcs the magnitude is the turn angle in
/// [0, 2*pi) and the arc length is rho * magnitude; for straights it is
/// the segment length.
struct Segment {
  SegKind kind = SegKind::kStraight;
  double magnitude = 0.0;
};

/// Symbolic path type: 1-3 segment kinds. Legal words are the six
/// canonical types LSL, RSR, LSR, RSL, LRL, RLR and their sub-words.
class PathWord {
 public:
  PathWord() = default;
  PathWord(std::initializer_list<SegKind> kinds);

  static std::optional<PathWord> parse(std::string_view text);

  int size() const { return size_; }
  SegKind at(int i) const { return kinds_[static_cast<size_t>(i)]; }
  std::string str() const;
  bool legal() const;
  PathWord mirrored() const;  // L <-> R
  PathWord reversed() const;  // reverse order, then L <-> R

  bool operator==(const PathWord& o) const;

 private:
  std::array<SegKind, 3> kinds_{SegKind::kStraight, SegKind::kStraight,
                                SegKind::kStraight};
  int size_ = 0;
};

/// Which candidate family produced a path. "Case" labels cover the
/// interval problem's taxonomy; "special" labels the fixed-departure
/// variant; classic is the plain two-pose solver.
enum class CaseLabel {
  kClassic,
  kCase1,
  kCase2,
  kCase3,
  kCase4,
  kCase5,
  kCase6,
  kCase7,
  kCase8,
  kCase9,
  kSpecial1,
  kSpecial2,
  kSpecial3,
};

const char* case_label_name(CaseLabel label);
std::optional<CaseLabel> case_label_from_name(std::string_view name);

/// A concrete path: segments with magnitudes, realized boundary
/// headings, total length and the candidate family that produced it.
struct SolvedPath {
  std::array<Segment, 3> segments{};
  int num_segments = 0;
  double depart = 0.0;  // heading at p1, [0, 2*pi)
  double arrive = 0.0;  // heading at p2, [0, 2*pi)
  double length = 0.0;
  CaseLabel label = CaseLabel::kClassic;

  PathWord word() const;
  std::string word_string() const;
  /// Word with zero-magnitude segments collapsed ("LSL" with s = 0 and a
  /// zero final arc displays as "L"). An all-zero path displays as "S".
  std::string display_word() const;
};

/// Builds a path from segments, computing length = sum of rho*psi over
/// arcs plus straight lengths.
SolvedPath make_path(CaseLabel label, std::initializer_list<Segment> segs,
                     double depart, double arrive, double rho);

/// Exact forward integration of a single segment.
Pose advance(const Pose& start, SegKind kind, double magnitude, double rho);
/// Endpoint of a path integrated from `start` (start.theta is ignored in
/// favor of path.depart).
Pose path_end(const Pose& start, const SolvedPath& path, double rho);

/// All geometric branches of one canonical word between two poses,
/// unfiltered (CCC words have two middle-arc roots; CSC words one
/// branch). Diagnostic surface; candidate selection uses solve_word.
std::vector<SolvedPath> solve_word_branches(const Pose& start, const Pose& end,
                                            double rho, const PathWord& word);

/// Best optimal-candidate branch for one of the six canonical words, or
/// empty when the word admits no such solution. CCC branches with a
/// middle arc <= pi are not optimal candidates and are dropped here.
std::optional<SolvedPath> solve_word(const Pose& start, const Pose& end,
                                     double rho, const PathWord& word);

/// Classical Dubins solver: minimum over the six words. Ties within
/// 1e-12 resolve to the earlier word in the order LSL, RSR, LSR, RSL,
/// LRL, RLR.
SolvedPath solve_classic(const Pose& start, const Pose& end, double rho);

namespace detail {

/// Per-pose cached trigonometry and turn-circle centers, used to keep
/// the grid oracle's inner loop cheap.
struct PoseFrame {
  Pose pose;
  double sin_theta = 0.0;
  double cos_theta = 0.0;
  Vec2 left_center;
  Vec2 right_center;
};

PoseFrame make_frame(const Pose& pose, double rho);

/// Allocation-free word solve into a caller buffer (capacity 2).
/// Returns the number of branches written.
int solve_word_into(const PoseFrame& a, const PoseFrame& b, double rho,
                    const PathWord& word, bool candidate_filter,
                    SolvedPath out[2]);

/// Turn angle normalized to [0, 2*pi); values within 1e-12 below a full
/// turn collapse to 0 (guards against tiny negative sweeps).
double arc_sweep(double raw);

}  // namespace detail

}  // namespace dip
