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

#include "words.hpp"

#include <algorithm>
#include <stdexcept>

namespace dip {

namespace {

constexpr double kNegativeClamp = 1e-12;  // tiny negative magnitudes -> 0
constexpr double kTrigClamp = 1e-12;      // inverse-trig argument slack
constexpr double kCccMidGuard = 1e-9;     // middle arc must exceed pi by this
constexpr double kTieBreak = 1e-12;

const PathWord kWordLSL{SegKind::kLeft, SegKind::kStraight, SegKind::kLeft};
const PathWord kWordRSR{SegKind::kRight, SegKind::kStraight, SegKind::kRight};
const PathWord kWordLSR{SegKind::kLeft, SegKind::kStraight, SegKind::kRight};
const PathWord kWordRSL{SegKind::kRight, SegKind::kStraight, SegKind::kLeft};
const PathWord kWordLRL{SegKind::kLeft, SegKind::kRight, SegKind::kLeft};
const PathWord kWordRLR{SegKind::kRight, SegKind::kLeft, SegKind::kRight};

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rho must be positive");
  }
}

double clamp_magnitude(double m) {
  if (m < 0.0 && m >= -kNegativeClamp) return 0.0;
  return m;
}

SolvedPath make_csc(SegKind first, double t, double s, SegKind last, double q,
                    double depart, double arrive, double rho) {
  return make_path(CaseLabel::kClassic,
                   {Segment{first, t}, Segment{SegKind::kStraight, s},
                    Segment{last, q}},
                   depart, arrive, rho);
}

}  // namespace

SegKind mirror_kind(SegKind k) {
  switch (k) {
    case SegKind::kLeft:
      return SegKind::kRight;
    case SegKind::kRight:
      return SegKind::kLeft;
    default:
      return SegKind::kStraight;
  }
}

PathWord::PathWord(std::initializer_list<SegKind> kinds) {
  for (SegKind k : kinds) {
    if (size_ >= 3) throw std::invalid_argument("word has at most 3 segments");
    kinds_[static_cast<size_t>(size_++)] = k;
  }
}

std::optional<PathWord> PathWord::parse(std::string_view text) {
  if (text.empty() || text.size() > 3) return std::nullopt;
  PathWord w;
  for (char c : text) {
    switch (c) {
      case 'L':
        w.kinds_[static_cast<size_t>(w.size_++)] = SegKind::kLeft;
        break;
      case 'R':
        w.kinds_[static_cast<size_t>(w.size_++)] = SegKind::kRight;
        break;
      case 'S':
        w.kinds_[static_cast<size_t>(w.size_++)] = SegKind::kStraight;
        break;
      default:
        return std::nullopt;
    }
  }
  if (!w.legal()) return std::nullopt;
  return w;
}

std::string PathWord::str() const {
  std::string out;
  for (int i = 0; i < size_; ++i) out.push_back(kind_char(at(i)));
  return out;
}

bool PathWord::legal() const {
  if (size_ < 1 || size_ > 3) return false;
  int straights = 0;
  for (int i = 0; i < size_; ++i) {
    if (at(i) == SegKind::kStraight) ++straights;
    if (i > 0 && at(i) == at(i - 1)) return false;
  }
  if (straights > 1) return false;
  if (size_ == 3) {
    // Only C S C and the two C C' C shapes are words.
    bool csc = at(1) == SegKind::kStraight && at(0) != SegKind::kStraight &&
               at(2) != SegKind::kStraight;
    bool ccc = straights == 0 && at(0) == at(2);
    return csc || ccc;
  }
  return true;
}

PathWord PathWord::mirrored() const {
  PathWord w = *this;
  for (int i = 0; i < w.size_; ++i) {
    w.kinds_[static_cast<size_t>(i)] = mirror_kind(w.at(i));
  }
  return w;
}

PathWord PathWord::reversed() const {
  PathWord w;
  w.size_ = size_;
  for (int i = 0; i < size_; ++i) {
    w.kinds_[static_cast<size_t>(i)] = mirror_kind(at(size_ - 1 - i));
  }
  return w;
}

bool PathWord::operator==(const PathWord& o) const {
  if (size_ != o.size_) return false;
  for (int i = 0; i < size_; ++i) {
    if (at(i) != o.at(i)) return false;
  }
  return true;
}

const char* case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::kClassic:
      return "classic";
    case CaseLabel::kCase1:
      return "case-1";
    case CaseLabel::kCase2:
      return "case-2";
    case CaseLabel::kCase3:
      return "case-3";
    case CaseLabel::kCase4:
      return "case-4";
    case CaseLabel::kCase5:
      return "case-5";
    case CaseLabel::kCase6:
      return "case-6";
    case CaseLabel::kCase7:
      return "case-7";
    case CaseLabel::kCase8:
      return "case-8";
    case CaseLabel::kCase9:
      return "case-9";
    case CaseLabel::kSpecial1:
      return "special-case-1";
    case CaseLabel::kSpecial2:
      return "special-case-2";
    case CaseLabel::kSpecial3:
      return "special-case-3";
  }
  return "unknown";
}

std::optional<CaseLabel> case_label_from_name(std::string_view name) {
  static constexpr CaseLabel kAll[] = {
      CaseLabel::kClassic, CaseLabel::kCase1,    CaseLabel::kCase2,
      CaseLabel::kCase3,   CaseLabel::kCase4,    CaseLabel::kCase5,
      CaseLabel::kCase6,   CaseLabel::kCase7,    CaseLabel::kCase8,
      CaseLabel::kCase9,   CaseLabel::kSpecial1, CaseLabel::kSpecial2,
      CaseLabel::kSpecial3};
  for (CaseLabel l : kAll) {
    if (name == case_label_name(l)) return l;
  }
  return std::nullopt;
}

PathWord SolvedPath::word() const {
  return PathWord::parse(word_string()).value_or(PathWord{});
}

std::string SolvedPath::word_string() const {
  std::string out;
  for (int i = 0; i < num_segments; ++i) {
    out.push_back(kind_char(segments[static_cast<size_t>(i)].kind));
  }
  return out;
}

std::string SolvedPath::display_word() const {
  std::string out;
  for (int i = 0; i < num_segments; ++i) {
    const Segment& s = segments[static_cast<size_t>(i)];
    if (s.magnitude != 0.0) out.push_back(kind_char(s.kind));
  }
  if (out.empty()) out = "S";
  return out;
}

SolvedPath make_path(CaseLabel label, std::initializer_list<Segment> segs,
                     double depart, double arrive, double rho) {
  SolvedPath p;
  p.label = label;
  p.depart = depart;
  p.arrive = arrive;
  for (Segment s : segs) {
    s.magnitude = clamp_magnitude(s.magnitude);
    p.segments[static_cast<size_t>(p.num_segments++)] = s;
    p.length += s.kind == SegKind::kStraight ? s.magnitude : rho * s.magnitude;
  }
  return p;
}

Pose advance(const Pose& start, SegKind kind, double magnitude, double rho) {
  switch (kind) {
    case SegKind::kStraight:
      return Pose{start.x + magnitude * std::cos(start.theta),
                  start.y + magnitude * std::sin(start.theta), start.theta};
    case SegKind::kLeft: {
      double th = start.theta + magnitude;
      return Pose{start.x + rho * (std::sin(th) - std::sin(start.theta)),
                  start.y - rho * (std::cos(th) - std::cos(start.theta)),
                  normalize_angle(th)};
    }
    case SegKind::kRight: {
      double th = start.theta - magnitude;
      return Pose{start.x - rho * (std::sin(th) - std::sin(start.theta)),
                  start.y + rho * (std::cos(th) - std::cos(start.theta)),
                  normalize_angle(th)};
    }
  }
  return start;
}

Pose path_end(const Pose& start, const SolvedPath& path, double rho) {
  Pose p = make_pose(start.x, start.y, path.depart);
  for (int i = 0; i < path.num_segments; ++i) {
    const Segment& s = path.segments[static_cast<size_t>(i)];
    p = advance(p, s.kind, s.magnitude, rho);
  }
  return p;
}

namespace detail {

double arc_sweep(double raw) {
  double r = normalize_angle(raw);
  if (r > kTwoPi - kNegativeClamp) r = 0.0;
  return r;
}

PoseFrame make_frame(const Pose& pose, double rho) {
  PoseFrame f;
  f.pose = pose;
  f.sin_theta = std::sin(pose.theta);
  f.cos_theta = std::cos(pose.theta);
  f.left_center = {pose.x - rho * f.sin_theta, pose.y + rho * f.cos_theta};
  f.right_center = {pose.x + rho * f.sin_theta, pose.y - rho * f.cos_theta};
  return f;
}

namespace {

// CSC with equal turn directions (LSL / RSR); always solvable.
int solve_cscs_same(const PoseFrame& a, const PoseFrame& b, double rho,
                    SegKind turn, SolvedPath out[2]) {
  bool left = turn == SegKind::kLeft;
  Vec2 c1 = left ? a.left_center : a.right_center;
  Vec2 c2 = left ? b.left_center : b.right_center;
  Vec2 dl = c2 - c1;
  double dist = dl.norm();
  if (dist < 1e-12 * rho) {
    // Coincident circles: a single arc closes the word.
    double t = left ? arc_sweep(b.pose.theta - a.pose.theta)
                    : arc_sweep(a.pose.theta - b.pose.theta);
    out[0] = make_path(CaseLabel::kClassic,
                       {Segment{turn, t}, Segment{SegKind::kStraight, 0.0},
                        Segment{turn, 0.0}},
                       a.pose.theta, b.pose.theta, rho);
    return 1;
  }
  double w = direction(dl);
  double t = left ? arc_sweep(w - a.pose.theta) : arc_sweep(a.pose.theta - w);
  double q = left ? arc_sweep(b.pose.theta - w) : arc_sweep(w - b.pose.theta);
  out[0] = make_csc(turn, t, dist, turn, q, a.pose.theta, b.pose.theta, rho);
  return 1;
}

// CSC with opposite turns (LSR / RSL); needs center distance >= 2*rho.
int solve_cscs_cross(const PoseFrame& a, const PoseFrame& b, double rho,
                     SegKind first, SolvedPath out[2]) {
  bool left = first == SegKind::kLeft;
  Vec2 c1 = left ? a.left_center : a.right_center;
  Vec2 c2 = left ? b.right_center : b.left_center;
  Vec2 dl = c2 - c1;
  double dist = dl.norm();
  double ratio = 2.0 * rho / dist;
  if (!(ratio <= 1.0 + kTrigClamp)) return 0;
  double off = std::acos(std::min(ratio, 1.0));
  double w = direction(dl);
  double s = std::sqrt(std::max(0.0, dist * dist - 4.0 * rho * rho));
  double t, q;
  if (left) {
    double phi = (w - off) + kHalfPi;
    t = arc_sweep(phi - a.pose.theta);
    q = arc_sweep(phi - b.pose.theta);
    out[0] = make_csc(SegKind::kLeft, t, s, SegKind::kRight, q, a.pose.theta,
                      b.pose.theta, rho);
  } else {
    double phi = (w + off) - kHalfPi;
    t = arc_sweep(a.pose.theta - phi);
    q = arc_sweep(b.pose.theta - phi);
    out[0] = make_csc(SegKind::kRight, t, s, SegKind::kLeft, q, a.pose.theta,
                      b.pose.theta, rho);
  }
  return 1;
}

// CCC (RLR / LRL); needs center distance <= 4*rho. Emits both middle
// circle placements.
int solve_ccc(const PoseFrame& a, const PoseFrame& b, double rho,
              SegKind outer, bool candidate_filter, SolvedPath out[2]) {
  bool right = outer == SegKind::kRight;
  SegKind mid = mirror_kind(outer);
  Vec2 c1 = right ? a.right_center : a.left_center;
  Vec2 c2 = right ? b.right_center : b.left_center;
  Vec2 dl = c2 - c1;
  double dist = dl.norm();
  double ratio = dist / (4.0 * rho);
  if (!(ratio <= 1.0 + kTrigClamp)) return 0;
  double eta = std::acos(std::min(ratio, 1.0));
  double w = direction(dl);

  int n = 0;
  for (double sgn : {-1.0, 1.0}) {
    Vec2 cm = c1 + 2.0 * rho * polar(w + sgn * eta);
    double nu1 = direction(cm - c1);
    double mid_in = direction(c2 - cm);   // tangency 2, seen from cm
    double mid_out = direction(cm - c2);  // tangency 2, seen from c2
    double t, p, q;
    if (right) {
      t = arc_sweep((a.pose.theta + kHalfPi) - nu1);
      p = arc_sweep(mid_in - (nu1 + kPi));
      q = arc_sweep(mid_out - (b.pose.theta + kHalfPi));
    } else {
      t = arc_sweep(nu1 - (a.pose.theta - kHalfPi));
      p = arc_sweep((nu1 + kPi) - mid_in);
      q = arc_sweep((b.pose.theta - kHalfPi) - mid_out);
    }
    if (candidate_filter && !(p > kPi + kCccMidGuard)) continue;
    out[n++] = make_path(
        CaseLabel::kClassic,
        {Segment{outer, t}, Segment{mid, p}, Segment{outer, q}}, a.pose.theta,
        b.pose.theta, rho);
  }
  return n;
}

}  // namespace

int solve_word_into(const PoseFrame& a, const PoseFrame& b, double rho,
                    const PathWord& word, bool candidate_filter,
                    SolvedPath out[2]) {
  if (word == kWordLSL) return solve_cscs_same(a, b, rho, SegKind::kLeft, out);
  if (word == kWordRSR) return solve_cscs_same(a, b, rho, SegKind::kRight, out);
  if (word == kWordLSR) return solve_cscs_cross(a, b, rho, SegKind::kLeft, out);
  if (word == kWordRSL)
    return solve_cscs_cross(a, b, rho, SegKind::kRight, out);
  if (word == kWordRLR)
    return solve_ccc(a, b, rho, SegKind::kRight, candidate_filter, out);
  if (word == kWordLRL)
    return solve_ccc(a, b, rho, SegKind::kLeft, candidate_filter, out);
  throw std::invalid_argument("solve_word: word must be one of the six "
                              "canonical types");
}

}  // namespace detail

std::vector<SolvedPath> solve_word_branches(const Pose& start, const Pose& end,
                                            double rho, const PathWord& word) {
  check_rho(rho);
  detail::PoseFrame a = detail::make_frame(make_pose(start.x, start.y, start.theta), rho);
  detail::PoseFrame b = detail::make_frame(make_pose(end.x, end.y, end.theta), rho);
  SolvedPath buf[2];
  int n = detail::solve_word_into(a, b, rho, word, /*candidate_filter=*/false, buf);
  return std::vector<SolvedPath>(buf, buf + n);
}

std::optional<SolvedPath> solve_word(const Pose& start, const Pose& end,
                                     double rho, const PathWord& word) {
  check_rho(rho);
  detail::PoseFrame a = detail::make_frame(make_pose(start.x, start.y, start.theta), rho);
  detail::PoseFrame b = detail::make_frame(make_pose(end.x, end.y, end.theta), rho);
  SolvedPath buf[2];
  int n = detail::solve_word_into(a, b, rho, word, /*candidate_filter=*/true, buf);
  if (n == 0) return std::nullopt;
  if (n == 2 && buf[1].length < buf[0].length - kTieBreak) return buf[1];
  return buf[0];
}

SolvedPath solve_classic(const Pose& start, const Pose& end, double rho) {
  check_rho(rho);
  detail::PoseFrame a = detail::make_frame(make_pose(start.x, start.y, start.theta), rho);
  detail::PoseFrame b = detail::make_frame(make_pose(end.x, end.y, end.theta), rho);

  static const PathWord kOrder[] = {kWordLSL, kWordRSR, kWordLSR,
                                    kWordRSL, kWordLRL, kWordRLR};
  SolvedPath best;
  bool have = false;
  SolvedPath buf[2];
  for (const PathWord& w : kOrder) {
    int n = detail::solve_word_into(a, b, rho, w, /*candidate_filter=*/true, buf);
    for (int i = 0; i < n; ++i) {
      if (!have || buf[i].length < best.length - kTieBreak) {
        best = buf[i];
        have = true;
      }
    }
  }
  // LSL and RSR always admit a solution, so `best` is set.
  return best;
}

}  // namespace dip
