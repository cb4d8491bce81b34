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

#include "interval_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dip {

namespace {

constexpr double kDegenerateDist = 1e-12;
constexpr double kTrigClamp = 1e-12;
constexpr double kTieBreak = 1e-12;

using detail::arc_sweep;

Vec2 left_center(const Pose& p, double rho) {
  return {p.x - rho * std::sin(p.theta), p.y + rho * std::cos(p.theta)};
}

Vec2 right_center(const Pose& p, double rho) {
  return {p.x + rho * std::sin(p.theta), p.y - rho * std::cos(p.theta)};
}

int case_rank(CaseLabel label) { return static_cast<int>(label); }

/// Deterministic winner among candidates: smallest length, with ties
/// within 1e-12 resolved by case order, then word, then departure.
const SolvedPath* select_best(const std::vector<SolvedPath>& cands) {
  if (cands.empty()) return nullptr;
  double min_len = std::numeric_limits<double>::infinity();
  for (const SolvedPath& c : cands) min_len = std::min(min_len, c.length);
  const SolvedPath* best = nullptr;
  for (const SolvedPath& c : cands) {
    if (c.length > min_len + kTieBreak) continue;
    if (best == nullptr) {
      best = &c;
      continue;
    }
    auto key = [](const SolvedPath& p) {
      return std::make_tuple(case_rank(p.label), p.word_string(), p.depart);
    };
    if (key(c) < key(*best)) best = &c;
  }
  return best;
}

SolvedPath to_original(const SolvedPath& canonical, const FrameTransform& f) {
  SolvedPath p;
  p.label = canonical.label;
  p.num_segments = canonical.num_segments;
  p.depart = f.heading_to_original(canonical.depart);
  p.arrive = f.heading_to_original(canonical.arrive);
  p.length = 0.0;
  for (int i = 0; i < canonical.num_segments; ++i) {
    Segment s = canonical.segments[static_cast<size_t>(i)];
    if (s.kind == SegKind::kStraight) {
      s.magnitude = f.length_to_original(s.magnitude);
      p.length += s.magnitude;
    } else {
      p.length += s.magnitude * f.scale;  // canonical rho = 1
    }
    p.segments[static_cast<size_t>(i)] = s;
  }
  return p;
}

void push_if_member(std::vector<SolvedPath>& out, SolvedPath path,
                    const AngleInterval& t1, const AngleInterval& t2,
                    double tol) {
  if (contains_circular(t1, path.depart, tol) &&
      contains_circular(t2, path.arrive, tol)) {
    out.push_back(path);
  }
}

void gen_free_free(const CanonicalInstance& ci, const SolveOptions& opts,
                   std::vector<SolvedPath>& out) {
  const double d = ci.d;
  if (d <= kDegenerateDist) return;
  const Vec2 p2{d, 0.0};

  // Straight segment along the chord.
  push_if_member(out,
                 make_path(CaseLabel::kCase1,
                           {Segment{SegKind::kStraight, d}}, 0.0, 0.0, 1.0),
                 ci.theta1, ci.theta2, opts.membership_tol);

  // Single major arcs on a unit circle through both targets (d <= 2).
  double half = 0.5 * d;
  if (half <= 1.0 + kTrigClamp) {
    double h = std::sqrt(std::max(0.0, 1.0 - half * half));
    for (double sgn : {1.0, -1.0}) {
      Vec2 c{half, sgn * h};
      double nu1 = direction(Vec2{0.0, 0.0} - c);
      double nu2 = direction(p2 - c);
      double psi_l = arc_sweep(nu2 - nu1);
      if (psi_l > kPi + opts.psi_guard) {
        push_if_member(out,
                       make_path(CaseLabel::kCase1,
                                 {Segment{SegKind::kLeft, psi_l}},
                                 normalize_angle(nu1 + kHalfPi),
                                 normalize_angle(nu2 + kHalfPi), 1.0),
                       ci.theta1, ci.theta2, opts.membership_tol);
      }
      double psi_r = arc_sweep(nu1 - nu2);
      if (psi_r > kPi + opts.psi_guard) {
        push_if_member(out,
                       make_path(CaseLabel::kCase1,
                                 {Segment{SegKind::kRight, psi_r}},
                                 normalize_angle(nu1 - kHalfPi),
                                 normalize_angle(nu2 - kHalfPi), 1.0),
                       ci.theta1, ci.theta2, opts.membership_tol);
      }
      if (h == 0.0) break;  // coincident centers
    }
  }

  // Equal-angle arc pairs: the inflexion sits at the chord midpoint and
  // the first center lies on circle(p1, 1) intersected with
  // circle(midpoint, 1); needs d <= 4.
  Vec2 mid{half, 0.0};
  double quarter = 0.25 * d;
  if (quarter <= 1.0 + kTrigClamp) {
    double h = std::sqrt(std::max(0.0, 1.0 - quarter * quarter));
    for (double sgn : {1.0, -1.0}) {
      Vec2 c1{quarter, sgn * h};
      double nu0 = direction(Vec2{0.0, 0.0} - c1);
      double num = direction(mid - c1);
      double psi_l = arc_sweep(num - nu0);
      if (psi_l > kPi + opts.psi_guard) {
        double depart = normalize_angle(nu0 + kHalfPi);
        push_if_member(out,
                       make_path(CaseLabel::kCase1,
                                 {Segment{SegKind::kLeft, psi_l},
                                  Segment{SegKind::kRight, psi_l}},
                                 depart, depart, 1.0),
                       ci.theta1, ci.theta2, opts.membership_tol);
      }
      double psi_r = arc_sweep(nu0 - num);
      if (psi_r > kPi + opts.psi_guard) {
        double depart = normalize_angle(nu0 - kHalfPi);
        push_if_member(out,
                       make_path(CaseLabel::kCase1,
                                 {Segment{SegKind::kRight, psi_r},
                                  Segment{SegKind::kLeft, psi_r}},
                                 depart, depart, 1.0),
                       ci.theta1, ci.theta2, opts.membership_tol);
      }
      if (h == 0.0) break;
    }
  }
}

void gen_pinned_pinned(const CanonicalInstance& ci, const SolveOptions& opts,
                       std::vector<SolvedPath>& out) {
  struct Corner {
    double th1;
    double th2;
    CaseLabel label;
    const char* words[2];
    int num_words;
  };
  const Corner corners[] = {
      {ci.theta1.hi, ci.theta2.hi, CaseLabel::kCase2, {"LSR"}, 1},
      {ci.theta1.hi, ci.theta2.lo, CaseLabel::kCase3, {"LSL", "LRL"}, 2},
      {ci.theta1.lo, ci.theta2.lo, CaseLabel::kCase4, {"RSL"}, 1},
      {ci.theta1.lo, ci.theta2.hi, CaseLabel::kCase5, {"RSR", "RLR"}, 2},
  };
  for (const Corner& corner : corners) {
    Pose start = make_pose(0.0, 0.0, corner.th1);
    Pose end = make_pose(ci.d, 0.0, corner.th2);
    detail::PoseFrame a = detail::make_frame(start, 1.0);
    detail::PoseFrame b = detail::make_frame(end, 1.0);
    for (int wi = 0; wi < corner.num_words; ++wi) {
      PathWord word = PathWord::parse(corner.words[wi]).value();
      SolvedPath buf[2];
      int n = detail::solve_word_into(a, b, 1.0, word,
                                      /*candidate_filter=*/false, buf);
      for (int i = 0; i < n; ++i) {
        // CCC middle arcs must exceed pi to qualify as candidates.
        if (buf[i].num_segments == 3 &&
            buf[i].segments[1].kind != SegKind::kStraight &&
            !(buf[i].segments[1].magnitude > kPi + opts.psi_guard)) {
          continue;
        }
        buf[i].label = corner.label;
        out.push_back(buf[i]);
      }
    }
  }
}

void gen_pinned_free(const CanonicalInstance& ci, const SolveOptions& opts,
                     std::vector<SolvedPath>& out) {
  struct Spec {
    double pin;
    SegKind turn;
    CaseLabel label;
  };
  const Spec specs[] = {
      {ci.theta1.hi, SegKind::kLeft, CaseLabel::kCase6},
      {ci.theta1.lo, SegKind::kRight, CaseLabel::kCase7},
  };
  for (const Spec& spec : specs) {
    Pose start = make_pose(0.0, 0.0, spec.pin);
    for (SolvedPath cand : detail::cs_cc_to_point(start, Vec2{ci.d, 0.0}, 1.0,
                                                  spec.turn, opts.psi_guard)) {
      if (contains_circular(ci.theta2, cand.arrive, opts.membership_tol)) {
        cand.label = spec.label;
        out.push_back(cand);
      }
    }
  }
}

void gen_free_pinned(const CanonicalInstance& ci, const SolveOptions& opts,
                     std::vector<SolvedPath>& out) {
  struct Spec {
    double pin;
    SegKind turn;  // turn direction of the reversed construction
    CaseLabel label;
  };
  const Spec specs[] = {
      {ci.theta2.hi, SegKind::kLeft, CaseLabel::kCase8},
      {ci.theta2.lo, SegKind::kRight, CaseLabel::kCase9},
  };
  for (const Spec& spec : specs) {
    Pose rev_start = make_pose(ci.d, 0.0, normalize_angle(spec.pin + kPi));
    for (const SolvedPath& rc : detail::cs_cc_to_point(
             rev_start, Vec2{0.0, 0.0}, 1.0, spec.turn, opts.psi_guard)) {
      double depart = normalize_angle(rc.arrive + kPi);
      if (!contains_circular(ci.theta1, depart, opts.membership_tol)) continue;
      SolvedPath p;
      p.label = spec.label;
      p.num_segments = rc.num_segments;
      p.depart = depart;
      p.arrive = normalize_angle(spec.pin);
      p.length = rc.length;
      for (int i = 0; i < rc.num_segments; ++i) {
        Segment s = rc.segments[static_cast<size_t>(rc.num_segments - 1 - i)];
        s.kind = mirror_kind(s.kind);
        p.segments[static_cast<size_t>(i)] = s;
      }
      out.push_back(p);
    }
  }
}

void gen_zero_length(const CanonicalInstance& ci, const SolveOptions& opts,
                     std::vector<SolvedPath>& out) {
  if (ci.d != 0.0) return;
  // Coincident targets: a zero-length path exists for any heading the
  // two intervals share (0 and 2*pi identified).
  double best = std::numeric_limits<double>::infinity();
  for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
    double lo = std::max(ci.theta1.lo, ci.theta2.lo + shift);
    double hi = std::min(ci.theta1.hi, ci.theta2.hi + shift);
    if (lo <= hi + opts.membership_tol) {
      best = std::min(best, normalize_angle(std::min(lo, hi)));
    }
  }
  if (std::isfinite(best)) {
    out.push_back(make_path(CaseLabel::kCase1,
                            {Segment{SegKind::kStraight, 0.0}}, best, best,
                            1.0));
  }
}

void enumerate_into(const CanonicalInstance& ci, const SolveOptions& opts,
                    std::vector<SolvedPath>& out) {
  gen_zero_length(ci, opts, out);
  gen_free_free(ci, opts, out);
  gen_pinned_pinned(ci, opts, out);
  gen_pinned_free(ci, opts, out);
  gen_free_pinned(ci, opts, out);
}

}  // namespace

namespace detail {

std::vector<SolvedPath> cs_cc_to_point(const Pose& start, Vec2 target,
                                       double rho, SegKind first_turn,
                                       double second_arc_guard) {
  std::vector<SolvedPath> out;
  bool left = first_turn == SegKind::kLeft;
  Pose a = make_pose(start.x, start.y, start.theta);
  Vec2 c1 = left ? left_center(a, rho) : right_center(a, rho);
  Vec2 g = target - c1;
  double dist = g.norm();

  // Turn-straight: leave the circle on the tangent through the target.
  double ratio = rho / dist;
  if (dist > 0.0 && ratio <= 1.0 + kTrigClamp) {
    double off = std::acos(std::min(ratio, 1.0));
    double mu = direction(g);
    double s = std::sqrt(std::max(0.0, dist * dist - rho * rho));
    double t, arrive;
    if (left) {
      double nu = mu - off;
      t = arc_sweep(nu - (a.theta - kHalfPi));
      arrive = normalize_angle(nu + kHalfPi);
    } else {
      double nu = mu + off;
      t = arc_sweep((a.theta + kHalfPi) - nu);
      arrive = normalize_angle(nu - kHalfPi);
    }
    out.push_back(make_path(CaseLabel::kCase1,
                            {Segment{first_turn, t},
                             Segment{SegKind::kStraight, s}},
                            a.theta, arrive, rho));
  }

  // Turn-turn: the second center lies on circle(c1, 2*rho) intersected
  // with circle(target, rho); both roots are examined, the second arc
  // must exceed pi.
  if (dist > 0.0) {
    double al = (dist * dist + 3.0 * rho * rho) / (2.0 * dist);
    double h2 = 4.0 * rho * rho - al * al;
    if (h2 < 0.0 && h2 > -kTrigClamp * 4.0 * rho * rho) h2 = 0.0;
    if (h2 >= 0.0) {
      double h = std::sqrt(h2);
      Vec2 u = g / dist;
      for (double sgn : {1.0, -1.0}) {
        Vec2 c2 = c1 + al * u + (sgn * h) * perp(u);
        Vec2 m = 0.5 * (c1 + c2);
        double num1 = direction(m - c1);
        double enter2 = direction(m - c2);
        double nue = direction(target - c2);
        double psi1, psi2, arrive;
        SegKind second;
        if (left) {
          psi1 = arc_sweep(num1 - (a.theta - kHalfPi));
          psi2 = arc_sweep(enter2 - nue);
          arrive = normalize_angle(nue - kHalfPi);
          second = SegKind::kRight;
        } else {
          psi1 = arc_sweep((a.theta + kHalfPi) - num1);
          psi2 = arc_sweep(nue - enter2);
          arrive = normalize_angle(nue + kHalfPi);
          second = SegKind::kLeft;
        }
        if (psi2 > kPi + second_arc_guard) {
          out.push_back(make_path(CaseLabel::kCase1,
                                  {Segment{first_turn, psi1},
                                   Segment{second, psi2}},
                                  a.theta, arrive, rho));
        }
        if (h == 0.0) break;
      }
    }
  }
  return out;
}

std::vector<SolvedPath> candidates_free_pinned_direct(
    const CanonicalInstance& ci, const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  struct Spec {
    double pin;
    SegKind last;  // final turn direction
    CaseLabel label;
  };
  const Spec specs[] = {
      {ci.theta2.hi, SegKind::kRight, CaseLabel::kCase8},
      {ci.theta2.lo, SegKind::kLeft, CaseLabel::kCase9},
  };
  const Vec2 p1{0.0, 0.0};
  for (const Spec& spec : specs) {
    Pose end = make_pose(ci.d, 0.0, spec.pin);
    bool last_right = spec.last == SegKind::kRight;
    Vec2 c2 = last_right ? right_center(end, 1.0) : left_center(end, 1.0);
    Vec2 g = c2 - p1;
    double dist = g.norm();
    if (dist <= 0.0) continue;
    double mu = direction(g);
    double nu_end = last_right ? end.theta + kHalfPi : end.theta - kHalfPi;

    // Straight, then final turn: tangent line from p1 onto the arrival
    // circle, entering with the right chirality.
    double ratio = 1.0 / dist;
    if (ratio <= 1.0 + kTrigClamp) {
      double off = std::acos(std::min(-std::min(ratio, 1.0), 1.0));
      double s = std::sqrt(std::max(0.0, dist * dist - 1.0));
      double nu, q, depart;
      if (last_right) {
        nu = mu + off;
        q = arc_sweep(nu - nu_end);
        depart = normalize_angle(nu - kHalfPi);
      } else {
        nu = mu - off;
        q = arc_sweep(nu_end - nu);
        depart = normalize_angle(nu + kHalfPi);
      }
      if (contains_circular(ci.theta1, depart, opts.membership_tol)) {
        SolvedPath p = make_path(spec.label,
                                 {Segment{SegKind::kStraight, s},
                                  Segment{spec.last, q}},
                                 depart, normalize_angle(spec.pin), 1.0);
        out.push_back(p);
      }
    }

    // Major first arc, then final turn: first center on circle(p1, 1)
    // intersected with circle(c2, 2).
    double al = (dist * dist - 3.0) / (2.0 * dist);
    double h2 = 1.0 - al * al;
    if (h2 < 0.0 && h2 > -kTrigClamp) h2 = 0.0;
    if (h2 >= 0.0) {
      double h = std::sqrt(h2);
      Vec2 u = g / dist;
      for (double sgn : {1.0, -1.0}) {
        Vec2 c1 = p1 + al * u + (sgn * h) * perp(u);
        Vec2 m = 0.5 * (c1 + c2);
        double nu0 = direction(p1 - c1);
        double num1 = direction(m - c1);
        double enter2 = direction(m - c2);
        double psi1, q, depart;
        SegKind first;
        if (last_right) {
          first = SegKind::kLeft;
          psi1 = arc_sweep(num1 - nu0);
          q = arc_sweep(enter2 - nu_end);
          depart = normalize_angle(nu0 + kHalfPi);
        } else {
          first = SegKind::kRight;
          psi1 = arc_sweep(nu0 - num1);
          q = arc_sweep(nu_end - enter2);
          depart = normalize_angle(nu0 - kHalfPi);
        }
        if (psi1 > kPi + opts.psi_guard &&
            contains_circular(ci.theta1, depart, opts.membership_tol)) {
          out.push_back(make_path(spec.label,
                                  {Segment{first, psi1},
                                   Segment{spec.last, q}},
                                  depart, normalize_angle(spec.pin), 1.0));
        }
        if (h == 0.0) break;
      }
    }
  }
  return out;
}

}  // namespace detail

const CandidateCase& case_info(CaseLabel label) {
  static const CandidateCase kTable[] = {
      {CaseLabel::kClassic, Pin::kFixed, Pin::kFixed},
      {CaseLabel::kCase1, Pin::kInterior, Pin::kInterior},
      {CaseLabel::kCase2, Pin::kMax, Pin::kMax},
      {CaseLabel::kCase3, Pin::kMax, Pin::kMin},
      {CaseLabel::kCase4, Pin::kMin, Pin::kMin},
      {CaseLabel::kCase5, Pin::kMin, Pin::kMax},
      {CaseLabel::kCase6, Pin::kMax, Pin::kInterior},
      {CaseLabel::kCase7, Pin::kMin, Pin::kInterior},
      {CaseLabel::kCase8, Pin::kInterior, Pin::kMax},
      {CaseLabel::kCase9, Pin::kInterior, Pin::kMin},
      {CaseLabel::kSpecial1, Pin::kFixed, Pin::kInterior},
      {CaseLabel::kSpecial2, Pin::kFixed, Pin::kMax},
      {CaseLabel::kSpecial3, Pin::kFixed, Pin::kMin},
  };
  return kTable[static_cast<size_t>(label)];
}

const std::vector<PathWord>& case_words(CaseLabel label) {
  auto words = [](std::initializer_list<const char*> names) {
    std::vector<PathWord> out;
    for (const char* n : names) out.push_back(PathWord::parse(n).value());
    return out;
  };
  static const std::vector<PathWord> kClassic =
      words({"LSL", "RSR", "LSR", "RSL", "LRL", "RLR"});
  static const std::vector<PathWord> kCase1 =
      words({"S", "L", "R", "LR", "RL"});
  static const std::vector<PathWord> kCase2 = words({"LSR"});
  static const std::vector<PathWord> kCase3 = words({"LSL", "LRL"});
  static const std::vector<PathWord> kCase4 = words({"RSL"});
  static const std::vector<PathWord> kCase5 = words({"RSR", "RLR"});
  static const std::vector<PathWord> kCase6 = words({"LS", "LR"});
  static const std::vector<PathWord> kCase7 = words({"RS", "RL"});
  static const std::vector<PathWord> kCase8 = words({"SR", "LR"});
  static const std::vector<PathWord> kCase9 = words({"SL", "RL"});
  static const std::vector<PathWord> kSpecial1 =
      words({"LS", "RS", "LR", "RL", "S"});
  static const std::vector<PathWord> kSpecial2 = words({"LSR", "RSR", "RLR"});
  static const std::vector<PathWord> kSpecial3 = words({"RSL", "LSL", "LRL"});
  switch (label) {
    case CaseLabel::kClassic:
      return kClassic;
    case CaseLabel::kCase1:
      return kCase1;
    case CaseLabel::kCase2:
      return kCase2;
    case CaseLabel::kCase3:
      return kCase3;
    case CaseLabel::kCase4:
      return kCase4;
    case CaseLabel::kCase5:
      return kCase5;
    case CaseLabel::kCase6:
      return kCase6;
    case CaseLabel::kCase7:
      return kCase7;
    case CaseLabel::kCase8:
      return kCase8;
    case CaseLabel::kCase9:
      return kCase9;
    case CaseLabel::kSpecial1:
      return kSpecial1;
    case CaseLabel::kSpecial2:
      return kSpecial2;
    case CaseLabel::kSpecial3:
      return kSpecial3;
  }
  return kClassic;
}

std::vector<SolvedPath> candidates_free_free(const CanonicalInstance& ci,
                                             const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  gen_free_free(ci, opts, out);
  return out;
}

std::vector<SolvedPath> candidates_pinned_pinned(const CanonicalInstance& ci,
                                                 const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  gen_pinned_pinned(ci, opts, out);
  return out;
}

std::vector<SolvedPath> candidates_pinned_free(const CanonicalInstance& ci,
                                               const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  gen_pinned_free(ci, opts, out);
  return out;
}

std::vector<SolvedPath> candidates_free_pinned(const CanonicalInstance& ci,
                                               const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  gen_free_pinned(ci, opts, out);
  return out;
}

std::vector<SolvedPath> enumerate_candidates(const CanonicalInstance& ci,
                                             const SolveOptions& opts) {
  std::vector<SolvedPath> out;
  out.reserve(24);
  enumerate_into(ci, opts, out);
  return out;
}

SolvedPath solve_interval(const IntervalInstance& inst,
                          const SolveOptions& opts) {
  Canonicalized canon = canonicalize(inst);

  std::vector<SolvedPath> finalists;
  std::vector<SolvedPath> cands;
  cands.reserve(24);
  for (const CanonicalInstance& slice : canon.slices()) {
    cands.clear();
    enumerate_into(slice, opts, cands);
    if (const SolvedPath* best = select_best(cands)) {
      finalists.push_back(*best);
    }
  }
  // The LSL / RSR corners always solve, so at least one finalist exists.
  const SolvedPath* best = select_best(finalists);
  return to_original(*best, canon.transform);
}

SolvedPath solve_fixed_departure(const Pose& start, Vec2 p2,
                                 const AngleInterval& theta2, double rho,
                                 const SolveOptions& opts) {
  Pose s = make_pose(start.x, start.y, start.theta);
  IntervalInstance pseudo{s.pos(), AngleInterval{s.theta, s.theta}, p2,
                          theta2, rho};
  Canonicalized canon = canonicalize(pseudo);

  std::vector<SolvedPath> finalists;
  std::vector<SolvedPath> cands;
  for (const CanonicalInstance& slice : canon.slices()) {
    cands.clear();
    const double theta_d = slice.theta1.lo;

    if (slice.d == 0.0 &&
        contains_circular(slice.theta2, theta_d, opts.membership_tol)) {
      cands.push_back(make_path(CaseLabel::kSpecial1,
                                {Segment{SegKind::kStraight, 0.0}}, theta_d,
                                theta_d, 1.0));
    }

    // Free arrival: turn-straight / turn-turn from the given heading,
    // both turn directions.
    Pose origin = make_pose(0.0, 0.0, theta_d);
    for (SegKind turn : {SegKind::kLeft, SegKind::kRight}) {
      for (SolvedPath cand : detail::cs_cc_to_point(
               origin, Vec2{slice.d, 0.0}, 1.0, turn, opts.psi_guard)) {
        if (contains_circular(slice.theta2, cand.arrive,
                              opts.membership_tol)) {
          cand.label = CaseLabel::kSpecial1;
          cands.push_back(cand);
        }
      }
    }

    // Pinned arrival at either interval end.
    struct Spec {
      double pin;
      CaseLabel label;
      const char* words[3];
    };
    const Spec specs[] = {
        {slice.theta2.hi, CaseLabel::kSpecial2, {"LSR", "RSR", "RLR"}},
        {slice.theta2.lo, CaseLabel::kSpecial3, {"RSL", "LSL", "LRL"}},
    };
    detail::PoseFrame a = detail::make_frame(origin, 1.0);
    for (const Spec& spec : specs) {
      Pose end = make_pose(slice.d, 0.0, spec.pin);
      detail::PoseFrame b = detail::make_frame(end, 1.0);
      for (const char* name : spec.words) {
        PathWord word = PathWord::parse(name).value();
        SolvedPath buf[2];
        int n = detail::solve_word_into(a, b, 1.0, word,
                                        /*candidate_filter=*/false, buf);
        for (int i = 0; i < n; ++i) {
          if (buf[i].num_segments == 3 &&
              buf[i].segments[1].kind != SegKind::kStraight &&
              !(buf[i].segments[1].magnitude > kPi + opts.psi_guard)) {
            continue;
          }
          buf[i].label = spec.label;
          cands.push_back(buf[i]);
        }
      }
    }

    if (const SolvedPath* best = select_best(cands)) {
      finalists.push_back(*best);
    }
  }
  const SolvedPath* best = select_best(finalists);
  return to_original(*best, canon.transform);
}

std::string ValidationReport::describe() const {
  std::string out;
  auto add = [&out](bool pass, const char* name) {
    if (!pass) {
      if (!out.empty()) out += ", ";
      out += name;
    }
  };
  add(endpoint_closure, "endpoint-closure");
  add(interval_membership, "interval-membership");
  add(arc_conditions, "arc-conditions");
  add(cc_geometry, "cc-geometry");
  add(word_shape, "word-shape");
  return out.empty() ? std::string("ok") : "failed: " + out;
}

ValidationReport validate_path(const SolvedPath& path,
                               const IntervalInstance& inst,
                               const Tolerances& tol) {
  ValidationReport r;
  const double d = (inst.p2 - inst.p1).norm();

  // Shape: segment count, legality, case-consistent word, magnitudes,
  // stored length vs recomputed length, pinned headings on bounds.
  r.word_shape = path.num_segments >= 1 && path.num_segments <= 3;
  if (r.word_shape) {
    PathWord w = path.word();
    r.word_shape = w.legal();
    const std::vector<PathWord>& allowed = case_words(path.label);
    bool listed = false;
    for (const PathWord& aw : allowed) listed = listed || aw == w;
    r.word_shape = r.word_shape && listed;
    double total = 0.0;
    for (int i = 0; i < path.num_segments; ++i) {
      const Segment& s = path.segments[static_cast<size_t>(i)];
      if (s.magnitude < 0.0) r.word_shape = false;
      if (s.kind != SegKind::kStraight && s.magnitude >= kTwoPi) {
        r.word_shape = false;
      }
      total += s.kind == SegKind::kStraight ? s.magnitude
                                            : s.magnitude * inst.rho;
    }
    if (std::fabs(total - path.length) >
        tol.length_rel * std::max(1.0, std::fabs(path.length))) {
      r.word_shape = false;
    }
    // Note: pinned cases are not required to sit on the *original*
    // interval bounds here, because canonicalization may have split a
    // wrapped interval and pinned the candidate on the artificial cut.
  }

  // Interval membership of the realized headings.
  r.interval_membership =
      contains_circular(inst.theta1, path.depart, tol.membership) &&
      contains_circular(inst.theta2, path.arrive, tol.membership);

  // Endpoint closure by forward integration.
  Pose start = make_pose(inst.p1, path.depart);
  Pose end = path_end(start, path, inst.rho);
  r.closure_error = (end.pos() - inst.p2).norm();
  r.endpoint_closure =
      r.closure_error <= tol.closure_pos * std::max(1.0, d) &&
      angle_distance(end.theta, path.arrive) <= tol.closure_angle;

  // psi > pi wherever the case demands it.
  r.arc_conditions = true;
  auto arc_over_pi = [&](int idx) {
    const Segment& s = path.segments[static_cast<size_t>(idx)];
    return s.magnitude > kPi + tol.psi_guard;
  };
  bool two_arcs = path.num_segments == 2 &&
                  path.segments[0].kind != SegKind::kStraight &&
                  path.segments[1].kind != SegKind::kStraight;
  bool ccc = path.num_segments == 3 &&
             path.segments[1].kind != SegKind::kStraight;
  switch (path.label) {
    case CaseLabel::kCase1:
      if (path.num_segments == 1 &&
          path.segments[0].kind != SegKind::kStraight) {
        r.arc_conditions = arc_over_pi(0);
      } else if (two_arcs) {
        r.arc_conditions = arc_over_pi(0) && arc_over_pi(1);
      }
      break;
    case CaseLabel::kCase3:
    case CaseLabel::kCase5:
    case CaseLabel::kSpecial2:
    case CaseLabel::kSpecial3:
    case CaseLabel::kClassic:
      if (ccc) r.arc_conditions = arc_over_pi(1);
      break;
    case CaseLabel::kCase6:
    case CaseLabel::kCase7:
    case CaseLabel::kSpecial1:
      if (two_arcs) r.arc_conditions = arc_over_pi(1);
      break;
    case CaseLabel::kCase8:
    case CaseLabel::kCase9:
      if (two_arcs) r.arc_conditions = arc_over_pi(0);
      break;
    default:
      break;
  }

  // Extra geometry for the interior-interior turn-turn family: equal
  // arcs, identical boundary headings, inflexion on the chord line.
  r.cc_geometry = true;
  if (path.label == CaseLabel::kCase1 && two_arcs) {
    const double psi1 = path.segments[0].magnitude;
    const double psi2 = path.segments[1].magnitude;
    bool equal_arcs = std::fabs(psi1 - psi2) <= tol.closure_angle;
    bool same_heading =
        angle_distance(path.depart, path.arrive) <= tol.closure_angle;
    Pose inflexion = advance(start, path.segments[0].kind, psi1, inst.rho);
    bool collinear = true;
    if (d > 0.0) {
      Vec2 u = (inst.p2 - inst.p1) / d;
      double off = std::fabs(u.cross(inflexion.pos() - inst.p1));
      collinear = off <= tol.closure_pos * std::max(1.0, d);
    }
    r.cc_geometry = equal_arcs && same_heading && collinear;
  }

  return r;
}

}  // namespace dip
