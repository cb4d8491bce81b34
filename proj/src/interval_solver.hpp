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

#include <string>
#include <vector>

#include "geometry.hpp"
#include "words.hpp"

namespace dip {

struct SolveOptions {
  double membership_tol = 1e-9;  // radians, closed-interval slack
  double psi_guard = 1e-9;       // major arcs must exceed pi by this
};

/// Which interval boundary (if any) a candidate family pins each
/// heading to.
enum class Pin { kInterior, kMin, kMax, kFixed };

struct CandidateCase {
  CaseLabel label;
  Pin depart;
  Pin arrive;
};

const CandidateCase& case_info(CaseLabel label);

/// Legal constructed words for a case label (full templates; degenerate
/// forms keep the template with zero magnitudes).
const std::vector<PathWord>& case_words(CaseLabel label);

// Candidate generators. All operate on a canonical sub-problem
// (p1 = origin, p2 = (d, 0), rho = 1, non-wrapping intervals) and
// filter implied headings against the intervals (closed test).

/// Both headings interior: straight, single major arcs, and equal-angle
/// arc pairs with a collinear inflexion, all with psi > pi.
std::vector<SolvedPath> candidates_free_free(const CanonicalInstance& ci,
                                             const SolveOptions& opts = {});

/// Both headings pinned at interval corners: LSR, LSL + LR(psi)L,
/// RSL, RSR + RL(psi)R at the four corner heading pairs.
std::vector<SolvedPath> candidates_pinned_pinned(const CanonicalInstance& ci,
                                                 const SolveOptions& opts = {});

/// Departure pinned, arrival free: turn-straight and turn-turn
/// constructions to the target point (second arc psi > pi).
std::vector<SolvedPath> candidates_pinned_free(const CanonicalInstance& ci,
                                               const SolveOptions& opts = {});

/// Departure free, arrival pinned; computed by time reversal of the
/// pinned-departure constructions (first arc psi > pi).
std::vector<SolvedPath> candidates_free_pinned(const CanonicalInstance& ci,
                                               const SolveOptions& opts = {});

/// Union of all four generators plus the zero-length candidate for
/// coincident targets with overlapping intervals.
std::vector<SolvedPath> enumerate_candidates(const CanonicalInstance& ci,
                                             const SolveOptions& opts = {});

/// Exact solver for the interval problem. Canonicalizes (splitting
/// wrapped intervals), enumerates candidates per sub-problem and
/// returns the global minimum mapped back to the original frame.
SolvedPath solve_interval(const IntervalInstance& inst,
                          const SolveOptions& opts = {});

/// Fixed departure angle, interval arrival: minimum over the
/// free-arrival constructions from the given heading plus the two
/// pinned-arrival word sets.
SolvedPath solve_fixed_departure(const Pose& start, Vec2 p2,
                                 const AngleInterval& theta2, double rho,
                                 const SolveOptions& opts = {});

struct Tolerances {
  double closure_pos = 1e-9;    // scaled by max(1, |p2 - p1|)
  double closure_angle = 1e-9;  // radians
  double membership = 1e-9;     // radians
  double psi_guard = 1e-9;      // arcs must exceed pi by this where required
  double length_rel = 1e-12;    // stored vs recomputed length
};

struct ValidationReport {
  bool endpoint_closure = false;
  bool interval_membership = false;
  bool arc_conditions = false;  // psi > pi where the case demands
  bool cc_geometry = false;     // equal arcs / same headings / collinear
  bool word_shape = false;      // <= 3 segments, legal word, fits the case
  double closure_error = 0.0;   // position miss at the endpoint

  bool ok() const {
    return endpoint_closure && interval_membership && arc_conditions &&
           cc_geometry && word_shape;
  }
  std::string describe() const;
};

/// Structural validation of a path against the instance it claims to
/// solve. Failures are reported, never thrown.
ValidationReport validate_path(const SolvedPath& path,
                               const IntervalInstance& inst,
                               const Tolerances& tol = {});

namespace detail {

/// Turn-straight and turn-turn candidates from a fixed start pose to a
/// target point, one turn direction. `second_arc_guard` filters the
/// turn-turn second arc at psi > pi + guard.
std::vector<SolvedPath> cs_cc_to_point(const Pose& start, Vec2 target,
                                       double rho, SegKind first_turn,
                                       double second_arc_guard);

/// Direct (non-reversed) construction of the free-departure,
/// pinned-arrival candidates; diagnostic cross-check for
/// candidates_free_pinned.
std::vector<SolvedPath> candidates_free_pinned_direct(
    const CanonicalInstance& ci, const SolveOptions& opts = {});

}  // namespace detail

}  // namespace dip
