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

#include <cmath>
#include <numbers>
#include <vector>

namespace dip {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {k * x, k * y}; }
  Vec2 operator/(double k) const { return {x / k, y / k}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double k, Vec2 v) { return v * k; }

/// Unit vector at the given angle.
inline Vec2 polar(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Direction angle of a vector in (-pi, pi]; 0 for the zero vector.
inline double direction(Vec2 v) { return std::atan2(v.y, v.x); }

inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Reduce an angle to [0, 2*pi). Throws std::invalid_argument for
/// non-finite input.
double normalize_angle(double theta);

/// Absolute circular distance between two angles, in [0, pi].
double angle_distance(double a, double b);

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // heading in [0, 2*pi)

  Vec2 pos() const { return {x, y}; }
};

/// Pose with the heading normalized to [0, 2*pi).
Pose make_pose(double x, double y, double theta);
inline Pose make_pose(Vec2 p, double theta) { return make_pose(p.x, p.y, theta); }

/// Closed heading interval [lo, hi] with 0 <= lo <= hi <= 2*pi.
/// Zero width (lo == hi) is allowed and pins the heading.
struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool zero_width() const { return lo == hi; }
};

/// Validating constructor; throws std::invalid_argument when the bounds
/// are non-finite, out of [0, 2*pi], or inverted.
AngleInterval make_interval(double lo, double hi);

/// Closed membership test: lo - tol <= theta <= hi + tol. No wraparound.
bool interval_contains(double theta, const AngleInterval& iv, double tol);

/// Membership that treats theta and theta +/- 2*pi as the same heading,
/// so 0 matches an interval ending at 2*pi. Used by candidate filters.
bool contains_circular(const AngleInterval& iv, double theta, double tol);

struct IntervalInstance {
  Vec2 p1;
  AngleInterval theta1;
  Vec2 p2;
  AngleInterval theta2;
  double rho = 1.0;
};

/// Throws std::invalid_argument when any field violates the instance
/// invariants (finite coordinates, valid intervals, rho > 0).
void validate_instance(const IntervalInstance& inst);

/// Similarity transform mapping the canonical frame (p1 at the origin,
/// p2 on the positive x-axis, unit turn radius) back to the original:
/// p = translation + scale * R(rotation) * p_canonical.
struct FrameTransform {
  Vec2 translation;
  double rotation = 0.0;
  double scale = 1.0;

  Vec2 point_to_original(Vec2 pc) const;
  Vec2 point_to_canonical(Vec2 p) const;
  double heading_to_original(double h) const;
  double heading_to_canonical(double h) const;
  double length_to_original(double len) const { return len * scale; }
  double length_to_canonical(double len) const { return len / scale; }
  Pose pose_to_original(const Pose& pc) const;
  Pose pose_to_canonical(const Pose& p) const;
};

/// One canonical sub-problem: p1 = (0,0), p2 = (d, 0), rho = 1, and a
/// single non-wrapping interval per endpoint.
struct CanonicalInstance {
  double d = 0.0;
  AngleInterval theta1;
  AngleInterval theta2;
};

/// Result of canonicalize(). Shifting an interval by the frame rotation
/// can make it cross 0; such an interval is split into two non-wrapping
/// parts, so a problem expands into up to 2x2 canonical sub-problems.
struct Canonicalized {
  double d = 0.0;
  FrameTransform transform;  // canonical -> original
  std::vector<AngleInterval> theta1_parts;
  std::vector<AngleInterval> theta2_parts;

  std::vector<CanonicalInstance> slices() const;
};

Canonicalized canonicalize(const IntervalInstance& inst);

/// Shift a valid interval by delta and renormalize into [0, 2*pi],
/// splitting into two parts when the shifted interval crosses 0.
std::vector<AngleInterval> shift_interval(const AngleInterval& iv, double delta);

}  // namespace dip
