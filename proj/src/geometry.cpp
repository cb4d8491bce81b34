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

#include "geometry.hpp"

#include <stdexcept>

namespace dip {

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("normalize_angle: angle must be finite");
  }
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // r + 2*pi can round up to exactly 2*pi for tiny negative r.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return d > kPi ? kTwoPi - d : d;
}

Pose make_pose(double x, double y, double theta) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("make_pose: coordinates must be finite");
  }
  return Pose{x, y, normalize_angle(theta)};
}

AngleInterval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("interval bounds must be finite");
  }
  if (lo < 0.0 || hi > kTwoPi || lo > hi) {
    throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= 2*pi");
  }
  return AngleInterval{lo, hi};
}

bool interval_contains(double theta, const AngleInterval& iv, double tol) {
  return iv.lo - tol <= theta && theta <= iv.hi + tol;
}

bool contains_circular(const AngleInterval& iv, double theta, double tol) {
  return interval_contains(theta, iv, tol) ||
         interval_contains(theta + kTwoPi, iv, tol) ||
         interval_contains(theta - kTwoPi, iv, tol);
}

void validate_instance(const IntervalInstance& inst) {
  if (!std::isfinite(inst.p1.x) || !std::isfinite(inst.p1.y) ||
      !std::isfinite(inst.p2.x) || !std::isfinite(inst.p2.y)) {
    throw std::invalid_argument("instance positions must be finite");
  }
  make_interval(inst.theta1.lo, inst.theta1.hi);
  make_interval(inst.theta2.lo, inst.theta2.hi);
  if (!(inst.rho > 0.0) || !std::isfinite(inst.rho)) {
    throw std::invalid_argument("rho must be positive");
  }
}

Vec2 FrameTransform::point_to_original(Vec2 pc) const {
  Vec2 r = {pc.x * std::cos(rotation) - pc.y * std::sin(rotation),
            pc.x * std::sin(rotation) + pc.y * std::cos(rotation)};
  return translation + scale * r;
}

Vec2 FrameTransform::point_to_canonical(Vec2 p) const {
  Vec2 t = (p - translation) / scale;
  return {t.x * std::cos(rotation) + t.y * std::sin(rotation),
          -t.x * std::sin(rotation) + t.y * std::cos(rotation)};
}

double FrameTransform::heading_to_original(double h) const {
  return normalize_angle(h + rotation);
}

double FrameTransform::heading_to_canonical(double h) const {
  return normalize_angle(h - rotation);
}

Pose FrameTransform::pose_to_original(const Pose& pc) const {
  Vec2 p = point_to_original(pc.pos());
  return Pose{p.x, p.y, heading_to_original(pc.theta)};
}

Pose FrameTransform::pose_to_canonical(const Pose& p) const {
  Vec2 pc = point_to_canonical(p.pos());
  return Pose{pc.x, pc.y, heading_to_canonical(p.theta)};
}

std::vector<AngleInterval> shift_interval(const AngleInterval& iv, double delta) {
  double w = iv.width();
  if (w >= kTwoPi) return {AngleInterval{0.0, kTwoPi}};
  double lo = normalize_angle(iv.lo + delta);
  if (lo + w <= kTwoPi) return {AngleInterval{lo, lo + w}};
  return {AngleInterval{lo, kTwoPi}, AngleInterval{0.0, lo + w - kTwoPi}};
}

Canonicalized canonicalize(const IntervalInstance& inst) {
  validate_instance(inst);
  Vec2 delta = inst.p2 - inst.p1;
  double dist = delta.norm();
  double rotation = dist > 0.0 ? direction(delta) : 0.0;

  Canonicalized out;
  out.d = dist / inst.rho;
  out.transform = FrameTransform{inst.p1, rotation, inst.rho};
  out.theta1_parts = shift_interval(inst.theta1, -rotation);
  out.theta2_parts = shift_interval(inst.theta2, -rotation);
  return out;
}

std::vector<CanonicalInstance> Canonicalized::slices() const {
  std::vector<CanonicalInstance> out;
  out.reserve(theta1_parts.size() * theta2_parts.size());
  for (const AngleInterval& a : theta1_parts) {
    for (const AngleInterval& b : theta2_parts) {
      out.push_back(CanonicalInstance{d, a, b});
    }
  }
  return out;
}

}  // namespace dip
