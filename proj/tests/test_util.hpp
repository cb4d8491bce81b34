// Shared helpers for the test suites: deterministic RNG, random problem
// generators, and a test-side path integrator kept independent of the
// library's own integration code.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "geometry.hpp"
#include "interval_solver.hpp"
#include "words.hpp"

namespace dip::testing {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Pose random_pose(std::mt19937_64& rng, double span = 10.0) {
  return make_pose(uniform(rng, -span, span), uniform(rng, -span, span),
                   uniform(rng, 0.0, kTwoPi));
}

inline AngleInterval random_interval(std::mt19937_64& rng,
                                     double max_width = kTwoPi) {
  double w = uniform(rng, 0.0, max_width);
  double lo = uniform(rng, 0.0, kTwoPi - std::min(w, kTwoPi));
  return AngleInterval{lo, lo + w};
}

inline IntervalInstance random_instance(std::mt19937_64& rng,
                                        double span = 10.0,
                                        double rho_lo = 0.5,
                                        double rho_hi = 3.0) {
  IntervalInstance inst;
  inst.p1 = {uniform(rng, -span, span), uniform(rng, -span, span)};
  inst.p2 = {uniform(rng, -span, span), uniform(rng, -span, span)};
  inst.theta1 = random_interval(rng);
  inst.theta2 = random_interval(rng);
  inst.rho = uniform(rng, rho_lo, rho_hi);
  return inst;
}

// Test-side exact integrator (deliberately re-derived, not the library
// advance()).
inline Pose step_segment(const Pose& p, char kind, double mag, double rho) {
  if (kind == 'S') {
    return Pose{p.x + mag * std::cos(p.theta), p.y + mag * std::sin(p.theta),
                p.theta};
  }
  double dir = kind == 'L' ? 1.0 : -1.0;
  double th1 = p.theta + dir * mag;
  // Center of the turn circle, then rotate the position around it.
  double cx = p.x - dir * rho * std::sin(p.theta);
  double cy = p.y + dir * rho * std::cos(p.theta);
  return Pose{cx + dir * rho * std::sin(th1), cy - dir * rho * std::cos(th1),
              normalize_angle(th1)};
}

inline Pose integrate(const Pose& start, const SolvedPath& path, double rho) {
  Pose p{start.x, start.y, path.depart};
  for (int i = 0; i < path.num_segments; ++i) {
    const Segment& s = path.segments[static_cast<size_t>(i)];
    p = step_segment(p, kind_char(s.kind), s.magnitude, rho);
  }
  return p;
}

inline double closure_error(const Pose& start, const Pose& goal,
                            const SolvedPath& path, double rho) {
  Pose end = integrate(start, path, rho);
  return std::hypot(end.x - goal.x, end.y - goal.y) +
         angle_distance(end.theta, goal.theta);
}

// Reverses an instance (swap targets, headings shifted by pi). The
// shifted intervals can wrap; the result is the list of non-wrapping
// instances whose union represents the reversed problem.
inline std::vector<IntervalInstance> reverse_instance(
    const IntervalInstance& inst) {
  std::vector<AngleInterval> t1 = shift_interval(inst.theta2, kPi);
  std::vector<AngleInterval> t2 = shift_interval(inst.theta1, kPi);
  std::vector<IntervalInstance> out;
  for (const AngleInterval& a : t1) {
    for (const AngleInterval& b : t2) {
      out.push_back(IntervalInstance{inst.p2, a, inst.p1, b, inst.rho});
    }
  }
  return out;
}

inline double solve_min_over(const std::vector<IntervalInstance>& insts) {
  double best = std::numeric_limits<double>::infinity();
  for (const IntervalInstance& inst : insts) {
    best = std::min(best, solve_interval(inst).length);
  }
  return best;
}

}  // namespace dip::testing
