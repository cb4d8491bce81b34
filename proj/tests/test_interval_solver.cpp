#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "interval_solver.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace dip;

namespace {

const AngleInterval kFull{0.0, kTwoPi};

double min_length(const std::vector<SolvedPath>& cands) {
  double best = std::numeric_limits<double>::infinity();
  for (const SolvedPath& c : cands) best = std::min(best, c.length);
  return best;
}

bool contains_word(const std::vector<SolvedPath>& cands, const char* word,
                   double length, double tol) {
  for (const SolvedPath& c : cands) {
    if (c.word_string() == word && std::fabs(c.length - length) <= tol) {
      return true;
    }
  }
  return false;
}

void check_valid(const SolvedPath& path, const IntervalInstance& inst) {
  ValidationReport r = validate_path(path, inst);
  CAPTURE(path.word_string());
  CAPTURE(case_label_name(path.label));
  CAPTURE(r.describe());
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("interior-interior candidates: straight segment") {
  CanonicalInstance ci{10.0, {0.0, kPi / 2.0}, {0.0, kPi / 2.0}};
  auto cands = candidates_free_free(ci);
  REQUIRE(contains_word(cands, "S", 10.0, 1e-12));
  // Chord heading 0 must lie in both intervals for S to qualify.
  CanonicalInstance miss{10.0, {0.1, kPi / 2.0}, {0.0, kPi / 2.0}};
  CHECK_FALSE(contains_word(candidates_free_free(miss), "S", 10.0, 1e-12));
}

TEST_CASE("interior-interior candidates: equal-arc turn pair") {
  CanonicalInstance ci{2.0, kFull, kFull};
  auto cands = candidates_free_free(ci);
  double psi = kTwoPi - 2.0 * std::asin(2.0 / 4.0);
  double len = 2.0 * psi;
  CHECK(psi == doctest::Approx(5.0 * kPi / 3.0));
  REQUIRE(contains_word(cands, "LR", len, 1e-9));
  REQUIRE(contains_word(cands, "RL", len, 1e-9));
  for (const SolvedPath& c : cands) {
    if (c.num_segments != 2) continue;
    CHECK(c.segments[0].magnitude ==
          doctest::Approx(c.segments[1].magnitude).epsilon(1e-12));
    CHECK(angle_distance(c.depart, c.arrive) < 1e-12);
    // Forward integration must close on (d, 0).
    Pose end = testing::integrate(make_pose(0, 0, c.depart), c, 1.0);
    CHECK(std::hypot(end.x - 2.0, end.y) < 1e-9);
  }
}

TEST_CASE("interior-interior candidates: single major arcs") {
  double d = std::sqrt(2.0);
  CanonicalInstance ci{d, kFull, kFull};
  auto cands = candidates_free_free(ci);
  double len = 3.0 * kPi / 2.0;
  REQUIRE(contains_word(cands, "L", len, 1e-9));
  REQUIRE(contains_word(cands, "R", len, 1e-9));
  for (const SolvedPath& c : cands) {
    if (c.num_segments != 1 || c.segments[0].kind == SegKind::kStraight)
      continue;
    CHECK(c.segments[0].magnitude > kPi);
    Pose end = testing::integrate(make_pose(0, 0, c.depart), c, 1.0);
    CHECK(std::hypot(end.x - d, end.y) < 1e-9);
  }
}

TEST_CASE("pinned-pinned candidates reduce to classic on zero width") {
  CanonicalInstance ci{4.0, {0.0, 0.0}, {0.0, 0.0}};
  auto cands = candidates_pinned_pinned(ci);
  SolvedPath classic =
      solve_classic(make_pose(0, 0, 0), make_pose(4, 0, 0), 1.0);
  CHECK(min_length(cands) == doctest::Approx(classic.length).epsilon(1e-12));
  CHECK(classic.length == doctest::Approx(4.0));
}

TEST_CASE("pinned-pinned candidates sit exactly on the corners") {
  auto rng = testing::make_rng(61);
  for (int i = 0; i < 100; ++i) {
    CanonicalInstance ci{testing::uniform(rng, 0.0, 8.0),
                         testing::random_interval(rng),
                         testing::random_interval(rng)};
    for (const SolvedPath& c : candidates_pinned_pinned(ci)) {
      bool dep_on_corner = c.depart == normalize_angle(ci.theta1.lo) ||
                           c.depart == normalize_angle(ci.theta1.hi);
      bool arr_on_corner = c.arrive == normalize_angle(ci.theta2.lo) ||
                           c.arrive == normalize_angle(ci.theta2.hi);
      CHECK(dep_on_corner);
      CHECK(arr_on_corner);
    }
  }
}

TEST_CASE("pinned-pinned candidates respect the corner oracle") {
  CanonicalInstance ci{0.5, {0.0, kPi / 2.0}, {0.0, kPi / 2.0}};
  auto cands = candidates_pinned_pinned(ci);
  // Minimum over the four corner heading pairs of the full classic
  // solver. The per-corner candidate words are a restriction, so the
  // candidate minimum cannot beat it.
  double corner_best = std::numeric_limits<double>::infinity();
  for (double th1 : {0.0, kPi / 2.0}) {
    for (double th2 : {0.0, kPi / 2.0}) {
      corner_best = std::min(
          corner_best,
          solve_classic(make_pose(0, 0, th1), make_pose(0.5, 0, th2), 1.0)
              .length);
    }
  }
  CHECK(min_length(cands) >= corner_best - 1e-9);
}

TEST_CASE("pinned-departure candidates degenerate to the straight") {
  CanonicalInstance ci{10.0, {0.0, 0.0}, kFull};
  auto cands = candidates_pinned_free(ci);
  REQUIRE_FALSE(cands.empty());
  CHECK(min_length(cands) == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("pinned-departure minimum matches a fine arrival grid") {
  // Start heading pi/2 toward an off-axis target, free arrival.
  IntervalInstance inst{{0, 0}, {kPi / 2.0, kPi / 2.0}, {3, 1}, kFull, 1.0};
  Canonicalized canon = canonicalize(inst);
  REQUIRE(canon.slices().size() == 1);
  auto cands = candidates_pinned_free(canon.slices()[0]);
  REQUIRE_FALSE(cands.empty());
  OracleResult oracle = oracle_grid(inst, 4096);
  CHECK(min_length(cands) <= oracle.length + 1e-9);
  CHECK(oracle.length - min_length(cands) <= 2e-3);
}

TEST_CASE("pinned-arrival mirrors the pinned-departure trivial case") {
  CanonicalInstance ci{10.0, kFull, {0.0, 0.0}};
  auto cands = candidates_free_pinned(ci);
  REQUIRE_FALSE(cands.empty());
  CHECK(min_length(cands) == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("pinned-arrival: reversal and direct construction agree") {
  auto rng = testing::make_rng(67);
  for (int i = 0; i < 200; ++i) {
    CanonicalInstance ci{testing::uniform(rng, 0.0, 8.0), kFull,
                         testing::random_interval(rng)};
    auto reversed = candidates_free_pinned(ci);
    auto direct = detail::candidates_free_pinned_direct(ci);
    REQUIRE(reversed.size() == direct.size());
    std::vector<double> lr, ld;
    for (const auto& p : reversed) lr.push_back(p.length);
    for (const auto& p : direct) ld.push_back(p.length);
    std::sort(lr.begin(), lr.end());
    std::sort(ld.begin(), ld.end());
    for (size_t k = 0; k < lr.size(); ++k) {
      CHECK(lr[k] == doctest::Approx(ld[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("pinned-arrival minimum matches a fine departure grid") {
  auto rng = testing::make_rng(71);
  for (int i = 0; i < 5; ++i) {
    double pin = testing::uniform(rng, 0.0, kTwoPi);
    IntervalInstance inst{{0, 0},
                          kFull,
                          {testing::uniform(rng, 2.5, 6.0),
                           testing::uniform(rng, -2.0, 2.0)},
                          {pin, pin},
                          1.0};
    SolvedPath best = solve_interval(inst);
    OracleResult oracle = oracle_grid(inst, 4096);
    CHECK(best.length <= oracle.length + 1e-9);
    CHECK(oracle.length - best.length <= 2e-3);
  }
}

TEST_CASE("solve_interval: straight-line fixture") {
  IntervalInstance inst{{0, 0}, {0.0, kPi / 2.0}, {10, 0}, {0.0, kPi / 2.0},
                        1.0};
  SolvedPath best = solve_interval(inst);
  CHECK(best.length == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(best.label == CaseLabel::kCase1);
  CHECK(best.display_word() == "S");
  check_valid(best, inst);
}

TEST_CASE("solve_interval equals classic on zero-width intervals") {
  auto rng = testing::make_rng(73);
  for (int i = 0; i < 300; ++i) {
    Pose a = testing::random_pose(rng);
    Pose b = testing::random_pose(rng);
    double rho = testing::uniform(rng, 0.5, 3.0);
    IntervalInstance inst{a.pos(), {a.theta, a.theta}, b.pos(),
                          {b.theta, b.theta}, rho};
    SolvedPath via_interval = solve_interval(inst);
    SolvedPath classic = solve_classic(a, b, rho);
    CHECK(std::fabs(via_interval.length - classic.length) <= 1e-9);
    check_valid(via_interval, inst);
  }
}

TEST_CASE("solve_interval matches a fine grid on a narrow backward band") {
  IntervalInstance inst{{0, 0},
                        {kPi - 0.1, kPi + 0.1},
                        {10, 0},
                        {kPi - 0.1, kPi + 0.1},
                        1.0};
  SolvedPath best = solve_interval(inst);
  OracleResult oracle = oracle_grid(inst, 2048);
  CHECK(best.length <= oracle.length + 1e-9);
  CHECK(oracle.length - best.length <= 5e-3);
  check_valid(best, inst);
}

TEST_CASE("solve_interval: coincident targets") {
  IntervalInstance overlap{{1, 1}, {0.5, 1.5}, {1, 1}, {1.0, 2.5}, 1.0};
  SolvedPath zero = solve_interval(overlap);
  CHECK(zero.length == 0.0);
  CHECK(zero.depart == doctest::Approx(1.0));  // lowest common heading
  CHECK(zero.arrive == doctest::Approx(1.0));
  check_valid(zero, overlap);

  IntervalInstance disjoint{{1, 1}, {0.0, 0.1}, {1, 1}, {3.0, 3.1}, 1.0};
  SolvedPath loop = solve_interval(disjoint);
  CHECK(loop.length > 1.0);
  check_valid(loop, disjoint);

  // 0 and 2*pi identify the same heading.
  IntervalInstance split{{0, 0}, {0.0, 0.0}, {0, 0}, {kTwoPi, kTwoPi}, 1.0};
  CHECK(solve_interval(split).length == 0.0);
}

TEST_CASE("solve_interval dominates every feasible heading pair") {
  auto rng = testing::make_rng(79);
  for (int i = 0; i < 40; ++i) {
    IntervalInstance inst = testing::random_instance(rng);
    SolvedPath best = solve_interval(inst);
    check_valid(best, inst);
    for (int k = 0; k < 25; ++k) {
      double th1 = testing::uniform(rng, inst.theta1.lo, inst.theta1.hi);
      double th2 = testing::uniform(rng, inst.theta2.lo, inst.theta2.hi);
      SolvedPath fixed = solve_classic(make_pose(inst.p1, th1),
                                       make_pose(inst.p2, th2), inst.rho);
      CHECK(best.length <= fixed.length + 1e-9);
    }
    CHECK(best.length >= (inst.p2 - inst.p1).norm() - 1e-9);
  }
}

TEST_CASE("enlarging an interval never lengthens the optimum") {
  auto rng = testing::make_rng(83);
  for (int chain = 0; chain < 30; ++chain) {
    IntervalInstance inst = testing::random_instance(rng);
    double mid1 = testing::uniform(rng, inst.theta1.lo, inst.theta1.hi);
    double mid2 = testing::uniform(rng, inst.theta2.lo, inst.theta2.hi);
    double prev = std::numeric_limits<double>::infinity();
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      IntervalInstance nested = inst;
      nested.theta1 = {mid1 + f * (inst.theta1.lo - mid1),
                       mid1 + f * (inst.theta1.hi - mid1)};
      nested.theta2 = {mid2 + f * (inst.theta2.lo - mid2),
                       mid2 + f * (inst.theta2.hi - mid2)};
      double len = solve_interval(nested).length;
      CHECK(len <= prev + 1e-9);
      prev = len;
    }
  }
}

TEST_CASE("solve_interval is invariant under rigid motion and scaling") {
  auto rng = testing::make_rng(89);
  for (int i = 0; i < 30; ++i) {
    IntervalInstance inst = testing::random_instance(rng);
    double base = solve_interval(inst).length;

    double ang = testing::uniform(rng, 0.0, kTwoPi);
    Vec2 shift{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5)};
    auto rotp = [&](Vec2 p) {
      return Vec2{p.x * std::cos(ang) - p.y * std::sin(ang) + shift.x,
                  p.x * std::sin(ang) + p.y * std::cos(ang) + shift.y};
    };
    IntervalInstance moved = inst;
    moved.p1 = rotp(inst.p1);
    moved.p2 = rotp(inst.p2);
    // Rotating the frame shifts the heading intervals; they may wrap.
    double best_moved = std::numeric_limits<double>::infinity();
    for (const AngleInterval& a : shift_interval(inst.theta1, ang)) {
      for (const AngleInterval& b : shift_interval(inst.theta2, ang)) {
        IntervalInstance m = moved;
        m.theta1 = a;
        m.theta2 = b;
        best_moved = std::min(best_moved, solve_interval(m).length);
      }
    }
    CHECK(best_moved == doctest::Approx(base).epsilon(1e-9));

    for (double k : {0.1, 7.0}) {
      IntervalInstance scaled = inst;
      scaled.p1 = k * inst.p1;
      scaled.p2 = k * inst.p2;
      scaled.rho = k * inst.rho;
      CHECK(solve_interval(scaled).length ==
            doctest::Approx(k * base).epsilon(1e-9));
    }
  }
}

TEST_CASE("reversing an instance preserves the optimal length") {
  auto rng = testing::make_rng(97);
  for (int i = 0; i < 30; ++i) {
    IntervalInstance inst = testing::random_instance(rng);
    double base = solve_interval(inst).length;
    double rev = testing::solve_min_over(testing::reverse_instance(inst));
    CHECK(rev == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("solve_interval stays under nested oracle grids") {
  auto rng = testing::make_rng(101);
  for (int i = 0; i < 25; ++i) {
    IntervalInstance inst = testing::random_instance(rng);
    double best = solve_interval(inst).length;
    double prev = std::numeric_limits<double>::infinity();
    for (uint32_t n : {8u, 16u, 32u}) {
      OracleResult o = oracle_grid(inst, n);
      CHECK(best <= o.length + 1e-9);
      CHECK(o.length <= prev + 1e-9);
      prev = o.length;
    }
  }
}

TEST_CASE("lengths scale by rho between the canonical and original frames") {
  auto rng = testing::make_rng(211);
  for (int i = 0; i < 50; ++i) {
    IntervalInstance inst = testing::random_instance(rng);
    double original = solve_interval(inst).length;
    // Solve each canonical slice as a fresh unit-radius instance.
    Canonicalized canon = canonicalize(inst);
    double canonical = std::numeric_limits<double>::infinity();
    for (const CanonicalInstance& slice : canon.slices()) {
      IntervalInstance unit{{0.0, 0.0}, slice.theta1, {slice.d, 0.0},
                            slice.theta2, 1.0};
      canonical = std::min(canonical, solve_interval(unit).length);
    }
    CHECK(original == doctest::Approx(canonical * inst.rho).epsilon(1e-9));
  }
}

TEST_CASE("wrapped intervals produced by canonicalization are solved") {
  // The rotated frame splits these intervals around 0; the split pieces
  // must still find the plain straight-line optimum.
  IntervalInstance inst{{3, 4}, {kPi / 2.0, kPi / 2.0}, {3, 9},
                        {kPi / 2.0, kPi / 2.0}, 2.0};
  SolvedPath best = solve_interval(inst);
  CHECK(best.length == doctest::Approx(5.0).epsilon(1e-9));
  check_valid(best, inst);
}

TEST_CASE("solve_fixed_departure trivial fixtures") {
  SolvedPath straight =
      solve_fixed_departure(make_pose(0, 0, 0), {10, 0}, kFull, 1.0);
  CHECK(straight.length == doctest::Approx(10.0).epsilon(1e-9));

  SolvedPath zero =
      solve_fixed_departure(make_pose(2, 3, 1.0), {2, 3}, {0.5, 1.5}, 1.0);
  CHECK(zero.length == 0.0);
  CHECK(zero.depart == doctest::Approx(1.0));
}

TEST_CASE("solve_fixed_departure equals the interval solver") {
  auto rng = testing::make_rng(103);
  for (int i = 0; i < 100; ++i) {
    Pose start = testing::random_pose(rng);
    IntervalInstance inst = testing::random_instance(rng);
    inst.p1 = start.pos();
    inst.theta1 = {start.theta, start.theta};
    SolvedPath fixed =
        solve_fixed_departure(start, inst.p2, inst.theta2, inst.rho);
    SolvedPath full = solve_interval(inst);
    CHECK(std::fabs(fixed.length - full.length) <= 1e-9);
    check_valid(fixed, inst);
  }
}

TEST_CASE("validate_path flags corrupted paths") {
  IntervalInstance inst{{0, 0}, {0.0, kPi / 2.0}, {10, 0}, {0.0, kPi / 2.0},
                        1.0};
  SolvedPath good = solve_interval(inst);
  REQUIRE(validate_path(good, inst).ok());

  SolvedPath shifted = good;
  shifted.segments[0].magnitude += 1e-3;  // breaks closure
  shifted.length += 1e-3;
  ValidationReport r1 = validate_path(shifted, inst);
  CHECK_FALSE(r1.endpoint_closure);

  // An equal-arc pair with deliberately unequal arcs.
  CanonicalInstance cc{2.0, kFull, kFull};
  for (SolvedPath cand : candidates_free_free(cc)) {
    if (cand.num_segments != 2) continue;
    IntervalInstance canon_inst{{0, 0}, kFull, {2, 0}, kFull, 1.0};
    REQUIRE(validate_path(cand, canon_inst).ok());
    SolvedPath bad = cand;
    bad.segments[1].magnitude += 2e-3;
    bad.length += 2e-3;
    ValidationReport r2 = validate_path(bad, canon_inst);
    CHECK_FALSE(r2.cc_geometry);
    break;
  }

  SolvedPath wrong_word = good;
  wrong_word.label = CaseLabel::kCase2;  // straight is not an LSR corner word
  CHECK_FALSE(validate_path(wrong_word, inst).word_shape);

  SolvedPath stale_length = good;
  stale_length.length += 1.0;
  CHECK_FALSE(validate_path(stale_length, inst).word_shape);
}

TEST_CASE("case metadata is consistent") {
  CHECK(case_info(CaseLabel::kCase2).depart == Pin::kMax);
  CHECK(case_info(CaseLabel::kCase2).arrive == Pin::kMax);
  CHECK(case_info(CaseLabel::kCase9).arrive == Pin::kMin);
  CHECK(case_info(CaseLabel::kCase9).depart == Pin::kInterior);
  for (CaseLabel l : {CaseLabel::kCase1, CaseLabel::kCase5, CaseLabel::kCase8,
                      CaseLabel::kSpecial2}) {
    CHECK(case_info(l).label == l);
    CHECK_FALSE(case_words(l).empty());
  }
  CHECK(std::string(case_label_name(CaseLabel::kCase3)) == "case-3");
  CHECK(case_label_from_name("special-case-2") == CaseLabel::kSpecial2);
}
