#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "dubins_interval.h"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

dip_instance straight_instance() {
  dip_instance inst;
  inst.x1 = 0.0;
  inst.y1 = 0.0;
  inst.theta1 = {0.0, kPi / 2.0};
  inst.x2 = 10.0;
  inst.y2 = 0.0;
  inst.theta2 = {0.0, kPi / 2.0};
  inst.rho = 1.0;
  return inst;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(dip_version()) == "0.1.0");
  CHECK(std::string(dip_status_name(DIP_OK)) == "ok");
  CHECK(std::string(dip_status_name(DIP_ERR_PARSE)) == "parse error");
}

TEST_CASE("solve_interval through the C surface") {
  dip_instance inst = straight_instance();
  dip_path* path = nullptr;
  REQUIRE(dip_solve_interval(&inst, &path) == DIP_OK);
  CHECK(dip_path_length(path) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(dip_path_depart(path) == doctest::Approx(0.0));
  CHECK(std::string(dip_path_case_label(path)) == "case-1");

  char word[8];
  REQUIRE(dip_path_word(path, 0, word, sizeof word) == DIP_OK);
  CHECK(std::string(word) == "S");
  REQUIRE(dip_path_word(path, 1, word, sizeof word) == DIP_OK);
  CHECK(std::string(word) == "S");
  CHECK(dip_path_word(path, 0, word, 1) == DIP_ERR_BUFFER_TOO_SMALL);

  REQUIRE(dip_path_segment_count(path) == 1);
  dip_segment seg;
  REQUIRE(dip_path_segment(path, 0, &seg) == DIP_OK);
  CHECK(seg.kind == 'S');
  CHECK(seg.magnitude == doctest::Approx(10.0));
  CHECK(dip_path_segment(path, 3, &seg) == DIP_ERR_INVALID_ARGUMENT);

  dip_validation v;
  REQUIRE(dip_path_validate(path, &inst, &v) == DIP_OK);
  CHECK(v.endpoint_closure == 1);
  CHECK(v.interval_membership == 1);
  CHECK(v.word_shape == 1);

  double* xy = nullptr;
  size_t n = 0;
  REQUIRE(dip_path_sample(path, 1.0, &xy, &n) == DIP_OK);
  REQUIRE(n == 11);
  CHECK(xy[0] == 0.0);
  CHECK(xy[2 * 10] == doctest::Approx(10.0));
  dip_free(xy);
  dip_path_free(path);
}

TEST_CASE("error reporting carries a message") {
  dip_instance inst = straight_instance();
  inst.rho = -1.0;
  dip_path* path = nullptr;
  CHECK(dip_solve_interval(&inst, &path) == DIP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dip_last_error()).find("rho") != std::string::npos);
  CHECK(dip_solve_interval(nullptr, &path) == DIP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classic, word and fixed-departure solvers") {
  dip_pose a{0.0, 0.0, 0.0};
  dip_pose b{4.0, 0.0, 0.0};
  dip_path* path = nullptr;
  REQUIRE(dip_solve_classic(&a, &b, 1.0, &path) == DIP_OK);
  CHECK(dip_path_length(path) == doctest::Approx(4.0));
  dip_path_free(path);

  REQUIRE(dip_solve_word(&a, &b, 1.0, "LSL", &path) == DIP_OK);
  CHECK(dip_path_length(path) == doctest::Approx(4.0));
  dip_path_free(path);
  CHECK(dip_solve_word(&a, &b, 1.0, "XYZ", &path) == DIP_ERR_INVALID_ARGUMENT);
  // RSL needs its two tangent circles at least 2*rho apart; a goal pose
  // sitting almost on the start's right turn circle rules it out.
  dip_pose close_b{0.2, -1.8, 0.0};
  dip_status st = dip_solve_word(&a, &close_b, 1.0, "RSL", &path);
  CHECK(st == DIP_ERR_INFEASIBLE);

  REQUIRE(dip_solve_fixed_departure(&a, 10.0, 0.0, {0.0, kTwoPi}, 1.0,
                                    &path) == DIP_OK);
  CHECK(dip_path_length(path) == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(std::string(dip_path_case_label(path)).find("special-case") == 0);
  dip_path_free(path);
}

TEST_CASE("oracle grid through the C surface") {
  dip_instance inst = straight_instance();
  dip_oracle_result r;
  REQUIRE(dip_oracle_grid(&inst, 8, &r) == DIP_OK);
  CHECK(r.length == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(r.samples_per_axis == 8);
  CHECK(dip_oracle_grid(&inst, 0, &r) == DIP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("batch pipeline: parse, solve, serialize, check") {
  const char* jsonl =
      "{\"id\":\"a\",\"p1\":[0,0],\"theta1\":[0,90],\"p2\":[10,0],"
      "\"theta2\":[0,90],\"rho\":1,\"angle_unit\":\"degrees\"}\n"
      "{\"id\":\"b\",\"p1\":[0,0],\"fixed_departure\":0.5,\"p2\":[3,1],"
      "\"theta2\":[0,6.28],\"rho\":1}\n";
  dip_batch* batch = nullptr;
  REQUIRE(dip_batch_parse(jsonl, std::strlen(jsonl), DIP_FORMAT_AUTO, 0,
                          &batch) == DIP_OK);
  REQUIRE(dip_batch_size(batch) == 2);
  CHECK(std::string(dip_batch_record_id(batch, 0)) == "a");
  dip_instance echo;
  REQUIRE(dip_batch_instance(batch, 0, &echo) == DIP_OK);
  CHECK(echo.theta1.hi == doctest::Approx(kPi / 2.0));

  char* out = nullptr;
  size_t len = 0;
  CHECK(dip_batch_solutions_jsonl(batch, &out, &len) ==
        DIP_ERR_INVALID_ARGUMENT);  // not solved yet
  REQUIRE(dip_batch_solve(batch, 0) == DIP_OK);
  REQUIRE(dip_batch_solutions_jsonl(batch, &out, &len) == DIP_OK);
  REQUIRE(out != nullptr);
  std::string solutions(out, len);
  dip_free(out);
  CHECK(solutions.find("\"id\":\"a\"") != std::string::npos);
  CHECK(solutions.find("wall_time") == std::string::npos);

  char* report = nullptr;
  size_t report_len = 0;
  size_t failures = 99;
  REQUIRE(dip_check_solutions(solutions.data(), solutions.size(), &report,
                              &report_len, &failures) == DIP_OK);
  CHECK(failures == 0);
  dip_free(report);

  char* svg = nullptr;
  size_t svg_len = 0;
  REQUIRE(dip_batch_render_svg(batch, nullptr, &svg, &svg_len) == DIP_OK);
  CHECK(std::string(svg, svg_len).find("<svg") == 0);
  dip_free(svg);

  char* cmp = nullptr;
  size_t cmp_len = 0;
  REQUIRE(dip_batch_compare_jsonl(batch, 16, &cmp, &cmp_len) == DIP_OK);
  CHECK(std::string(cmp, cmp_len).find("\"gap\":") != std::string::npos);
  dip_free(cmp);
  dip_batch_free(batch);
}

TEST_CASE("batch parse failures map to status codes") {
  dip_batch* batch = nullptr;
  const char* bad_syntax = "{not json}";
  CHECK(dip_batch_parse(bad_syntax, std::strlen(bad_syntax), DIP_FORMAT_AUTO, 0,
                        &batch) == DIP_ERR_PARSE);
  CHECK(std::string(dip_last_error()).find("parse error") !=
        std::string::npos);

  const char* bad_rho =
      "{\"id\":\"r\",\"p1\":[0,0],\"theta1\":[0,1],\"p2\":[1,0],"
      "\"theta2\":[0,1],\"rho\":-1}";
  CHECK(dip_batch_parse(bad_rho, std::strlen(bad_rho), DIP_FORMAT_AUTO, 0,
                        &batch) == DIP_ERR_VALIDATION);
  CHECK(std::string(dip_last_error()).find("'r'") != std::string::npos);
}
