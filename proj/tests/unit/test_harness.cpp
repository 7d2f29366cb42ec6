#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "toricbound/error.hpp"
#include "toricbound/harness/harness.hpp"

using namespace toricbound;
using namespace toricbound::harness;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/toricbound_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("csv and json") {
  ExperimentReport r;
  r.histogram = {{2, 3}, {6, 1}};
  r.lower_bound_used = 2;
  r.n_nongeneric_resampled = 1;
  r.wall_time = 0.125;
  CHECK(emit_report(r, ReportFormat::kCsv) == "real_count,occurrences\n2,3\n6,1\n");
  CHECK(report_from_json(emit_report(r, ReportFormat::kJson)) == r);
  r.wall_time = 1.0 / 3.0;
  CHECK(report_from_json(emit_report(r, ReportFormat::kJson)) == r);
  const std::string table = emit_report(r, ReportFormat::kTable);
  CHECK(table.find("real solutions") != std::string::npos);
  CHECK(table.find("75.0%") != std::string::npos);
  CHECK(r.trials() == 4);
  CHECK(parse_format("table") == ReportFormat::kTable);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("config") {
  auto c = config_from_json(R"({"polytope":"triangle3","coeff_range":"-5..5","s":"grid","trials":7,"seed":9})");
  CHECK(c.polytope == "triangle3");
  CHECK(c.coeff_range.lo == -5);
  CHECK(c.s_policy.kind == wronski::SPolicy::Kind::kGrid);
  CHECK(c.trials == 7);
  CHECK(c.seed == 9);
  auto back = config_from_json(config_to_json(c));
  CHECK(back.coeff_range.hi == 5);
  CHECK(back.s_policy.to_string() == c.s_policy.to_string());
  CHECK_THROWS_AS(config_from_json(R"({"trials":0})"), Error);
  CHECK_THROWS_AS(config_from_json(R"({"coeff_range":[3,1]})"), Error);
  CHECK_THROWS_AS(config_from_json("{"), Error);
}

TEST_CASE("hexagon at s = 1 has two real solutions") {
  ExperimentConfig c;
  c.polytope = "hexagon";
  c.trials = 40;
  c.seed = 3;
  auto r = run_experiment(c);
  CHECK(r.histogram == std::map<long, long>{{2, 40}});
  CHECK(r.violations == 0);
  CHECK(r.lower_bound_used == 2);
}

TEST_CASE("deterministic at any parallelism") {
  ExperimentConfig c;
  c.polytope = "hexagon";
  c.s_policy = wronski::SPolicy::grid();
  c.trials = 30;
  c.seed = 17;
  auto a = run_experiment(c);
  c.parallelism = 3;
  auto b = run_experiment(c);
  a.wall_time = b.wall_time = 0;
  CHECK(a == b);
  c.seed = 18;
  auto d = run_experiment(c);
  d.wall_time = 0;
  // single trials replay on their own
  const auto fam = load_family(c);
  const auto t = run_trial(fam, c, 5);
  CHECK(t.n_complex == 6);
  CHECK(t.n_real >= 2);
  CHECK(t.n_real == run_trial(fam, c, 5).n_real);
}

TEST_CASE("family sources and weights") {
  ExperimentConfig c;
  c.polytope = temp_file("chain2.json", R"({"elements":["a","b"],"covers":[["a","b"]]})");
  c.polytope = "order:" + c.polytope;
  auto fam = load_family(c);
  CHECK(fam.polytope.dim == 2);
  CHECK(fam.kind == wronski::FamilyKind::kOrderPolytope);

  c.polytope = "order:" + temp_file("chain4.json", R"({"elements":["a","b","c","d"],"covers":[["a","b"],["b","c"],["c","d"]]})");
  try {
    run_experiment(c);
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupportedDimension);
  }

  c.polytope = "hexagon";
  c.weights_file = temp_file("w.json", R"([1, "2", 3, "1/2", 1, 1, 1])");
  fam = load_family(c);
  CHECK(fam.alpha[3] == wronski::Rational(1, 2));
  c.weights_file = temp_file("wbad.json", R"([1, 1])");
  CHECK_THROWS_AS(load_family(c), Error);
  c.weights_file.clear();
  c.polytope = "/nonexistent.json";
  CHECK_THROWS_AS(load_family(c), Error);
}
