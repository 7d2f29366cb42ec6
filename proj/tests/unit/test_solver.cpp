#include <doctest.h>

#include "oracles/bivariate.hpp"
#include "toricbound/error.hpp"
#include "toricbound/solver/solver.hpp"

using namespace toricbound;
using namespace toricbound::solver;
using exactalg::Exponent;
using exactalg::Rational;
using wronski::SPolicy;

namespace {

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<long>> r) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : r) {
    std::vector<Rational> v;
    for (long x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

oracle::BiPoly to_bi(const MultiPoly& p) {
  oracle::BiPoly b;
  for (const auto& [e, c] : p.terms()) b[{e[0], e[1]}] = c;
  return b;
}

}  // namespace

TEST_CASE("one variable") {
  std::vector<MultiPoly> sys{MultiPoly::variable(0) - MultiPoly(Rational(1))};
  CHECK(eliminant(sys, {}) == exactalg::UPoly({-1, 1}));
  auto r = count_solutions(sys, 1, 0);
  CHECK(r.n_real == 1);
  CHECK(r.n_complex == 1);
  // x^2 (x^2 + 1): the zero root is not in the torus
  std::vector<MultiPoly> sq{MultiPoly::term(1, Exponent{4, 0, 0, 0}) + MultiPoly::term(1, Exponent{2, 0, 0, 0})};
  auto q = count_solutions(sq, 2, 0);
  CHECK(q.n_real == 0);
  CHECK(q.n_complex == 2);
}

TEST_CASE("hexagon and triangle examples") {
  auto hex = wronski::build_system(wronski::builtin_family("hexagon"), rows({{3, 5, 1}, {1, -2, -3}}), 1);
  auto e = eliminant(hex.polys, {7});
  CHECK(exactalg::squarefree_part(e).degree() == 6);
  CHECK(exactalg::sturm_count(exactalg::squarefree_part(e)) == 2);
  auto r = count_solutions(hex, 1);
  CHECK(r.n_real == 2);
  CHECK(r.n_complex == 6);
  CHECK(r.generic);

  auto tri = wronski::build_system(wronski::builtin_family("triangle3"), rows({{4, -11, 4}, {-13, -1, 24}}), 1);
  auto t = count_solutions(tri, 1);
  CHECK(t.n_real == 9);
  CHECK(t.n_complex == 9);
  CHECK(oracle::count_real_torus_solutions(to_bi(tri.polys[0]), to_bi(tri.polys[1])) == 9);
}

TEST_CASE("degenerate systems") {
  auto fam = wronski::builtin_family("hexagon");
  auto same = wronski::build_system(fam, rows({{1, 2, 3}, {1, 2, 3}}), 1);
  try {
    count_solutions(same, 0);
    FAIL("expected NonGenericSystem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonGenericSystem);
  }
  std::vector<MultiPoly> four(4, MultiPoly::variable(0));
  CHECK_THROWS_AS(eliminant(four, {1, 1, 1}), Error);
  try {
    eliminant(same.polys, {1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("real counts agree with the projection oracle") {
  for (const char* name : {"hexagon", "triangle3"}) {
    auto fam = wronski::builtin_family(name);
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
      auto sys = wronski::sample_system(fam, 11, {-60, 60}, SPolicy::grid(), trial);
      auto r = count_solutions(sys, trial);
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(r.generic);
      CHECK(r.n_complex == fam.volume);
      CHECK(r.n_real % 2 == r.n_complex % 2);
      CHECK(r.n_real >= fam.signature);
      CHECK(r.n_real == oracle::count_real_torus_solutions(to_bi(sys.polys[0]), to_bi(sys.polys[1])));
    }
  }
}

TEST_CASE("cubes: parity, volume and two separating forms") {
  for (const char* name : {"cube-unimodular", "cube-nonunimodular"}) {
    auto fam = wronski::builtin_family(name);
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
      auto sys = wronski::sample_system(fam, 5, {-60, 60}, SPolicy::grid(), trial);
      auto a = count_solutions(sys, 1);
      auto b = count_solutions(sys, 2);
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(a.generic);
      CHECK(a.n_complex == 6);
      CHECK(a.n_real % 2 == 0);
      CHECK(a.n_real >= fam.signature);
      CHECK(a.n_real == b.n_real);
      CHECK(a.n_complex == b.n_complex);
    }
  }
}

TEST_CASE("report json") {
  SolveReport r{3, 9, 9, true, 0, {1, 5}};
  CHECK(report_to_json(r) ==
        R"({"eliminant_degree":9,"generic":true,"n_complex":9,"n_real":3,"retries":0,"separating_form":[1,5]})");
}
