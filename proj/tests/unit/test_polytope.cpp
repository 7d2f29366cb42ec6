#include <doctest.h>

#include <array>

#include "oracles/facets.hpp"
#include "toricbound/error.hpp"
#include "toricbound/polytope/polytope.hpp"

using namespace toricbound;
using namespace toricbound::polytope;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// Every listed inequality is facet-defining and the 0/1 points cut out by
// them are exactly the lattice points.
void check_01_description(const LatticePolytope& poly) {
  for (const auto& f : poly.facets) CHECK(oracle::is_facet(poly.lattice_points, f.normal, f.offset));
  size_t inside = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << poly.dim); ++bits) {
    Point p(static_cast<size_t>(poly.dim));
    for (int i = 0; i < poly.dim; ++i) p[static_cast<size_t>(i)] = (bits >> i) & 1u;
    if (poly.contains(p)) {
      ++inside;
      CHECK(poly.index_of(p).has_value());
    }
  }
  CHECK(inside == poly.lattice_points.size());
}

}  // namespace

TEST_CASE("built-in polytopes") {
  struct Want {
    const char* name;
    long volume;
    long signature;
  };
  for (auto w : std::array<Want, 4>{{{"hexagon", 6, 2}, {"triangle3", 9, 3}, {"cube-unimodular", 6, 2},
                                     {"cube-nonunimodular", 6, 4}}}) {
    CAPTURE(w.name);
    auto b = builtin(w.name);
    b.polytope.validate();
    CHECK(normalized_volume(b.polytope) == w.volume);
    CHECK(normalized_volume(b.polytope, &b.triangulation) == w.volume);
    CHECK(fold_and_sign(b.polytope, b.triangulation).signature == w.signature);
    auto reg = verify_regular(b.polytope, b.triangulation);
    CHECK(reg.regular);
    CHECK(reg.hull_side == 1);
    if (b.polytope.dim <= 3) CHECK(oracle::count_facets(b.polytope.lattice_points) == b.polytope.facets.size());
  }
  auto hex = builtin("hexagon");
  CHECK(hex.triangulation.simplices.size() == 6);
  CHECK(orientability_check(hex.polytope).cox_oriented);
  CHECK(hex.deformation == std::vector<long>{2, 1, 1, 0, 1, 1, 2});
  CHECK(throws_code(ErrorCode::kInvalidInput, [] { builtin("dodecahedron"); }));
}

TEST_CASE("canonical triangulations of order and chain polytopes") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : poset::all_posets(n)) {
      const auto e = poset::count_linear_extensions(p);
      const auto imb = poset::sign_imbalance(p);
      for (auto kind : {PosetPolytopeKind::kOrder, PosetPolytopeKind::kChain}) {
        auto pp = kind == PosetPolytopeKind::kOrder ? order_polytope(p) : chain_polytope(p);
        auto tri = canonical_triangulation(p, pp, kind);
        CHECK(tri.simplices.size() == e);
        for (const auto& v : tri.volumes) CHECK(v == 1);
        CHECK(normalized_volume(pp.polytope, &tri) == e);
        auto reg = verify_regular(pp.polytope, tri);
        CHECK(reg.regular);
        CHECK(reg.closed);
        CHECK(fold_and_sign(pp.polytope, tri).signature == imb);
        if (n <= 3) check_01_description(pp.polytope);
      }
    }
  }
}

TEST_CASE("signature equals sign-imbalance on six elements") {
  for (const auto& p : poset::all_posets(6)) {
    const auto imb = poset::sign_imbalance(p);
    auto o = order_polytope(p);
    CHECK(fold_and_sign(o.polytope, canonical_triangulation(p, o, PosetPolytopeKind::kOrder)).signature == imb);
    auto c = chain_polytope(p);
    CHECK(fold_and_sign(c.polytope, canonical_triangulation(p, c, PosetPolytopeKind::kChain)).signature == imb);
  }
}

TEST_CASE("boolean lattice facet counts") {
  for (int n = 2; n <= 4; ++n) {
    auto b = poset::boolean_lattice(n);
    auto o = order_polytope(b);
    auto c = chain_polytope(b);
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(o.polytope.facets.size() == static_cast<size_t>(n * (1 << (n - 1)) + 2));
    CHECK(c.polytope.facets.size() == static_cast<size_t>((1 << n) + fact));
    if (n <= 3) {
      check_01_description(o.polytope);
      check_01_description(c.polytope);
    } else {
      for (const auto& f : o.polytope.facets) CHECK(oracle::is_facet(o.polytope.lattice_points, f.normal, f.offset));
      for (const auto& f : c.polytope.facets) CHECK(oracle::is_facet(c.polytope.lattice_points, f.normal, f.offset));
    }
  }
  CHECK(order_polytope(poset::boolean_lattice(3)).polytope.facets.size() == 14);
  CHECK(chain_polytope(poset::boolean_lattice(3)).polytope.facets.size() == 14);
  CHECK(oracle::count_facets(order_polytope(poset::boolean_lattice(2)).polytope.lattice_points) == 6);
}

TEST_CASE("orientability") {
  std::array<int, 2> a{1, 2};
  auto cu = poset::chain_union(a);
  auto c = chain_polytope(cu);
  CHECK(oracle::count_facets(c.polytope.lattice_points) == c.polytope.facets.size());
  auto r = orientability_check(c.polytope);
  CHECK_FALSE(r.odd_vector_in_AB_span_mod2);
  CHECK_FALSE(r.cox_oriented);
  CHECK(r.affine_span_odd_index);

  auto o = orientability_check(order_polytope(poset::chain(3)).polytope);
  CHECK(o.affine_span_odd_index);
  CHECK(o.column_lattice_saturated_odd);

  LatticePolytope sq{2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 2}, {{0, -1}, 2}}};
  CHECK_FALSE(orientability_check(sq).affine_span_odd_index);
}

TEST_CASE("transfer map") {
  auto ch = poset::chain(2);
  auto y = transfer_map(ch, {Rational(1, 2), Rational(1)});
  CHECK(y == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(throws_code(ErrorCode::kPointOutsidePolytope, [&] { transfer_map(ch, {Rational(1), Rational(1, 2)}); }));
  CHECK(throws_code(ErrorCode::kPointOutsidePolytope, [&] { transfer_map(ch, {Rational(0), Rational(2)}); }));
  // vertices go to vertices
  for (const auto& p : poset::all_posets(4)) {
    auto o = order_polytope(p);
    auto c = chain_polytope(p);
    for (const auto& pt : o.polytope.lattice_points) {
      std::vector<Rational> q(pt.begin(), pt.end());
      auto img = transfer_map(p, q);
      Point ip;
      for (const auto& v : img) {
        CHECK(v.get_den() == 1);
        ip.push_back(v.get_num().get_si());
      }
      CHECK(c.polytope.index_of(ip).has_value());
    }
  }
}

TEST_CASE("regularity failures and placing triangulations") {
  LatticePolytope sq{2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}}};
  Triangulation flat{{{0, 1, 3}, {0, 2, 3}}, {0, 0, 0, 0}, std::nullopt, {}, {}};
  auto rep = verify_regular(sq, flat);
  CHECK_FALSE(rep.regular);
  CHECK_FALSE(rep.failure.empty());

  Triangulation half{{{0, 1, 3}}, {0, 1, 1, 0}, std::nullopt, {}, {}};
  rep = verify_regular(sq, half);
  CHECK_FALSE(rep.closed);
  CHECK_FALSE(rep.regular);

  auto tri = regular_triangulation(sq, {0, 1, 1, 0});
  CHECK(tri.simplices == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
  CHECK(throws_code(ErrorCode::kInvalidInput, [&] { regular_triangulation(sq, {0, 0, 0, 0}); }));

  for (const auto& name : builtin_names()) {
    auto b = builtin(name);
    auto placed = placing_triangulation(b.polytope);
    CHECK(normalized_volume(b.polytope, &placed) == normalized_volume(b.polytope, &b.triangulation));
  }

  LatticePolytope seg{2, {{0, 0}, {1, 1}, {2, 2}}, {}};
  CHECK(throws_code(ErrorCode::kNotFullDimensional, [&] { normalized_volume(seg); }));
}

TEST_CASE("fold_and_sign rejects odd dual cycles") {
  LatticePolytope pent{2,
                       {{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}, {1, 1}},
                       {{{0, 1}, 0}, {{-1, 1}, 1}, {{-1, -1}, 3}, {{1, -1}, 1}, {{1, 0}, 0}}};
  auto tri = regular_triangulation(pent, {1, 1, 1, 1, 1, 0});
  CHECK(tri.simplices.size() == 5);
  try {
    fold_and_sign(pent, tri);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotBalanced);
  }
  auto hex = builtin("hexagon");
  auto t = hex.triangulation;
  t.folding.reset();
  auto fr = fold_and_sign(hex.polytope, t);
  CHECK(fr.signature == 2);
  Triangulation bad = hex.triangulation;
  (*bad.folding)[3] = 1;
  CHECK(throws_code(ErrorCode::kNotBalanced, [&] { fold_and_sign(hex.polytope, bad); }));
}

TEST_CASE("json round trip") {
  for (const auto& name : builtin_names()) {
    auto b = builtin(name);
    auto poly = polytope_from_json(polytope_to_json(b.polytope));
    CHECK(poly.lattice_points == b.polytope.lattice_points);
    CHECK(poly.facets.size() == b.polytope.facets.size());
    auto tri = triangulation_from_json(triangulation_to_json(b.triangulation));
    CHECK(tri.simplices == b.triangulation.simplices);
    CHECK(tri.lifting == b.triangulation.lifting);
    CHECK(tri.folding == b.triangulation.folding);
  }
  CHECK(throws_code(ErrorCode::kInvalidInput, [] { polytope_from_json("{\"dim\": 2"); }));
  CHECK(throws_code(ErrorCode::kInvalidInput, [] {
    polytope_from_json(R"({"dim":1,"lattice_points":[[0],[5]],"facets":{"A":[[1],[-1]],"b":[0,1]}})");
  }));
}
