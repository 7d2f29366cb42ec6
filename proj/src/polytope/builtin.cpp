#include <algorithm>

#include "toricbound/error.hpp"
#include "toricbound/polytope/polytope.hpp"

namespace toricbound::polytope {

namespace {

struct Spec {
  std::vector<Point> points;
  std::vector<Facet> facets;
  std::vector<long> lifting;
  std::vector<long> deformation;
  std::vector<int> folding;
};

std::vector<Facet> unit_cube_facets() {
  std::vector<Facet> f;
  for (int i = 0; i < 3; ++i) {
    std::vector<long> e(3, 0);
    e[static_cast<size_t>(i)] = 1;
    f.push_back({e, 0});
    e[static_cast<size_t>(i)] = -1;
    f.push_back({e, 1});
  }
  return f;
}

std::vector<Point> unit_cube_points() {
  std::vector<Point> pts;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) pts.push_back({x, y, z});
  return pts;
}

Spec spec_for(const std::string& name) {
  Spec s;
  if (name == "hexagon") {
    s.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
    s.facets = {{{0, 1}, 0}, {{-1, 1}, 1}, {{-1, 0}, 2}, {{0, -1}, 2}, {{1, -1}, 1}, {{1, 0}, 0}};
    s.lifting = {3, 1, 1, 0, 1, 1, 3};
    s.deformation = {2, 1, 1, 0, 1, 1, 2};
    s.folding = {0, 1, 2, 0, 2, 1, 0};
  } else if (name == "triangle3") {
    for (long i = 0; i <= 3; ++i)
      for (long j = 0; i + j <= 3; ++j) s.points.push_back({i, j});
    s.facets = {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 3}};
    for (const auto& p : s.points) {
      const long i = p[0], j = p[1];
      const bool corner = (i == 0 && j == 0) || i == 3 || j == 3;
      s.lifting.push_back(corner ? 3 : (i == 1 && j == 1) ? 0 : 1);
      // i - j mod 3
      s.folding.push_back(((i - j) % 3 + 3) % 3);
    }
    s.deformation = s.lifting;
  } else if (name == "cube-unimodular" || name == "cube-nonunimodular") {
    s.points = unit_cube_points();
    s.facets = unit_cube_facets();
    const bool uni = name == "cube-unimodular";
    for (const auto& p : s.points) {
      const long w = p[0] + p[1] + p[2];
      if (uni) {
        const bool far = w == 0 || w == 3;
        const bool mid = p == Point{1, 0, 0} || p == Point{0, 1, 1};
        s.lifting.push_back(far ? 3 : mid ? 0 : 1);
      } else {
        s.lifting.push_back(w % 2 == 0 ? 0 : 1);
      }
      // colour = 1 + the coordinate that differs from the other two
      int c = 0;
      for (int i = 0; i < 3; ++i)
        if (p[static_cast<size_t>((i + 1) % 3)] == p[static_cast<size_t>((i + 2) % 3)] &&
            p[static_cast<size_t>(i)] != p[static_cast<size_t>((i + 1) % 3)])
          c = i + 1;
      if (uni && p == Point{0, 1, 1}) c = 0;
      if (uni && p == Point{1, 1, 1}) c = 1;
      s.folding.push_back(c);
    }
    s.deformation = s.lifting;
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown built-in polytope '" + name + "'");
  }
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"hexagon", "triangle3", "cube-unimodular", "cube-nonunimodular"}; }

BuiltinPolytope builtin(const std::string& name) {
  Spec s = spec_for(name);
  BuiltinPolytope out;
  out.name = name;
  out.polytope.dim = static_cast<int>(s.points[0].size());
  out.polytope.lattice_points = std::move(s.points);
  out.polytope.facets = std::move(s.facets);
  out.triangulation = regular_triangulation(out.polytope, s.lifting, 1);
  out.triangulation.folding = std::move(s.folding);
  out.triangulation.signs = fold_and_sign(out.polytope, out.triangulation).signs;
  out.deformation = std::move(s.deformation);
  return out;
}

}  // namespace toricbound::polytope
