#include <algorithm>

#include "json.hpp"

#include "toricbound/error.hpp"
#include "toricbound/polytope/polytope.hpp"

namespace toricbound::polytope {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string polytope_to_json(const LatticePolytope& poly) {
  json a = json::array(), b = json::array();
  for (const auto& f : poly.facets) {
    a.push_back(f.normal);
    b.push_back(f.offset);
  }
  json j = {{"dim", poly.dim}, {"lattice_points", poly.lattice_points}, {"facets", {{"A", a}, {"b", b}}}};
  return j.dump();
}

LatticePolytope polytope_from_json(const std::string& text) {
  const json j = parse(text);
  LatticePolytope poly;
  try {
    poly.dim = j.at("dim").get<int>();
    poly.lattice_points = j.at("lattice_points").get<std::vector<Point>>();
    const auto a = j.at("facets").at("A").get<std::vector<std::vector<long>>>();
    const auto b = j.at("facets").at("b").get<std::vector<long>>();
    if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "facet matrix and offsets differ in length");
    for (size_t i = 0; i < a.size(); ++i) poly.facets.push_back({a[i], b[i]});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad polytope JSON: ") + e.what());
  }
  poly.validate();
  return poly;
}

std::string triangulation_to_json(const Triangulation& tri) {
  json j = {{"simplices", tri.simplices}, {"lifting", tri.lifting}};
  j["folding"] = tri.folding ? json(*tri.folding) : json(nullptr);
  return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
  const json j = parse(text);
  Triangulation tri;
  try {
    tri.simplices = j.at("simplices").get<std::vector<std::vector<int>>>();
    for (auto& s : tri.simplices) std::sort(s.begin(), s.end());
    if (j.contains("lifting")) tri.lifting = j.at("lifting").get<std::vector<long>>();
    if (j.contains("folding") && !j.at("folding").is_null()) tri.folding = j.at("folding").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad triangulation JSON: ") + e.what());
  }
  return tri;
}

}  // namespace toricbound::polytope
