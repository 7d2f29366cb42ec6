#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"
#include "toricbound/poset/poset.hpp"

namespace toricbound::polytope {

using exactalg::Integer;
using exactalg::Rational;
using Point = std::vector<long>;

/// Inward facet inequality normal · x >= -offset.
struct Facet {
  std::vector<long> normal;
  long offset = 0;
};

struct LatticePolytope {
  int dim = 0;
  std::vector<Point> lattice_points;
  std::vector<Facet> facets;

  std::optional<int> index_of(const Point& p) const;
  bool contains(const Point& p) const;
  /// Throws InvalidInput when a lattice point violates a facet, a normal is
  /// not primitive, or a point has the wrong dimension.
  void validate() const;
};

/// Simplices are sorted lists of n+1 lattice-point indices.
struct Triangulation {
  std::vector<std::vector<int>> simplices;
  std::vector<long> lifting;
  std::optional<std::vector<int>> folding;
  std::vector<int> signs;
  std::vector<Integer> volumes;
};

/// Normalized volume |det(v1 - v0, ..., vn - v0)| of a simplex.
Integer simplex_volume(const LatticePolytope& poly, const std::vector<int>& simplex);
/// Fills tri.volumes; throws DegenerateSimplex on a flat simplex.
void compute_volumes(const LatticePolytope& poly, Triangulation& tri);

// --- posets -----------------------------------------------------------------

/// Order or chain polytope with the order ideal / antichain behind each
/// lattice point.
struct PosetPolytope {
  LatticePolytope polytope;
  std::vector<poset::ElementSet> sets;
  /// |J| for ideals; rank for antichains.
  std::vector<int> ranks;
};

PosetPolytope order_polytope(const poset::Poset& p);
PosetPolytope chain_polytope(const poset::Poset& p);
/// Maximal chains, each listed from bottom to top.
std::vector<std::vector<int>> maximal_chains(const poset::Poset& p);

/// Piecewise-linear map O(P) -> C(P). Throws PointOutsidePolytope.
std::vector<Rational> transfer_map(const poset::Poset& p, const std::vector<Rational>& y);

enum class PosetPolytopeKind { kOrder, kChain };

/// One unimodular simplex per linear extension, with lifting -|J|^2 (order)
/// or 3^rk - 1 (chain) and folding by |J| or rank.
Triangulation canonical_triangulation(const poset::Poset& p, const PosetPolytope& poly, PosetPolytopeKind kind,
                                      std::uint64_t cap = poset::kDefaultEnumerationCap);

// --- regularity ---------------------------------------------------------------

/// Affine function c · x + d.
struct AffineCertificate {
  std::vector<Rational> c;
  Rational d;
};

struct RegularityReport {
  bool regular = false;
  /// +1: simplices are lower faces of the lifted points; -1: upper faces.
  int hull_side = 0;
  /// Every interior ridge is shared by exactly two simplices and every other
  /// ridge lies on a facet of the polytope.
  bool closed = false;
  std::vector<AffineCertificate> certificates;
  std::string failure;
};

RegularityReport verify_regular(const LatticePolytope& poly, const Triangulation& tri);

/// Lower-hull (side = +1) or upper-hull (side = -1) triangulation induced by
/// a lifting, by testing every (n+1)-subset. Throws InvalidInput when the
/// induced subdivision is not a triangulation.
Triangulation regular_triangulation(const LatticePolytope& poly, const std::vector<long>& lifting, int side = 1);

/// Placing triangulation, inserting lattice points in lexicographic order.
Triangulation placing_triangulation(const LatticePolytope& poly);

// --- folding and signature ------------------------------------------------

struct FoldResult {
  std::vector<int> folding;
  std::vector<int> signs;
  long signature = 0;
};

/// Throws NotBalanced (with an odd cycle of simplex indices in the message).
FoldResult fold_and_sign(const LatticePolytope& poly, Triangulation tri);

/// Throws NotFullDimensional.
Integer normalized_volume(const LatticePolytope& poly, const Triangulation* tri = nullptr);

// --- orientability ------------------------------------------------------------

struct OrientabilityReport {
  bool affine_span_odd_index = false;
  bool column_lattice_saturated_odd = false;
  bool odd_vector_in_AB_span_mod2 = false;
  bool odd_vector_in_A_span_mod2 = false;
  bool cox_oriented = false;
};

OrientabilityReport orientability_check(const LatticePolytope& poly);

// --- built-ins ------------------------------------------------------------

struct BuiltinPolytope {
  std::string name;
  LatticePolytope polytope;
  Triangulation triangulation;
  /// Exponent of s at each lattice point in the deformed family; equal to the
  /// lifting except for the hexagon.
  std::vector<long> deformation;
};

/// "hexagon", "triangle3", "cube-unimodular", "cube-nonunimodular".
BuiltinPolytope builtin(const std::string& name);
std::vector<std::string> builtin_names();

// --- JSON ---------------------------------------------------------------

std::string polytope_to_json(const LatticePolytope& poly);
LatticePolytope polytope_from_json(const std::string& text);
std::string triangulation_to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const std::string& text);

}  // namespace toricbound::polytope
