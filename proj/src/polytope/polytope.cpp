#include "toricbound/polytope/polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>

#include "toricbound/error.hpp"
#include "toricbound/exactalg/linalg.hpp"

namespace toricbound::polytope {

using exactalg::IntMatrix;
using exactalg::RatMatrix;

namespace {

long dot(const std::vector<long>& a, const Point& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool on_facet(const Facet& f, const Point& p) { return dot(f.normal, p) == -f.offset; }

}  // namespace

std::optional<int> LatticePolytope::index_of(const Point& p) const {
  for (size_t i = 0; i < lattice_points.size(); ++i)
    if (lattice_points[i] == p) return static_cast<int>(i);
  return std::nullopt;
}

bool LatticePolytope::contains(const Point& p) const {
  for (const auto& f : facets)
    if (dot(f.normal, p) < -f.offset) return false;
  return true;
}

void LatticePolytope::validate() const {
  for (const auto& p : lattice_points) {
    if (static_cast<int>(p.size()) != dim) throw Error(ErrorCode::kInvalidInput, "lattice point of wrong dimension");
    if (!contains(p)) throw Error(ErrorCode::kInvalidInput, "lattice point violates a facet inequality");
  }
  for (const auto& f : facets) {
    if (static_cast<int>(f.normal.size()) != dim) throw Error(ErrorCode::kInvalidInput, "facet normal of wrong dimension");
    long g = 0;
    for (long v : f.normal) g = std::gcd(g, v);
    if (g != 1) throw Error(ErrorCode::kInvalidInput, "facet normal is not primitive");
  }
}

Integer simplex_volume(const LatticePolytope& poly, const std::vector<int>& simplex) {
  const Point& v0 = poly.lattice_points[static_cast<size_t>(simplex[0])];
  IntMatrix m;
  for (size_t k = 1; k < simplex.size(); ++k) {
    const Point& v = poly.lattice_points[static_cast<size_t>(simplex[k])];
    std::vector<Integer> row;
    for (size_t i = 0; i < v.size(); ++i) row.emplace_back(v[i] - v0[i]);
    m.push_back(std::move(row));
  }
  return abs(exactalg::determinant(m));
}

void compute_volumes(const LatticePolytope& poly, Triangulation& tri) {
  tri.volumes.clear();
  for (const auto& s : tri.simplices) {
    if (static_cast<int>(s.size()) != poly.dim + 1)
      throw Error(ErrorCode::kDimensionMismatch, "simplex does not have dim+1 vertices");
    Integer v = simplex_volume(poly, s);
    if (sgn(v) == 0) throw Error(ErrorCode::kDegenerateSimplex, "simplex vertices are affinely dependent");
    tri.volumes.push_back(v);
  }
}

// --- posets -----------------------------------------------------------------

namespace {

Point characteristic(poset::ElementSet s, int n) {
  Point p(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = (s >> i) & 1u;
  return p;
}

}  // namespace

std::vector<std::vector<int>> maximal_chains(const poset::Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int e) {
    cur.push_back(e);
    if (p.upper_covers(e).empty()) out.push_back(cur);
    for (int b : p.upper_covers(e)) rec(b);
    cur.pop_back();
  };
  for (int m : p.minimal_elements()) rec(m);
  return out;
}

PosetPolytope order_polytope(const poset::Poset& p) {
  const int n = p.size();
  PosetPolytope out;
  out.polytope.dim = n;
  for (const auto& j : poset::order_ideals(p)) {
    out.polytope.lattice_points.push_back(characteristic(j.members, n));
    out.sets.push_back(j.members);
    out.ranks.push_back(j.size);
  }
  auto unit = [n](int i, long v) {
    std::vector<long> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = v;
    return e;
  };
  for (int a : p.minimal_elements()) out.polytope.facets.push_back({unit(a, 1), 0});
  for (int b : p.maximal_elements()) out.polytope.facets.push_back({unit(b, -1), 1});
  for (const auto& [a, b] : p.covers()) {
    std::vector<long> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(a)] = -1;
    e[static_cast<size_t>(b)] = 1;
    out.polytope.facets.push_back({e, 0});
  }
  return out;
}

PosetPolytope chain_polytope(const poset::Poset& p) {
  const int n = p.size();
  PosetPolytope out;
  out.polytope.dim = n;
  for (const auto& a : poset::antichains(p)) {
    out.polytope.lattice_points.push_back(characteristic(a.members, n));
    out.sets.push_back(a.members);
    out.ranks.push_back(a.rank);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    out.polytope.facets.push_back({e, 0});
  }
  for (const auto& c : maximal_chains(p)) {
    std::vector<long> e(static_cast<size_t>(n), 0);
    for (int x : c) e[static_cast<size_t>(x)] = -1;
    out.polytope.facets.push_back({e, 1});
  }
  return out;
}

std::vector<Rational> transfer_map(const poset::Poset& p, const std::vector<Rational>& y) {
  const int n = p.size();
  if (static_cast<int>(y.size()) != n) throw Error(ErrorCode::kDimensionMismatch, "point has the wrong dimension");
  for (int a = 0; a < n; ++a)
    if (y[static_cast<size_t>(a)] < 0 || y[static_cast<size_t>(a)] > 1)
      throw Error(ErrorCode::kPointOutsidePolytope, "coordinate outside [0,1]");
  for (const auto& [a, b] : p.covers())
    if (y[static_cast<size_t>(a)] > y[static_cast<size_t>(b)])
      throw Error(ErrorCode::kPointOutsidePolytope, "point decreases along a cover");
  std::vector<Rational> out(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    const auto& lower = p.lower_covers(a);
    if (lower.empty()) {
      out[static_cast<size_t>(a)] = y[static_cast<size_t>(a)];
      continue;
    }
    Rational best = y[static_cast<size_t>(a)] - y[static_cast<size_t>(lower[0])];
    for (int b : lower) best = std::min(best, Rational(y[static_cast<size_t>(a)] - y[static_cast<size_t>(b)]));
    out[static_cast<size_t>(a)] = best;
  }
  return out;
}

Triangulation canonical_triangulation(const poset::Poset& p, const PosetPolytope& poly, PosetPolytopeKind kind,
                                      std::uint64_t cap) {
  const int n = p.size();
  std::map<poset::ElementSet, int> where;
  for (size_t i = 0; i < poly.sets.size(); ++i) where[poly.sets[i]] = static_cast<int>(i);

  Triangulation tri;
  for (const auto& ext : poset::linear_extensions(p, cap)) {
    // upper ideals grow by taking the extension from the top
    std::vector<int> simplex;
    poset::ElementSet ideal = 0;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) ideal |= poset::ElementSet{1} << ext.order[static_cast<size_t>(n - k)];
      const poset::ElementSet key = kind == PosetPolytopeKind::kOrder ? ideal : poset::minimal_members(p, ideal);
      simplex.push_back(where.at(key));
    }
    std::sort(simplex.begin(), simplex.end());
    tri.simplices.push_back(std::move(simplex));
  }
  tri.lifting.resize(poly.ranks.size());
  std::vector<int> folding(poly.ranks.size());
  for (size_t i = 0; i < poly.ranks.size(); ++i) {
    const long r = poly.ranks[i];
    if (kind == PosetPolytopeKind::kOrder) {
      tri.lifting[i] = -r * r;
    } else {
      long v = 1;
      for (long k = 0; k < r; ++k) v *= 3;
      tri.lifting[i] = v - 1;
    }
    folding[i] = static_cast<int>(r);
  }
  tri.folding = std::move(folding);
  compute_volumes(poly.polytope, tri);
  return tri;
}

// --- regularity ---------------------------------------------------------------

namespace {

std::optional<AffineCertificate> certificate(const LatticePolytope& poly, const std::vector<long>& lifting,
                                             const std::vector<int>& simplex) {
  const size_t n = static_cast<size_t>(poly.dim);
  RatMatrix m;
  std::vector<Rational> rhs;
  for (int v : simplex) {
    const Point& p = poly.lattice_points[static_cast<size_t>(v)];
    std::vector<Rational> row(p.begin(), p.end());
    row.emplace_back(1);
    m.push_back(std::move(row));
    rhs.emplace_back(-lifting[static_cast<size_t>(v)]);
  }
  auto sol = exactalg::solve(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  AffineCertificate cert;
  cert.c.assign(sol->begin(), sol->begin() + static_cast<long>(n));
  cert.d = (*sol)[n];
  return cert;
}

Rational excess(const AffineCertificate& cert, const Point& p, long omega) {
  Rational v = cert.d + omega;
  for (size_t i = 0; i < p.size(); ++i) v += cert.c[i] * p[i];
  return v;
}

using Ridge = std::vector<int>;

struct RidgeUse {
  int count = 0;
  int simplex = -1;
  int opposite = -1;
  int other_simplex = -1;
  int other_opposite = -1;
};

std::map<Ridge, RidgeUse> ridge_map(const std::vector<std::vector<int>>& simplices) {
  std::map<Ridge, RidgeUse> ridges;
  for (size_t s = 0; s < simplices.size(); ++s) {
    const auto& simplex = simplices[s];
    for (size_t drop = 0; drop < simplex.size(); ++drop) {
      Ridge r;
      for (size_t k = 0; k < simplex.size(); ++k)
        if (k != drop) r.push_back(simplex[k]);
      auto& use = ridges[r];
      if (use.count == 0) {
        use.simplex = static_cast<int>(s);
        use.opposite = simplex[drop];
      } else if (use.count == 1) {
        use.other_simplex = static_cast<int>(s);
        use.other_opposite = simplex[drop];
      }
      ++use.count;
    }
  }
  return ridges;
}

bool closed_complex(const LatticePolytope& poly, const std::vector<std::vector<int>>& simplices, std::string* why) {
  for (const auto& [ridge, use] : ridge_map(simplices)) {
    if (use.count > 2) {
      if (why) *why = "a ridge lies in more than two simplices";
      return false;
    }
    if (use.count == 1) {
      bool boundary = false;
      for (const auto& f : poly.facets) {
        bool all = true;
        for (int v : ridge)
          if (!on_facet(f, poly.lattice_points[static_cast<size_t>(v)])) all = false;
        if (all) boundary = true;
      }
      if (!boundary) {
        if (why) *why = "a ridge inside the polytope belongs to a single simplex";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

RegularityReport verify_regular(const LatticePolytope& poly, const Triangulation& tri) {
  RegularityReport rep;
  if (tri.lifting.size() != poly.lattice_points.size())
    throw Error(ErrorCode::kDimensionMismatch, "lifting must give one value per lattice point");
  for (size_t s = 0; s < tri.simplices.size(); ++s) {
    const auto& simplex = tri.simplices[s];
    auto cert = certificate(poly, tri.lifting, simplex);
    if (!cert) throw Error(ErrorCode::kDegenerateSimplex, "simplex " + std::to_string(s) + " is degenerate");
    for (size_t i = 0; i < poly.lattice_points.size(); ++i) {
      if (std::find(simplex.begin(), simplex.end(), static_cast<int>(i)) != simplex.end()) continue;
      const int side = sgn(excess(*cert, poly.lattice_points[i], tri.lifting[i]));
      if (side == 0 || (rep.hull_side != 0 && side != rep.hull_side)) {
        rep.failure = "simplex " + std::to_string(s) + " fails its support certificate at point " + std::to_string(i);
        rep.certificates.push_back(*cert);
        return rep;
      }
      rep.hull_side = side;
    }
    rep.certificates.push_back(*cert);
  }
  if (rep.hull_side == 0) rep.hull_side = 1;
  std::string why;
  rep.closed = closed_complex(poly, tri.simplices, &why);
  if (!rep.closed) {
    rep.failure = why;
    return rep;
  }
  rep.regular = true;
  return rep;
}

Triangulation regular_triangulation(const LatticePolytope& poly, const std::vector<long>& lifting, int side) {
  const int n = poly.dim;
  const int npts = static_cast<int>(poly.lattice_points.size());
  Triangulation tri;
  tri.lifting = lifting;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == n + 1) {
      auto cert = certificate(poly, lifting, pick);
      if (!cert) return;
      for (int i = 0; i < npts; ++i) {
        if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
        if (sgn(excess(*cert, poly.lattice_points[static_cast<size_t>(i)], lifting[static_cast<size_t>(i)])) * side <= 0)
          return;
      }
      tri.simplices.push_back(pick);
      return;
    }
    for (int i = start; i < npts; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::string why;
  if (tri.simplices.empty() || !closed_complex(poly, tri.simplices, &why))
    throw Error(ErrorCode::kInvalidInput, "lifting does not induce a triangulation: " + (why.empty() ? "no cells" : why));
  compute_volumes(poly, tri);
  return tri;
}

namespace {

Integer orientation(const LatticePolytope& poly, const Ridge& ridge, const Point& q) {
  const Point& f0 = poly.lattice_points[static_cast<size_t>(ridge[0])];
  IntMatrix m;
  auto diff = [&](const Point& v) {
    std::vector<Integer> row;
    for (size_t i = 0; i < v.size(); ++i) row.emplace_back(v[i] - f0[i]);
    return row;
  };
  for (size_t k = 1; k < ridge.size(); ++k) m.push_back(diff(poly.lattice_points[static_cast<size_t>(ridge[k])]));
  m.push_back(diff(q));
  return exactalg::determinant(m);
}

}  // namespace

Triangulation placing_triangulation(const LatticePolytope& poly) {
  const int n = poly.dim;
  std::vector<int> order(poly.lattice_points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poly.lattice_points[static_cast<size_t>(a)] < poly.lattice_points[static_cast<size_t>(b)];
  });

  // first affinely independent n+1 points in lexicographic order
  std::vector<int> start;
  std::vector<bool> used(poly.lattice_points.size(), false);
  for (int idx : order) {
    if (static_cast<int>(start.size()) == n + 1) break;
    if (start.empty()) {
      start.push_back(idx);
      used[static_cast<size_t>(idx)] = true;
      continue;
    }
    IntMatrix m;
    const Point& p0 = poly.lattice_points[static_cast<size_t>(start[0])];
    std::vector<int> cand = start;
    cand.push_back(idx);
    for (size_t k = 1; k < cand.size(); ++k) {
      const Point& v = poly.lattice_points[static_cast<size_t>(cand[k])];
      std::vector<Integer> row;
      for (size_t i = 0; i < v.size(); ++i) row.emplace_back(v[i] - p0[i]);
      m.push_back(std::move(row));
    }
    if (exactalg::rank(m) == static_cast<int>(cand.size()) - 1) {
      start = std::move(cand);
      used[static_cast<size_t>(idx)] = true;
    }
  }
  if (static_cast<int>(start.size()) != n + 1) throw Error(ErrorCode::kNotFullDimensional, "lattice points span a proper affine subspace");

  Triangulation tri;
  std::sort(start.begin(), start.end());
  tri.simplices.push_back(start);
  for (int idx : order) {
    if (used[static_cast<size_t>(idx)]) continue;
    const Point& q = poly.lattice_points[static_cast<size_t>(idx)];
    std::vector<std::vector<int>> added;
    for (const auto& [ridge, use] : ridge_map(tri.simplices)) {
      if (use.count != 1) continue;
      const int sq = sgn(orientation(poly, ridge, q));
      const int sv = sgn(orientation(poly, ridge, poly.lattice_points[static_cast<size_t>(use.opposite)]));
      if (sq != 0 && sq == -sv) {
        std::vector<int> s = ridge;
        s.push_back(idx);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    for (auto& s : added) tri.simplices.push_back(std::move(s));
  }
  compute_volumes(poly, tri);
  return tri;
}

// --- folding and signature ------------------------------------------------

FoldResult fold_and_sign(const LatticePolytope& poly, Triangulation tri) {
  if (tri.simplices.empty()) throw Error(ErrorCode::kInvalidInput, "empty triangulation");
  if (tri.volumes.size() != tri.simplices.size()) compute_volumes(poly, tri);
  const size_t ns = tri.simplices.size();
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(ns);  // neighbour, (my opposite, its opposite)
  for (const auto& [ridge, use] : ridge_map(tri.simplices)) {
    if (use.count > 2) throw Error(ErrorCode::kInvalidInput, "a ridge lies in more than two simplices");
    if (use.count == 2) {
      adj[static_cast<size_t>(use.simplex)].push_back({use.other_simplex, {use.opposite, use.other_opposite}});
      adj[static_cast<size_t>(use.other_simplex)].push_back({use.simplex, {use.other_opposite, use.opposite}});
    }
  }

  FoldResult res;
  res.signs.assign(ns, 0);
  std::vector<int> parent(ns, -1);
  std::vector<int> colour(poly.lattice_points.size(), -1);
  const bool given = tri.folding.has_value();
  if (given) {
    colour = *tri.folding;
    for (const auto& s : tri.simplices) {
      std::vector<bool> hit(static_cast<size_t>(poly.dim) + 1, false);
      for (int v : s) {
        const int c = colour[static_cast<size_t>(v)];
        if (c < 0 || c > poly.dim || hit[static_cast<size_t>(c)])
          throw Error(ErrorCode::kNotBalanced, "folding is not a bijection on a simplex");
        hit[static_cast<size_t>(c)] = true;
      }
    }
  } else {
    for (size_t k = 0; k < tri.simplices[0].size(); ++k) colour[static_cast<size_t>(tri.simplices[0][k])] = static_cast<int>(k);
  }

  auto odd_cycle = [&](int u, int v) {
    std::vector<int> pu, pv;
    for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) pu.push_back(x);
    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) pv.push_back(x);
    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
      pu.pop_back();
      pv.pop_back();
    }
    std::string w;
    for (int x : pu) w += std::to_string(x) + " ";
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) w += std::to_string(*it) + " ";
    return "odd cycle in the dual graph through simplices " + w;
  };

  std::queue<int> q;
  res.signs[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const int s = q.front();
    q.pop();
    for (const auto& [t, opp] : adj[static_cast<size_t>(s)]) {
      const int mine = colour[static_cast<size_t>(opp.first)];
      int& theirs = colour[static_cast<size_t>(opp.second)];
      if (theirs == -1) theirs = mine;
      if (theirs != mine) throw Error(ErrorCode::kNotBalanced, "vertex colouring does not extend across simplices");
      if (res.signs[static_cast<size_t>(t)] == 0) {
        res.signs[static_cast<size_t>(t)] = -res.signs[static_cast<size_t>(s)];
        parent[static_cast<size_t>(t)] = s;
        q.push(t);
      } else if (res.signs[static_cast<size_t>(t)] == res.signs[static_cast<size_t>(s)]) {
        throw Error(ErrorCode::kNotBalanced, odd_cycle(s, t));
      }
    }
  }
  for (size_t s = 0; s < ns; ++s)
    if (res.signs[s] == 0) throw Error(ErrorCode::kInvalidInput, "dual graph is disconnected");

  long total = 0;
  for (size_t s = 0; s < ns; ++s)
    if (mpz_odd_p(tri.volumes[s].get_mpz_t())) total += res.signs[s];
  res.signature = std::labs(total);
  res.folding = std::move(colour);
  return res;
}

Integer normalized_volume(const LatticePolytope& poly, const Triangulation* tri) {
  Triangulation own;
  if (tri == nullptr) {
    own = placing_triangulation(poly);
    tri = &own;
  }
  Integer total = 0;
  for (const auto& s : tri->simplices) total += simplex_volume(poly, s);
  if (sgn(total) == 0) throw Error(ErrorCode::kNotFullDimensional, "polytope is not full-dimensional");
  return total;
}

// --- orientability ------------------------------------------------------------

namespace {

bool odd_full_rank_index(const IntMatrix& m, int n) {
  auto inv = exactalg::smith_invariants(m);
  if (static_cast<int>(inv.size()) != n) return false;
  for (const auto& d : inv)
    if (mpz_even_p(d.get_mpz_t())) return false;
  return true;
}

}  // namespace

OrientabilityReport orientability_check(const LatticePolytope& poly) {
  OrientabilityReport r;
  const int n = poly.dim;
  if (poly.lattice_points.empty()) return r;

  IntMatrix diffs;
  const Point& p0 = poly.lattice_points[0];
  for (size_t k = 1; k < poly.lattice_points.size(); ++k) {
    std::vector<Integer> row;
    for (int i = 0; i < n; ++i)
      row.emplace_back(poly.lattice_points[k][static_cast<size_t>(i)] - p0[static_cast<size_t>(i)]);
    diffs.push_back(std::move(row));
  }
  r.affine_span_odd_index = odd_full_rank_index(diffs, n);

  IntMatrix a, ab;
  for (const auto& f : poly.facets) {
    std::vector<Integer> row(f.normal.begin(), f.normal.end());
    a.push_back(row);
    row.emplace_back(f.offset);
    ab.push_back(std::move(row));
  }
  r.column_lattice_saturated_odd = odd_full_rank_index(a, n);
  std::vector<Integer> ones(poly.facets.size(), Integer(1));
  r.odd_vector_in_AB_span_mod2 = exactalg::in_span_mod2(ab, ones);
  r.odd_vector_in_A_span_mod2 = exactalg::in_span_mod2(a, ones);
  r.cox_oriented = r.affine_span_odd_index && r.column_lattice_saturated_odd && r.odd_vector_in_AB_span_mod2;
  return r;
}

}  // namespace toricbound::polytope
