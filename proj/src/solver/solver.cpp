#include "toricbound/solver/solver.hpp"

#include "json.hpp"
#include "toricbound/error.hpp"
#include "toricbound/exactalg/sturm.hpp"
#include "toricbound/rng.hpp"
#include "toricbound/solver/elimination.hpp"

namespace toricbound::solver {

using exactalg::IntPoly;
using exactalg::Rational;

namespace {

int system_dim(const std::vector<MultiPoly>& system) {
  const int n = static_cast<int>(system.size());
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty system");
  if (n > 3) throw Error(ErrorCode::kDimensionUnsupported, "the solver handles at most 3 variables");
  for (const auto& p : system) {
    if (p.is_zero()) throw Error(ErrorCode::kNonGenericSystem, "system contains the zero polynomial");
    for (int v = n; v < exactalg::kMaxVars; ++v)
      if (p.depends_on(v)) throw Error(ErrorCode::kDimensionMismatch, "polynomial uses more variables than equations");
  }
  return n;
}

std::vector<std::vector<int>> orders_for(int n) {
  if (n == 2) return {{1}};
  if (n == 3) return {{2, 1}, {1, 2}};
  return {{}};
}

}  // namespace

UPoly eliminant(const std::vector<MultiPoly>& system, const std::vector<long>& t, std::optional<long> expected) {
  const int n = system_dim(system);
  if (static_cast<int>(t.size()) != n - 1)
    throw Error(ErrorCode::kDimensionMismatch, "separating form needs " + std::to_string(n - 1) + " coefficients");
  for (long ti : t)
    if (ti == 0) throw Error(ErrorCode::kInvalidInput, "separating coefficients must be nonzero");
  const VarMask all_torus = (1u << n) - 1;
  const VarMask rest_torus = all_torus & ~1u;

  // x1 = u - t2 x2 - t3 x3, with u in slot 0
  IntPoly shift = IntPoly::variable(0);
  for (int k = 1; k < n; ++k) shift -= IntPoly::variable(k) * exactalg::Integer(t[static_cast<size_t>(k - 1)]);
  std::vector<IntPoly> g;
  for (const auto& p : system)
    g.push_back(torus_primitive(torus_primitive(exactalg::to_primitive_integer(p), all_torus).substitute(0, shift), rest_torus));

  UPoly e = project_to(g, 0, orders_for(n), rest_torus, 3);
  if (e.is_zero()) throw Error(ErrorCode::kNonGenericSystem, "eliminant vanishes identically");
  e = e.primitive();

  // roots coming from solutions with a zero coordinate
  for (int j = 0; j < n && e.degree() > 0; ++j) {
    std::vector<IntPoly> b;
    std::vector<int> rest;
    if (j == 0) {
      // x1 = 0 forces x2 = (u - t3 x3) / t2
      MultiPoly x2;
      if (n >= 2) x2 = MultiPoly::variable(0) * Rational(1, t[0]);
      if (n == 3) x2 -= MultiPoly::variable(2) * Rational(t[1], t[0]);
      for (const auto& p : system) {
        MultiPoly q = p.evaluate(0, 0);
        if (n >= 2) q = q.substitute(1, x2);
        if (!q.is_zero()) b.push_back(exactalg::to_primitive_integer(q));
      }
      if (n == 3) rest = {2};
    } else {
      for (const auto& p : g) {
        IntPoly q = substitute_value(p, j, 0);
        if (!q.is_zero()) b.push_back(q);
      }
      for (int k = 1; k < n; ++k)
        if (k != j) rest.push_back(k);
    }
    if (b.size() < system.size()) continue;  // a whole hyperplane of solutions; leave it to the degree check
    const UPoly boundary = project_to(b, 0, {rest}, 0, 3);
    e = remove_common_roots(e, boundary);
  }

  if (expected) {
    const UPoly sf = exactalg::squarefree_part(e);
    if (sf.degree() < *expected)
      throw Error(ErrorCode::kNotSeparating, "squarefree eliminant has degree " + std::to_string(sf.degree()) +
                                                 ", expected " + std::to_string(*expected));
  }
  return e;
}

SolveReport count_solutions(const std::vector<MultiPoly>& system, std::optional<long> expected, std::uint64_t seed) {
  const int n = system_dim(system);
  SolveReport best;
  UPoly best_sf;
  long best_degree = -2;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    CounterRng rng(seed, static_cast<std::uint64_t>(attempt), 0x5e9a);
    std::vector<long> t;
    for (int k = 1; k < n; ++k) t.push_back(rng.uniform(1, kSeparatingMax));
    const UPoly e = eliminant(system, t);
    const UPoly sf = e.degree() > 0 ? exactalg::squarefree_part(e) : e;
    const long deg = std::max(sf.degree(), 0);
    if (deg > best_degree) {
      best_degree = deg;
      best_sf = sf;
      best.eliminant_degree = e.degree();
      best.separating_form = {1};
      best.separating_form.insert(best.separating_form.end(), t.begin(), t.end());
    }
    best.retries = attempt;
    if (!expected || deg == *expected) break;
  }
  best.n_complex = best_degree;
  best.n_real = best_sf.degree() > 0 ? exactalg::sturm_count(best_sf) : 0;
  best.generic = !expected || best.n_complex == *expected;
  return best;
}

SolveReport count_solutions(const wronski::WronskiSystem& sys, std::uint64_t seed) {
  return count_solutions(sys.polys, sys.family.volume.get_si(), seed);
}

std::string report_to_json(const SolveReport& r) {
  nlohmann::json j = {{"n_real", r.n_real},
                      {"n_complex", r.n_complex},
                      {"eliminant_degree", r.eliminant_degree},
                      {"generic", r.generic},
                      {"retries", r.retries},
                      {"separating_form", r.separating_form}};
  return j.dump();
}

}  // namespace toricbound::solver
