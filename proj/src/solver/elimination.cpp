#include "toricbound/solver/elimination.hpp"

#include <algorithm>

#include "toricbound/error.hpp"
#include "toricbound/exactalg/resultant.hpp"
#include "toricbound/exactalg/sturm.hpp"

namespace toricbound::solver {

using exactalg::MultiPoly;

IntPoly torus_primitive(const IntPoly& p, VarMask torus) {
  if (p.is_zero()) return p;
  return exactalg::strip_torus_factors(p, torus);
}

std::vector<IntPoly> eliminate(std::vector<IntPoly> eqs, const std::vector<int>& order, VarMask torus,
                               size_t max_pairs) {
  for (auto& e : eqs) e = torus_primitive(e, torus);
  for (int v : order) {
    std::vector<IntPoly> next, with;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      (e.depends_on(v) ? with : next).push_back(std::move(e));
    }
    std::stable_sort(with.begin(), with.end(), [v](const IntPoly& a, const IntPoly& b) {
      if (a.degree_in(v) != b.degree_in(v)) return a.degree_in(v) < b.degree_in(v);
      return a.size() < b.size();
    });
    size_t formed = 0;
    for (size_t j = 1; j < with.size() && formed < max_pairs; ++j) {
      for (size_t i = 0; i < j && formed < max_pairs; ++i) {
        IntPoly r = torus_primitive(exactalg::resultant(with[i], with[j], v), torus);
        ++formed;
        if (r.is_zero()) continue;
        if (std::find(next.begin(), next.end(), r) == next.end()) next.push_back(std::move(r));
      }
    }
    eqs = std::move(next);
  }
  return eqs;
}

UPoly project_to(const std::vector<IntPoly>& eqs, int keep, const std::vector<std::vector<int>>& orders,
                 VarMask torus, size_t max_pairs) {
  UPoly total;
  bool have = false;
  for (const auto& order : orders) {
    UPoly g;
    bool any = false;
    for (const auto& e : eliminate(eqs, order, torus, max_pairs)) {
      bool only_keep = true;
      for (const auto& [ex, c] : e.terms())
        for (int i = 0; i < exactalg::kMaxVars; ++i)
          if (i != keep && ex[static_cast<size_t>(i)] != 0) only_keep = false;
      if (!only_keep) continue;
      g = any ? exactalg::gcd(g, exactalg::to_upoly(e, keep)) : exactalg::to_upoly(e, keep).primitive();
      any = true;
    }
    if (!any) continue;
    total = have ? exactalg::gcd(total, g) : g;
    have = true;
  }
  return total;
}

std::vector<std::vector<int>> default_orders(std::vector<int> vars) {
  std::vector<std::vector<int>> out{vars};
  if (vars.size() > 1) {
    std::reverse(vars.begin(), vars.end());
    out.push_back(vars);
  }
  return out;
}

IntPoly substitute_value(const IntPoly& p, int var, const Rational& value) {
  if (p.is_zero()) return p;
  MultiPoly r = exactalg::to_rational(p).evaluate(var, value);
  if (r.is_zero()) return {};
  return exactalg::to_primitive_integer(r);
}

UPoly remove_common_roots(UPoly e, const UPoly& b) {
  if (b.is_zero() || b.is_constant() || e.is_zero()) return e.is_zero() ? e : e.primitive();
  const UPoly bs = exactalg::squarefree_part(b);
  for (UPoly g = exactalg::gcd(e, bs); g.degree() > 0; g = exactalg::gcd(e, bs)) e = exactalg::divexact(e, g);
  return e.primitive();
}

std::optional<std::vector<std::vector<Rational>>> rational_real_zeros(const std::vector<IntPoly>& eqs,
                                                                      const std::vector<int>& vars, VarMask torus) {
  std::vector<std::vector<Rational>> out;
  std::vector<IntPoly> live;
  for (const auto& e : eqs)
    if (!e.is_zero()) live.push_back(e);
  if (vars.empty()) {
    if (live.empty()) out.push_back({});
    return out;
  }
  if (live.empty()) return std::nullopt;

  const int v = vars[0];
  const std::vector<int> rest(vars.begin() + 1, vars.end());
  UPoly p = project_to(live, v, default_orders(rest), torus);
  if (p.is_zero()) return std::nullopt;
  if (torus & (1u << v)) p = p.strip_x_power();
  if (p.degree() <= 0) return out;
  const UPoly sf = exactalg::squarefree_part(p);
  const int nreal = exactalg::sturm_count(sf);
  if (nreal == 0) return out;
  auto roots = exactalg::rational_roots(sf);
  if (!roots || static_cast<int>(roots->size()) < nreal) return std::nullopt;
  for (const auto& r : *roots) {
    std::vector<IntPoly> sub;
    for (const auto& e : live) sub.push_back(substitute_value(e, v, r));
    auto tail = rational_real_zeros(sub, rest, torus);
    if (!tail) return std::nullopt;
    for (auto& t : *tail) {
      t.insert(t.begin(), r);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace toricbound::solver
