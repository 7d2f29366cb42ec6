#pragma once

#include <utility>
#include <vector>

#include "toricbound/error.hpp"
#include "toricbound/exactalg/multipoly.hpp"
#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::exactalg {

namespace detail {

inline Integer unit(const Integer*) { return 1; }
inline UPoly unit(const UPoly*) { return UPoly::constant(1); }
inline IntPoly unit(const IntPoly*) { return IntPoly(Integer(1)); }

template <class R>
R ring_one() {
  return unit(static_cast<const R*>(nullptr));
}

template <class R>
void trim(std::vector<R>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
R power(const R& x, int k) {
  R r = ring_one<R>();
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, for coefficient vectors over R.
template <class R>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return a;
  const R& lb = b.back();
  int e = da - db + 1;
  while (da >= db && !a.empty()) {
    R la = a.back();
    for (auto& c : a) c = c * lb;
    const int shift = da - db;
    for (int j = 0; j < db; ++j) a[static_cast<size_t>(shift + j)] = a[static_cast<size_t>(shift + j)] - la * b[static_cast<size_t>(j)];
    a.pop_back();
    --e;
    trim(a);
    da = static_cast<int>(a.size()) - 1;
  }
  if (e > 0) {
    R f = power(lb, e);
    for (auto& c : a) c = c * f;
  }
  return a;
}

}  // namespace detail

/// Resultant of two polynomials given by coefficient vectors over an integral
/// domain R (lowest degree first), by the subresultant remainder sequence.
template <class R>
R subresultant(std::vector<R> a, std::vector<R> b) {
  detail::trim(a);
  detail::trim(b);
  if (a.empty() || b.empty()) return R{};
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  int s = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if (da % 2 == 1 && db % 2 == 1) s = -s;
  }
  if (db == 0) return detail::power(b.back(), da);
  R g = detail::ring_one<R>();
  R h = detail::ring_one<R>();
  while (true) {
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    std::vector<R> r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    da = db;
    if (r.empty()) return R{};
    const R denom = g * detail::power(h, delta);
    for (auto& c : r) c = divexact(c, denom);
    b = std::move(r);
    db = static_cast<int>(b.size()) - 1;
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = divexact(detail::power(g, delta), detail::power(h, delta - 1));
    }
    if (db == 0) {
      R res = da == 0 ? detail::ring_one<R>() : divexact(detail::power(b.back(), da), detail::power(h, da - 1));
      return s < 0 ? R(-res) : res;
    }
  }
}

/// Resultant with respect to `var`. Uses a dense univariate coefficient ring
/// when at most one other variable occurs.
IntPoly resultant(const IntPoly& f, const IntPoly& g, int var);
/// Rational version; the result is determined up to a nonzero constant factor.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Discards content and monomial factors in the variables flagged by
/// `torus_mask` (bit i for variable i).
IntPoly strip_torus_factors(const IntPoly& p, unsigned torus_mask);

}  // namespace toricbound::exactalg
