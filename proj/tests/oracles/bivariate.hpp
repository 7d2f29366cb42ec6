#pragma once

// Real solution count of a two-variable system by projecting to x: the
// resultant in y is interpolated from Sylvester determinants at integer
// points, and its real roots are counted by Descartes bisection. Assumes the
// projection to x is one-to-one on solutions, which holds for random data.

#include <map>
#include <utility>
#include <vector>

#include "oracles/descartes.hpp"
#include "oracles/sylvester.hpp"

namespace oracle {

using QPoly = std::vector<Q>;
using BiPoly = std::map<std::pair<int, int>, Q>;  // (deg x, deg y) -> coefficient

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Q f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline QPoly poly_div(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Q f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline QPoly squarefree(QPoly p) {
  trim(p);
  if (p.size() <= 1) return p;
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  QPoly g = poly_gcd(p, d);
  return g.size() <= 1 ? p : poly_div(p, g);
}

inline QPoly in_y_at(const BiPoly& f, const Q& x, int dy) {
  QPoly c(static_cast<size_t>(dy) + 1, Q(0));
  for (const auto& [e, v] : f) {
    Q t = v;
    for (int i = 0; i < e.first; ++i) t *= x;
    c[static_cast<size_t>(e.second)] += t;
  }
  return c;
}

inline Q det_at(const BiPoly& f, const BiPoly& g, const Q& x, int df, int dg) {
  QPoly a = in_y_at(f, x, df), b = in_y_at(g, x, dg);
  const size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
  std::vector<std::vector<Q>> s(N, std::vector<Q>(N, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return rational_det(s);
}

inline QPoly resultant_in_x(const BiPoly& f, const BiPoly& g) {
  int fx = 0, fy = 0, gx = 0, gy = 0;
  for (const auto& [e, v] : f) fx = std::max(fx, e.first), fy = std::max(fy, e.second);
  for (const auto& [e, v] : g) gx = std::max(gx, e.first), gy = std::max(gy, e.second);
  const int bound = fy * gx + gy * fx;
  // Lagrange interpolation through x = 0..bound
  QPoly r(static_cast<size_t>(bound) + 1, Q(0));
  for (int i = 0; i <= bound; ++i) {
    Q yi = det_at(f, g, Q(i), fy, gy);
    if (sgn(yi) == 0) continue;
    QPoly basis{Q(1)};
    Q denom = 1;
    for (int j = 0; j <= bound; ++j) {
      if (j == i) continue;
      QPoly next(basis.size() + 1, Q(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = std::move(next);
      denom *= i - j;
    }
    for (size_t k = 0; k < basis.size() && k < r.size(); ++k) r[k] += basis[k] * yi / denom;
  }
  trim(r);
  return r;
}

// Real solutions with x, y both nonzero.
inline int count_real_torus_solutions(const BiPoly& f, const BiPoly& g) {
  QPoly r = resultant_in_x(f, g);
  while (!r.empty() && sgn(r[0]) == 0) r.erase(r.begin());
  QPoly sf = squarefree(r);
  QPoly f0, g0;  // restrictions to y = 0
  for (const auto& [e, v] : f)
    if (e.second == 0) {
      if (f0.size() <= static_cast<size_t>(e.first)) f0.resize(static_cast<size_t>(e.first) + 1, Q(0));
      f0[static_cast<size_t>(e.first)] += v;
    }
  for (const auto& [e, v] : g)
    if (e.second == 0) {
      if (g0.size() <= static_cast<size_t>(e.first)) g0.resize(static_cast<size_t>(e.first) + 1, Q(0));
      g0[static_cast<size_t>(e.first)] += v;
    }
  trim(f0);
  trim(g0);
  if (!f0.empty() && !g0.empty()) {
    QPoly b = poly_gcd(poly_gcd(f0, g0), sf);
    if (b.size() > 1) sf = poly_div(sf, b);
  }
  return count_real_roots(sf);
}

}  // namespace oracle
