#pragma once

// Real-root counting by Descartes' rule of signs with interval bisection.
// Independent of the Sturm machinery; used only as a test oracle.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;

inline int sign_variations(const std::vector<Q>& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline Q eval(const std::vector<Q>& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Coefficients of p(a + (b - a) y).
inline std::vector<Q> rescale(const std::vector<Q>& p, const Q& a, const Q& b) {
  std::vector<Q> out(p.size(), Q(0));
  std::vector<Q> pw{Q(1)};  // (a + w y)^k
  const Q w = b - a;
  for (size_t k = 0; k < p.size(); ++k) {
    for (size_t j = 0; j < pw.size(); ++j) out[j] += p[k] * pw[j];
    std::vector<Q> next(pw.size() + 1, Q(0));
    for (size_t j = 0; j < pw.size(); ++j) {
      next[j] += pw[j] * a;
      next[j + 1] += pw[j] * w;
    }
    pw = std::move(next);
  }
  return out;
}

// Upper bound on the Descartes count for roots of p in (a, b).
inline int descartes_bound(const std::vector<Q>& p, const Q& a, const Q& b) {
  std::vector<Q> r = rescale(p, a, b);
  std::vector<Q> rev(r.rbegin(), r.rend());
  // Taylor shift by 1
  const size_t n = rev.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = n - 1; j > i; --j) rev[j - 1] += rev[j];
  return sign_variations(rev);
}

inline int count_open(const std::vector<Q>& p, const Q& a, const Q& b, int depth = 0) {
  int v = descartes_bound(p, a, b);
  if (v <= 1 || depth > 200) return v;
  Q m = (a + b) / 2;
  int at_mid = sgn(eval(p, m)) == 0 ? 1 : 0;
  return count_open(p, a, m, depth + 1) + at_mid + count_open(p, m, b, depth + 1);
}

// Distinct real roots of a squarefree polynomial, coefficients lowest first.
inline int count_real_roots(std::vector<Q> p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.size() <= 1) return 0;
  Q bound = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Q r = abs(p[i] / p.back());
    if (r > bound) bound = r;
  }
  bound += 1;  // Cauchy bound: all roots lie strictly inside
  return count_open(p, -bound, bound);
}

}  // namespace oracle
