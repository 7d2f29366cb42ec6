#include "toricbound/exactalg/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace toricbound::exactalg {

Integer determinant(IntMatrix m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divexact(t, prev);
      }
    }
    prev = m[k][k];
  }
  return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve(RatMatrix m, std::vector<Rational> rhs) {
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    std::swap(rhs[k], rhs[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || sgn(m[i][k]) == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

int rank(const IntMatrix& in) {
  RatMatrix m;
  for (const auto& row : in) m.emplace_back(row.begin(), row.end());
  int r = 0;
  const size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    size_t p = static_cast<size_t>(r);
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[static_cast<size_t>(r)], m[p]);
    for (size_t i = static_cast<size_t>(r) + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[static_cast<size_t>(r)][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  std::vector<Integer> diag;
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block becomes the pivot
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
      if (sgn(q) != 0)
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (sgn(m[i][t]) != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
      if (sgn(q) != 0)
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (sgn(m[t][j]) != 0) clean = false;
    }
    if (!clean) continue;
    // the pivot must divide the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols; ++j)
        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
          for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

bool in_span_mod2(const IntMatrix& m, const std::vector<Integer>& v) {
  // row-reduce [m | v] over GF(2)
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  const size_t words = (cols + 1 + 63) / 64;
  std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(words, 0));
  auto set = [&](size_t i, size_t j) { a[i][j / 64] |= uint64_t{1} << (j % 64); };
  auto get = [&](size_t i, size_t j) { return (a[i][j / 64] >> (j % 64)) & 1u; };
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j)
      if (mpz_odd_p(m[i][j].get_mpz_t())) set(i, j);
    if (mpz_odd_p(v[i].get_mpz_t())) set(i, cols);
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && !get(p, c)) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (size_t i = 0; i < rows; ++i)
      if (i != r && get(i, c))
        for (size_t w = 0; w < words; ++w) a[i][w] ^= a[r][w];
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (get(i, cols)) return false;
  return true;
}

}  // namespace toricbound::exactalg
