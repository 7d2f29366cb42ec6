#include "toricbound/factor/factor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "toricbound/error.hpp"
#include "toricbound/exactalg/linalg.hpp"
#include "toricbound/exactalg/sturm.hpp"
#include "toricbound/polytope/polytope.hpp"
#include "toricbound/poset/poset.hpp"

namespace toricbound::factor {

namespace {

int checked_total(std::span<const int> a) {
  if (a.empty()) throw Error(ErrorCode::kInvalidInput, "need at least one factor degree");
  int total = 0;
  for (int v : a) {
    if (v < 1) throw Error(ErrorCode::kInvalidInput, "factor degrees must be positive");
    total += v;
  }
  return total;
}

void check_parity(std::span<const int> a, long r, long c) {
  const int total = checked_total(a);
  if (r < 0 || c < 0 || r + 2 * c != total)
    throw Error(ErrorCode::kParityMismatch, "r + 2c = " + std::to_string(r + 2 * c) + " but the degrees sum to " +
                                                std::to_string(total));
}

}  // namespace

FactorizationProblem wronski_to_target(std::span<const int> a, std::span<const Rational> b) {
  const int total = checked_total(a);
  if (static_cast<int>(b.size()) != total)
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(total) + " values b_j, got " + std::to_string(b.size()));
  if (b.back() == 0) throw Error(ErrorCode::kNonGenericTarget, "f has degree below the sum of the factor degrees");
  FactorizationProblem p;
  p.a.assign(a.begin(), a.end());
  p.target.emplace_back(1);
  p.target.insert(p.target.end(), b.begin(), b.end());
  return p;
}

Integer count_real_factorizations_gf(std::span<const int> a, long r, long c) {
  check_parity(a, r, c);
  // dense coefficients truncated to x^a, mixed radix index
  const size_t k = a.size();
  std::vector<size_t> stride(k, 1);
  size_t size = 1;
  for (size_t i = 0; i < k; ++i) {
    stride[i] = size;
    size *= static_cast<size_t>(a[i]) + 1;
  }
  std::vector<Integer> poly(size, Integer(0));
  poly[0] = 1;
  auto multiply = [&](int power) {
    std::vector<Integer> next(size, Integer(0));
    for (size_t idx = 0; idx < size; ++idx) {
      if (sgn(poly[idx]) == 0) continue;
      for (size_t i = 0; i < k; ++i) {
        const int have = static_cast<int>(idx / stride[i] % (static_cast<size_t>(a[i]) + 1));
        if (have + power <= a[i]) next[idx + stride[i] * static_cast<size_t>(power)] += poly[idx];
      }
    }
    poly = std::move(next);
  };
  for (long i = 0; i < r; ++i) multiply(1);
  for (long i = 0; i < c; ++i) multiply(2);
  return poly[size - 1];
}

Integer count_real_factorizations_bruteforce(std::span<const int> a, long r, long c) {
  check_parity(a, r, c);
  if (std::accumulate(a.begin(), a.end(), 0) > kBruteForceMax)
    throw Error(ErrorCode::kScaleExceeded, "brute force is limited to degree " + std::to_string(kBruteForceMax));
  std::vector<int> room(a.begin(), a.end());
  unsigned long long count = 0;
  std::function<void(long, long)> place = [&](long singles, long pairs) {
    if (singles == 0 && pairs == 0) {
      ++count;
      return;
    }
    const int need = singles > 0 ? 1 : 2;
    for (auto& free : room) {
      if (free < need) continue;
      free -= need;
      if (singles > 0)
        place(singles - 1, pairs);
      else
        place(singles, pairs - 1);
      free += need;
    }
  };
  place(r, c);
  return Integer(std::to_string(count), 10);
}

Bounds factorization_bounds(std::span<const int> a) {
  const int total = checked_total(a);
  Bounds b;
  b.lower = poset::chain_union_imbalance(a);
  b.upper = poset::multinomial(a);
  // one value per admissible r
  b.max_distinct = 1 + total / 2;
  return b;
}

Integer count_for_target(std::span<const int> a, const UPoly& f) {
  const int total = checked_total(a);
  if (f.degree() != total)
    throw Error(ErrorCode::kNonGenericTarget,
                "target has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(total));
  if (!exactalg::is_squarefree(f)) throw Error(ErrorCode::kNotSquarefree, "target has a repeated root");
  const long r = exactalg::sturm_count(f);
  return count_real_factorizations_gf(a, r, (total - r) / 2);
}

Integer count_for_target(std::span<const int> a, std::span<const Rational> f) {
  Integer den = 1;
  for (const auto& q : f) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> coeffs;
  for (const auto& q : f) coeffs.push_back(Integer(q * den));
  return count_for_target(a, UPoly(std::move(coeffs)));
}

std::vector<TableRow> factorization_table(std::span<const int> a) {
  const int total = checked_total(a);
  std::vector<TableRow> rows;
  for (long r = total % 2; r <= total; r += 2)
    rows.push_back({r, (total - r) / 2, count_real_factorizations_gf(a, r, (total - r) / 2)});
  return rows;
}

std::optional<std::vector<Rational>> triangular_rhs(const std::vector<std::vector<Rational>>& rows) {
  const size_t n = rows.size();
  exactalg::RatMatrix m;
  std::vector<Rational> rhs;
  for (const auto& row : rows) {
    if (row.size() != n + 1) throw Error(ErrorCode::kDimensionMismatch, "rows need n+1 entries");
    m.emplace_back(row.begin() + 1, row.end());
    rhs.push_back(-row[0]);
  }
  return exactalg::solve(std::move(m), std::move(rhs));
}

bool phi_maps_chain_to_order(std::span<const int> a, PhiConvention conv) {
  checked_total(a);
  const poset::Poset p = poset::chain_union(a);
  // x_{i,j}, counted from the top of chain i, is the element labelled a_i - j + 1
  auto element = [&](size_t i, int j) {
    const std::string label = std::string(1, static_cast<char>('a' + i)) + std::to_string(a[i] - j + 1);
    return *p.index_of(label);
  };

  using Term = std::pair<std::vector<int>, int>;  // exponent vector, coefficient index
  std::multiset<Term> chain_side, order_side;
  std::vector<int> pick(a.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == a.size()) {
      std::vector<int> e(static_cast<size_t>(p.size()), 0);
      int index = 0;
      for (size_t q = 0; q < a.size(); ++q) {
        const int j = pick[q];
        index += j;
        if (j == 0) continue;
        if (conv == PhiConvention::kUpperProduct) {
          for (int l = 1; l <= j; ++l) e[static_cast<size_t>(element(q, l))] += 1;
        } else {
          for (int l = j; l <= a[q]; ++l) e[static_cast<size_t>(element(q, l))] += 1;
        }
      }
      chain_side.insert({e, index});
      return;
    }
    for (int j = 0; j <= a[i]; ++j) {
      pick[i] = j;
      rec(i + 1);
    }
  };
  rec(0);

  const auto order = polytope::order_polytope(p);
  for (size_t m = 0; m < order.polytope.lattice_points.size(); ++m) {
    const auto& pt = order.polytope.lattice_points[m];
    order_side.insert({std::vector<int>(pt.begin(), pt.end()), order.ranks[m]});
  }
  return chain_side == order_side;
}

}  // namespace toricbound::factor
