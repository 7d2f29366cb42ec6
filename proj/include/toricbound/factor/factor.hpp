#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::factor {

using exactalg::Integer;
using exactalg::Rational;
using exactalg::UPoly;

struct FactorizationProblem {
  std::vector<int> a;
  /// f(z) = 1 + b_1 z + ... + b_n z^n, lowest degree first.
  std::vector<Rational> target;
  std::optional<long> r;
  std::optional<long> c;
};

/// Throws LengthMismatch when |b| != sum a, NonGenericTarget when b_n = 0.
FactorizationProblem wronski_to_target(std::span<const int> a, std::span<const Rational> b);

/// Coefficient of x^a in (x_1 + ... + x_k)^r (x_1^2 + ... + x_k^2)^c. Throws
/// ParityMismatch unless r + 2c = sum a.
Integer count_real_factorizations_gf(std::span<const int> a, long r, long c);

/// Counts placements of r labelled roots and c labelled conjugate pairs into
/// boxes of sizes a one at a time. Throws ParityMismatch, and ScaleExceeded
/// when sum a > 16.
Integer count_real_factorizations_bruteforce(std::span<const int> a, long r, long c);
inline constexpr int kBruteForceMax = 16;

struct Bounds {
  Integer lower;
  Integer upper;
  long max_distinct = 0;
};
Bounds factorization_bounds(std::span<const int> a);

/// Throws NotSquarefree, and NonGenericTarget when deg f != sum a.
Integer count_for_target(std::span<const int> a, const UPoly& f);
Integer count_for_target(std::span<const int> a, std::span<const Rational> f);

struct TableRow {
  long r = 0;
  long c = 0;
  Integer count;
};
/// One row per admissible number of real roots, increasing.
std::vector<TableRow> factorization_table(std::span<const int> a);

/// Right-hand sides b_1..b_n of the triangular system equivalent to n rows
/// c_{i,0..n} of a chain-union Wronski system. nullopt when the rows are
/// dependent.
std::optional<std::vector<Rational>> triangular_rhs(const std::vector<std::vector<Rational>>& rows);

enum class PhiConvention {
  /// x_{i,j} -> x_{i,1} ... x_{i,j}: the elements above and including x_{i,j}.
  kUpperProduct,
  /// x_{i,j} -> x_{i,j} ... x_{i,a_i}.
  kLowerProduct,
};

/// Formal check that the substitution turns the generic chain-polytope
/// Wronski polynomial of the union of chains into the order-polytope one
/// (same monomials carrying the same coefficient index).
bool phi_maps_chain_to_order(std::span<const int> a, PhiConvention conv = PhiConvention::kUpperProduct);

}  // namespace toricbound::factor
