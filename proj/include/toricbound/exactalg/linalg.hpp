#pragma once

#include <optional>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::exactalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);

/// Solves m x = rhs over Q; nullopt when m is singular.
std::optional<std::vector<Rational>> solve(RatMatrix m, std::vector<Rational> rhs);

/// Rank over Q.
int rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix m);

/// Whether v lies in the GF(2) span of the columns of m.
bool in_span_mod2(const IntMatrix& m, const std::vector<Integer>& v);

}  // namespace toricbound::exactalg
