#pragma once

#include <optional>
#include <vector>

#include "toricbound/exactalg/multipoly.hpp"

namespace toricbound::solver {

using exactalg::IntPoly;
using exactalg::Rational;
using exactalg::UPoly;

/// Bit i of a mask stands for variable i.
using VarMask = unsigned;

/// Removes monomial factors in the torus variables and the integer content.
IntPoly torus_primitive(const IntPoly& p, VarMask torus);

/// Eliminates the variables in `order` one at a time by pairwise resultants,
/// keeping every equation that does not involve the current variable. At most
/// `max_pairs` resultants are formed per step.
std::vector<IntPoly> eliminate(std::vector<IntPoly> eqs, const std::vector<int>& order, VarMask torus,
                               size_t max_pairs = 4);

/// A univariate polynomial in `keep` vanishing at the keep-coordinate of every
/// common zero of `eqs` (zero coordinates in the torus variables excluded
/// only to the extent of monomial factors). Gcd of the eliminations along
/// `orders`; the zero polynomial when every elimination collapsed.
UPoly project_to(const std::vector<IntPoly>& eqs, int keep, const std::vector<std::vector<int>>& orders,
                 VarMask torus, size_t max_pairs = 4);

/// All eliminated orders of `vars` worth trying: the given order and its
/// reverse.
std::vector<std::vector<int>> default_orders(std::vector<int> vars);

/// Substitutes a rational value for a variable and returns the primitive
/// integer result.
IntPoly substitute_value(const IntPoly& p, int var, const Rational& value);

/// Real common zeros of `eqs` in the variables `vars`, provided every real
/// candidate coordinate is rational; nullopt otherwise. Zeros with a vanishing
/// torus coordinate are dropped.
std::optional<std::vector<std::vector<Rational>>> rational_real_zeros(const std::vector<IntPoly>& eqs,
                                                                      const std::vector<int>& vars, VarMask torus);

/// Removes from e every root it shares with b (repeatedly), keeping e primitive.
UPoly remove_common_roots(UPoly e, const UPoly& b);

}  // namespace toricbound::solver
