#pragma once

#include <optional>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::exactalg {

/// Half-open interval (lo, hi]; a missing endpoint stands for -inf / +inf.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval whole_line() { return {}; }
};

/// Sturm chain p, p', -rem(...), ... computed with sign-corrected pseudo
/// remainders so every entry stays integral.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of a squarefree p in the interval.
/// Throws NotSquarefree if gcd(p, p') is not constant.
int sturm_count(const UPoly& p, const Interval& interval = Interval::whole_line());

/// Same count, on a precomputed chain.
int sturm_count(const std::vector<UPoly>& chain, const Interval& interval);

}  // namespace toricbound::exactalg
