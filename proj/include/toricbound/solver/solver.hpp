#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricbound/exactalg/multipoly.hpp"
#include "toricbound/wronski/wronski.hpp"

namespace toricbound::solver {

using exactalg::MultiPoly;
using exactalg::UPoly;

struct SolveReport {
  long n_real = 0;
  long n_complex = 0;
  int eliminant_degree = 0;
  bool generic = true;
  int retries = 0;
  /// (1, t2, t3) of the form u = x1 + t2 x2 + t3 x3 that was used.
  std::vector<long> separating_form;
};

/// Univariate eliminant in u = x1 + t[0] x2 + t[1] x3 whose roots are the
/// u-values of the torus solutions, primitive and with the roots coming from
/// solutions on coordinate hyperplanes divided out. t has n - 1 entries.
/// Throws NonGenericSystem when elimination yields the zero polynomial,
/// DimensionUnsupported for n > 3, and NotSeparating when `expected` is given
/// and the squarefree part has lower degree.
UPoly eliminant(const std::vector<MultiPoly>& system, const std::vector<long>& t,
                std::optional<long> expected = std::nullopt);

/// Picks t from {1..97} with a counter-based generator keyed by `seed`,
/// retrying up to 8 times while the squarefree eliminant has degree other
/// than `expected`.
SolveReport count_solutions(const std::vector<MultiPoly>& system, std::optional<long> expected, std::uint64_t seed);
SolveReport count_solutions(const wronski::WronskiSystem& sys, std::uint64_t seed);

inline constexpr int kMaxRetries = 8;
inline constexpr long kSeparatingMax = 97;

std::string report_to_json(const SolveReport& r);

}  // namespace toricbound::solver
