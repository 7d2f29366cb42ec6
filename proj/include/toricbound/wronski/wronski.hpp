#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricbound/exactalg/multipoly.hpp"
#include "toricbound/exactalg/sturm.hpp"
#include "toricbound/polytope/polytope.hpp"

namespace toricbound::wronski {

using exactalg::Integer;
using exactalg::MultiPoly;
using exactalg::Rational;

enum class FamilyKind { kGeneric, kOrderPolytope, kChainPolytope };

/// Everything about a Wronski family except the coefficient rows and s.
struct WronskiFamily {
  polytope::LatticePolytope polytope;
  std::vector<int> folding;
  /// Exponent of s at each lattice point.
  std::vector<long> omega;
  std::vector<Rational> alpha;
  Integer volume;
  long signature = 0;
  FamilyKind kind = FamilyKind::kGeneric;
};

/// Throws MissingFolding, DimensionMismatch, or InvalidInput when alpha has a
/// zero entry or changes sign inside a colour class.
WronskiFamily make_family(const polytope::LatticePolytope& poly, const polytope::Triangulation& tri,
                          std::vector<Rational> alpha, FamilyKind kind = FamilyKind::kGeneric);
/// Uses the built-in's deformation exponents rather than its lifting.
WronskiFamily make_family(const polytope::BuiltinPolytope& b, std::vector<Rational> alpha);
/// alpha == 1 everywhere.
WronskiFamily builtin_family(const std::string& name);
/// Same family with new weights; throws like make_family.
WronskiFamily with_weights(WronskiFamily fam, std::vector<Rational> alpha);
WronskiFamily poset_family(const poset::Poset& p, polytope::PosetPolytopeKind kind);

struct WronskiSystem {
  WronskiFamily family;
  /// n rows of n+1 entries, indexed by colour.
  std::vector<std::vector<Rational>> coeffs;
  Rational s = 1;
  std::vector<MultiPoly> polys;

  int dim() const { return family.polytope.dim; }
};

/// F_i = sum over lattice points m of c[i][kappa(m)] s^omega(m) alpha_m x^m.
/// Throws DimensionMismatch on a wrongly shaped coefficient matrix and
/// InvalidInput for s outside (0, 1].
WronskiSystem build_system(const WronskiFamily& fam, std::vector<std::vector<Rational>> coeffs, const Rational& s);
WronskiSystem build_system(const polytope::LatticePolytope& poly, const polytope::Triangulation& tri,
                           std::vector<Rational> alpha, std::vector<std::vector<Rational>> coeffs, const Rational& s);

/// The coefficient rows with s kept as variable number dim (so x, y, s for a
/// polygon).
std::vector<MultiPoly> build_symbolic(const WronskiFamily& fam, const std::vector<std::vector<Rational>>& coeffs);

/// G_i(x, s) = sum over kappa(m) = i of alpha_m s^omega(m) x^m, with s as
/// variable number dim.
std::vector<MultiPoly> colour_polynomials(const WronskiFamily& fam);

struct SPolicy {
  enum class Kind { kFixed, kGrid };
  Kind kind = Kind::kFixed;
  Rational value = 1;

  static SPolicy fixed(const Rational& q) { return {Kind::kFixed, q}; }
  /// s = k/1000 with k uniform in [1, 999].
  static SPolicy grid() { return {Kind::kGrid, 0}; }
  /// "fixed:Q" or "grid".
  static SPolicy parse(const std::string& text);
  std::string to_string() const;
};

struct CoeffRange {
  long lo = -60;
  long hi = 60;

  /// "LO..HI".
  static CoeffRange parse(const std::string& text);
};

/// Deterministic in (seed, stream); rows that come out all zero are redrawn.
WronskiSystem sample_system(const WronskiFamily& fam, std::uint64_t seed, const CoeffRange& range,
                            const SPolicy& policy, std::uint64_t stream = 0);

// --- centre of projection --------------------------------------------------

enum class CenterVerdict { kAvoided, kMeets, kAvoidedByLemma };

struct CenterMeeting {
  Rational s;
  std::vector<std::vector<Rational>> points;
};

struct CenterReport {
  CenterVerdict verdict = CenterVerdict::kAvoided;
  std::vector<CenterMeeting> meetings;
  std::string detail;
};

/// Decides whether the colour polynomials share a real zero in the torus for
/// some nonzero s in the domain. Throws UndecidedAtScale when elimination
/// cannot settle it (dimension above 3, or real roots that are not rational).
CenterReport center_avoidance(const WronskiFamily& fam,
                              const exactalg::Interval& s_domain = exactalg::Interval::whole_line());

std::string verdict_name(CenterVerdict v);

// --- JSON ---------------------------------------------------------------

std::string system_to_json(const WronskiSystem& sys);
WronskiSystem system_from_json(const std::string& text);

}  // namespace toricbound::wronski
