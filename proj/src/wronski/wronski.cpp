#include "toricbound/wronski/wronski.hpp"

#include <algorithm>
#include <map>

#include "toricbound/error.hpp"
#include "toricbound/rng.hpp"
#include "toricbound/solver/elimination.hpp"

namespace toricbound::wronski {

using exactalg::Exponent;
using exactalg::IntPoly;
using exactalg::UPoly;

namespace {

Rational rational_pow(const Rational& s, long k) {
  Rational r = 1;
  const Rational base = k >= 0 ? s : Rational(1) / s;
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

Exponent exponent_of(const polytope::Point& p) {
  if (p.size() > static_cast<size_t>(exactalg::kMaxVars))
    throw Error(ErrorCode::kUnsupportedDimension, "polynomials support at most 4 variables");
  Exponent e{};
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw Error(ErrorCode::kInvalidInput, "lattice points must have nonnegative coordinates");
    e[i] = static_cast<int>(p[i]);
  }
  return e;
}

void check_alpha(const WronskiFamily& f) {
  if (f.alpha.size() != f.polytope.lattice_points.size())
    throw Error(ErrorCode::kDimensionMismatch, "alpha must give one weight per lattice point");
  std::map<int, int> sign;
  for (size_t i = 0; i < f.alpha.size(); ++i) {
    const int sg = sgn(f.alpha[i]);
    if (sg == 0) throw Error(ErrorCode::kInvalidInput, "weights must be nonzero");
    auto [it, fresh] = sign.try_emplace(f.folding[i], sg);
    if (!fresh && it->second != sg)
      throw Error(ErrorCode::kInvalidInput, "weight sign changes inside colour class " + std::to_string(f.folding[i]));
  }
}

}  // namespace

WronskiFamily make_family(const polytope::LatticePolytope& poly, const polytope::Triangulation& tri,
                          std::vector<Rational> alpha, FamilyKind kind) {
  if (!tri.folding) throw Error(ErrorCode::kMissingFolding, "triangulation has no folding");
  const size_t npts = poly.lattice_points.size();
  if (tri.folding->size() != npts || tri.lifting.size() != npts)
    throw Error(ErrorCode::kDimensionMismatch, "folding and lifting need one entry per lattice point");
  WronskiFamily f;
  f.polytope = poly;
  f.folding = *tri.folding;
  for (int c : f.folding)
    if (c < 0 || c > poly.dim) throw Error(ErrorCode::kMissingFolding, "lattice point without a colour");
  f.omega = tri.lifting;
  f.alpha = std::move(alpha);
  f.kind = kind;
  check_alpha(f);
  f.signature = polytope::fold_and_sign(poly, tri).signature;
  f.volume = polytope::normalized_volume(poly, &tri);
  return f;
}

WronskiFamily make_family(const polytope::BuiltinPolytope& b, std::vector<Rational> alpha) {
  WronskiFamily f = make_family(b.polytope, b.triangulation, std::move(alpha));
  f.omega = b.deformation;
  return f;
}

WronskiFamily builtin_family(const std::string& name) {
  auto b = polytope::builtin(name);
  return make_family(b, std::vector<Rational>(b.polytope.lattice_points.size(), Rational(1)));
}

WronskiFamily with_weights(WronskiFamily fam, std::vector<Rational> alpha) {
  fam.alpha = std::move(alpha);
  check_alpha(fam);
  return fam;
}

WronskiFamily poset_family(const poset::Poset& p, polytope::PosetPolytopeKind kind) {
  auto pp = kind == polytope::PosetPolytopeKind::kOrder ? polytope::order_polytope(p) : polytope::chain_polytope(p);
  auto tri = polytope::canonical_triangulation(p, pp, kind);
  return make_family(pp.polytope, tri, std::vector<Rational>(pp.polytope.lattice_points.size(), Rational(1)),
                     kind == polytope::PosetPolytopeKind::kOrder ? FamilyKind::kOrderPolytope
                                                                 : FamilyKind::kChainPolytope);
}

WronskiSystem build_system(const WronskiFamily& fam, std::vector<std::vector<Rational>> coeffs, const Rational& s) {
  const int n = fam.polytope.dim;
  if (static_cast<int>(coeffs.size()) != n)
    throw Error(ErrorCode::kDimensionMismatch, "need " + std::to_string(n) + " coefficient rows");
  for (const auto& row : coeffs)
    if (static_cast<int>(row.size()) != n + 1)
      throw Error(ErrorCode::kDimensionMismatch, "each coefficient row needs " + std::to_string(n + 1) + " entries");
  if (s <= 0 || s > 1) throw Error(ErrorCode::kInvalidInput, "s must lie in (0, 1]");
  if (fam.folding.size() != fam.polytope.lattice_points.size())
    throw Error(ErrorCode::kMissingFolding, "family has no folding");

  WronskiSystem sys;
  sys.family = fam;
  sys.s = s;
  sys.polys.assign(static_cast<size_t>(n), MultiPoly());
  for (size_t m = 0; m < fam.polytope.lattice_points.size(); ++m) {
    const Exponent e = exponent_of(fam.polytope.lattice_points[m]);
    const Rational w = rational_pow(s, fam.omega[m]) * fam.alpha[m];
    const auto k = static_cast<size_t>(fam.folding[m]);
    for (int i = 0; i < n; ++i) sys.polys[static_cast<size_t>(i)].add_term(e, coeffs[static_cast<size_t>(i)][k] * w);
  }
  sys.coeffs = std::move(coeffs);
  return sys;
}

WronskiSystem build_system(const polytope::LatticePolytope& poly, const polytope::Triangulation& tri,
                           std::vector<Rational> alpha, std::vector<std::vector<Rational>> coeffs, const Rational& s) {
  return build_system(make_family(poly, tri, std::move(alpha)), std::move(coeffs), s);
}

std::vector<MultiPoly> build_symbolic(const WronskiFamily& fam, const std::vector<std::vector<Rational>>& coeffs) {
  const int n = fam.polytope.dim;
  if (n + 1 > exactalg::kMaxVars) throw Error(ErrorCode::kUnsupportedDimension, "no room for the variable s");
  if (static_cast<int>(coeffs.size()) != n) throw Error(ErrorCode::kDimensionMismatch, "wrong number of rows");
  const long shift = fam.omega.empty() ? 0 : *std::min_element(fam.omega.begin(), fam.omega.end());
  std::vector<MultiPoly> out(static_cast<size_t>(n));
  for (size_t m = 0; m < fam.polytope.lattice_points.size(); ++m) {
    Exponent e = exponent_of(fam.polytope.lattice_points[m]);
    e[static_cast<size_t>(n)] = static_cast<int>(fam.omega[m] - std::min(shift, 0L));
    for (int i = 0; i < n; ++i) {
      const auto& row = coeffs[static_cast<size_t>(i)];
      if (static_cast<int>(row.size()) != n + 1) throw Error(ErrorCode::kDimensionMismatch, "wrong row length");
      out[static_cast<size_t>(i)].add_term(e, row[static_cast<size_t>(fam.folding[m])] * fam.alpha[m]);
    }
  }
  return out;
}

std::vector<MultiPoly> colour_polynomials(const WronskiFamily& fam) {
  const int n = fam.polytope.dim;
  if (n + 1 > exactalg::kMaxVars) throw Error(ErrorCode::kUnsupportedDimension, "no room for the variable s");
  std::vector<long> low(static_cast<size_t>(n) + 1, 0);
  for (size_t m = 0; m < fam.omega.size(); ++m)
    low[static_cast<size_t>(fam.folding[m])] = std::min(low[static_cast<size_t>(fam.folding[m])], fam.omega[m]);
  std::vector<MultiPoly> g(static_cast<size_t>(n) + 1);
  for (size_t m = 0; m < fam.polytope.lattice_points.size(); ++m) {
    const auto k = static_cast<size_t>(fam.folding[m]);
    Exponent e = exponent_of(fam.polytope.lattice_points[m]);
    e[static_cast<size_t>(n)] = static_cast<int>(fam.omega[m] - low[k]);
    g[k].add_term(e, fam.alpha[m]);
  }
  return g;
}

// --- sampling ---------------------------------------------------------------

namespace {

Rational parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      Rational q(text, 10);
      if (q.get_den() == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
      q.canonicalize();
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac = text.size() - dot - 1;
    Integer den = 1;
    for (size_t i = 0; i < frac; ++i) den *= 10;
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kInvalidInput, "not a rational number: '" + text + "'");
  }
}

}  // namespace

SPolicy SPolicy::parse(const std::string& text) {
  if (text == "grid") return grid();
  if (text.rfind("fixed:", 0) == 0) return fixed(parse_rational(text.substr(6)));
  throw Error(ErrorCode::kInvalidInput, "s policy must be 'grid' or 'fixed:Q', got '" + text + "'");
}

std::string SPolicy::to_string() const { return kind == Kind::kGrid ? "grid" : "fixed:" + value.get_str(); }

CoeffRange CoeffRange::parse(const std::string& text) {
  const auto sep = text.find("..", 1);
  if (sep == std::string::npos) throw Error(ErrorCode::kInvalidInput, "coefficient range must look like LO..HI");
  CoeffRange r;
  try {
    size_t used = 0;
    r.lo = std::stol(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("trailing");
    const std::string hi = text.substr(sep + 2);
    r.hi = std::stol(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidInput, "bad coefficient range '" + text + "'");
  }
  if (r.lo > r.hi) throw Error(ErrorCode::kInvalidInput, "empty coefficient range");
  return r;
}

WronskiSystem sample_system(const WronskiFamily& fam, std::uint64_t seed, const CoeffRange& range,
                            const SPolicy& policy, std::uint64_t stream) {
  if (range.lo > range.hi) throw Error(ErrorCode::kInvalidInput, "empty coefficient range");
  if (range.lo == 0 && range.hi == 0) throw Error(ErrorCode::kInvalidInput, "coefficient range {0} only gives zero rows");
  CounterRng rng(seed, stream);
  const int n = fam.polytope.dim;
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(n));
  for (auto& row : rows) {
    bool zero = true;
    while (zero) {
      row.clear();
      for (int k = 0; k <= n; ++k) {
        const long v = rng.uniform(range.lo, range.hi);
        zero = zero && v == 0;
        row.emplace_back(v);
      }
    }
  }
  Rational s = policy.value;
  if (policy.kind == SPolicy::Kind::kGrid) s = Rational(rng.uniform(1, 999), 1000);
  s.canonicalize();
  return build_system(fam, std::move(rows), s);
}

// --- centre of projection ---------------------------------------------------

std::string verdict_name(CenterVerdict v) {
  switch (v) {
    case CenterVerdict::kAvoided:
      return "avoided";
    case CenterVerdict::kMeets:
      return "meets";
    case CenterVerdict::kAvoidedByLemma:
      return "avoided-by-lemma";
  }
  return "?";
}

namespace {

bool in_domain(const Rational& s, const exactalg::Interval& d) {
  if (d.lo && s <= *d.lo) return false;
  if (d.hi && s > *d.hi) return false;
  return s != 0;
}

}  // namespace

CenterReport center_avoidance(const WronskiFamily& fam, const exactalg::Interval& s_domain) {
  CenterReport rep;
  if (fam.kind != FamilyKind::kGeneric) {
    rep.verdict = CenterVerdict::kAvoidedByLemma;
    rep.detail = "order and chain polytope families never meet the centre";
    return rep;
  }
  const int n = fam.polytope.dim;
  if (n > 3) throw Error(ErrorCode::kUndecidedAtScale, "elimination handles at most 3 variables plus s");
  if (fam.folding.size() != fam.polytope.lattice_points.size())
    throw Error(ErrorCode::kMissingFolding, "family has no folding");

  std::vector<IntPoly> g;
  for (const auto& p : colour_polynomials(fam))
    if (!p.is_zero()) g.push_back(exactalg::to_primitive_integer(p));
  const int svar = n;
  const solver::VarMask torus = (1u << (n + 1)) - 1;
  std::vector<int> all(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) all[static_cast<size_t>(i)] = i;

  auto others = [&](int v) {
    std::vector<int> o;
    for (int i : all)
      if (i != v) o.push_back(i);
    return o;
  };

  // A coordinate with no admissible real value rules out every meeting.
  UPoly s_proj;
  bool decided_any = false;
  for (int v : all) {
    UPoly p = solver::project_to(g, v, solver::default_orders(others(v)), torus);
    if (p.is_zero()) continue;
    decided_any = true;
    p = p.strip_x_power();
    if (v == svar) s_proj = p;
    if (p.degree() <= 0) {
      rep.detail = "no common zero at all";
      return rep;
    }
    const UPoly sf = exactalg::squarefree_part(p);
    const int nreal = exactalg::sturm_count(sf, v == svar ? s_domain : exactalg::Interval::whole_line());
    if (nreal == 0) {
      const std::string name = v == svar ? "s" : "x" + std::to_string(v + 1);
      rep.detail = "no admissible real value of " + name + " (eliminant " + p.to_string(name) + ")";
      return rep;
    }
  }
  if (!decided_any || s_proj.is_zero()) throw Error(ErrorCode::kUndecidedAtScale, "elimination collapsed");

  const UPoly sf = exactalg::squarefree_part(s_proj);
  const int nreal = exactalg::sturm_count(sf, s_domain);
  auto roots = exactalg::rational_roots(sf);
  if (!roots) throw Error(ErrorCode::kUndecidedAtScale, "eliminant in s has coefficients too large to factor");
  std::vector<Rational> candidates;
  for (const auto& r : *roots)
    if (in_domain(r, s_domain)) candidates.push_back(r);
  if (static_cast<int>(candidates.size()) < nreal)
    throw Error(ErrorCode::kUndecidedAtScale, "eliminant in s has irrational real roots: " + sf.to_string("s"));

  std::sort(candidates.begin(), candidates.end());
  for (const auto& s0 : candidates) {
    std::vector<IntPoly> sub;
    for (const auto& p : g) sub.push_back(solver::substitute_value(p, svar, s0));
    std::vector<int> xs(all.begin(), all.end() - 1);
    auto pts = solver::rational_real_zeros(sub, xs, torus);
    if (!pts) throw Error(ErrorCode::kUndecidedAtScale, "could not resolve the zeros at s = " + s0.get_str());
    if (!pts->empty()) rep.meetings.push_back({s0, std::move(*pts)});
  }
  rep.verdict = rep.meetings.empty() ? CenterVerdict::kAvoided : CenterVerdict::kMeets;
  if (rep.meetings.empty()) rep.detail = "real candidates in s do not lift to real torus points";
  return rep;
}

}  // namespace toricbound::wronski
