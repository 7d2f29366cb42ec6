#include "toricbound/exactalg/multipoly.hpp"

#include "toricbound/error.hpp"

namespace toricbound::exactalg {

std::string format_monomial(const Exponent& e, std::span<const std::string> names) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < static_cast<int>(names.size()) ? names[static_cast<size_t>(i)] : "v" + std::to_string(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::span<const std::string> default_names() {
  static const std::array<std::string, kMaxVars> names{"x", "y", "z", "w"};
  return names;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.terms().rbegin()->second) < 0) g = -g;
  IntPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, divexact(c, g));
  return r;
}

IntPoly to_primitive_integer(const MultiPoly& p) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.get_num() * divexact(l, Integer(c.get_den()));
    r.add_term(e, v);
  }
  return primitive(r);
}

MultiPoly to_rational(const IntPoly& p) {
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
  return r;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by the zero polynomial");
  IntPoly q;
  IntPoly r = a;
  const auto& [eb, cb] = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto [er, cr] = *r.terms().rbegin();
    Exponent d{};
    for (int i = 0; i < kMaxVars; ++i) {
      d[i] = er[i] - eb[i];
      if (d[i] < 0) throw Error(ErrorCode::kInvalidInput, "inexact multivariate division");
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t()))
      throw Error(ErrorCode::kInvalidInput, "inexact multivariate division");
    IntPoly t = IntPoly::term(divexact(cr, cb), d);
    q += t;
    r -= t * b;
  }
  return q;
}

UPoly to_upoly(const IntPoly& p, int var) {
  std::vector<Integer> c(static_cast<size_t>(std::max(p.degree_in(var), -1) + 1), Integer(0));
  for (const auto& [e, v] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (i != var && e[i] != 0) throw Error(ErrorCode::kInvalidInput, "polynomial is not univariate");
    }
    c[static_cast<size_t>(e[static_cast<size_t>(var)])] = v;
  }
  return UPoly(std::move(c));
}

IntPoly from_upoly(const UPoly& p, int var) {
  IntPoly r;
  for (int k = 0; k <= p.degree(); ++k) {
    Exponent e{};
    e[static_cast<size_t>(var)] = k;
    r.add_term(e, p.coeffs()[static_cast<size_t>(k)]);
  }
  return r;
}

}  // namespace toricbound::exactalg
