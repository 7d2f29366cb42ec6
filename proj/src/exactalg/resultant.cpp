#include "toricbound/exactalg/resultant.hpp"

namespace toricbound::exactalg {

namespace {

unsigned variable_mask(const IntPoly& p) {
  unsigned m = 0;
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<size_t>(i)] > 0) m |= 1u << i;
  return m;
}

}  // namespace

IntPoly resultant(const IntPoly& f, const IntPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "resultant of the zero polynomial");
  const unsigned others = (variable_mask(f) | variable_mask(g)) & ~(1u << var);
  const auto fc = f.as_univariate(var);
  const auto gc = g.as_univariate(var);

  if (others == 0) {
    std::vector<Integer> a, b;
    for (const auto& c : fc) a.push_back(c.constant_term());
    for (const auto& c : gc) b.push_back(c.constant_term());
    return IntPoly(subresultant(std::move(a), std::move(b)));
  }
  if ((others & (others - 1)) == 0) {
    int w = 0;
    while (!(others & (1u << w))) ++w;
    std::vector<UPoly> a, b;
    for (const auto& c : fc) a.push_back(to_upoly(c, w));
    for (const auto& c : gc) b.push_back(to_upoly(c, w));
    return from_upoly(subresultant(std::move(a), std::move(b)), w);
  }
  return subresultant(fc, gc);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "resultant of the zero polynomial");
  return to_rational(resultant(to_primitive_integer(f), to_primitive_integer(g), var));
}

IntPoly strip_torus_factors(const IntPoly& p, unsigned torus_mask) {
  if (p.is_zero()) return p;
  Exponent m = p.min_exponents();
  for (int i = 0; i < kMaxVars; ++i)
    if (!(torus_mask & (1u << i))) m[static_cast<size_t>(i)] = 0;
  return primitive(p.divide_monomial(m));
}

}  // namespace toricbound::exactalg
