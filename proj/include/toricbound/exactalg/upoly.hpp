#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricbound::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers, lowest degree first.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly constant(const Integer& c);
  static UPoly monomial(int degree, const Integer& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return c_.back(); }
  /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
  int valuation() const;

  UPoly derivative() const;
  Integer content() const;
  /// Content removed and leading coefficient made positive.
  UPoly primitive() const;
  /// Divides out x^valuation().
  UPoly strip_x_power() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Integer& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Integer& k) { return a *= k; }
  friend UPoly operator*(const Integer& k, UPoly a) { return a *= k; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

UPoly divexact(const UPoly& a, const Integer& c);
/// Exact quotient a / b; throws if b does not divide a over Z.
UPoly divexact(const UPoly& a, const UPoly& b);
/// lc(b)^(deg a - deg b + 1) * a  mod  b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
bool is_squarefree(const UPoly& p);
/// p / gcd(p, p'), primitive. Throws ZeroPolynomial on p = 0.
UPoly squarefree_part(const UPoly& p);

/// Rational roots of p, found by testing the divisor candidates of the
/// extreme coefficients. Returns nullopt when those coefficients are too large
/// to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const UPoly& p);

}  // namespace toricbound::exactalg
