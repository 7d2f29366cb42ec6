#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::exactalg {

/// Up to three system variables plus one auxiliary (a separating form or the
/// deformation parameter).
inline constexpr int kMaxVars = 4;
using Exponent = std::array<int, kMaxVars>;

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

inline int total_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

/// Sparse polynomial in at most kMaxVars variables; zero coefficients are
/// never stored.
template <class C>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, C>;

  SparsePoly() = default;
  explicit SparsePoly(const C& constant) {
    if (constant != 0) terms_.emplace(Exponent{}, constant);
  }

  static SparsePoly variable(int var) {
    Exponent e{};
    e[static_cast<size_t>(var)] = 1;
    return term(C(1), e);
  }
  static SparsePoly term(const C& c, const Exponent& e) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{}); }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  C constant_term() const { return coefficient(Exponent{}); }

  void add_term(const Exponent& e, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
  }
  int total_degree() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exactalg::total_degree(e));
    return d;
  }
  bool depends_on(int var) const { return degree_in(var) > 0; }
  /// Componentwise minimum exponent over all terms.
  Exponent min_exponents() const {
    Exponent m{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < kMaxVars; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  SparsePoly divide_monomial(const Exponent& m) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (int i = 0; i < kMaxVars; ++i) f[i] -= m[i];
      r.terms_.emplace_hint(r.terms_.end(), f, c);
    }
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const C& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const C& k) { return a *= k; }
  friend SparsePoly operator*(const C& k, SparsePoly a) { return a *= k; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, C(ca * cb));
    return r;
  }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly pow(int k) const {
    SparsePoly r(C(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Coefficients of this polynomial viewed as univariate in `var`, lowest
  /// degree first; the coefficients no longer involve `var`.
  std::vector<SparsePoly> as_univariate(int var) const {
    std::vector<SparsePoly> out(static_cast<size_t>(std::max(degree_in(var), -1) + 1));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      const int k = f[static_cast<size_t>(var)];
      f[static_cast<size_t>(var)] = 0;
      out[static_cast<size_t>(k)].add_term(f, c);
    }
    return out;
  }
  static SparsePoly from_univariate(std::span<const SparsePoly> coeffs, int var) {
    SparsePoly r;
    for (size_t k = 0; k < coeffs.size(); ++k) {
      for (const auto& [e, c] : coeffs[k].terms_) {
        Exponent f = e;
        f[static_cast<size_t>(var)] += static_cast<int>(k);
        r.add_term(f, c);
      }
    }
    return r;
  }

  /// Replaces `var` by `value` (which may itself involve `var`).
  SparsePoly substitute(int var, const SparsePoly& value) const {
    std::vector<SparsePoly> coeffs = as_univariate(var);
    SparsePoly r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
    return r;
  }
  SparsePoly evaluate(int var, const C& value) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      const int k = f[static_cast<size_t>(var)];
      f[static_cast<size_t>(var)] = 0;
      C v = c;
      for (int i = 0; i < k; ++i) v *= value;
      r.add_term(f, v);
    }
    return r;
  }

  /// Canonical rendering: descending total degree, then descending lex.
  std::string to_string(std::span<const std::string> names) const;

 private:
  Terms terms_;
};

using MultiPoly = SparsePoly<Rational>;
using IntPoly = SparsePoly<Integer>;

std::string format_monomial(const Exponent& e, std::span<const std::string> names);

template <class C>
std::string SparsePoly<C>::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, C>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = exactalg::total_degree(a.first);
    const int db = exactalg::total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool neg = c < 0;
    C mag = neg ? C(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool is_const = e == Exponent{};
    if (is_const || mag != 1) {
      out += mag.get_str();
      if (!is_const) out += "*";
    }
    if (!is_const) out += format_monomial(e, names);
  }
  return out;
}

/// Default variable names x, y, z, w.
std::span<const std::string> default_names();

/// Clears denominators and removes the integer content; the sign is chosen so
/// that the lex-leading coefficient is positive.
IntPoly to_primitive_integer(const MultiPoly& p);
IntPoly primitive(const IntPoly& p);
Integer content(const IntPoly& p);
MultiPoly to_rational(const IntPoly& p);

/// Exact quotient; throws if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

/// Conversions between an IntPoly that only involves `var` and a dense UPoly.
UPoly to_upoly(const IntPoly& p, int var);
IntPoly from_upoly(const UPoly& p, int var);

}  // namespace toricbound::exactalg
