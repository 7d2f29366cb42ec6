#include "toricbound/exactalg/upoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toricbound/error.hpp"

namespace toricbound::exactalg {

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

UPoly UPoly::constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }

UPoly UPoly::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

int UPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  return divexact(*this, g);
}

UPoly UPoly::strip_x_power() const {
  int v = valuation();
  if (v <= 0) return *this;
  return UPoly(std::vector<Integer>(c_.begin() + v, c_.end()));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const {
  // Horner on the numerator scaled by den^deg keeps everything integral.
  if (is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int UPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }

int UPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  return (degree() % 2 == 0) ? s : -s;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Integer& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

UPoly divexact(const UPoly& a, const Integer& c) {
  std::vector<Integer> r(a.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = divexact(a.coeffs()[i], c);
  return UPoly(std::move(r));
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
  const Integer& lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<size_t>(k + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
    Integer t = divexact(top, lb);
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                 b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    q[static_cast<size_t>(k)] = std::move(t);
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw Error(ErrorCode::kInvalidInput, "inexact polynomial division");
  return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.leading();
  const int db = b.degree();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    Integer lr = r[static_cast<size_t>(dr)];
    for (auto& c : r) c *= lb;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(),
                 b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    r.pop_back();
    --e;
    dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && sgn(r[static_cast<size_t>(dr)]) == 0) {
      r.pop_back();
      --dr;
    }
  }
  UPoly out(std::move(r));
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    out *= f;
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  UPoly x = a.primitive();
  UPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive();
  }
  return x.primitive();
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "squarefree part of zero");
  if (p.degree() <= 0) return UPoly::constant(1);
  UPoly g = gcd(p, p.derivative());
  return divexact(p.primitive(), g).primitive();
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 1000000;

std::optional<std::vector<Integer>> positive_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<std::pair<Integer, int>> factors;
  unsigned long d = 2;
  while (Integer(d) * d <= n) {
    if (d > kTrialDivisionLimit) return std::nullopt;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      factors.emplace_back(Integer(d), e);
    }
    ++d;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const UPoly& p_in) {
  if (p_in.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "rational roots of zero");
  std::vector<Rational> roots;
  if (p_in.valuation() > 0) roots.emplace_back(0);
  UPoly p = p_in.strip_x_power().primitive();
  if (p.degree() <= 0) return roots;
  auto nums = positive_divisors(p.coeff(0));
  auto dens = positive_divisors(p.leading());
  if (!nums || !dens) return std::nullopt;
  if (nums->size() * dens->size() > 2000000) return std::nullopt;
  std::set<Rational> found;
  for (const auto& q : *dens) {
    for (const auto& n : *nums) {
      for (int s : {1, -1}) {
        Rational cand(n * s, q);
        cand.canonicalize();
        if (found.count(cand)) continue;
        if (p.sign_at(cand) == 0) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace toricbound::exactalg
