#include "toricbound/exactalg/sturm.hpp"

#include "toricbound/error.hpp"

namespace toricbound::exactalg {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    if (b.degree() == 0) break;
    // prem = lc(b)^e * rem; fix the sign so that the entry is -rem up to a
    // positive factor.
    const int e = a.degree() - b.degree() + 1;
    UPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const bool flip = sgn(b.leading()) < 0 && (e % 2 == 1);
    r = flip ? r : -r;
    Integer c = r.content();
    chain.push_back(divexact(r, c));
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UPoly>& chain, const std::optional<Rational>& x, bool is_lo) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    if (x) {
      signs.push_back(q.sign_at(*x));
    } else {
      signs.push_back(is_lo ? q.sign_at_neg_inf() : q.sign_at_pos_inf());
    }
  }
  return variations(signs);
}

}  // namespace

int sturm_count(const std::vector<UPoly>& chain, const Interval& interval) {
  if (chain.empty()) throw Error(ErrorCode::kZeroPolynomial, "Sturm count of zero");
  if (interval.lo && interval.hi && *interval.hi <= *interval.lo) return 0;
  return variations_at(chain, interval.lo, true) - variations_at(chain, interval.hi, false);
}

int sturm_count(const UPoly& p, const Interval& interval) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Sturm count of zero");
  if (p.degree() == 0) return 0;
  if (!is_squarefree(p)) throw Error(ErrorCode::kNotSquarefree, "Sturm count needs a squarefree input");
  return sturm_count(sturm_sequence(p), interval);
}

}  // namespace toricbound::exactalg
