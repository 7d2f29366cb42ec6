#include "toricbound/poset/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "toricbound/error.hpp"

namespace toricbound::poset {

namespace {

inline bool has(ElementSet s, int i) { return (s >> i) & 1u; }
inline ElementSet bit(int i) { return ElementSet{1} << i; }

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.size() > static_cast<size_t>(kMaxElements))
    throw Error(ErrorCode::kInvalidInput, "posets are limited to 64 elements");
  Poset p;
  std::map<std::string, int> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::kDuplicateLabel, "label '" + elements[i] + "' appears twice");
  }
  p.labels_ = std::move(elements);
  const size_t n = p.labels_.size();
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::kUnknownLabel, "unknown label '" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::kUnknownLabel, "unknown label '" + hi + "'");
    if (a->second == b->second) throw Error(ErrorCode::kCycleDetected, "self-cover on '" + lo + "'");
    if (!seen.emplace(a->second, b->second).second)
      throw Error(ErrorCode::kRedundantCover, "cover " + lo + " < " + hi + " listed twice");
    p.covers_.emplace_back(a->second, b->second);
    p.up_[static_cast<size_t>(a->second)].push_back(b->second);
    p.down_[static_cast<size_t>(b->second)].push_back(a->second);
  }

  // Kahn's algorithm gives a topological order or exposes a cycle.
  std::vector<int> indeg(n, 0);
  for (const auto& [a, b] : p.covers_) ++indeg[static_cast<size_t>(b)];
  std::vector<int> topo;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) topo.push_back(static_cast<int>(i));
  for (size_t k = 0; k < topo.size(); ++k)
    for (int b : p.up_[static_cast<size_t>(topo[k])])
      if (--indeg[static_cast<size_t>(b)] == 0) topo.push_back(b);
  if (topo.size() != n) {
    for (size_t i = 0; i < n; ++i)
      if (indeg[i] > 0) throw Error(ErrorCode::kCycleDetected, "cover relation has a cycle through '" + p.labels_[i] + "'");
  }

  p.above_.assign(n, 0);
  p.below_.assign(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    ElementSet s = bit(*it);
    for (int b : p.up_[static_cast<size_t>(*it)]) s |= p.above_[static_cast<size_t>(b)];
    p.above_[static_cast<size_t>(*it)] = s;
  }
  for (int v : topo) {
    ElementSet s = bit(v);
    for (int a : p.down_[static_cast<size_t>(v)]) s |= p.below_[static_cast<size_t>(a)];
    p.below_[static_cast<size_t>(v)] = s;
  }
  for (const auto& [a, b] : p.covers_) {
    for (int c : p.up_[static_cast<size_t>(a)]) {
      if (c != b && p.leq(c, b))
        throw Error(ErrorCode::kRedundantCover,
                    "cover " + p.labels_[static_cast<size_t>(a)] + " < " + p.labels_[static_cast<size_t>(b)] +
                        " follows from transitivity");
    }
  }
  return p;
}

std::optional<int> Poset::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

ElementSet Poset::all() const { return size() == 64 ? ~ElementSet{0} : bit(size()) - 1; }

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[static_cast<size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[static_cast<size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::label_order() const {
  std::vector<int> idx(static_cast<size_t>(size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return label(a) < label(b); });
  return idx;
}

ElementSet upper_closure(const Poset& p, ElementSet s) {
  ElementSet out = 0;
  for (int i = 0; i < p.size(); ++i)
    if (has(s, i)) out |= p.up_set(i);
  return out;
}

ElementSet minimal_members(const Poset& p, ElementSet s) {
  ElementSet out = 0;
  for (int i = 0; i < p.size(); ++i)
    if (has(s, i) && (p.down_set(i) & s) == bit(i)) out |= bit(i);
  return out;
}

std::vector<OrderIdeal> order_ideals(const Poset& p, std::uint64_t cap) {
  // Decide elements from the top down: an element may join only if all of
  // its upper covers already have.
  std::vector<int> order;
  {
    std::vector<int> idx(static_cast<size_t>(p.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return std::popcount(p.up_set(a)) < std::popcount(p.up_set(b));
    });
    order = std::move(idx);
  }
  std::vector<OrderIdeal> out;
  std::function<void(size_t, ElementSet)> rec = [&](size_t k, ElementSet s) {
    if (k == order.size()) {
      if (out.size() >= cap) throw Error(ErrorCode::kEnumerationCapExceeded, "too many order ideals");
      out.push_back({s, std::popcount(s)});
      return;
    }
    const int e = order[k];
    rec(k + 1, s);
    if ((p.up_set(e) & ~bit(e) & ~s) == 0) rec(k + 1, s | bit(e));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    return a.size != b.size ? a.size < b.size : a.members < b.members;
  });
  return out;
}

std::vector<Antichain> antichains(const Poset& p, std::uint64_t cap) {
  std::vector<Antichain> out;
  for (const auto& j : order_ideals(p, cap)) out.push_back({minimal_members(p, j.members), j.size});
  return out;
}

LinearExtension reference_extension(const Poset& p) {
  const auto by_label = p.label_order();
  LinearExtension ext;
  ElementSet placed = 0;
  for (int step = 0; step < p.size(); ++step) {
    for (int e : by_label) {
      if (has(placed, e)) continue;
      if ((p.down_set(e) & ~bit(e) & ~placed) == 0) {
        ext.order.push_back(e);
        placed |= bit(e);
        break;
      }
    }
  }
  return ext;
}

int permutation_sign(std::span<const int> reference, std::span<const int> order) {
  std::vector<int> pos(reference.size());
  for (size_t i = 0; i < reference.size(); ++i) pos[static_cast<size_t>(reference[i])] = static_cast<int>(i);
  std::vector<int> seq;
  seq.reserve(order.size());
  for (int e : order) seq.push_back(pos[static_cast<size_t>(e)]);
  // parity via cycle decomposition
  std::vector<bool> seen(seq.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(seq[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += static_cast<int>(len) - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<LinearExtension> linear_extensions(const Poset& p, std::uint64_t cap) {
  const LinearExtension ref = reference_extension(p);
  std::vector<int> rank_in_ref(static_cast<size_t>(p.size()));
  for (size_t i = 0; i < ref.order.size(); ++i) rank_in_ref[static_cast<size_t>(ref.order[i])] = static_cast<int>(i);
  const auto by_label = p.label_order();

  std::vector<LinearExtension> out;
  std::vector<int> current;
  std::function<void(ElementSet, int)> rec = [&](ElementSet placed, int parity) {
    if (static_cast<int>(current.size()) == p.size()) {
      if (out.size() >= cap) throw Error(ErrorCode::kEnumerationCapExceeded, "too many linear extensions");
      out.push_back({current, parity == 0 ? 1 : -1});
      return;
    }
    for (int e : by_label) {
      if (has(placed, e) || (p.down_set(e) & ~bit(e) & ~placed) != 0) continue;
      int inv = 0;
      for (int x : current)
        if (rank_in_ref[static_cast<size_t>(x)] > rank_in_ref[static_cast<size_t>(e)]) ++inv;
      current.push_back(e);
      rec(placed | bit(e), (parity + inv) % 2);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Signed and unsigned extension counts over lower sets, placing elements in
// any order compatible with P; each placement contributes the inversions it
// creates against the label order.
std::pair<Integer, Integer> extension_dp(const Poset& p) {
  const auto by_label = p.label_order();
  std::vector<int> rank(static_cast<size_t>(p.size()));
  for (size_t i = 0; i < by_label.size(); ++i) rank[static_cast<size_t>(by_label[i])] = static_cast<int>(i);
  std::vector<ElementSet> larger(static_cast<size_t>(p.size()), 0);
  for (int e = 0; e < p.size(); ++e)
    for (int x = 0; x < p.size(); ++x)
      if (rank[static_cast<size_t>(x)] > rank[static_cast<size_t>(e)]) larger[static_cast<size_t>(e)] |= bit(x);

  std::unordered_map<ElementSet, std::pair<Integer, Integer>> layer{{0, {Integer(1), Integer(1)}}};
  for (int step = 0; step < p.size(); ++step) {
    std::unordered_map<ElementSet, std::pair<Integer, Integer>> next;
    for (const auto& [placed, counts] : layer) {
      for (int e = 0; e < p.size(); ++e) {
        if (has(placed, e) || (p.down_set(e) & ~bit(e) & ~placed) != 0) continue;
        const bool odd = std::popcount(placed & larger[static_cast<size_t>(e)]) % 2 == 1;
        auto& slot = next[placed | bit(e)];
        slot.first += counts.first;
        if (odd) {
          slot.second -= counts.second;
        } else {
          slot.second += counts.second;
        }
      }
    }
    layer = std::move(next);
  }
  return layer.begin()->second;
}

}  // namespace

Integer count_linear_extensions(const Poset& p) { return extension_dp(p).first; }

Integer sign_imbalance(const Poset& p) { return abs(extension_dp(p).second); }

RankParity is_ranked_mod2(const Poset& p) {
  if (p.size() == 0) return {true, 0};
  // bit 0 / bit 1: some chain from the element up to a maximal one has an
  // even / odd number of elements
  std::vector<int> parities(static_cast<size_t>(p.size()), 0);
  std::vector<int> order(static_cast<size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::popcount(p.up_set(a)) < std::popcount(p.up_set(b)); });
  for (int e : order) {
    int mask = 0;
    if (p.upper_covers(e).empty()) mask = 0b10;
    for (int b : p.upper_covers(e)) {
      const int m = parities[static_cast<size_t>(b)];
      mask |= ((m & 1) << 1) | ((m >> 1) & 1);
    }
    parities[static_cast<size_t>(e)] = mask;
  }
  int all = 0;
  for (int e : p.minimal_elements()) all |= parities[static_cast<size_t>(e)];
  if (all == 0b01) return {true, 0};
  if (all == 0b10) return {true, 1};
  return {false, 0};
}

Integer multinomial(std::span<const int> parts) {
  Integer result = 1;
  unsigned long total = 0;
  for (int a : parts) {
    if (a < 0) return 0;
    total += static_cast<unsigned long>(a);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), total, static_cast<unsigned long>(a));
    result *= b;
  }
  return result;
}

Integer chain_union_imbalance(std::span<const int> a) {
  int total = 0;
  int half_sum = 0;
  std::vector<int> halves;
  for (int v : a) {
    total += v;
    halves.push_back(v / 2);
    half_sum += v / 2;
  }
  if (half_sum != total / 2) return 0;
  return multinomial(halves);
}

namespace {

exactalg::UPoly gaussian_binomial(int n, int k) {
  using exactalg::UPoly;
  if (k < 0 || k > n) return {};
  // row[j] holds [i; j]_q while i advances
  std::vector<UPoly> row(static_cast<size_t>(k) + 1);
  row[0] = UPoly::constant(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i; j] = [i-1; j-1] + q^j [i-1; j]
      UPoly shifted = row[static_cast<size_t>(j)] * UPoly::monomial(j);
      row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + shifted;
    }
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace

exactalg::UPoly q_multinomial(std::span<const int> a) {
  exactalg::UPoly result = exactalg::UPoly::constant(1);
  int total = 0;
  for (int v : a) {
    if (v < 0) throw Error(ErrorCode::kInvalidInput, "negative part in q-multinomial");
    total += v;
    result = result * gaussian_binomial(total, v);
  }
  return result;
}

Rational q_multinomial_at(std::span<const int> a, const Rational& q) { return q_multinomial(a).evaluate(q); }

namespace {

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

Integer white_imbalance(int m, int p) {
  if (m < 1 || p < 1) throw Error(ErrorCode::kInvalidInput, "white_imbalance needs m, p >= 1");
  if (m == 1 || p == 1) return 1;
  if ((m + p) % 2 == 0) return 0;
  if (m < p) std::swap(m, p);
  Integer num = factorial(static_cast<long>(m) * p / 2);
  Integer den = 1;
  for (int i = 1; i <= p - 1; ++i) num *= factorial(i);
  for (int i = 1; i <= p - 1; ++i) num *= factorial(m - i);
  for (int v = m - p + 2; v <= m + p - 2; v += 2) den *= factorial(v);
  for (int v = m - p + 1; v <= m + p - 1; v += 2) den *= factorial(v / 2);
  return exactalg::divexact(num, den);
}

ProductStats product_union_stats(std::span<const ProductPart> parts) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidInput, "product_union_stats needs at least one part");
  std::vector<int> sizes;
  ProductStats s{1, 1};
  for (const auto& part : parts) {
    sizes.push_back(part.size);
    s.eta *= part.eta;
    s.sigma *= part.sigma;
  }
  s.eta *= multinomial(sizes);
  s.sigma *= chain_union_imbalance(sizes);
  return s;
}

Poset chain(int n, const std::string& prefix) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 1; i <= n; ++i) {
    el.push_back(prefix + std::to_string(i));
    if (i > 1) cov.emplace_back(el[static_cast<size_t>(i) - 2], el.back());
  }
  return Poset::build(el, cov);
}

Poset antichain(int n) {
  std::vector<std::string> el;
  for (int i = 1; i <= n; ++i) el.push_back("e" + std::to_string(i));
  return Poset::build(el, {});
}

Poset chain_union(std::span<const int> a) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  for (size_t i = 0; i < a.size(); ++i) {
    const std::string prefix(1, static_cast<char>('a' + i));
    for (int j = 1; j <= a[i]; ++j) {
      el.push_back(prefix + std::to_string(j));
      if (j > 1) cov.emplace_back(prefix + std::to_string(j - 1), el.back());
    }
  }
  return Poset::build(el, cov);
}

Poset grid(int m, int p) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  auto name = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= p; ++j) {
      el.push_back(name(i, j));
      if (i > 1) cov.emplace_back(name(i - 1, j), name(i, j));
      if (j > 1) cov.emplace_back(name(i, j - 1), name(i, j));
    }
  return Poset::build(el, cov);
}

Poset boolean_lattice(int n) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  auto name = [n](unsigned s) {
    std::string out = "{";
    for (int i = 0; i < n; ++i)
      if (s >> i & 1u) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
    return out + "}";
  };
  for (unsigned s = 0; s < (1u << n); ++s) {
    el.push_back(name(s));
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1u)) cov.emplace_back(name(s), name(s | (1u << i)));
  }
  return Poset::build(el, cov);
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  for (const auto& l : a.labels()) el.push_back("L" + l);
  for (const auto& l : b.labels()) el.push_back("R" + l);
  for (const auto& [x, y] : a.covers()) cov.emplace_back("L" + a.label(x), "L" + a.label(y));
  for (const auto& [x, y] : b.covers()) cov.emplace_back("R" + b.label(x), "R" + b.label(y));
  return Poset::build(el, cov);
}

std::vector<Poset> all_posets(int n) {
  // Strict orders contained in {(i, j) : i < j}, deduplicated by a canonical
  // form over all relabellings.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::set<std::uint64_t> canon_seen;
  std::vector<Poset> out;
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::vector<bool>> rel(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1u) rel[static_cast<size_t>(pairs[k].first)][static_cast<size_t>(pairs[k].second)] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j)
        if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)])
          for (int k = j + 1; k < n; ++k)
            if (rel[static_cast<size_t>(j)][static_cast<size_t>(k)] && !rel[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& perm : perms) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && rel[static_cast<size_t>(i)][static_cast<size_t>(j)])
            code |= std::uint64_t{1} << (perm[static_cast<size_t>(i)] * n + perm[static_cast<size_t>(j)]);
      best = std::min(best, code);
    }
    if (!canon_seen.insert(best).second) continue;
    std::vector<std::string> el;
    for (int i = 0; i < n; ++i) el.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<std::string, std::string>> cov;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!rel[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
        bool is_cover = true;
        for (int k = i + 1; k < j; ++k)
          if (rel[static_cast<size_t>(i)][static_cast<size_t>(k)] && rel[static_cast<size_t>(k)][static_cast<size_t>(j)]) is_cover = false;
        if (is_cover) cov.emplace_back(el[static_cast<size_t>(i)], el[static_cast<size_t>(j)]);
      }
    out.push_back(Poset::build(el, cov));
  }
  return out;
}

}  // namespace toricbound::poset
