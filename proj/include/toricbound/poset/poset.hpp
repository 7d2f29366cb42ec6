#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricbound/exactalg/upoly.hpp"

namespace toricbound::poset {

using exactalg::Integer;
using exactalg::Rational;

/// Bit i set iff element i belongs to the set.
using ElementSet = std::uint64_t;
inline constexpr int kMaxElements = 64;

/// Finite poset on labelled elements, stored by its cover relation.
class Poset {
 public:
  Poset() = default;

  /// Validates labels and covers: throws DuplicateLabel, UnknownLabel,
  /// CycleDetected or RedundantCover.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  std::optional<int> index_of(const std::string& label) const;
  /// Cover pairs (lower, upper) by index.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[static_cast<size_t>(i)]; }
  const std::vector<int>& lower_covers(int i) const { return down_[static_cast<size_t>(i)]; }

  /// Elements >= i (including i).
  ElementSet up_set(int i) const { return above_[static_cast<size_t>(i)]; }
  /// Elements <= i (including i).
  ElementSet down_set(int i) const { return below_[static_cast<size_t>(i)]; }
  bool leq(int a, int b) const { return (above_[static_cast<size_t>(a)] >> b) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  ElementSet all() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Elements sorted by label.
  std::vector<int> label_order() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<ElementSet> above_, below_;
};

/// Upper order ideal.
struct OrderIdeal {
  ElementSet members = 0;
  int size = 0;
};

struct Antichain {
  ElementSet members = 0;
  /// Size of the upper ideal generated by the members.
  int rank = 0;
};

struct LinearExtension {
  std::vector<int> order;
  int sign = 1;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// All upper order ideals, sorted by size then by bit pattern.
std::vector<OrderIdeal> order_ideals(const Poset& p, std::uint64_t cap = kDefaultEnumerationCap);
/// Antichains, in the order of the ideals they generate.
std::vector<Antichain> antichains(const Poset& p, std::uint64_t cap = kDefaultEnumerationCap);
/// Upper ideal generated by a set.
ElementSet upper_closure(const Poset& p, ElementSet s);
/// Minimal elements of a set.
ElementSet minimal_members(const Poset& p, ElementSet s);

/// The linear extension that is lexicographically least by label; signs are
/// measured against it.
LinearExtension reference_extension(const Poset& p);
/// Parity of the permutation carrying `reference` to `order`.
int permutation_sign(std::span<const int> reference, std::span<const int> order);
std::vector<LinearExtension> linear_extensions(const Poset& p, std::uint64_t cap = kDefaultEnumerationCap);

/// Number of linear extensions, by dynamic programming over lower sets.
Integer count_linear_extensions(const Poset& p);
/// |#positive - #negative| linear extensions, by the same dynamic program.
Integer sign_imbalance(const Poset& p);

struct RankParity {
  bool ranked = false;
  /// Element count of every maximal chain, mod 2 (meaningful when ranked).
  int parity = 0;
};
RankParity is_ranked_mod2(const Poset& p);

/// Multinomial (Σ parts; parts).
Integer multinomial(std::span<const int> parts);
/// Multinomial of the halves ⌊a_i/2⌋ over ⌊Σa_i/2⌋, zero when they do not add up.
Integer chain_union_imbalance(std::span<const int> a);
/// Gaussian multinomial as an integer polynomial in q.
exactalg::UPoly q_multinomial(std::span<const int> a);
Rational q_multinomial_at(std::span<const int> a, const Rational& q);
/// Closed formula for the sign-imbalance of the m×p rectangle. A single row
/// or column is a chain and gives 1.
Integer white_imbalance(int m, int p);

struct ProductPart {
  int size = 0;
  Integer eta;
  Integer sigma;
};
struct ProductStats {
  Integer eta;
  Integer sigma;
};
ProductStats product_union_stats(std::span<const ProductPart> parts);

// Constructors for common posets. Labels are chosen so that the lexicographic
// label order matches the natural numbering for up to 9 elements per chain.
Poset chain(int n, const std::string& prefix = "c");
Poset antichain(int n);
/// Disjoint union of chains of the given element counts; chain i is labelled
/// with the letter 'a' + i.
Poset chain_union(std::span<const int> a);
/// Product of chains [m]×[p].
Poset grid(int m, int p);
/// Subsets of {1..n} ordered by inclusion.
Poset boolean_lattice(int n);
Poset disjoint_union(const Poset& a, const Poset& b);

/// Text format: `elements: a b c` then `cover: a < b` lines; '#' comments.
Poset parse_poset_text(const std::string& text);
/// JSON format {"elements": [...], "covers": [[lo, hi], ...]}.
Poset parse_poset_json(const std::string& text);
std::string poset_to_json(const Poset& p);
/// Dispatches on the first non-space character.
Poset parse_poset(const std::string& text);

/// One representative of each isomorphism class of posets on n elements.
/// Exhaustive over relabellings, so only practical for n <= 6.
std::vector<Poset> all_posets(int n);

}  // namespace toricbound::poset
