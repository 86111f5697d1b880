#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "iecancel/polynomial.hpp"
#include "iecancel/subsets.hpp"

namespace iecancel {

/// The measure of the intersection of the A-sets over an index subset,
/// specialised to a polynomial. Must be pure: the engine may call it from
/// several threads and in any order.
using TermFunction = std::function<IntPolynomial(const SubsetMask&)>;

/// A pair (B, B*) with B and B* disjoint and B* nonempty. The cancellation
/// argument additionally needs every intersection over B to be covered by the
/// union over B*; check that with validate_pair.
class BrokenPair {
 public:
  /// Throws UniverseMismatchError, or DomainError when the sets overlap or
  /// B* is empty.
  BrokenPair(SubsetMask b_set, SubsetMask b_star);

  [[nodiscard]] const SubsetMask& b_set() const { return b_set_; }
  [[nodiscard]] const SubsetMask& b_star() const { return b_star_; }
  [[nodiscard]] std::size_t universe_size() const { return b_set_.universe_size(); }

  friend bool operator==(const BrokenPair&, const BrokenPair&) = default;

 private:
  SubsetMask b_set_;
  SubsetMask b_star_;
};

/// Ordered list of broken pairs over a single universe. Position matters:
/// the excluded family of pair i avoids the remnants B_j \ B_i* of every
/// earlier pair j.
class CancellationFamily {
 public:
  explicit CancellationFamily(std::size_t universe_size) : universe_size_(universe_size) {}
  CancellationFamily(std::size_t universe_size, std::vector<BrokenPair> pairs);

  void push_back(BrokenPair p);

  [[nodiscard]] std::size_t universe_size() const { return universe_size_; }
  [[nodiscard]] const std::vector<BrokenPair>& pairs() const { return pairs_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }
  [[nodiscard]] const BrokenPair& operator[](std::size_t i) const { return pairs_[i]; }

  friend bool operator==(const CancellationFamily&, const CancellationFamily&) = default;

 private:
  std::size_t universe_size_;
  std::vector<BrokenPair> pairs_;
};

/// A linear order on the universe together with the generating class X of
/// the ordering-based cancellation.
class OrderedFamily {
 public:
  /// `order` lists the indices from smallest to largest and must be a
  /// permutation of 0..n-1 (DomainError otherwise).
  OrderedFamily(std::vector<std::size_t> order, std::vector<SubsetMask> x_class);

  /// Identity order 0 < 1 < ... < n-1.
  static OrderedFamily natural(std::size_t universe_size, std::vector<SubsetMask> x_class);

  [[nodiscard]] std::size_t universe_size() const { return order_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& order() const { return order_; }
  [[nodiscard]] const std::vector<SubsetMask>& x_class() const { return x_class_; }
  /// Position of index i in the order.
  [[nodiscard]] std::size_t rank(std::size_t i) const { return rank_[i]; }
  [[nodiscard]] bool less(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }
  /// Strict upper bounds of b: every p above all members of b. For b = {}
  /// that is the whole universe.
  [[nodiscard]] SubsetMask upper_bounds(const SubsetMask& b) const;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  std::vector<SubsetMask> x_class_;
};

struct SumOptions {
  std::size_t max_universe = kDefaultEnumerationCap;
  /// Worker threads for the subset scan; 0 and 1 both mean sequential.
  std::size_t threads = 1;
};

struct SumResult {
  IntPolynomial polynomial;
  /// Number of subsets whose term was evaluated.
  std::uint64_t terms_evaluated = 0;
  /// 2^|P|.
  std::uint64_t terms_total = 0;
};

/// Sum over all I of (-1)^|I| t(I).
SumResult full_sum(const IndexUniverse& u, const TermFunction& t, const SumOptions& opts = {});

/// 0-based index i with I in B_i, or nullopt when I is in no B_i. At most one
/// index qualifies; the first match is returned.
std::optional<std::size_t> classify(const SubsetMask& I, const CancellationFamily& fam);

/// Sum over I outside B_1 u ... u B_k. Correct whenever every pair passes
/// validate_pair; not checked here.
SumResult reduced_sum(const IndexUniverse& u, const TermFunction& t, const CancellationFamily& fam,
                      const SumOptions& opts = {});

/// True iff for every I* containing B and disjoint from B*, the alternating
/// sum of t over I* u D*, D* ranging over the subsets of B*, vanishes. For
/// B* = {b} that is t(I*) = t(I* u {b}) for all I* containing B.
bool validate_pair(const IndexUniverse& u, const TermFunction& t, const BrokenPair& p,
                   const SumOptions& opts = {});

/// The class <I> = {(I \ B_i*) u D* : D* subset of B_i*} of the unique i with
/// I in B_i, sorted by bit word. Throws DomainError when I is in no B_i.
std::vector<SubsetMask> equivalence_class(const SubsetMask& I, const CancellationFamily& fam);

/// True iff I contains some member of X.
bool ideal_membership(const SubsetMask& I, const OrderedFamily& of);

/// Sum over I containing no member of X.
SumResult ordered_reduced_sum(const IndexUniverse& u, const TermFunction& t,
                              const OrderedFamily& of, const SumOptions& opts = {});

/// Pairs (B, B') for every B in X, stably sorted by the order position of
/// min B'. The resulting B equals the ideal generated by X. Throws
/// DomainError for an empty B or an empty B'.
CancellationFamily ordered_family_to_pairs(const OrderedFamily& of);

/// Exhaustive listing of B_1, ..., B_k (each sorted by bit word).
std::vector<std::vector<SubsetMask>> excluded_families(const CancellationFamily& fam,
                                                       const SumOptions& opts = {});
/// Exhaustive listing of the ideal generated by X.
std::vector<SubsetMask> ideal_members(const OrderedFamily& of, const SumOptions& opts = {});

}  // namespace iecancel
