#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace iecancel {

inline constexpr std::size_t kMaxUniverse = 64;
/// Default cap for exhaustive 2^n enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// The index set P: `size` elements with distinct display labels.
class IndexUniverse {
 public:
  IndexUniverse() = default;
  explicit IndexUniverse(std::vector<std::string> labels);
  /// Labels "0", "1", ... .
  static IndexUniverse anonymous(std::size_t size);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Index of `label`; throws DomainError if absent.
  [[nodiscard]] std::size_t index_of(const std::string& label) const;

  friend bool operator==(const IndexUniverse&, const IndexUniverse&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A subset of an index universe of at most 64 elements, stored as a bit word.
class SubsetMask {
 public:
  SubsetMask() = default;
  /// Throws DomainError if a bit at position >= universe_size is set.
  SubsetMask(std::uint64_t bits, std::size_t universe_size);

  static SubsetMask empty(std::size_t universe_size) { return {0, universe_size}; }
  static SubsetMask full(std::size_t universe_size);
  static SubsetMask of(std::size_t universe_size, std::initializer_list<std::size_t> members);

  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] std::size_t universe_size() const { return universe_size_; }
  [[nodiscard]] std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] bool none() const { return bits_ == 0; }
  [[nodiscard]] bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1u); }
  /// Member indices in increasing order.
  [[nodiscard]] std::vector<std::size_t> members() const;
  /// Lowest member index; undefined for the empty set.
  [[nodiscard]] std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  [[nodiscard]] SubsetMask with(std::size_t i) const;
  [[nodiscard]] SubsetMask without(std::size_t i) const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t universe_size_ = 0;
};

/// These throw UniverseMismatchError when the universes differ.
bool is_superset(const SubsetMask& a, const SubsetMask& b);
SubsetMask difference(const SubsetMask& a, const SubsetMask& b);
SubsetMask set_union(const SubsetMask& a, const SubsetMask& b);
SubsetMask intersect(const SubsetMask& a, const SubsetMask& b);
bool disjoint(const SubsetMask& a, const SubsetMask& b);

/// Forward range over the bit words first, first+1, ..., last-1 of a universe.
class SubsetRange {
 public:
  class iterator {
   public:
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    iterator(std::uint64_t word, std::size_t n) : word_(word), n_(n) {}
    SubsetMask operator*() const { return SubsetMask(word_, n_); }
    iterator& operator++() {
      ++word_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++word_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.word_ == b.word_; }

   private:
    std::uint64_t word_ = 0;
    std::size_t n_ = 0;
  };

  SubsetRange(std::uint64_t first, std::uint64_t last, std::size_t n)
      : first_(first), last_(last), n_(n) {}

  [[nodiscard]] iterator begin() const { return {first_, n_}; }
  [[nodiscard]] iterator end() const { return {last_, n_}; }
  [[nodiscard]] std::uint64_t size() const { return last_ - first_; }

  /// Splits into `parts` disjoint, jointly exhaustive contiguous ranges.
  [[nodiscard]] std::vector<SubsetRange> split(std::size_t parts) const;

 private:
  std::uint64_t first_;
  std::uint64_t last_;
  std::size_t n_;
};

/// Every subset of u in increasing numeric order. Throws SizeLimitError when
/// u.size() exceeds `cap` (itself at most 63).
SubsetRange all_subsets(const IndexUniverse& u, std::size_t cap = kDefaultEnumerationCap);
SubsetRange all_subsets(std::size_t universe_size, std::size_t cap = kDefaultEnumerationCap);

/// Forward range over every subset of a fixed mask, increasing numeric order.
class SubmaskRange {
 public:
  class iterator {
   public:
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    iterator(std::uint64_t cur, std::uint64_t of, std::size_t n, bool done)
        : cur_(cur), of_(of), n_(n), done_(done) {}
    SubsetMask operator*() const { return SubsetMask(cur_, n_); }
    iterator& operator++() {
      if (cur_ == of_) {
        done_ = true;
      } else {
        // Next submask in numeric order.
        cur_ = (cur_ - of_) & of_;
      }
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.cur_ == b.cur_);
    }

   private:
    std::uint64_t cur_ = 0;
    std::uint64_t of_ = 0;
    std::size_t n_ = 0;
    bool done_ = true;
  };

  explicit SubmaskRange(const SubsetMask& of) : of_(of) {}
  [[nodiscard]] iterator begin() const { return {0, of_.bits(), of_.universe_size(), false}; }
  [[nodiscard]] iterator end() const { return {0, of_.bits(), of_.universe_size(), true}; }

 private:
  SubsetMask of_;
};

inline SubmaskRange subsets_of(const SubsetMask& b) { return SubmaskRange(b); }

/// "{123, 345}" using the universe's labels.
std::string render(const SubsetMask& s, const IndexUniverse& u);
/// Member labels in index order.
std::vector<std::string> member_labels(const SubsetMask& s, const IndexUniverse& u);
/// Builds a mask from labels; throws DomainError for unknown labels.
SubsetMask mask_from_labels(const IndexUniverse& u, const std::vector<std::string>& labels);

}  // namespace iecancel
