#include "iecancel/subsets.hpp"

#include <set>
#include <sstream>

#include "iecancel/errors.hpp"

namespace iecancel {

IndexUniverse::IndexUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverse) {
    throw SizeLimitError("index universe has " + std::to_string(labels_.size()) +
                         " elements; the limit is " + std::to_string(kMaxUniverse));
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw DomainError("duplicate index label '" + l + "'");
  }
}

IndexUniverse IndexUniverse::anonymous(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return IndexUniverse(std::move(labels));
}

std::size_t IndexUniverse::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw DomainError("unknown label '" + label + "'");
}

SubsetMask::SubsetMask(std::uint64_t bits, std::size_t universe_size)
    : bits_(bits), universe_size_(universe_size) {
  if (universe_size > kMaxUniverse) throw SizeLimitError("subset universe exceeds 64 elements");
  if (universe_size < 64 && (bits >> universe_size) != 0) {
    throw DomainError("subset has members outside its universe of size " +
                      std::to_string(universe_size));
  }
}

SubsetMask SubsetMask::full(std::size_t universe_size) {
  const std::uint64_t bits = universe_size >= 64 ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << universe_size) - 1;
  return {bits, universe_size};
}

SubsetMask SubsetMask::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
  std::uint64_t bits = 0;
  for (auto m : members) {
    if (m >= universe_size) throw DomainError("subset member out of range");
    bits |= std::uint64_t{1} << m;
  }
  return {bits, universe_size};
}

std::vector<std::size_t> SubsetMask::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::uint64_t w = bits_; w != 0; w &= w - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

SubsetMask SubsetMask::with(std::size_t i) const {
  return {bits_ | (std::uint64_t{1} << i), universe_size_};
}

SubsetMask SubsetMask::without(std::size_t i) const {
  return {bits_ & ~(std::uint64_t{1} << i), universe_size_};
}

namespace {

void require_same_universe(const SubsetMask& a, const SubsetMask& b) {
  if (a.universe_size() != b.universe_size()) {
    throw UniverseMismatchError("subsets of universes of size " +
                                std::to_string(a.universe_size()) + " and " +
                                std::to_string(b.universe_size()));
  }
}

}  // namespace

bool is_superset(const SubsetMask& a, const SubsetMask& b) {
  require_same_universe(a, b);
  return (b.bits() & ~a.bits()) == 0;
}

SubsetMask difference(const SubsetMask& a, const SubsetMask& b) {
  require_same_universe(a, b);
  return {a.bits() & ~b.bits(), a.universe_size()};
}

SubsetMask set_union(const SubsetMask& a, const SubsetMask& b) {
  require_same_universe(a, b);
  return {a.bits() | b.bits(), a.universe_size()};
}

SubsetMask intersect(const SubsetMask& a, const SubsetMask& b) {
  require_same_universe(a, b);
  return {a.bits() & b.bits(), a.universe_size()};
}

bool disjoint(const SubsetMask& a, const SubsetMask& b) {
  require_same_universe(a, b);
  return (a.bits() & b.bits()) == 0;
}

std::vector<SubsetRange> SubsetRange::split(std::size_t parts) const {
  if (parts == 0) parts = 1;
  std::vector<SubsetRange> out;
  const std::uint64_t total = size();
  const std::uint64_t chunk = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t lo = first_;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::uint64_t len = chunk + (i < extra ? 1 : 0);
    if (len == 0) continue;
    out.emplace_back(lo, lo + len, n_);
    lo += len;
  }
  return out;
}

SubsetRange all_subsets(std::size_t universe_size, std::size_t cap) {
  const std::size_t limit = cap < 63 ? cap : 63;
  if (universe_size > limit) {
    throw SizeLimitError("universe of " + std::to_string(universe_size) +
                         " elements exceeds the exhaustive enumeration limit of " +
                         std::to_string(limit));
  }
  return {0, std::uint64_t{1} << universe_size, universe_size};
}

SubsetRange all_subsets(const IndexUniverse& u, std::size_t cap) {
  return all_subsets(u.size(), cap);
}

std::vector<std::string> member_labels(const SubsetMask& s, const IndexUniverse& u) {
  if (s.universe_size() != u.size()) {
    throw UniverseMismatchError("subset does not belong to this universe");
  }
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(u.label(i));
  return out;
}

std::string render(const SubsetMask& s, const IndexUniverse& u) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& l : member_labels(s, u)) {
    if (!first) os << ", ";
    first = false;
    os << l;
  }
  os << '}';
  return os.str();
}

SubsetMask mask_from_labels(const IndexUniverse& u, const std::vector<std::string>& labels) {
  std::uint64_t bits = 0;
  for (const auto& l : labels) bits |= std::uint64_t{1} << u.index_of(l);
  return {bits, u.size()};
}

}  // namespace iecancel
