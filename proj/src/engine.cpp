#include "iecancel/engine.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "iecancel/errors.hpp"

namespace iecancel {

BrokenPair::BrokenPair(SubsetMask b_set, SubsetMask b_star)
    : b_set_(b_set), b_star_(b_star) {
  if (!disjoint(b_set_, b_star_)) throw DomainError("broken pair: B and B* must be disjoint");
  if (b_star_.none()) throw DomainError("broken pair: B* must be nonempty");
}

CancellationFamily::CancellationFamily(std::size_t universe_size, std::vector<BrokenPair> pairs)
    : universe_size_(universe_size) {
  pairs_.reserve(pairs.size());
  for (auto& p : pairs) push_back(std::move(p));
}

void CancellationFamily::push_back(BrokenPair p) {
  if (p.universe_size() != universe_size_) {
    throw UniverseMismatchError("broken pair universe differs from the family's");
  }
  pairs_.push_back(std::move(p));
}

OrderedFamily::OrderedFamily(std::vector<std::size_t> order, std::vector<SubsetMask> x_class)
    : order_(std::move(order)), rank_(order_.size(), order_.size()), x_class_(std::move(x_class)) {
  for (std::size_t r = 0; r < order_.size(); ++r) {
    const std::size_t i = order_[r];
    if (i >= order_.size() || rank_[i] != order_.size()) {
      throw DomainError("ordered family: order is not a permutation of the universe");
    }
    rank_[i] = r;
  }
  for (const auto& x : x_class_) {
    if (x.universe_size() != order_.size()) {
      throw UniverseMismatchError("ordered family: class member from another universe");
    }
  }
}

OrderedFamily OrderedFamily::natural(std::size_t universe_size, std::vector<SubsetMask> x_class) {
  std::vector<std::size_t> order(universe_size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return {std::move(order), std::move(x_class)};
}

SubsetMask OrderedFamily::upper_bounds(const SubsetMask& b) const {
  std::size_t top = 0;
  bool any = false;
  for (auto i : b.members()) {
    top = std::max(top, rank_[i]);
    any = true;
  }
  std::uint64_t bits = 0;
  for (std::size_t r = any ? top + 1 : 0; r < order_.size(); ++r) {
    bits |= std::uint64_t{1} << order_[r];
  }
  return {bits, order_.size()};
}

namespace {

int sign_of(const SubsetMask& s) { return (s.count() % 2 == 0) ? 1 : -1; }

// Runs `visit(mask, partial)` over every subset in the range, possibly on
// several threads, and folds the partial results.
template <typename Visit>
SumResult scan(const SubsetRange& range, std::size_t threads, Visit visit) {
  const std::size_t workers = std::max<std::size_t>(1, threads);
  auto parts = range.split(workers);
  std::vector<SumResult> partial(parts.size());
  auto run = [&](std::size_t w) {
    for (auto s : parts[w]) visit(s, partial[w]);
  };
  if (parts.size() <= 1) {
    if (!parts.empty()) run(0);
  } else {
    std::vector<std::exception_ptr> errors(parts.size());
    {
      std::vector<std::jthread> pool;
      pool.reserve(parts.size());
      for (std::size_t w = 0; w < parts.size(); ++w) {
        pool.emplace_back([&, w] {
          try {
            run(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  SumResult out;
  out.terms_total = range.size();
  for (auto& p : partial) {
    out.polynomial += p.polynomial;
    out.terms_evaluated += p.terms_evaluated;
  }
  return out;
}

void accumulate(SumResult& acc, const SubsetMask& s, const TermFunction& t) {
  acc.polynomial += scale_signed(t(s), sign_of(s));
  ++acc.terms_evaluated;
}

void require_universe(const IndexUniverse& u, std::size_t n, const char* what) {
  if (u.size() != n) {
    throw UniverseMismatchError(std::string(what) + ": universe size " + std::to_string(u.size()) +
                                " does not match " + std::to_string(n));
  }
}

// Precomputed membership test for B_1 u ... u B_k.
class Classifier {
 public:
  explicit Classifier(const CancellationFamily& fam) {
    const std::size_t k = fam.size();
    need_.resize(k);
    avoid_.resize(k);
    empty_.assign(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      need_[i] = fam[i].b_set().bits();
      const std::uint64_t star = fam[i].b_star().bits();
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint64_t remnant = fam[j].b_set().bits() & ~star;
        // A remnant inside B_i is contained in every candidate: B_i is empty.
        if ((remnant & ~need_[i]) == 0) empty_[i] = true;
        avoid_[i].push_back(remnant);
      }
    }
  }

  [[nodiscard]] std::optional<std::size_t> operator()(std::uint64_t I) const {
    for (std::size_t i = 0; i < need_.size(); ++i) {
      if (empty_[i] || (need_[i] & ~I) != 0) continue;
      bool ok = true;
      for (auto r : avoid_[i]) {
        if ((r & ~I) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> need_;
  std::vector<std::vector<std::uint64_t>> avoid_;
  std::vector<bool> empty_;
};

}  // namespace

SumResult full_sum(const IndexUniverse& u, const TermFunction& t, const SumOptions& opts) {
  return scan(all_subsets(u, opts.max_universe), opts.threads,
              [&](const SubsetMask& s, SumResult& acc) { accumulate(acc, s, t); });
}

std::optional<std::size_t> classify(const SubsetMask& I, const CancellationFamily& fam) {
  if (I.universe_size() != fam.universe_size()) {
    throw UniverseMismatchError("classify: subset and family universes differ");
  }
  return Classifier(fam)(I.bits());
}

SumResult reduced_sum(const IndexUniverse& u, const TermFunction& t, const CancellationFamily& fam,
                      const SumOptions& opts) {
  require_universe(u, fam.universe_size(), "reduced_sum");
  const Classifier in_b(fam);
  return scan(all_subsets(u, opts.max_universe), opts.threads,
              [&](const SubsetMask& s, SumResult& acc) {
                if (!in_b(s.bits())) accumulate(acc, s, t);
              });
}

bool validate_pair(const IndexUniverse& u, const TermFunction& t, const BrokenPair& p,
                   const SumOptions& opts) {
  require_universe(u, p.universe_size(), "validate_pair");
  const std::size_t n = u.size();
  const SubsetMask free = difference(difference(SubsetMask::full(n), p.b_set()), p.b_star());
  if (free.count() > std::min<std::size_t>(opts.max_universe, 63)) {
    throw SizeLimitError("validate_pair: " + std::to_string(free.count()) +
                         " free indices exceed the enumeration limit");
  }
  for (auto extra : subsets_of(free)) {
    const SubsetMask base = set_union(p.b_set(), extra);
    IntPolynomial alternating;
    for (auto d : subsets_of(p.b_star())) {
      alternating += scale_signed(t(set_union(base, d)), sign_of(d));
    }
    if (!alternating.is_zero()) return false;
  }
  return true;
}

std::vector<SubsetMask> equivalence_class(const SubsetMask& I, const CancellationFamily& fam) {
  const auto i = classify(I, fam);
  if (!i) throw DomainError("equivalence_class: subset is not in any excluded family");
  const SubsetMask& star = fam[*i].b_star();
  const SubsetMask core = difference(I, star);
  std::vector<SubsetMask> out;
  for (auto d : subsets_of(star)) out.push_back(set_union(core, d));
  return out;
}

bool ideal_membership(const SubsetMask& I, const OrderedFamily& of) {
  if (I.universe_size() != of.universe_size()) {
    throw UniverseMismatchError("ideal_membership: subset and family universes differ");
  }
  return std::any_of(of.x_class().begin(), of.x_class().end(),
                     [&](const SubsetMask& x) { return is_superset(I, x); });
}

SumResult ordered_reduced_sum(const IndexUniverse& u, const TermFunction& t,
                              const OrderedFamily& of, const SumOptions& opts) {
  require_universe(u, of.universe_size(), "ordered_reduced_sum");
  std::vector<std::uint64_t> gens;
  for (const auto& x : of.x_class()) gens.push_back(x.bits());
  return scan(all_subsets(u, opts.max_universe), opts.threads,
              [&](const SubsetMask& s, SumResult& acc) {
                const std::uint64_t I = s.bits();
                for (auto g : gens) {
                  if ((g & ~I) == 0) return;
                }
                accumulate(acc, s, t);
              });
}

CancellationFamily ordered_family_to_pairs(const OrderedFamily& of) {
  struct Entry {
    std::size_t min_rank;
    SubsetMask b;
    SubsetMask upper;
  };
  std::vector<Entry> entries;
  for (const auto& b : of.x_class()) {
    if (b.none()) {
      throw DomainError("ordered_family_to_pairs: empty generating set has no sound pair");
    }
    const SubsetMask upper = of.upper_bounds(b);
    if (upper.none()) {
      throw DomainError("ordered_family_to_pairs: generating set has no upper bound");
    }
    std::size_t min_rank = of.universe_size();
    for (auto m : upper.members()) min_rank = std::min(min_rank, of.rank(m));
    entries.push_back({min_rank, b, upper});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.min_rank < b.min_rank; });
  CancellationFamily fam(of.universe_size());
  for (const auto& e : entries) fam.push_back(BrokenPair(e.b, e.upper));
  return fam;
}

std::vector<std::vector<SubsetMask>> excluded_families(const CancellationFamily& fam,
                                                       const SumOptions& opts) {
  std::vector<std::vector<SubsetMask>> out(fam.size());
  const Classifier in_b(fam);
  for (auto s : all_subsets(fam.universe_size(), opts.max_universe)) {
    if (auto i = in_b(s.bits())) out[*i].push_back(s);
  }
  return out;
}

std::vector<SubsetMask> ideal_members(const OrderedFamily& of, const SumOptions& opts) {
  std::vector<SubsetMask> out;
  for (auto s : all_subsets(of.universe_size(), opts.max_universe)) {
    if (ideal_membership(s, of)) out.push_back(s);
  }
  return out;
}

}  // namespace iecancel
