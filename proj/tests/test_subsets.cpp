#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "iecancel/errors.hpp"
#include "iecancel/subsets.hpp"
#include "support/random_instances.hpp"

using namespace iecancel;

namespace {

std::vector<std::uint64_t> words(auto range) {
  std::vector<std::uint64_t> out;
  for (auto s : range) out.push_back(s.bits());
  return out;
}

}  // namespace

TEST_CASE("index universe rejects duplicate labels and oversize") {
  CHECK_THROWS_AS(IndexUniverse({"a", "a"}), DomainError);
  CHECK_THROWS_AS(IndexUniverse::anonymous(65), SizeLimitError);
  const IndexUniverse u({"123", "345"});
  CHECK(u.index_of("345") == 1);
  CHECK_THROWS_AS((void)u.index_of("999"), DomainError);
}

TEST_CASE("subset mask rejects bits outside its universe") {
  CHECK_THROWS_AS(SubsetMask(0b100, 2), DomainError);
  CHECK(SubsetMask::full(64).count() == 64);
}

TEST_CASE("all_subsets") {
  CHECK(words(all_subsets(0)) == std::vector<std::uint64_t>{0});
  CHECK(words(all_subsets(2)) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(all_subsets(4).size() == 16);
  CHECK_THROWS_AS(all_subsets(25), SizeLimitError);
  CHECK(all_subsets(25, 30).size() == (std::uint64_t{1} << 25));
  try {
    (void)all_subsets(30);
    FAIL("expected a size-limit error");
  } catch (const SizeLimitError& e) {
    CHECK(std::string(e.what()).find("24") != std::string::npos);
  }
}

TEST_CASE("all_subsets popcount strata match binomials") {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<std::uint64_t> by_size(n + 1, 0);
    std::set<std::uint64_t> distinct;
    for (auto s : all_subsets(n)) {
      ++by_size[s.count()];
      distinct.insert(s.bits());
    }
    CHECK(distinct.size() == (std::size_t{1} << n));
    for (std::size_t k = 0; k <= n; ++k) CHECK(by_size[k] == testing::binomial(n, k));
  }
}

TEST_CASE("split ranges are disjoint and exhaustive") {
  const auto range = all_subsets(10);
  for (std::size_t parts : {1, 3, 7, 2000}) {
    std::vector<std::uint64_t> seen;
    for (const auto& r : range.split(parts)) {
      for (auto s : r) seen.push_back(s.bits());
    }
    CHECK(seen == words(range));
  }
}

TEST_CASE("is_superset") {
  CHECK(is_superset(SubsetMask::of(4, {0, 1, 2}), SubsetMask::of(4, {0, 2})));
  CHECK_FALSE(is_superset(SubsetMask::of(4, {0, 1}), SubsetMask::of(4, {2})));
  CHECK(is_superset(SubsetMask::empty(4), SubsetMask::empty(4)));
  CHECK_THROWS_AS(is_superset(SubsetMask::empty(4), SubsetMask::empty(5)), UniverseMismatchError);
}

TEST_CASE("difference") {
  CHECK(difference(SubsetMask::of(4, {0, 1, 2}), SubsetMask::of(4, {1})) == SubsetMask::of(4, {0, 2}));
  const IndexUniverse v({"v1", "v2", "v3", "v4"});
  const auto d = difference(mask_from_labels(v, {"v1", "v3"}), mask_from_labels(v, {"v3"}));
  CHECK(render(d, v) == "{v1}");
  CHECK(difference(SubsetMask::empty(4), SubsetMask::of(4, {0})).none());
  CHECK_THROWS_AS(difference(SubsetMask::empty(3), SubsetMask::empty(4)), UniverseMismatchError);
}

TEST_CASE("subsets_of") {
  CHECK(words(subsets_of(SubsetMask::empty(4))) == std::vector<std::uint64_t>{0});
  CHECK(words(subsets_of(SubsetMask::of(4, {2}))) == std::vector<std::uint64_t>{0, 4});
  // Oracle: filter all_subsets by containment.
  const auto b = SubsetMask::of(4, {0, 3});
  std::vector<std::uint64_t> expected;
  for (auto s : all_subsets(4)) {
    if (is_superset(b, s)) expected.push_back(s.bits());
  }
  CHECK(expected == std::vector<std::uint64_t>{0, 1, 8, 9});
  CHECK(words(subsets_of(b)) == expected);
}

TEST_CASE("property: set algebra on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> word(0, (1u << 12) - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const SubsetMask a(word(rng), 12), b(word(rng), 12);
    CHECK(set_union(difference(a, b), intersect(a, b)) == a);
    CHECK((is_superset(a, b) && is_superset(b, a)) == (a == b));
    std::size_t n = 0;
    for (auto s : subsets_of(a)) {
      CHECK(is_superset(a, s));
      ++n;
    }
    CHECK(n == (std::size_t{1} << a.count()));
  }
}

TEST_CASE("render uses labels in index order") {
  const IndexUniverse e({"123", "345", "234", "126"});
  CHECK(render(SubsetMask::of(4, {0, 1}), e) == "{123, 345}");
  CHECK(render(SubsetMask::empty(4), e) == "{}");
  CHECK_THROWS_AS(mask_from_labels(e, {"999"}), DomainError);
}
