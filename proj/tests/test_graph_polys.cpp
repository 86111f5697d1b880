#include <doctest.h>

#include <random>

#include "iecancel/errors.hpp"
#include "iecancel/graph_polys.hpp"
#include "iecancel/oracle.hpp"
#include "support/example_instances.hpp"
#include "support/random_instances.hpp"

using namespace iecancel;

namespace {

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<std::int64_t> c(counts.begin(), counts.end());
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("chromatic polynomial of the worked hypergraph") {
  const auto inst = builtin_instance("example-hypergraph");
  const auto h = inst.hypergraph();
  const IntPolynomial expected({0, -1, 1, 3, -4, 0, 1});

  const auto full = chromatic_polynomial(h, Method::full);
  CHECK(full.polynomial == expected);
  CHECK(full.terms_evaluated == 16);

  const auto pairs = chromatic_polynomial(h, Method::pairs, testing::example_family(inst, h.edge_universe()));
  CHECK(pairs.polynomial == expected);
  CHECK(pairs.terms_evaluated == 10);
  CHECK(pairs.family_size == 2);

  const auto ordered = chromatic_polynomial(
      h, Method::ordered, testing::example_ordered(inst, h.edge_universe(), *inst.edge_order));
  CHECK(ordered.polynomial == expected);
  CHECK(ordered.terms_evaluated == 12);

  CHECK(eval_at(expected, 2) == 26);
  for (std::int64_t k = 0; k <= 4; ++k) {
    CHECK(eval_at(expected, k) ==
          static_cast<std::int64_t>(oracle::count_proper_colorings(h, static_cast<std::uint64_t>(k))));
  }
}

TEST_CASE("independence polynomial of the path") {
  const auto inst = builtin_instance("example-path");
  const auto g = inst.hypergraph();
  const IntPolynomial expected({1, 5, 6, 1});
  CHECK(independence_polynomial(g, Method::full).polynomial == expected);
  const auto pairs = independence_polynomial(g, Method::pairs, testing::example_family(inst, g.edge_universe()));
  CHECK(pairs.polynomial == expected);
  CHECK(pairs.terms_evaluated == 10);
  const auto ordered = independence_polynomial(
      g, Method::ordered, testing::example_ordered(inst, g.edge_universe(), *inst.edge_order));
  CHECK(ordered.polynomial == expected);
  CHECK(ordered.terms_evaluated == 12);
}

TEST_CASE("domination polynomial of P4") {
  const auto inst = builtin_instance("example-p4");
  const auto g = inst.hypergraph();
  const IntPolynomial expected({0, 0, 4, 4, 1});
  CHECK(domination_polynomial(g, Method::full).polynomial == expected);
  CHECK(domination_polynomial(g, Method::full).polynomial ==
        from_counts(oracle::dominating_set_counts(g)));

  const auto pairs = domination_polynomial(g, Method::pairs, testing::example_family(inst, g.vertex_universe()));
  CHECK(pairs.polynomial == expected);
  CHECK(pairs.terms_evaluated == 8);

  const auto ordered = domination_polynomial(
      g, Method::ordered, testing::example_ordered(inst, g.vertex_universe(), *inst.vertex_order));
  CHECK(ordered.polynomial == expected);
  CHECK(ordered.terms_evaluated == 10);

  const auto discovered = domination_polynomial(g, Method::pairs);
  CHECK(discovered.polynomial == expected);
  CHECK(discovered.terms_evaluated == 4);
  CHECK(discovered.family_size == 6);
}

TEST_CASE("degenerate inputs") {
  SUBCASE("edgeless chromatic is x^n from a single term") {
    const Hypergraph g(5, {});
    for (auto m : {Method::full, Method::pairs, Method::ordered}) {
      const auto r = chromatic_polynomial(g, m);
      CHECK(r.polynomial == IntPolynomial::monomial(5));
      CHECK(r.terms_evaluated == 1);
      CHECK(r.terms_total == 1);
    }
  }
  SUBCASE("edgeless independence is (1+x)^n") {
    CHECK(independence_polynomial(Hypergraph(4, {}), Method::pairs).polynomial ==
          IntPolynomial({1, 4, 6, 4, 1}));
  }
  SUBCASE("single vertex domination is x") {
    CHECK(domination_polynomial(Hypergraph(1, {}), Method::pairs).polynomial == IntPolynomial::monomial(1));
  }
  SUBCASE("graph-only polynomials reject hyperedges") {
    CHECK_THROWS_AS(independence_polynomial(testing::example_hypergraph(), Method::full), UnsupportedError);
    CHECK_THROWS_AS(domination_polynomial(testing::example_hypergraph(), Method::full), UnsupportedError);
  }
}

TEST_CASE("family kind must match the method") {
  const auto g = testing::example_path();
  CHECK_THROWS_AS(independence_polynomial(g, Method::pairs, OrderedFamily::natural(4, {})), DomainError);
  CHECK_THROWS_AS(independence_polynomial(g, Method::ordered, CancellationFamily(4, {})), DomainError);
}

TEST_CASE("verify_family rejects a pair that does not cancel") {
  const auto g = testing::example_path();
  const auto& e = g.edge_universe();
  ComputeOptions opts;
  opts.verify_family = true;
  const CancellationFamily bad(4, {BrokenPair(testing::labels(e, {"e1"}), testing::labels(e, {"e4"}))});
  CHECK_THROWS_AS(independence_polynomial(g, Method::pairs, bad, opts), ValidationError);
  try {
    independence_polynomial(g, Method::pairs, bad, opts);
  } catch (const ValidationError& ex) {
    CHECK(std::string(ex.what()).find("pair 1") != std::string::npos);
  }
  const OrderedFamily bad_ordered(std::vector<std::size_t>{0, 1, 2, 3}, {testing::labels(e, {"e1"})});
  CHECK_THROWS_AS(independence_polynomial(g, Method::ordered, bad_ordered, opts), ValidationError);
}

TEST_CASE("property: all methods agree with the oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const auto h = testing::random_hypergraph(rng, 1 + trial % 7, 7);
    const auto full = chromatic_polynomial(h, Method::full).polynomial;
    CHECK(chromatic_polynomial(h, Method::pairs).polynomial == full);
    CHECK(chromatic_polynomial(h, Method::ordered).polynomial == full);
    CHECK(full.degree() == static_cast<int>(h.vertex_count()));
    CHECK(full.coeff(full.degree()) == 1);
    for (std::uint64_t k = 0; k <= 3; ++k) {
      CHECK(eval_at(full, static_cast<std::int64_t>(k)) ==
            static_cast<std::int64_t>(oracle::count_proper_colorings(h, k)));
    }

    const auto g = testing::random_graph(rng, 1 + trial % 8, 0.4, 10);
    const auto ind = from_counts(oracle::independent_set_counts(g));
    const auto dom = from_counts(oracle::dominating_set_counts(g));
    for (auto m : {Method::full, Method::pairs, Method::ordered}) {
      CHECK(independence_polynomial(g, m).polynomial == ind);
      CHECK(domination_polynomial(g, m).polynomial == dom);
    }
    CHECK(dom.degree() == static_cast<int>(g.vertex_count()));
    CHECK(dom.coeff(dom.degree()) == 1);
  }
}

TEST_CASE("property: cancellation never evaluates more terms than the full sum") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(rng, 3 + trial % 5, 0.5, 9);
    for (auto kind : {PolynomialKind::chromatic, PolynomialKind::independence, PolynomialKind::domination}) {
      const auto full = compute(kind, g, Method::full);
      const auto pairs = compute(kind, g, Method::pairs);
      CHECK(pairs.terms_evaluated <= full.terms_evaluated);
      CHECK(pairs.terms_total == full.terms_total);
    }
  }
}

TEST_CASE("method names round-trip") {
  for (auto m : {Method::full, Method::pairs, Method::ordered}) CHECK(parse_method(to_string(m)) == m);
  for (auto k : {PolynomialKind::chromatic, PolynomialKind::independence, PolynomialKind::domination}) {
    CHECK(parse_polynomial_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_method("fast"), ParseError);
}
