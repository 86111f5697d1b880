#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "iecancel/broken_discovery.hpp"
#include "iecancel/engine.hpp"
#include "iecancel/graph_model.hpp"

namespace iecancel {

enum class PolynomialKind { chromatic, independence, domination };
enum class Method { full, pairs, ordered };

std::string to_string(PolynomialKind k);
std::string to_string(Method m);
PolynomialKind parse_polynomial_kind(const std::string& s);
Method parse_method(const std::string& s);

struct ComputationResult {
  IntPolynomial polynomial;
  Method method = Method::full;
  std::uint64_t terms_evaluated = 0;
  std::uint64_t terms_total = 0;
  /// Number of pairs, or |X| for the ordered method; 0 for full.
  std::size_t family_size = 0;
};

/// No family (discover one), an explicit pair list, or an ordered family.
using Family = std::variant<std::monostate, CancellationFamily, OrderedFamily>;

struct ComputeOptions {
  SumOptions sum;
  DiscoveryOptions discovery;
  /// Run validate_pair on every supplied pair (for ordered families: on
  /// each (B, B')) before summing; failure throws ValidationError.
  bool verify_family = false;
};

/// t(F) = x^c(F).
TermFunction chromatic_term(const Hypergraph& h);
/// t(F) = x^|G[F]| (1+x)^(n - |G[F]|).
TermFunction independence_term(const Hypergraph& g);
/// t(W) = (1+x)^(n - |N[W]|), indexed by vertices.
TermFunction domination_term(const Hypergraph& g);

TermFunction term_for(PolynomialKind kind, const Hypergraph& g);
/// Edges for chromatic and independence, vertices for domination.
const IndexUniverse& universe_for(PolynomialKind kind, const Hypergraph& g);
DiscoveryMethod discovery_tag(PolynomialKind kind);

/// Structural broken pairs for the polynomial, in the deterministic emit order.
std::vector<BrokenPair> discover_pairs(PolynomialKind kind, const Hypergraph& g,
                                       const DiscoveryOptions& opts = {});

/// Dispatches to full_sum / reduced_sum / ordered_reduced_sum. Without a
/// family, pairs are discovered; for the ordered method X is then the
/// order-restricted family of the discovered pairs under declaration order.
ComputationResult compute(PolynomialKind kind, const Hypergraph& g, Method method,
                          const Family& family = {}, const ComputeOptions& opts = {});

ComputationResult chromatic_polynomial(const Hypergraph& h, Method method, const Family& family = {},
                                       const ComputeOptions& opts = {});
ComputationResult independence_polynomial(const Hypergraph& g, Method method,
                                          const Family& family = {},
                                          const ComputeOptions& opts = {});
ComputationResult domination_polynomial(const Hypergraph& g, Method method,
                                        const Family& family = {},
                                        const ComputeOptions& opts = {});

}  // namespace iecancel
