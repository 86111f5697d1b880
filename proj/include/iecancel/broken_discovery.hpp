#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iecancel/engine.hpp"
#include "iecancel/graph_model.hpp"

namespace iecancel {

enum class DiscoveryMethod { chromatic, independence, domination, broken_cycle, broken_neighbourhood };

std::string to_string(DiscoveryMethod m);

struct DiscoveryOptions {
  std::size_t max_universe = kDefaultEnumerationCap;
  /// Largest |B| considered; unbounded when empty.
  std::optional<std::size_t> max_set_size;
};

/// Every minimal B (not containing b) with absorbs(B) true, searched by
/// increasing cardinality; supersets of sets already found are skipped.
/// Minimality is per b: no proper subset of B absorbs the same b.
std::vector<SubsetMask> minimal_absorbing_sets(std::size_t universe_size, std::size_t b,
                                               const std::function<bool(const SubsetMask&)>& absorbs,
                                               const DiscoveryOptions& opts = {});

/// Sorts by (|B|, B's labels in index order compared lexicographically, label
/// of min B*). This is the order every *_broken_pairs function emits.
void sort_pairs(std::vector<BrokenPair>& pairs, const IndexUniverse& u);

/// Pairs (B, {b}) over edges with c(B) = c(B u {b}), B minimal for b.
std::vector<BrokenPair> chromatic_broken_pairs(const Hypergraph& h, const DiscoveryOptions& opts = {});

/// Broken paths: ({e1, e2}, {b}) where the endpoints of b are covered by e1
/// and e2. Graphs only.
std::vector<BrokenPair> independence_broken_pairs(const Hypergraph& g);

/// Pairs (B, {b}) over vertices with N[b] inside N[B], B minimal for b.
/// Graphs only.
std::vector<BrokenPair> domination_broken_pairs(const Hypergraph& g, const DiscoveryOptions& opts = {});

/// Minimal nonempty edge sets F with c(F \ {f}) = c(F) for every f in F.
std::vector<SubsetMask> delta_cycles(const Hypergraph& h, const DiscoveryOptions& opts = {});

/// X = { D minus its maximum edge : D a delta-cycle } under `edge_order`
/// (smallest first).
OrderedFamily broken_cycles(const Hypergraph& h, std::vector<std::size_t> edge_order,
                            const DiscoveryOptions& opts = {});

struct NeighbourhoodFamily {
  OrderedFamily family;
  /// Vertices v that are the maximum of N[v] but have N(v) empty. Their
  /// empty set is left out of X: it generates every subset and the covering
  /// condition fails for it.
  std::vector<std::size_t> empty_neighbourhood_vertices;
};

/// X = { N(v) : v is the maximum of N[v] under `vertex_order` }. Graphs only.
NeighbourhoodFamily broken_neighbourhoods(const Hypergraph& g, std::vector<std::size_t> vertex_order);

/// X = { B : (B, B*) in pairs, B nonempty, B* above every member of B }.
/// Each such B satisfies the ordered covering condition because B* lies in
/// its upper bounds. Duplicates are dropped; pair order is kept.
OrderedFamily order_restricted_family(const std::vector<BrokenPair>& pairs,
                                      std::vector<std::size_t> order);

struct DiscoveryReport {
  CancellationFamily pairs;
  /// |B_i| per pair, in family order.
  std::vector<std::uint64_t> per_pair_excluded;
  /// |B_1 u ... u B_k|.
  std::uint64_t excluded_count = 0;
  DiscoveryMethod method_tag;
};

DiscoveryReport make_report(CancellationFamily pairs, DiscoveryMethod tag,
                            const SumOptions& opts = {});

}  // namespace iecancel
