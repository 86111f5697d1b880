#include "iecancel/broken_discovery.hpp"

#include <algorithm>
#include <bit>

#include "iecancel/errors.hpp"

namespace iecancel {

std::string to_string(DiscoveryMethod m) {
  switch (m) {
    case DiscoveryMethod::chromatic: return "chromatic";
    case DiscoveryMethod::independence: return "independence";
    case DiscoveryMethod::domination: return "domination";
    case DiscoveryMethod::broken_cycle: return "broken_cycle";
    case DiscoveryMethod::broken_neighbourhood: return "broken_neighbourhood";
  }
  return "unknown";
}

namespace {

// Minimal subsets of `ground` satisfying `pred`, by increasing cardinality.
// Any set containing an earlier hit is skipped, so every hit is minimal.
std::vector<SubsetMask> minimal_subsets(const SubsetMask& ground,
                                        const std::function<bool(const SubsetMask&)>& pred,
                                        std::size_t first_size, const DiscoveryOptions& opts) {
  const std::size_t n = ground.universe_size();
  const std::vector<std::size_t> positions = ground.members();
  const std::size_t m = positions.size();
  if (m > std::min<std::size_t>(opts.max_universe, 63)) {
    throw SizeLimitError("discovery search over " + std::to_string(m) +
                         " indices exceeds the enumeration limit of " +
                         std::to_string(opts.max_universe));
  }
  const std::size_t top = opts.max_set_size ? std::min(*opts.max_set_size, m) : m;

  std::vector<std::uint64_t> found;
  std::vector<SubsetMask> out;
  for (std::size_t r = first_size; r <= top; ++r) {
    if (r == 0) {
      const SubsetMask none = SubsetMask::empty(n);
      if (pred(none)) {
        out.push_back(none);
        return out;  // every other set contains the empty set
      }
      continue;
    }
    // Gosper's hack over r-subsets of {0..m-1}, expanded onto `positions`.
    std::uint64_t c = (std::uint64_t{1} << r) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (c < limit) {
      std::uint64_t bits = 0;
      for (std::uint64_t w = c; w != 0; w &= w - 1) {
        bits |= std::uint64_t{1} << positions[static_cast<std::size_t>(std::countr_zero(w))];
      }
      const bool dominated = std::any_of(found.begin(), found.end(),
                                         [bits](std::uint64_t f) { return (f & ~bits) == 0; });
      if (!dominated) {
        const SubsetMask candidate(bits, n);
        if (pred(candidate)) {
          found.push_back(bits);
          out.push_back(candidate);
        }
      }
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      c = (((ripple ^ c) >> 2) / low) | ripple;
    }
  }
  return out;
}

void require_graph(const Hypergraph& g, const char* what) {
  if (!g.is_graph()) {
    throw UnsupportedError(std::string(what) + " is defined for graphs (2-uniform) only");
  }
}

std::vector<BrokenPair> pairs_for_each_b(std::size_t n,
                                         const std::function<bool(std::size_t, const SubsetMask&)>& absorbs,
                                         const DiscoveryOptions& opts) {
  std::vector<BrokenPair> out;
  for (std::size_t b = 0; b < n; ++b) {
    auto sets = minimal_absorbing_sets(
        n, b, [&](const SubsetMask& s) { return absorbs(b, s); }, opts);
    for (const auto& s : sets) out.emplace_back(s, SubsetMask::empty(n).with(b));
  }
  return out;
}

std::size_t order_max(const SubsetMask& s, const std::vector<std::size_t>& rank) {
  std::size_t best = s.lowest();
  for (auto i : s.members()) {
    if (rank[i] > rank[best]) best = i;
  }
  return best;
}

std::vector<std::size_t> ranks_of(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank.at(order[r]) = r;
  return rank;
}

}  // namespace

std::vector<SubsetMask> minimal_absorbing_sets(std::size_t universe_size, std::size_t b,
                                               const std::function<bool(const SubsetMask&)>& absorbs,
                                               const DiscoveryOptions& opts) {
  if (b >= universe_size) throw DomainError("absorbed index out of range");
  const SubsetMask ground = SubsetMask::full(universe_size).without(b);
  return minimal_subsets(ground, absorbs, 0, opts);
}

void sort_pairs(std::vector<BrokenPair>& pairs, const IndexUniverse& u) {
  auto key = [&u](const BrokenPair& p) {
    return std::make_tuple(p.b_set().count(), member_labels(p.b_set(), u),
                           u.label(p.b_star().lowest()));
  };
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const BrokenPair& a, const BrokenPair& b) { return key(a) < key(b); });
}

std::vector<BrokenPair> chromatic_broken_pairs(const Hypergraph& h, const DiscoveryOptions& opts) {
  const std::size_t m = h.edge_count();
  auto pairs = pairs_for_each_b(
      m,
      [&h](std::size_t b, const SubsetMask& s) {
        return component_count(h, s) == component_count(h, s.with(b));
      },
      opts);
  sort_pairs(pairs, h.edge_universe());
  return pairs;
}

std::vector<BrokenPair> independence_broken_pairs(const Hypergraph& g) {
  require_graph(g, "independence broken pairs");
  const std::size_t m = g.edge_count();
  std::vector<BrokenPair> pairs;
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
      const std::uint64_t covered = g.edge_vertices(e1) | g.edge_vertices(e2);
      for (std::size_t b = 0; b < m; ++b) {
        if (b == e1 || b == e2) continue;
        if ((g.edge_vertices(b) & ~covered) == 0) {
          pairs.emplace_back(SubsetMask::of(m, {e1, e2}), SubsetMask::of(m, {b}));
        }
      }
    }
  }
  sort_pairs(pairs, g.edge_universe());
  return pairs;
}

std::vector<BrokenPair> domination_broken_pairs(const Hypergraph& g, const DiscoveryOptions& opts) {
  require_graph(g, "domination broken pairs");
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = closed_neighborhood(g, SubsetMask::empty(n).with(v)).bits();
  }
  auto pairs = pairs_for_each_b(
      n,
      [&](std::size_t b, const SubsetMask& s) {
        std::uint64_t reach = 0;
        for (auto v : s.members()) reach |= closed[v];
        return (closed[b] & ~reach) == 0;
      },
      opts);
  sort_pairs(pairs, g.vertex_universe());
  return pairs;
}

std::vector<SubsetMask> delta_cycles(const Hypergraph& h, const DiscoveryOptions& opts) {
  const std::size_t m = h.edge_count();
  auto is_delta = [&h](const SubsetMask& f) {
    const std::size_t c = component_count(h, f);
    for (auto e : f.members()) {
      if (component_count(h, f.without(e)) != c) return false;
    }
    return true;
  };
  return minimal_subsets(SubsetMask::full(m), is_delta, 1, opts);
}

OrderedFamily broken_cycles(const Hypergraph& h, std::vector<std::size_t> edge_order,
                            const DiscoveryOptions& opts) {
  if (edge_order.size() != h.edge_count()) throw DomainError("edge order must list every edge");
  const auto rank = ranks_of(edge_order);
  std::vector<SubsetMask> x;
  for (const auto& d : delta_cycles(h, opts)) {
    const SubsetMask b = d.without(order_max(d, rank));
    if (std::find(x.begin(), x.end(), b) == x.end()) x.push_back(b);
  }
  return {std::move(edge_order), std::move(x)};
}

NeighbourhoodFamily broken_neighbourhoods(const Hypergraph& g, std::vector<std::size_t> vertex_order) {
  require_graph(g, "broken neighbourhoods");
  const std::size_t n = g.vertex_count();
  if (vertex_order.size() != n) throw DomainError("vertex order must list every vertex");
  const auto rank = ranks_of(vertex_order);
  std::vector<SubsetMask> x;
  std::vector<std::size_t> empties;
  for (std::size_t v = 0; v < n; ++v) {
    const SubsetMask closed = closed_neighborhood(g, SubsetMask::empty(n).with(v));
    if (order_max(closed, rank) != v) continue;
    const SubsetMask open = closed.without(v);
    if (open.none()) {
      empties.push_back(v);
      continue;
    }
    if (std::find(x.begin(), x.end(), open) == x.end()) x.push_back(open);
  }
  return {OrderedFamily(std::move(vertex_order), std::move(x)), std::move(empties)};
}

OrderedFamily order_restricted_family(const std::vector<BrokenPair>& pairs,
                                      std::vector<std::size_t> order) {
  const std::size_t n = order.size();
  OrderedFamily scratch(order, {});
  std::vector<SubsetMask> x;
  for (const auto& p : pairs) {
    if (p.universe_size() != n) throw UniverseMismatchError("pair universe differs from the order");
    if (p.b_set().none()) continue;
    if (!is_superset(scratch.upper_bounds(p.b_set()), p.b_star())) continue;
    if (std::find(x.begin(), x.end(), p.b_set()) == x.end()) x.push_back(p.b_set());
  }
  return {std::move(order), std::move(x)};
}

DiscoveryReport make_report(CancellationFamily pairs, DiscoveryMethod tag, const SumOptions& opts) {
  DiscoveryReport report{std::move(pairs), {}, 0, tag};
  for (const auto& listing : excluded_families(report.pairs, opts)) {
    report.per_pair_excluded.push_back(listing.size());
    report.excluded_count += listing.size();
  }
  return report;
}

}  // namespace iecancel
