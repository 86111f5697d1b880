#include "iecancel/oracle.hpp"

#include "iecancel/errors.hpp"

namespace iecancel::oracle {

namespace {

void require_graph(const Hypergraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge_members(e).size() != 2) throw UnsupportedError("oracle expects a graph");
  }
}

void require_size(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw SizeLimitError("oracle scan over " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(cap));
  }
}

}  // namespace

std::uint64_t count_proper_colorings(const Hypergraph& h, std::uint64_t k, std::size_t max_vertices) {
  const std::size_t n = h.vertex_count();
  require_size(n, max_vertices);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, k, &total)) throw OverflowError("k^n overflows");
  }
  if (k == 0) return n == 0 ? 1 : 0;

  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t e = 0; e < h.edge_count(); ++e) edges.push_back(h.edge_members(e));

  std::vector<std::uint64_t> color(n, 0);
  std::uint64_t good = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : edges) {
      bool mono = true;
      for (auto v : e) {
        if (color[v] != color[e[0]]) {
          mono = false;
          break;
        }
      }
      if (mono) {
        proper = false;
        break;
      }
    }
    if (proper) ++good;

    std::size_t pos = 0;
    while (pos < n && ++color[pos] == k) color[pos++] = 0;
    if (pos == n) break;
  }
  return good;
}

std::vector<std::uint64_t> independent_set_counts(const Hypergraph& g, std::size_t max_vertices) {
  require_graph(g);
  const std::size_t n = g.vertex_count();
  require_size(n, max_vertices);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto ends = g.edge_members(e);
      if ((s >> ends[0] & 1) && (s >> ends[1] & 1)) {
        independent = false;
        break;
      }
    }
    if (independent) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return counts;
}

std::vector<std::uint64_t> dominating_set_counts(const Hypergraph& g, std::size_t max_vertices) {
  require_graph(g);
  const std::size_t n = g.vertex_count();
  require_size(n, max_vertices);
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto ends = g.edge_members(e);
    adjacent[ends[0]][ends[1]] = adjacent[ends[1]][ends[0]] = true;
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool dominating = true;
    for (std::size_t v = 0; v < n && dominating; ++v) {
      if (s >> v & 1) continue;
      bool hit = false;
      for (std::size_t u = 0; u < n; ++u) {
        if ((s >> u & 1) && adjacent[u][v]) {
          hit = true;
          break;
        }
      }
      dominating = hit;
    }
    if (dominating) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return counts;
}

}  // namespace iecancel::oracle
