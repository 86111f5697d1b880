#include "iecancel/graph_model.hpp"

#include <bit>
#include <numeric>
#include <set>

#include "iecancel/errors.hpp"

namespace iecancel {

namespace {

std::vector<std::string> default_vertex_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges,
                       std::vector<std::string> vertex_labels,
                       std::vector<std::string> edge_labels) {
  if (n > kMaxUniverse) throw SizeLimitError("hypergraph has more than 64 vertices");
  if (edges.size() > kMaxUniverse) throw SizeLimitError("hypergraph has more than 64 edges");
  if (vertex_labels.empty()) vertex_labels = default_vertex_labels(n);
  if (vertex_labels.size() != n) throw DomainError("vertex label count differs from vertex count");
  vertex_universe_ = IndexUniverse(std::move(vertex_labels));

  std::set<std::uint64_t> seen;
  for (const auto& e : edges) {
    std::uint64_t bits = 0;
    for (auto v : e) {
      if (v >= n) throw DomainError("edge references vertex " + std::to_string(v) + " out of range");
      if (bits & (std::uint64_t{1} << v)) throw DomainError("edge lists a vertex twice");
      bits |= std::uint64_t{1} << v;
    }
    if (std::popcount(bits) < 2) throw DomainError("edges must have at least two vertices");
    if (!seen.insert(bits).second) throw DomainError("duplicate edge: hypergraph must be simple");
    edges_.push_back(bits);
  }

  if (edge_labels.empty()) {
    for (auto bits : edges_) {
      std::string label;
      for (std::size_t v = 0; v < n; ++v) {
        if (bits & (std::uint64_t{1} << v)) label += vertex_universe_.label(v);
      }
      edge_labels.push_back(std::move(label));
    }
  }
  if (edge_labels.size() != edges_.size()) throw DomainError("edge label count differs from edge count");
  edge_universe_ = IndexUniverse(std::move(edge_labels));
}

std::vector<std::size_t> Hypergraph::edge_members(std::size_t e) const {
  return SubsetMask(edges_.at(e), vertex_count()).members();
}

bool Hypergraph::is_graph() const {
  for (auto bits : edges_) {
    if (std::popcount(bits) != 2) return false;
  }
  return true;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

std::size_t component_count(const Hypergraph& h, const SubsetMask& f) {
  if (f.universe_size() != h.edge_count()) {
    throw UniverseMismatchError("component_count: edge subset from another universe");
  }
  UnionFind uf(h.vertex_count());
  for (std::uint64_t w = f.bits(); w != 0; w &= w - 1) {
    std::uint64_t verts = h.edge_vertices(static_cast<std::size_t>(std::countr_zero(w)));
    const auto first = static_cast<std::size_t>(std::countr_zero(verts));
    for (verts &= verts - 1; verts != 0; verts &= verts - 1) {
      uf.unite(first, static_cast<std::size_t>(std::countr_zero(verts)));
    }
  }
  return uf.components();
}

std::size_t induced_vertex_count(const Hypergraph& g, const SubsetMask& f) {
  if (f.universe_size() != g.edge_count()) {
    throw UniverseMismatchError("induced_vertex_count: edge subset from another universe");
  }
  std::uint64_t covered = 0;
  for (std::uint64_t w = f.bits(); w != 0; w &= w - 1) {
    covered |= g.edge_vertices(static_cast<std::size_t>(std::countr_zero(w)));
  }
  return static_cast<std::size_t>(std::popcount(covered));
}

SubsetMask closed_neighborhood(const Hypergraph& g, const SubsetMask& w) {
  if (!g.is_graph()) throw UnsupportedError("closed neighbourhoods are defined for graphs only");
  if (w.universe_size() != g.vertex_count()) {
    throw UniverseMismatchError("closed_neighborhood: vertex subset from another universe");
  }
  std::uint64_t out = w.bits();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::uint64_t ends = g.edge_vertices(e);
    if (ends & w.bits()) out |= ends;
  }
  return {out, g.vertex_count()};
}

}  // namespace iecancel
