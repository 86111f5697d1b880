#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iecancel/subsets.hpp"

namespace iecancel {

/// A simple hypergraph on vertices 0..n-1. Every edge has at least two
/// vertices and no two edges are equal as vertex sets. A graph is the
/// 2-uniform case.
class Hypergraph {
 public:
  /// Edges are given as vertex index lists. Vertex labels default to
  /// "1".."n"; edge labels default to the concatenated vertex labels
  /// ("123" for {1,2,3}).
  Hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges,
             std::vector<std::string> vertex_labels = {},
             std::vector<std::string> edge_labels = {});

  [[nodiscard]] std::size_t vertex_count() const { return vertex_universe_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  /// Vertex set of edge e as a bit word over the vertices.
  [[nodiscard]] std::uint64_t edge_vertices(std::size_t e) const { return edges_[e]; }
  [[nodiscard]] std::vector<std::size_t> edge_members(std::size_t e) const;
  [[nodiscard]] bool is_graph() const;

  [[nodiscard]] const IndexUniverse& vertex_universe() const { return vertex_universe_; }
  [[nodiscard]] const IndexUniverse& edge_universe() const { return edge_universe_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::uint64_t> edges_;
  IndexUniverse vertex_universe_;
  IndexUniverse edge_universe_;
};

/// c(F): components of the spanning subgraph (V, F), isolated vertices
/// included.
std::size_t component_count(const Hypergraph& h, const SubsetMask& f);

/// |G[F]|: number of vertices covered by the edges of F.
std::size_t induced_vertex_count(const Hypergraph& g, const SubsetMask& f);

/// N[W] for a graph. Throws UnsupportedError if g has an edge with more than
/// two vertices.
SubsetMask closed_neighborhood(const Hypergraph& g, const SubsetMask& w);

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns true when a merge happened.
  bool unite(std::size_t a, std::size_t b);
  [[nodiscard]] std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

}  // namespace iecancel
