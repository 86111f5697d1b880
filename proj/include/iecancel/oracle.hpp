#pragma once

#include <cstdint>
#include <vector>

#include "iecancel/graph_model.hpp"

// Brute-force ground truth. Nothing here goes through the inclusion-exclusion
// code; only the Hypergraph type is shared.
namespace iecancel::oracle {

inline constexpr std::size_t kMaxColoringVertices = 10;
inline constexpr std::size_t kMaxSubsetVertices = 20;

/// Colorings with k colors in which no edge is monochromatic, by scanning
/// all k^n assignments.
std::uint64_t count_proper_colorings(const Hypergraph& h, std::uint64_t k,
                                     std::size_t max_vertices = kMaxColoringVertices);

/// counts[i] = number of i-vertex sets containing no edge. Graphs only.
std::vector<std::uint64_t> independent_set_counts(const Hypergraph& g,
                                                  std::size_t max_vertices = kMaxSubsetVertices);

/// counts[i] = number of i-vertex sets W with N[W] = V. Graphs only.
std::vector<std::uint64_t> dominating_set_counts(const Hypergraph& g,
                                                 std::size_t max_vertices = kMaxSubsetVertices);

}  // namespace iecancel::oracle
