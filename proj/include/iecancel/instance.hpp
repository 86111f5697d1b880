#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iecancel/engine.hpp"
#include "iecancel/graph_model.hpp"

namespace iecancel {

/// A pair given by labels; resolved against the edge or vertex universe
/// depending on the polynomial.
struct PairSpec {
  std::vector<std::string> b;
  std::vector<std::string> b_star;

  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

/// On-disk instance. JSON object with keys:
///   "vertices":     [label, ...]                      required
///   "edges":        [[vertex label, ...], ...]        required, each >= 2
///   "edge_labels":  [label, ...]                      optional
///   "edge_order":   [edge label, ...]                 optional permutation
///   "vertex_order": [vertex label, ...]               optional permutation
///   "pairs":        [{"B": [...], "Bstar": [...]}]    optional
///   "ideal":        [[label, ...], ...]               optional generating class
struct Instance {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  std::vector<std::string> edge_labels;
  std::optional<std::vector<std::string>> edge_order;
  std::optional<std::vector<std::string>> vertex_order;
  std::optional<std::vector<PairSpec>> pairs;
  std::optional<std::vector<std::vector<std::string>>> ideal;

  [[nodiscard]] Hypergraph hypergraph() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ParseError naming the offending field.
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);
Instance load_instance(const std::string& path);

/// Built-in fixtures: "example-hypergraph", "example-path", "example-p4",
/// "triangle", "pathN", "cycleN", "starN" (N leaves), "edgelessN".
Instance builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

/// Family-only document: a JSON object whose optional "pairs" and "ideal"
/// keys follow the instance schema. Other keys are ignored, so an instance
/// file is also a valid family file.
struct FamilyFile {
  std::optional<std::vector<PairSpec>> pairs;
  std::optional<std::vector<std::vector<std::string>>> ideal;
};
FamilyFile parse_family_file(const std::string& text);
FamilyFile load_family_file(const std::string& path);

/// Resolve labels against a universe; ParseError on unknown labels.
CancellationFamily resolve_pairs(const std::vector<PairSpec>& pairs, const IndexUniverse& u);
std::vector<SubsetMask> resolve_sets(const std::vector<std::vector<std::string>>& sets,
                                     const IndexUniverse& u);
/// A permutation given by labels, as indices smallest first.
std::vector<std::size_t> resolve_order(const std::vector<std::string>& labels, const IndexUniverse& u);

}  // namespace iecancel
