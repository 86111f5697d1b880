#include "iecancel/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "iecancel/errors.hpp"

namespace iecancel {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw ParseError("field '" + field + "[" + std::to_string(i) + "]' must be a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> list_of_lists(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(string_list(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_permutation(const std::vector<std::string>& order, const IndexUniverse& u,
                       const std::string& field) {
  std::set<std::string> seen(order.begin(), order.end());
  if (seen.size() != order.size() || order.size() != u.size()) {
    throw ParseError("field '" + field + "' must list every label exactly once");
  }
  for (const auto& l : order) {
    try {
      (void)u.index_of(l);
    } catch (const DomainError&) {
      throw ParseError("field '" + field + "' references unknown label '" + l + "'");
    }
  }
}

std::vector<PairSpec> pair_list(const json& jp) {
  if (!jp.is_array()) throw ParseError("field 'pairs' must be an array");
  std::vector<PairSpec> pairs;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string field = "pairs[" + std::to_string(i) + "]";
    if (!jp[i].is_object() || !jp[i].contains("B") || !jp[i].contains("Bstar")) {
      throw ParseError("field '" + field + "' must be an object with 'B' and 'Bstar'");
    }
    pairs.push_back({string_list(jp[i]["B"], field + ".B"),
                     string_list(jp[i]["Bstar"], field + ".Bstar")});
  }
  return pairs;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Hypergraph Instance::hypergraph() const {
  const IndexUniverse vu = [&] {
    try {
      return IndexUniverse(vertices);
    } catch (const DomainError& ex) {
      throw ParseError(std::string("field 'vertices': ") + ex.what());
    }
  }();
  std::vector<std::vector<std::size_t>> idx;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].size() < 2) {
      throw ParseError("field 'edges[" + std::to_string(e) + "]' needs at least two vertices");
    }
    std::vector<std::size_t> members;
    for (const auto& l : edges[e]) {
      try {
        members.push_back(vu.index_of(l));
      } catch (const DomainError&) {
        throw ParseError("field 'edges[" + std::to_string(e) + "]' references undeclared vertex '" +
                         l + "'");
      }
    }
    idx.push_back(std::move(members));
  }
  try {
    return Hypergraph(vertices.size(), idx, vertices, edge_labels);
  } catch (const DomainError& ex) {
    throw ParseError(std::string("invalid hypergraph: ") + ex.what());
  }
}

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  static const std::set<std::string> known = {"vertices", "edges", "edge_labels", "edge_order",
                                              "vertex_order", "pairs", "ideal"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw ParseError("unknown field '" + key + "'");
  }
  if (!doc.contains("vertices")) throw ParseError("missing field 'vertices'");
  if (!doc.contains("edges")) throw ParseError("missing field 'edges'");

  Instance inst;
  inst.vertices = string_list(doc["vertices"], "vertices");
  inst.edges = list_of_lists(doc["edges"], "edges");
  if (doc.contains("edge_labels")) inst.edge_labels = string_list(doc["edge_labels"], "edge_labels");
  if (doc.contains("edge_order")) inst.edge_order = string_list(doc["edge_order"], "edge_order");
  if (doc.contains("vertex_order")) inst.vertex_order = string_list(doc["vertex_order"], "vertex_order");
  if (doc.contains("pairs")) inst.pairs = pair_list(doc["pairs"]);
  if (doc.contains("ideal")) inst.ideal = list_of_lists(doc["ideal"], "ideal");

  Hypergraph h = [&] {
    try {
      return inst.hypergraph();
    } catch (const SizeLimitError& ex) {
      throw ParseError(ex.what());
    } catch (const DomainError& ex) {
      throw ParseError(ex.what());
    }
  }();
  if (inst.edge_order) check_permutation(*inst.edge_order, h.edge_universe(), "edge_order");
  if (inst.vertex_order) check_permutation(*inst.vertex_order, h.vertex_universe(), "vertex_order");
  return inst;
}

std::string render_instance(const Instance& inst) {
  json doc;
  doc["vertices"] = inst.vertices;
  doc["edges"] = inst.edges;
  if (!inst.edge_labels.empty()) doc["edge_labels"] = inst.edge_labels;
  if (inst.edge_order) doc["edge_order"] = *inst.edge_order;
  if (inst.vertex_order) doc["vertex_order"] = *inst.vertex_order;
  if (inst.pairs) {
    json jp = json::array();
    for (const auto& p : *inst.pairs) jp.push_back({{"B", p.b}, {"Bstar", p.b_star}});
    doc["pairs"] = jp;
  }
  if (inst.ideal) doc["ideal"] = *inst.ideal;
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

FamilyFile parse_family_file(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("family file must be a JSON object");
  FamilyFile out;
  if (doc.contains("pairs")) out.pairs = pair_list(doc["pairs"]);
  if (doc.contains("ideal")) out.ideal = list_of_lists(doc["ideal"], "ideal");
  if (!out.pairs && !out.ideal) throw ParseError("family file has neither 'pairs' nor 'ideal'");
  return out;
}

FamilyFile load_family_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_family_file(text);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::size_t suffix_number(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("builtin '" + name + "' needs a numeric size, e.g. " + prefix + "4");
  }
  return static_cast<std::size_t>(std::stoul(digits));
}

}  // namespace

Instance builtin_instance(const std::string& name) {
  Instance inst;
  if (name == "example-hypergraph") {
    inst.vertices = {"1", "2", "3", "4", "5", "6"};
    inst.edges = {{"1", "2", "3"}, {"3", "4", "5"}, {"2", "3", "4"}, {"1", "2", "6"}};
    inst.edge_order = std::vector<std::string>{"123", "345", "234", "126"};
    inst.pairs = std::vector<PairSpec>{{{"123", "345"}, {"234"}}, {{"234", "126"}, {"123"}}};
    inst.ideal = std::vector<std::vector<std::string>>{{"123", "345"}};
    return inst;
  }
  if (name == "example-path") {
    inst.vertices = numbered("", 5);
    inst.edges = {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}};
    inst.edge_labels = {"e1", "e2", "e3", "e4"};
    inst.edge_order = std::vector<std::string>{"e1", "e3", "e2", "e4"};
    inst.pairs = std::vector<PairSpec>{{{"e1", "e3"}, {"e2"}}, {{"e2", "e4"}, {"e3"}}};
    inst.ideal = std::vector<std::vector<std::string>>{{"e1", "e3"}};
    return inst;
  }
  if (name == "example-p4") {
    inst.vertices = numbered("v", 4);
    inst.edges = {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}};
    inst.vertex_order = std::vector<std::string>{"v1", "v4", "v3", "v2"};
    inst.pairs = std::vector<PairSpec>{
        {{"v1", "v3"}, {"v2"}}, {{"v1", "v4"}, {"v2"}}, {{"v2", "v4"}, {"v3"}}};
    inst.ideal = std::vector<std::vector<std::string>>{{"v1", "v3"}, {"v1", "v4"}};
    return inst;
  }
  if (name == "triangle") {
    inst.vertices = {"a", "b", "c"};
    inst.edges = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
    return inst;
  }
  if (name.rfind("path", 0) == 0) {
    const std::size_t n = suffix_number(name, "path");
    inst.vertices = numbered("", n);
    for (std::size_t i = 1; i < n; ++i) inst.edges.push_back({inst.vertices[i - 1], inst.vertices[i]});
    return inst;
  }
  if (name.rfind("cycle", 0) == 0) {
    const std::size_t n = suffix_number(name, "cycle");
    if (n < 3) throw ParseError("builtin cycle needs at least 3 vertices");
    inst.vertices = numbered("", n);
    for (std::size_t i = 0; i < n; ++i) inst.edges.push_back({inst.vertices[i], inst.vertices[(i + 1) % n]});
    return inst;
  }
  if (name.rfind("star", 0) == 0) {
    const std::size_t leaves = suffix_number(name, "star");
    inst.vertices = {"c"};
    for (std::size_t i = 1; i <= leaves; ++i) {
      inst.vertices.push_back("l" + std::to_string(i));
      inst.edges.push_back({"c", inst.vertices.back()});
    }
    return inst;
  }
  if (name.rfind("edgeless", 0) == 0) {
    inst.vertices = numbered("", suffix_number(name, "edgeless"));
    return inst;
  }
  throw ParseError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"example-hypergraph", "example-path", "example-p4", "triangle", "pathN", "cycleN", "starN",
          "edgelessN"};
}

CancellationFamily resolve_pairs(const std::vector<PairSpec>& pairs, const IndexUniverse& u) {
  CancellationFamily fam(u.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      fam.push_back(BrokenPair(mask_from_labels(u, pairs[i].b), mask_from_labels(u, pairs[i].b_star)));
    } catch (const DomainError& ex) {
      throw ParseError("pairs[" + std::to_string(i) + "]: " + ex.what());
    }
  }
  return fam;
}

std::vector<SubsetMask> resolve_sets(const std::vector<std::vector<std::string>>& sets,
                                     const IndexUniverse& u) {
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    try {
      out.push_back(mask_from_labels(u, sets[i]));
    } catch (const DomainError& ex) {
      throw ParseError("ideal[" + std::to_string(i) + "]: " + ex.what());
    }
  }
  return out;
}

std::vector<std::size_t> resolve_order(const std::vector<std::string>& labels, const IndexUniverse& u) {
  check_permutation(labels, u, "order");
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(u.index_of(l));
  return out;
}

}  // namespace iecancel
