#include "iecancel/graph_polys.hpp"

#include <memory>
#include <numeric>

#include "iecancel/errors.hpp"

namespace iecancel {

std::string to_string(PolynomialKind k) {
  switch (k) {
    case PolynomialKind::chromatic: return "chromatic";
    case PolynomialKind::independence: return "independence";
    case PolynomialKind::domination: return "domination";
  }
  return "unknown";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::full: return "full";
    case Method::pairs: return "pairs";
    case Method::ordered: return "ordered";
  }
  return "unknown";
}

PolynomialKind parse_polynomial_kind(const std::string& s) {
  if (s == "chromatic") return PolynomialKind::chromatic;
  if (s == "independence") return PolynomialKind::independence;
  if (s == "domination") return PolynomialKind::domination;
  throw ParseError("unknown polynomial '" + s + "'");
}

Method parse_method(const std::string& s) {
  if (s == "full") return Method::full;
  if (s == "pairs") return Method::pairs;
  if (s == "ordered") return Method::ordered;
  throw ParseError("unknown method '" + s + "'");
}

namespace {

void require_graph(const Hypergraph& g, const char* what) {
  if (!g.is_graph()) throw UnsupportedError(std::string(what) + " is defined for graphs only");
}

}  // namespace

// Each term function owns a copy of the graph plus a table of the n+1
// possible term values, so it stays valid and pure after the caller's graph
// goes away.
TermFunction chromatic_term(const Hypergraph& h) {
  auto graph = std::make_shared<const Hypergraph>(h);
  auto table = std::make_shared<std::vector<IntPolynomial>>();
  for (std::size_t c = 0; c <= h.vertex_count(); ++c) table->push_back(IntPolynomial::monomial(c));
  return [graph, table](const SubsetMask& f) { return (*table)[component_count(*graph, f)]; };
}

TermFunction independence_term(const Hypergraph& g) {
  require_graph(g, "the independence polynomial");
  auto graph = std::make_shared<const Hypergraph>(g);
  const std::size_t n = g.vertex_count();
  auto table = std::make_shared<std::vector<IntPolynomial>>();
  for (std::size_t k = 0; k <= n; ++k) table->push_back(monomial_times_binomial(k, n - k));
  return [graph, table](const SubsetMask& f) { return (*table)[induced_vertex_count(*graph, f)]; };
}

TermFunction domination_term(const Hypergraph& g) {
  require_graph(g, "the domination polynomial");
  auto graph = std::make_shared<const Hypergraph>(g);
  const std::size_t n = g.vertex_count();
  auto table = std::make_shared<std::vector<IntPolynomial>>();
  for (std::size_t k = 0; k <= n; ++k) table->push_back(monomial_times_binomial(0, n - k));
  return [graph, table](const SubsetMask& w) {
    return (*table)[closed_neighborhood(*graph, w).count()];
  };
}

TermFunction term_for(PolynomialKind kind, const Hypergraph& g) {
  switch (kind) {
    case PolynomialKind::chromatic: return chromatic_term(g);
    case PolynomialKind::independence: return independence_term(g);
    case PolynomialKind::domination: return domination_term(g);
  }
  throw DomainError("unknown polynomial kind");
}

const IndexUniverse& universe_for(PolynomialKind kind, const Hypergraph& g) {
  return kind == PolynomialKind::domination ? g.vertex_universe() : g.edge_universe();
}

DiscoveryMethod discovery_tag(PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::chromatic: return DiscoveryMethod::chromatic;
    case PolynomialKind::independence: return DiscoveryMethod::independence;
    case PolynomialKind::domination: return DiscoveryMethod::domination;
  }
  throw DomainError("unknown polynomial kind");
}

std::vector<BrokenPair> discover_pairs(PolynomialKind kind, const Hypergraph& g,
                                       const DiscoveryOptions& opts) {
  switch (kind) {
    case PolynomialKind::chromatic: return chromatic_broken_pairs(g, opts);
    case PolynomialKind::independence: return independence_broken_pairs(g);
    case PolynomialKind::domination: return domination_broken_pairs(g, opts);
  }
  throw DomainError("unknown polynomial kind");
}

namespace {

void verify_pairs(const IndexUniverse& u, const TermFunction& t, const CancellationFamily& fam,
                  const SumOptions& opts) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!validate_pair(u, t, fam[i], opts)) {
      throw ValidationError("pair " + std::to_string(i + 1) + " (B = " + render(fam[i].b_set(), u) +
                            ", B* = " + render(fam[i].b_star(), u) +
                            ") fails the absorption condition");
    }
  }
}

}  // namespace

ComputationResult compute(PolynomialKind kind, const Hypergraph& g, Method method,
                          const Family& family, const ComputeOptions& opts) {
  const IndexUniverse& u = universe_for(kind, g);
  const TermFunction t = term_for(kind, g);
  ComputationResult out;
  out.method = method;

  SumResult sum;
  switch (method) {
    case Method::full:
      sum = full_sum(u, t, opts.sum);
      break;
    case Method::pairs: {
      if (std::holds_alternative<OrderedFamily>(family)) {
        throw DomainError("the pairs method needs a pair family, not an ordered family");
      }
      const CancellationFamily fam =
          std::holds_alternative<CancellationFamily>(family)
              ? std::get<CancellationFamily>(family)
              : CancellationFamily(u.size(), discover_pairs(kind, g, opts.discovery));
      if (opts.verify_family) verify_pairs(u, t, fam, opts.sum);
      sum = reduced_sum(u, t, fam, opts.sum);
      out.family_size = fam.size();
      break;
    }
    case Method::ordered: {
      if (std::holds_alternative<CancellationFamily>(family)) {
        throw DomainError("the ordered method needs an ordered family, not a pair family");
      }
      std::vector<std::size_t> natural(u.size());
      std::iota(natural.begin(), natural.end(), std::size_t{0});
      const OrderedFamily of =
          std::holds_alternative<OrderedFamily>(family)
              ? std::get<OrderedFamily>(family)
              : order_restricted_family(discover_pairs(kind, g, opts.discovery), natural);
      if (opts.verify_family) verify_pairs(u, t, ordered_family_to_pairs(of), opts.sum);
      sum = ordered_reduced_sum(u, t, of, opts.sum);
      out.family_size = of.x_class().size();
      break;
    }
  }
  out.polynomial = std::move(sum.polynomial);
  out.terms_evaluated = sum.terms_evaluated;
  out.terms_total = sum.terms_total;
  return out;
}

ComputationResult chromatic_polynomial(const Hypergraph& h, Method method, const Family& family,
                                       const ComputeOptions& opts) {
  return compute(PolynomialKind::chromatic, h, method, family, opts);
}

ComputationResult independence_polynomial(const Hypergraph& g, Method method,
                                          const Family& family, const ComputeOptions& opts) {
  return compute(PolynomialKind::independence, g, method, family, opts);
}

ComputationResult domination_polynomial(const Hypergraph& g, Method method,
                                        const Family& family, const ComputeOptions& opts) {
  return compute(PolynomialKind::domination, g, method, family, opts);
}

}  // namespace iecancel
