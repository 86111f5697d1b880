#include "iecancel/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iecancel/broken_discovery.hpp"
#include "iecancel/errors.hpp"
#include "iecancel/graph_polys.hpp"
#include "iecancel/instance.hpp"
#include "iecancel/oracle.hpp"

namespace iecancel::cli {

using nlohmann::json;

namespace {

struct Settings {
  std::string instance_path;
  std::string builtin;
  std::string polynomial = "chromatic";
  std::string method = "pairs";
  std::string order;
  std::string pairs_file;
  std::string ordered_family = "restricted";
  bool verify_on = false;
  bool verify_off = false;
  bool json = false;
  std::size_t threads = 1;
  std::size_t max_universe = kDefaultEnumerationCap;
};

// Everything a command needs, resolved from the settings.
struct Context {
  Instance instance;
  Hypergraph graph;
  PolynomialKind kind;
  std::vector<std::size_t> order;
  std::optional<FamilyFile> family_file;
  ComputeOptions options;
  bool verify_on;
  bool verify_off;
  std::string ordered_family;

  [[nodiscard]] const IndexUniverse& universe() const { return universe_for(kind, graph); }
};

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Context make_context(const Settings& s) {
  if (s.instance_path.empty() == s.builtin.empty()) {
    throw ParseError("give exactly one of an instance file or --builtin");
  }
  Instance inst = s.builtin.empty() ? load_instance(s.instance_path) : builtin_instance(s.builtin);
  Hypergraph g = inst.hypergraph();
  const PolynomialKind kind = parse_polynomial_kind(s.polynomial);

  Context ctx{std::move(inst), std::move(g), kind, {}, std::nullopt, {}, s.verify_on, s.verify_off,
              s.ordered_family};
  const IndexUniverse& u = ctx.universe();
  if (!s.order.empty()) {
    ctx.order = resolve_order(split_labels(s.order), u);
  } else if (kind == PolynomialKind::domination && ctx.instance.vertex_order) {
    ctx.order = resolve_order(*ctx.instance.vertex_order, u);
  } else if (kind != PolynomialKind::domination && ctx.instance.edge_order) {
    ctx.order = resolve_order(*ctx.instance.edge_order, u);
  } else {
    ctx.order.resize(u.size());
    std::iota(ctx.order.begin(), ctx.order.end(), std::size_t{0});
  }
  if (!s.pairs_file.empty()) ctx.family_file = load_family_file(s.pairs_file);
  ctx.options.sum.threads = s.threads;
  ctx.options.sum.max_universe = s.max_universe;
  ctx.options.discovery.max_universe = s.max_universe;
  return ctx;
}

// Discovered families are valid by construction; supplied ones are checked
// unless the user opts out.
bool should_verify(const Context& ctx, bool user_supplied) {
  if (ctx.verify_on) return true;
  if (ctx.verify_off) return false;
  return user_supplied;
}

std::vector<BrokenPair> discovered(const Context& ctx) {
  return discover_pairs(ctx.kind, ctx.graph, ctx.options.discovery);
}

CancellationFamily pair_family(const Context& ctx, bool& user_supplied) {
  user_supplied = ctx.family_file && ctx.family_file->pairs;
  if (user_supplied) return resolve_pairs(*ctx.family_file->pairs, ctx.universe());
  return CancellationFamily(ctx.universe().size(), discovered(ctx));
}

OrderedFamily ordered_family(const Context& ctx, bool& user_supplied, std::ostream& err) {
  user_supplied = ctx.family_file && ctx.family_file->ideal;
  if (user_supplied) return OrderedFamily(ctx.order, resolve_sets(*ctx.family_file->ideal, ctx.universe()));
  if (ctx.ordered_family == "literature") {
    switch (ctx.kind) {
      case PolynomialKind::chromatic:
        return broken_cycles(ctx.graph, ctx.order, ctx.options.discovery);
      case PolynomialKind::domination: {
        auto nb = broken_neighbourhoods(ctx.graph, ctx.order);
        for (auto v : nb.empty_neighbourhood_vertices) {
          err << "warning: vertex " << ctx.graph.vertex_universe().label(v)
              << " has an empty broken neighbourhood; excluded from the ordered family\n";
        }
        return std::move(nb.family);
      }
      case PolynomialKind::independence:
        throw ParseError("no literature ordered family for the independence polynomial; "
                         "use --ordered-family restricted");
    }
  }
  if (ctx.ordered_family != "restricted" && ctx.ordered_family != "literature") {
    throw ParseError("unknown ordered family '" + ctx.ordered_family + "'");
  }
  return order_restricted_family(discovered(ctx), ctx.order);
}

ComputationResult run_method(const Context& ctx, Method method, std::ostream& err) {
  ComputeOptions opts = ctx.options;
  Family family;
  bool supplied = false;
  if (method == Method::pairs) family = pair_family(ctx, supplied);
  if (method == Method::ordered) family = ordered_family(ctx, supplied, err);
  opts.verify_family = method != Method::full && should_verify(ctx, supplied);
  return compute(ctx.kind, ctx.graph, method, family, opts);
}

json result_json(const ComputationResult& r) {
  return {{"method", to_string(r.method)},
          {"polynomial", to_string(r.polynomial)},
          {"coefficients", r.polynomial.coeffs()},
          {"terms_evaluated", r.terms_evaluated},
          {"terms_total", r.terms_total},
          {"family_size", r.family_size}};
}

std::vector<std::string> labels_of(const SubsetMask& s, const IndexUniverse& u) {
  return member_labels(s, u);
}

int cmd_compute(const Context& ctx, const Settings& s, std::ostream& out, std::ostream& err) {
  const ComputationResult r = run_method(ctx, parse_method(s.method), err);
  if (s.json) {
    json j = result_json(r);
    j["command"] = "compute";
    j["polynomial_kind"] = to_string(ctx.kind);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << to_string(ctx.kind) << " polynomial (method: " << to_string(r.method) << ")\n"
      << "polynomial: " << to_string(r.polynomial) << '\n'
      << "coefficients: " << to_coeff_list(r.polynomial) << '\n'
      << "terms: " << r.terms_evaluated << '/' << r.terms_total << '\n'
      << "family size: " << r.family_size << '\n';
  return kSuccess;
}

int cmd_discover(const Context& ctx, const Settings& s, std::ostream& out) {
  const IndexUniverse& u = ctx.universe();
  const DiscoveryReport report = make_report(CancellationFamily(u.size(), discovered(ctx)),
                                             discovery_tag(ctx.kind), ctx.options.sum);
  const std::uint64_t total = std::uint64_t{1} << u.size();
  if (s.json) {
    json pairs = json::array();
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
      pairs.push_back({{"B", labels_of(report.pairs[i].b_set(), u)},
                       {"Bstar", labels_of(report.pairs[i].b_star(), u)},
                       {"excluded", report.per_pair_excluded[i]}});
    }
    out << json{{"command", "discover"},
                {"method", to_string(report.method_tag)},
                {"pairs", pairs},
                {"excluded_total", report.excluded_count},
                {"terms_total", total}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  if (report.pairs.empty()) {
    out << "no pairs found\n";
    return kSuccess;
  }
  out << to_string(report.method_tag) << " broken pairs: " << report.pairs.size() << '\n';
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    out << "  " << std::setw(3) << (i + 1) << "  B = " << render(report.pairs[i].b_set(), u)
        << "  B* = " << render(report.pairs[i].b_star(), u)
        << "  excluded: " << report.per_pair_excluded[i] << '\n';
  }
  out << "excluded total: " << report.excluded_count << " of " << total << '\n';
  return kSuccess;
}

int cmd_compare(const Context& ctx, const Settings& s, std::ostream& out, std::ostream& err) {
  std::vector<ComputationResult> rows;
  for (Method m : {Method::full, Method::ordered, Method::pairs}) rows.push_back(run_method(ctx, m, err));
  const bool consistent = std::all_of(rows.begin(), rows.end(), [&](const ComputationResult& r) {
    return r.polynomial == rows.front().polynomial;
  });
  if (s.json) {
    json jr = json::array();
    for (const auto& r : rows) jr.push_back(result_json(r));
    out << json{{"command", "compare"},
                {"polynomial_kind", to_string(ctx.kind)},
                {"rows", jr},
                {"consistent", consistent}}
               .dump(2)
        << '\n';
  } else {
    out << std::left << std::setw(9) << "method" << std::setw(12) << "terms" << std::setw(8)
        << "family" << "polynomial\n";
    for (const auto& r : rows) {
      std::ostringstream terms;
      terms << r.terms_evaluated << '/' << r.terms_total;
      out << std::setw(9) << to_string(r.method) << std::setw(12) << terms.str() << std::setw(8)
          << r.family_size << to_string(r.polynomial) << '\n';
    }
  }
  if (!consistent) {
    err << "internal error: methods disagree on the polynomial\n";
    return kInconsistency;
  }
  return kSuccess;
}

std::vector<std::int64_t> trimmed(std::vector<std::uint64_t> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return {counts.begin(), counts.end()};
}

int cmd_verify(const Context& ctx, const Settings& s, std::ostream& out, std::ostream& err) {
  const ComputationResult reduced = run_method(ctx, Method::pairs, err);
  const ComputationResult full = run_method(ctx, Method::full, err);
  bool agree = reduced.polynomial == full.polynomial;
  std::string detail;
  json j{{"command", "verify"}, {"polynomial_kind", to_string(ctx.kind)},
         {"polynomial", to_string(reduced.polynomial)}};

  if (ctx.kind == PolynomialKind::chromatic) {
    json points = json::array();
    for (std::int64_t k = 0; k <= 4; ++k) {
      const std::int64_t engine = eval_at(reduced.polynomial, k);
      const auto brute = oracle::count_proper_colorings(ctx.graph, static_cast<std::uint64_t>(k));
      const bool ok = engine >= 0 && static_cast<std::uint64_t>(engine) == brute;
      agree = agree && ok;
      points.push_back({{"k", k}, {"polynomial", engine}, {"oracle", brute}});
      if (!ok) {
        err << "mismatch at k=" << k << ": polynomial gives " << engine << ", oracle counts " << brute
            << '\n';
      }
    }
    j["points"] = points;
    detail = "verified at k=0..4";
  } else {
    const auto counts = trimmed(ctx.kind == PolynomialKind::independence
                                    ? oracle::independent_set_counts(ctx.graph)
                                    : oracle::dominating_set_counts(ctx.graph));
    const bool ok = counts == reduced.polynomial.coeffs();
    agree = agree && ok;
    j["oracle_counts"] = counts;
    const IntPolynomial as_poly{std::vector<std::int64_t>(counts)};
    if (!ok) {
      err << "mismatch: polynomial " << to_coeff_list(reduced.polynomial) << ", oracle counts "
          << to_coeff_list(as_poly) << '\n';
    }
    detail = "coefficients " + to_coeff_list(as_poly) + " match";
  }
  j["agree"] = agree;
  if (s.json) {
    out << j.dump(2) << '\n';
  } else if (agree) {
    out << to_string(ctx.kind) << " polynomial " << to_string(reduced.polynomial) << '\n'
        << detail << '\n';
  } else {
    out << "verification FAILED\n";
  }
  return agree ? kSuccess : kInconsistency;
}

void add_common(CLI::App* sub, Settings& s, bool with_method) {
  sub->add_option("instance", s.instance_path, "instance file (JSON)");
  sub->add_option("--builtin", s.builtin, "built-in instance: example-hypergraph, example-path, "
                                          "example-p4, triangle, pathN, cycleN, starN, edgelessN");
  sub->add_option("--polynomial", s.polynomial, "chromatic | independence | domination")
      ->check(CLI::IsMember({"chromatic", "independence", "domination"}));
  if (with_method) {
    sub->add_option("--method", s.method, "full | pairs | ordered")
        ->check(CLI::IsMember({"full", "pairs", "ordered"}));
  }
  sub->add_option("--order", s.order, "comma-separated labels, smallest first");
  sub->add_option("--pairs-from-file", s.pairs_file, "JSON file with 'pairs' and/or 'ideal'");
  sub->add_option("--ordered-family", s.ordered_family, "restricted | literature")
      ->check(CLI::IsMember({"restricted", "literature"}));
  sub->add_flag("--verify-family", s.verify_on, "check every pair before summing");
  sub->add_flag("--no-verify-family", s.verify_off, "skip the pair check");
  sub->add_flag("--json", s.json, "machine-readable output");
  sub->add_option("--threads", s.threads, "worker threads for subset scans")->check(CLI::PositiveNumber);
  sub->add_option("--max-universe", s.max_universe, "exhaustive enumeration limit")
      ->check(CLI::Range(0, 63));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inclusion-exclusion sums with broken-pair cancellation", "iecancel"};
  app.require_subcommand(1);
  Settings s;
  auto* compute = app.add_subcommand("compute", "compute a graph polynomial");
  auto* discover = app.add_subcommand("discover", "list broken pairs and their excluded sets");
  auto* compare = app.add_subcommand("compare", "full vs ordered vs pairs term counts");
  auto* verify = app.add_subcommand("verify", "cross-check against brute-force oracles");
  add_common(compute, s, true);
  add_common(discover, s, false);
  add_common(compare, s, false);
  add_common(verify, s, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  if (s.verify_on && s.verify_off) {
    err << "error: --verify-family and --no-verify-family are exclusive\n";
    return kUsageError;
  }

  try {
    const Context ctx = make_context(s);
    if (compute->parsed()) return cmd_compute(ctx, s, out, err);
    if (discover->parsed()) return cmd_discover(ctx, s, out);
    if (compare->parsed()) return cmd_compare(ctx, s, out, err);
    return cmd_verify(ctx, s, out, err);
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace iecancel::cli
