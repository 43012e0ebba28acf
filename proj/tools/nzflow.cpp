// nzflow: command-line front end for assigning polynomials and flow counts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nzflow/nzflow.hpp"

namespace {

using namespace nzflow;

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kDomain = 3,
  kResource = 4,
  kVerification = 5,
};

struct Common {
  std::string graph_file;
  std::string group = "Z2";
  std::string b_file;
  std::string b_shorthand;
  std::string order;
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
};

MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return io::parse_graph(in);
}

/// --b-file wins; otherwise --b must be "zero" (the default).
BFunction load_b(const Common& c, const GroupSpec& spec, const MultiGraph& g) {
  if (!c.b_file.empty()) {
    std::ifstream in(c.b_file);
    if (!in) throw ParseError("cannot open b file '" + c.b_file + "'");
    return io::parse_b(in, spec, g.vertex_count());
  }
  if (!c.b_shorthand.empty() && c.b_shorthand != "zero") {
    throw ParseError("--b accepts only 'zero'; use --b-file for other functions");
  }
  return BFunction::zero(spec, g.vertex_count());
}

bool has_b(const Common& c) { return !c.b_file.empty() || !c.b_shorthand.empty(); }

std::string format_element_list(const BFunction& b) {
  std::vector<std::string> parts;
  for (const auto& x : b.values) parts.push_back(GroupSpec::format(x));
  return io::join(parts, " ");
}

std::size_t edge_guard(const Common& c) { return c.force ? kMaxSetSize : kDefaultMaxEdges; }

std::vector<GroupSpec> parse_group_list(const std::string& text) {
  std::vector<GroupSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_group(item));
  }
  if (out.empty()) throw ParseError("--groups needs at least one group");
  return out;
}

int cmd_poly(const Common& c, const std::string& algorithm) {
  const auto g = load_graph(c.graph_file);
  const auto spec = parse_group(c.group);
  const auto b = load_b(c, spec, g);
  const auto order = c.order.empty() ? EdgeOrder::natural(g) : io::parse_order(c.order, g);
  const auto top = cycle_rank(g);

  std::optional<IntPolynomial> subset, nbb;
  if (algorithm == "subset" || algorithm == "both") subset = poly_subset_expansion(g, b, edge_guard(c));
  if (algorithm == "nbb" || algorithm == "both") nbb = poly_nbb(g, b, order, edge_guard(c));
  const auto& p = subset ? *subset : *nbb;

  io::Report r;
  r.add("algorithm", algorithm);
  r.add("group", spec.name());
  r.add("mG", top);
  r.add("polynomial", p.format());
  r.add("coefficients_signless", io::join(p.signless_coefficients(top)));
  bool agree = true;
  if (subset && nbb) {
    agree = *subset == *nbb;
    r.add("polynomial_nbb", nbb->format());
    r.add("agree", agree);
  }
  r.add("pass", agree);
  r.write(std::cout);
  return agree ? kOk : kVerification;
}

int cmd_flows(const Common& c, bool nowhere_zero) {
  const auto g = load_graph(c.graph_file);
  const auto spec = parse_group(c.group);
  const auto b = load_b(c, spec, g);
  require_compatible(g, b);
  const auto k = static_cast<std::int64_t>(spec.order());

  io::Report r;
  r.add("group", spec.name());
  r.add("mode", nowhere_zero ? "nowhere-zero" : "all");
  r.add("mG", cycle_rank(g));
  std::uint64_t count = 0;
  std::int64_t predicted = 0;
  if (nowhere_zero) {
    count = count_nz_flows_bruteforce(g, b, c.budget);
    const auto p = poly_subset_expansion(g, b, edge_guard(c));
    predicted = p.eval(k);
    r.add("polynomial", p.format());
  } else {
    count = count_flows_bruteforce(g, b, c.budget);
    predicted = static_cast<std::int64_t>(count_flows(g, b));
  }
  const bool agree = static_cast<std::int64_t>(count) == predicted;
  r.add("counts", count);
  r.add("polynomial_eval", predicted);
  r.add("agree", agree);
  r.add("pass", agree);
  r.write(std::cout);
  return agree ? kOk : kVerification;
}

int cmd_bonds(const Common& c) {
  const auto g = load_graph(c.graph_file);
  const auto all = bonds(g);
  io::Report r;
  r.add("bond_count", all.size());
  r.add("bonds", io::format_sets(all));
  if (has_b(c)) {
    const auto spec = parse_group(c.group);
    const auto b = load_b(c, spec, g);
    const auto order = c.order.empty() ? EdgeOrder::natural(g) : io::parse_order(c.order, g);
    const auto compatible = b_compatible_bonds(g, b);
    const auto broken = broken_bonds(g, b, order);
    r.add("group", spec.name());
    r.add("order", io::join(order.ascending()));
    r.add("compatible_bond_count", compatible.size());
    r.add("compatible_bonds", io::format_sets(compatible));
    r.add("broken_bond_count", broken.size());
    r.add("broken_bonds", io::format_sets(broken));
  }
  r.write(std::cout);
  return kOk;
}

int cmd_lambda(const Common& c) {
  const auto g = load_graph(c.graph_file);
  if (g.vertex_count() > 20 && !c.force) throw ResourceError("lambda enumeration is limited to 20 vertices");
  const auto family = lambda_family(g);
  io::Report r;
  r.add("lambda_count", family.size());
  r.add("lambda", io::format_sets(family));
  if (has_b(c)) {
    const auto spec = parse_group(c.group);
    const auto b = load_b(c, spec, g);
    const auto alpha = induced_assigning(g, b);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < alpha.domain.size(); ++i) {
      parts.push_back(io::format_set(alpha.domain[i]) + "=" + std::to_string(alpha.bits[i]));
    }
    r.add("group", spec.name());
    r.add("assigning", io::join(parts, " "));
  }
  r.write(std::cout);
  return kOk;
}

int cmd_connectivity(const Common& c, const std::string& compare_group) {
  const auto g = load_graph(c.graph_file);
  const auto spec = parse_group(c.group);
  const auto rep = is_A_connected(g, spec, c.budget, edge_guard(c));
  io::Report r;
  r.add("group", spec.name());
  r.add("connected", rep.connected);
  r.add("witness", rep.witness ? format_element_list(*rep.witness) : std::string("none"));
  r.add("functions_checked", rep.functions_checked);
  r.add("cross_checked", rep.cross_checked);
  bool pass = true;
  if (!compare_group.empty()) {
    const auto other = parse_group(compare_group);
    if (other.order() != spec.order()) throw InputError("--compare-group must have the same order as --group");
    const auto other_rep = is_A_connected(g, other, c.budget, edge_guard(c));
    const bool covered = assignings_covered(g, spec, other);
    // covered and other-connected must imply connected
    pass = !(covered && other_rep.connected) || rep.connected;
    r.add("compare_group", other.name());
    r.add("compare_connected", other_rep.connected);
    r.add("hypothesis_covered", covered);
    r.add("transfer_pass", pass);
  }
  r.add("pass", pass);
  r.write(std::cout);
  return pass ? kOk : kVerification;
}

int cmd_decompose(const Common& c) {
  const auto g = load_graph(c.graph_file);
  const auto spec = parse_group(c.group);
  const auto d = decomposition_check(g, spec, c.budget);
  io::Report r;
  r.add("group", spec.name());
  r.add("m", g.edge_count());
  r.add("nowhere_zero_sum", d.nowhere_zero_sum);
  r.add("nowhere_zero_target", d.nowhere_zero_target);
  r.add("nowhere_zero_pass", d.nowhere_zero_pass);
  r.add("all_sum", d.all_sum);
  r.add("all_target", d.all_target);
  r.add("all_pass", d.all_pass);
  r.add("pass", d.pass());
  r.write(std::cout);
  return d.pass() ? kOk : kVerification;
}

struct CheckArgs {
  std::string catalog = "small";
  std::string groups = "Z2,Z3,Z4,Z2xZ2";
  std::uint64_t seed = 1;
  std::size_t max_n = 4;
  std::size_t max_m = 6;
  std::size_t count = 50;
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
};

int cmd_check(const CheckArgs& a) {
  if (a.max_m > kDefaultMaxEdges && !a.force) throw ResourceError("--max-m above 24 needs --force");
  std::vector<catalog::Entry> graphs;
  if (a.catalog == "small") {
    graphs = catalog::small(a.max_n, a.max_m);
  } else if (a.catalog == "cycles") {
    graphs = catalog::cycles(a.max_n);
  } else if (a.catalog == "complete") {
    graphs = catalog::completes(a.max_n, a.max_m);
  } else if (a.catalog == "random") {
    graphs = catalog::random(a.seed, a.count, a.max_n, a.max_m);
  } else {
    throw ParseError("unknown catalog '" + a.catalog + "'");
  }
  verify::CheckOptions opt;
  opt.groups = parse_group_list(a.groups);
  opt.seed = a.seed;
  opt.budget = a.budget;
  const auto rep = verify::run_checks(graphs, opt);
  auto r = rep.to_report();
  std::cout << "catalog: " << a.catalog << '\n';
  r.write(std::cout);
  return rep.pass() ? kOk : kVerification;
}

void add_graph_options(CLI::App* sub, Common& c, bool with_b) {
  sub->add_option("graph", c.graph_file, "graph document")->required();
  sub->add_option("--group", c.group, "group, e.g. Z4 or Z2xZ2");
  if (with_b) {
    auto* file = sub->add_option("--b-file", c.b_file, "vertex function document");
    sub->add_option("--b", c.b_shorthand, "shorthand; only 'zero'")->excludes(file);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nowhere-zero (A,b)-flow counting and assigning polynomials"};
  app.require_subcommand(1);

  Common common;
  std::string algorithm = "subset";
  bool nowhere_zero = false;
  std::string compare_group;
  CheckArgs check;

  auto* poly = app.add_subcommand("poly", "assigning polynomial of (G, b)");
  add_graph_options(poly, common, true);
  poly->add_option("--algorithm", algorithm, "subset | nbb | both")
      ->check(CLI::IsMember({"subset", "nbb", "both"}));
  poly->add_option("--order", common.order, "edge ids, smallest first, comma-separated");
  poly->add_flag("--force", common.force, "lift the 24-edge guard");

  auto* flows = app.add_subcommand("flows", "brute-force flow count against the polynomial");
  add_graph_options(flows, common, true);
  flows->add_flag("--nowhere-zero", nowhere_zero, "count nowhere-zero flows only");
  flows->add_option("--budget", common.budget, "brute-force step budget");
  flows->add_flag("--force", common.force, "lift the 24-edge guard");

  auto* bonds_cmd = app.add_subcommand("bonds", "bonds, b-compatible bonds and broken bonds");
  add_graph_options(bonds_cmd, common, true);
  bonds_cmd->add_option("--order", common.order, "edge ids, smallest first, comma-separated");

  auto* lambda_cmd = app.add_subcommand("lambda", "the family of vertex sets and the induced assigning");
  add_graph_options(lambda_cmd, common, true);
  lambda_cmd->add_flag("--force", common.force, "lift the 20-vertex guard");

  auto* conn = app.add_subcommand("connectivity", "A-connectivity with a witness");
  add_graph_options(conn, common, false);
  conn->add_option("--compare-group", compare_group, "second group of the same order");
  conn->add_option("--budget", common.budget, "brute-force step budget");
  conn->add_flag("--force", common.force, "lift the 24-edge guard");

  auto* dec = app.add_subcommand("decompose", "sums of flow counts over all zero-sum b");
  add_graph_options(dec, common, false);
  dec->add_option("--budget", common.budget, "brute-force step budget");

  auto* chk = app.add_subcommand("check", "run every cross-check suite on a graph catalog");
  chk->add_option("--catalog", check.catalog, "small | cycles | complete | random")
      ->check(CLI::IsMember({"small", "cycles", "complete", "random"}));
  chk->add_option("--groups", check.groups, "comma-separated groups");
  chk->add_option("--seed", check.seed, "seed for random orders and graphs");
  chk->add_option("--max-n", check.max_n, "largest vertex count");
  chk->add_option("--max-m", check.max_m, "largest edge count");
  chk->add_option("--count", check.count, "graphs in the random catalog");
  chk->add_option("--budget", check.budget, "brute-force step budget");
  chk->add_flag("--force", check.force, "lift the 24-edge guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*poly) return cmd_poly(common, algorithm);
    if (*flows) return cmd_flows(common, nowhere_zero);
    if (*bonds_cmd) return cmd_bonds(common);
    if (*lambda_cmd) return cmd_lambda(common);
    if (*conn) {
      common.b_shorthand.clear();
      return cmd_connectivity(common, compare_group);
    }
    if (*dec) return cmd_decompose(common);
    if (*chk) return cmd_check(check);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << '\n';
    return kResource;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  }
  return kOk;
}
