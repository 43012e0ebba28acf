#ifndef NZFLOW_VERIFY_HPP
#define NZFLOW_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "assigning.hpp"
#include "catalog.hpp"
#include "flows.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "polynomial.hpp"

// Cross-checks every counting route against every other on a graph catalog.

namespace nzflow::verify {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (!first_failure) first_failure = describe();
    }
  }
};

struct CheckOptions {
  std::vector<GroupSpec> groups;
  std::uint64_t seed = 1;
  std::size_t random_orders = 5;
  std::uint64_t budget = kDefaultBudget;
};

struct CheckReport {
  std::vector<SuiteResult> suites;
  std::size_t graphs = 0;
  std::uint64_t instances = 0;

  bool pass() const {
    for (const auto& s : suites) {
      if (s.failed != 0) return false;
    }
    return true;
  }

  io::Report to_report() const {
    io::Report r;
    r.add("graphs", graphs);
    r.add("instances", instances);
    for (const auto& s : suites) {
      r.add("suite." + s.name, "passed=" + std::to_string(s.passed) + " failed=" + std::to_string(s.failed) +
                                   " skipped=" + std::to_string(s.skipped));
      if (s.first_failure) r.add("counterexample." + s.name, *s.first_failure);
    }
    r.add("pass", pass());
    return r;
  }
};

namespace detail {

struct Instance {
  std::size_t group;
  BFunction b;
  Assigning alpha;
  IntPolynomial subset;
  std::vector<std::int64_t> nbb;  // natural order
  std::uint64_t brute = 0;
};

inline std::string describe_b(const BFunction& b) {
  std::vector<std::string> parts;
  for (const auto& x : b.values) parts.push_back("(" + GroupSpec::format(x) + ")");
  return b.spec.name() + " b=" + io::join(parts, "");
}

/// Single cycle, loops included as C1.
inline bool is_cycle(const MultiGraph& g) {
  if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count() || component_count(g) != 1) return false;
  std::vector<int> degree(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    degree[e.tail] += 1;
    degree[e.head] += 1;
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
}

}  // namespace detail

inline CheckReport run_checks(const std::vector<catalog::Entry>& graphs, const CheckOptions& opt) {
  CheckReport report;
  report.graphs = graphs.size();
  SuiteResult oracle{"oracle_equivalence"};
  SuiteResult algorithms{"algorithm_equivalence"};
  SuiteResult orders{"order_independence"};
  SuiteResult orientation{"orientation_independence"};
  SuiteResult invariance{"group_invariance"};
  SuiteResult comparison{"comparison_monotonicity"};
  SuiteResult decomposition{"decomposition"};
  SuiteResult zero_allowed{"flow_count_closed_form"};
  SuiteResult classical{"classical_specialization"};
  SuiteResult positivity{"positivity"};
  SuiteResult lemmas{"lemmas"};

  std::uint64_t order_seed = opt.seed;
  for (const auto& entry : graphs) {
    const auto& g = entry.graph;
    const auto natural = EdgeOrder::natural(g);
    const bool bridgeless = is_bridgeless(g);
    const bool two_connected = is_two_edge_connected(g);
    std::vector<detail::Instance> inst;

    for (std::size_t gi = 0; gi < opt.groups.size(); ++gi) {
      const auto& spec = opt.groups[gi];
      const auto k = static_cast<std::int64_t>(spec.order());

      const auto dec = decomposition_check(g, spec, opt.budget);
      decomposition.record(dec.pass(), [&] {
        return entry.name + " " + spec.name() + " sums " + std::to_string(dec.nowhere_zero_sum) + "," +
               std::to_string(dec.all_sum);
      });

      for_each_zero_sum(g, spec, [&](const BFunction& b) {
        ++report.instances;
        detail::Instance in{gi, b, induced_assigning(g, b), poly_subset_expansion(g, b), nbb_counts(g, b, natural),
                            count_nz_flows_bruteforce(g, b, opt.budget)};
        const auto where = [&] { return entry.name + " " + detail::describe_b(b); };

        oracle.record(in.subset.eval(k) == static_cast<std::int64_t>(in.brute), where);
        algorithms.record(IntPolynomial::from_signless(in.nbb) == in.subset, where);
        for (std::size_t r = 0; r < opt.random_orders; ++r) {
          const auto ord = EdgeOrder::random(g, order_seed++);
          orders.record(nbb_counts(g, b, ord) == in.nbb, [&] { return where() + " order=" + io::join(ord.ascending()); });
        }
        for (const auto& e : g.edges()) {
          const auto flipped = g.with_reversed(e.id);
          orientation.record(count_nz_flows_bruteforce(flipped, b, opt.budget) == in.brute,
                             [&] { return where() + " reversed edge " + std::to_string(e.id); });
        }
        zero_allowed.record(count_flows_bruteforce(g, b, opt.budget) == count_flows(g, b), where);

        if (bridgeless) {
          bool ok = true;
          for (auto a : in.nbb) ok = ok && a >= 1;
          positivity.record(ok, [&] { return where() + " a=" + io::join(in.nbb); });
        }
        if (two_connected) positivity.record(in.nbb.at(0) == 1, [&] { return where() + " a_0 != 1"; });

        // Inclusion: removing less keeps compatibility.
        {
          CompatibilityTester tester(g, b);
          const auto all = g.all_edges().bits();
          bool ok = true;
          for (std::uint64_t s2 = all;; s2 = (s2 - 1) & all) {
            if (tester.compatible(EdgeSet(s2))) {
              for (std::uint64_t s1 = s2;; s1 = (s1 - 1) & s2) {
                ok = ok && tester.compatible(EdgeSet(s1));
                if (s1 == 0) break;
              }
            }
            if (s2 == 0) break;
          }
          lemmas.record(ok, [&] { return where() + " inclusion"; });

          // Pairing: S containing F - e_F, e_F not in S, G - S compatible
          // implies G - S - e_F compatible.
          bool pairing = true;
          for (const auto& bb : broken_bond_sources(g, b, natural)) {
            for (std::uint64_t s = all;; s = (s - 1) & all) {
              const EdgeSet set(s);
              if (bb.edges.subset_of(set) && !set.contains(bb.dropped) && tester.compatible(set)) {
                auto grown = set;
                grown.insert(bb.dropped);
                pairing = pairing && tester.compatible(grown);
              }
              if (s == 0) break;
            }
          }
          lemmas.record(pairing, [&] { return where() + " broken-bond pairing"; });
        }

        if (b.is_zero()) {
          if (!bridgeless) {
            classical.record(in.subset.is_zero(), [&] { return where() + " bridge but nonzero polynomial"; });
          }
          if (detail::is_cycle(g)) {
            classical.record(in.subset == IntPolynomial{-1, 1}, [&] { return where() + " cycle not k - 1"; });
          }
        }
        inst.push_back(std::move(in));
      });
    }

    // Comparison across every ordered pair of instances.
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t j = 0; j < inst.size(); ++j) {
        if (!inst[i].alpha.pointwise_le(inst[j].alpha)) {
          ++comparison.skipped;
          continue;
        }
        bool ok = inst[i].nbb.size() == inst[j].nbb.size();
        for (std::size_t t = 0; ok && t < inst[i].nbb.size(); ++t) ok = inst[i].nbb[t] <= inst[j].nbb[t];
        comparison.record(ok, [&] {
          return entry.name + " " + detail::describe_b(inst[i].b) + " vs " + detail::describe_b(inst[j].b);
        });
      }
    }

    // Group invariance: same assigning over equal-order groups.
    for (std::size_t ga = 0; ga < opt.groups.size(); ++ga) {
      for (std::size_t gb = 0; gb < opt.groups.size(); ++gb) {
        if (ga == gb || opt.groups[ga].order() != opt.groups[gb].order()) continue;
        if (opt.groups[ga] == opt.groups[gb]) continue;
        std::map<std::vector<std::uint8_t>, const detail::Instance*> other;
        for (const auto& in : inst) {
          if (in.group == gb) other.emplace(in.alpha.bits, &in);
        }
        for (const auto& in : inst) {
          if (in.group != ga) continue;
          auto it = other.find(in.alpha.bits);
          if (it == other.end()) {
            ++invariance.skipped;
            continue;
          }
          invariance.record(it->second->subset == in.subset && it->second->brute == in.brute, [&] {
            return entry.name + " " + detail::describe_b(in.b) + " vs " + detail::describe_b(it->second->b);
          });
        }
      }
    }
  }

  report.suites = {oracle,      algorithms, orders,     orientation, invariance, comparison,
                   decomposition, zero_allowed, classical, positivity, lemmas};
  return report;
}

}  // namespace nzflow::verify

#endif  // NZFLOW_VERIFY_HPP
