#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "nzflow/catalog.hpp"
#include "nzflow/graph.hpp"

using namespace nzflow;

namespace {

MultiGraph c3() { return catalog::cycle(3); }
MultiGraph k2() { return MultiGraph(2, {{0, 1}}); }
MultiGraph loop1() { return MultiGraph(1, {{0, 0}}); }

// Minimal edge sets whose removal raises the component count, found by
// scanning every subset.
std::vector<EdgeSet> bonds_oracle(const MultiGraph& g) {
  const auto c = component_count(g);
  const auto all = g.all_edges().bits();
  std::vector<EdgeSet> out;
  for (std::uint64_t s = all;; s = (s - 1) & all) {
    const EdgeSet set(s);
    if (!set.empty() && component_count(g, set) > c) {
      bool minimal = true;
      for (auto e : set.members()) {
        auto smaller = set;
        smaller.erase(e);
        if (component_count(g, smaller) > c) minimal = false;
      }
      if (minimal) out.push_back(set);
    }
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  return out;
}

// Both defining conditions checked through materialized subgraphs.
std::vector<VertexSet> lambda_oracle(const MultiGraph& g) {
  const auto c = components(g).size();
  const auto all = g.all_vertices();
  std::vector<VertexSet> out;
  for (std::uint64_t x = 1; x <= all.bits() && x != 0; ++x) {
    const VertexSet set(x);
    if (!set.subset_of(all)) continue;
    if (components(induced_subgraph(g, set)).size() != 1) continue;
    if (components(induced_subgraph(g, all - set)).size() != c) continue;
    out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

std::vector<catalog::Entry> test_graphs() {
  auto gs = catalog::small(4, 6);
  for (auto& e : catalog::random(7, 60, 6, 10)) gs.push_back(std::move(e));
  return gs;
}

}  // namespace

TEST_CASE("components") {
  CHECK(components(c3()) == std::vector<VertexSet>{VertexSet{0, 1, 2}});
  CHECK(components(MultiGraph(3, std::vector<std::pair<VertexId, VertexId>>{})).size() == 3);
  CHECK(components(MultiGraph(4, {{0, 1}, {2, 3}})) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2, 3}});
  CHECK(components(MultiGraph()).empty());
}

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(c3()) == 1);
  CHECK(cycle_rank(loop1()) == 1);
  CHECK(cycle_rank(catalog::complete(4)) == 3);
  CHECK(cycle_rank(MultiGraph()) == 0);
}

TEST_CASE("delete_edges keeps ids and vertices") {
  CHECK(delete_edges(c3(), {}) == c3());
  const auto path = delete_edges(c3(), EdgeSet{0});
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(path.edges()[0].id == 1);
  CHECK(component_count(path) == 1);
  CHECK(component_count(delete_edges(c3(), c3().all_edges())) == 3);
  CHECK_THROWS_AS(delete_edges(c3(), EdgeSet{5}), InputError);
}

TEST_CASE("induced_subgraph") {
  const auto e = induced_subgraph(c3(), VertexSet{0, 1});
  CHECK(e.vertex_count() == 2);
  CHECK(e.edge_count() == 1);
  CHECK(induced_subgraph(c3(), VertexSet{0}).edge_count() == 0);
  const MultiGraph lp(2, {{0, 0}, {0, 1}});
  const auto one = induced_subgraph(lp, VertexSet{0});
  REQUIRE(one.edge_count() == 1);
  CHECK(one.edges()[0].is_loop());
  CHECK_THROWS_AS(induced_subgraph(c3(), VertexSet{3}), InputError);
}

TEST_CASE("bonds on named graphs") {
  CHECK(bonds(c3()) == std::vector<EdgeSet>{EdgeSet{0, 1}, EdgeSet{0, 2}, EdgeSet{1, 2}});
  CHECK(bonds(c3()) == bonds_oracle(c3()));
  CHECK(bonds(k2()) == std::vector<EdgeSet>{EdgeSet{0}});
  CHECK(bonds(loop1()).empty());
}

TEST_CASE("lambda family on named graphs") {
  CHECK(lambda_family(c3()) == lambda_oracle(c3()));
  CHECK(lambda_family(c3()).size() == 6);
  CHECK(lambda_family(k2()) == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}});
  CHECK(lambda_family(MultiGraph(1, std::vector<std::pair<VertexId, VertexId>>{})).empty());
}

TEST_CASE("bonds agree with the minimal-cut oracle") {
  for (const auto& entry : test_graphs()) {
    INFO(entry.name);
    REQUIRE(bonds(entry.graph) == bonds_oracle(entry.graph));
  }
}

TEST_CASE("lambda family agrees with the definition") {
  for (const auto& entry : test_graphs()) {
    INFO(entry.name);
    REQUIRE(lambda_family(entry.graph) == lambda_oracle(entry.graph));
  }
}

TEST_CASE("structural invariants") {
  for (const auto& entry : catalog::small(5, 7)) {
    const auto& g = entry.graph;
    INFO(entry.name);
    const auto c = component_count(g);
    const auto m = cycle_rank(g);
    const auto all = g.all_edges().bits();
    for (std::uint64_t s = all;; s = (s - 1) & all) {
      REQUIRE(component_count(g, EdgeSet(s)) >= c);
      REQUIRE(cycle_rank(g, EdgeSet(s)) <= m);
      if (s == 0) break;
    }

    const auto family = lambda_family(g);
    auto in_family = [&](VertexSet x) { return std::find(family.begin(), family.end(), x) != family.end(); };
    const auto comps = components(g);
    for (auto x : family) {
      const auto w = *std::find_if(comps.begin(), comps.end(), [&](VertexSet w) { return x.subset_of(w); });
      if (x != w) REQUIRE(in_family(w - x));
    }

    // bonds are exactly the cuts between complementary family members
    std::vector<EdgeSet> from_family;
    for (auto x : family) {
      for (auto w : comps) {
        if (x.subset_of(w) && x != w && in_family(w - x)) from_family.push_back(edge_cut(g, x, w - x));
      }
    }
    std::sort(from_family.begin(), from_family.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
    from_family.erase(std::unique(from_family.begin(), from_family.end()), from_family.end());
    REQUIRE(from_family == bonds(g));

    for (auto f : bonds(g)) {
      REQUIRE(component_count(g, f) == c + 1);
      const auto fb = f.bits();
      for (std::uint64_t s = (fb - 1) & fb; s != 0; s = (s - 1) & fb) REQUIRE(component_count(g, EdgeSet(s)) == c);
      for (const auto& e : g.edges()) {
        if (e.is_loop()) REQUIRE_FALSE(f.contains(e.id));
      }
    }
  }
}

TEST_CASE("bridges and two-edge-connectivity") {
  CHECK_FALSE(is_bridgeless(k2()));
  CHECK(is_bridgeless(c3()));
  CHECK(is_two_edge_connected(c3()));
  CHECK(is_bridgeless(MultiGraph(2, std::vector<std::pair<VertexId, VertexId>>{})));
  CHECK_FALSE(is_two_edge_connected(MultiGraph(2, std::vector<std::pair<VertexId, VertexId>>{})));
}

TEST_CASE("construction validates endpoints") {
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(MultiGraph::from_edges(2, {{1, 0, 1}, {0, 0, 1}}), InputError);
  CHECK(MultiGraph(2, {{0, 1}, {0, 1}, {1, 1}}).edge_count() == 3);
}
