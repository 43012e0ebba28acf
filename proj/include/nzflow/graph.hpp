#ifndef NZFLOW_GRAPH_HPP
#define NZFLOW_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nzflow {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Upper bound on vertex and edge counts; both sets are 64-bit masks.
inline constexpr std::size_t kMaxSetSize = 64;

namespace detail {

template <class Tag>
class BitSet64 {
 public:
  using value_type = std::uint32_t;

  constexpr BitSet64() noexcept = default;
  constexpr explicit BitSet64(std::uint64_t bits) noexcept : bits_(bits) {}
  BitSet64(std::initializer_list<value_type> ids) {
    for (auto id : ids) insert(id);
  }

  static BitSet64 from_members(const std::vector<value_type>& ids) {
    BitSet64 s;
    for (auto id : ids) s.insert(id);
    return s;
  }
  static constexpr BitSet64 first_n(std::size_t n) noexcept {
    return BitSet64(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(value_type id) const noexcept {
    return id < 64 && ((bits_ >> id) & 1U) != 0;
  }
  void insert(value_type id) {
    if (id >= 64) throw InputError("set member " + std::to_string(id) + " exceeds the 64-element bound");
    bits_ |= std::uint64_t{1} << id;
  }
  constexpr void erase(value_type id) noexcept {
    if (id < 64) bits_ &= ~(std::uint64_t{1} << id);
  }
  constexpr bool subset_of(BitSet64 other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  /// Members in ascending order.
  std::vector<value_type> members() const {
    std::vector<value_type> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<value_type>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr BitSet64 operator|(BitSet64 a, BitSet64 b) noexcept { return BitSet64(a.bits_ | b.bits_); }
  friend constexpr BitSet64 operator&(BitSet64 a, BitSet64 b) noexcept { return BitSet64(a.bits_ & b.bits_); }
  friend constexpr BitSet64 operator-(BitSet64 a, BitSet64 b) noexcept { return BitSet64(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(BitSet64 a, BitSet64 b) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists.
template <class Tag>
bool lex_less(BitSet64<Tag> a, BitSet64<Tag> b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

struct EdgeTag {};
struct VertexTag {};

}  // namespace detail

using EdgeSet = detail::BitSet64<detail::EdgeTag>;
using VertexSet = detail::BitSet64<detail::VertexTag>;
using detail::lex_less;

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;

  constexpr bool is_loop() const noexcept { return tail == head; }
  friend constexpr bool operator==(const Edge&, const Edge&) noexcept = default;
};

/// Oriented multigraph; loops and parallel edges allowed.
///
/// Edge ids are strictly increasing along the edge sequence. Graphs built
/// from an endpoint list have dense ids [0, m); spanning subgraphs keep the
/// ids of their parent so an edge order on the parent applies unchanged.
class MultiGraph {
 public:
  MultiGraph() = default;

  MultiGraph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints)
      : vertex_count_(vertex_count) {
    edges_.reserve(endpoints.size());
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      edges_.push_back(Edge{static_cast<EdgeId>(i), endpoints[i].first, endpoints[i].second});
    }
    validate();
  }

  /// Edges with explicit ids, e.g. those of a parent graph.
  static MultiGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
    MultiGraph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.validate();
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexSet all_vertices() const noexcept { return VertexSet::first_n(vertex_count_); }

  EdgeSet all_edges() const {
    EdgeSet s;
    for (const auto& e : edges_) s.insert(e.id);
    return s;
  }

  bool has_edge(EdgeId id) const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
  }

  /// Copy with one edge's orientation flipped.
  MultiGraph with_reversed(EdgeId id) const {
    auto edges = edges_;
    auto it = std::find_if(edges.begin(), edges.end(), [id](const Edge& e) { return e.id == id; });
    if (it == edges.end()) throw InputError("unknown edge id " + std::to_string(id));
    std::swap(it->tail, it->head);
    return from_edges(vertex_count_, std::move(edges));
  }

  /// Neighbour masks, loops excluded.
  std::vector<std::uint64_t> adjacency() const {
    std::vector<std::uint64_t> adj(vertex_count_, 0);
    for (const auto& e : edges_) {
      if (e.is_loop()) continue;
      adj[e.tail] |= std::uint64_t{1} << e.head;
      adj[e.head] |= std::uint64_t{1} << e.tail;
    }
    return adj;
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void validate() const {
    if (vertex_count_ > kMaxSetSize) throw InputError("graphs are limited to 64 vertices");
    if (edges_.size() > kMaxSetSize) throw InputError("graphs are limited to 64 edges");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
        throw InputError("edge " + std::to_string(e.id) + " has an endpoint outside [0, " +
                         std::to_string(vertex_count_) + ")");
      }
      if (e.id >= kMaxSetSize) throw InputError("edge id " + std::to_string(e.id) + " exceeds 63");
      if (i > 0 && edges_[i - 1].id >= e.id) throw InputError("edge ids must be strictly increasing");
    }
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }

  std::vector<std::uint32_t> parent;
};

/// Vertices of `within` reachable from `start` inside `within`.
inline std::uint64_t reach(const std::vector<std::uint64_t>& adj, std::uint64_t within, std::uint32_t start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Component count of the subgraph induced on `within`.
inline std::size_t induced_component_count(const std::vector<std::uint64_t>& adj, std::uint64_t within) {
  std::size_t count = 0;
  while (within != 0) {
    within &= ~reach(adj, within, static_cast<std::uint32_t>(std::countr_zero(within)));
    ++count;
  }
  return count;
}

inline bool induced_connected(const std::vector<std::uint64_t>& adj, std::uint64_t within) {
  if (within == 0) return false;
  return reach(adj, within, static_cast<std::uint32_t>(std::countr_zero(within))) == within;
}

}  // namespace detail

/// Component label per vertex of G - removed, labels dense in order of
/// first appearance. Returns the component count.
inline std::size_t component_labels(const MultiGraph& g, EdgeSet removed, std::vector<std::uint32_t>& labels) {
  const auto n = g.vertex_count();
  detail::DisjointSets dsu(n);
  for (const auto& e : g.edges()) {
    if (!removed.contains(e.id)) dsu.unite(e.tail, e.head);
  }
  labels.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> root_label(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    auto r = dsu.find(v);
    if (root_label[r] == UINT32_MAX) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return next;
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const MultiGraph& g) {
  std::vector<std::uint32_t> labels;
  const auto c = component_labels(g, EdgeSet{}, labels);
  std::vector<VertexSet> blocks(c);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) blocks[labels[v]].insert(v);
  return blocks;
}

inline std::size_t component_count(const MultiGraph& g, EdgeSet removed = {}) {
  std::vector<std::uint32_t> labels;
  return component_labels(g, removed, labels);
}

/// m(G - removed) = |E| - |removed| - |V| + c(G - removed).
inline std::size_t cycle_rank(const MultiGraph& g, EdgeSet removed = {}) {
  const auto kept = g.edge_count() - (removed & g.all_edges()).size();
  return kept + component_count(g, removed) - g.vertex_count();
}

/// Spanning subgraph G - S; surviving edges keep their ids.
inline MultiGraph delete_edges(const MultiGraph& g, EdgeSet s) {
  if (!s.subset_of(g.all_edges())) throw InputError("edge set names an edge not in the graph");
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!s.contains(e.id)) kept.push_back(e);
  }
  return MultiGraph::from_edges(g.vertex_count(), std::move(kept));
}

/// G[X]. Vertices are renumbered 0..|X|-1 in ascending original order;
/// edge ids are kept.
inline MultiGraph induced_subgraph(const MultiGraph& g, VertexSet x) {
  if (!x.subset_of(g.all_vertices())) throw InputError("vertex set names a vertex not in the graph");
  std::vector<VertexId> index(g.vertex_count(), 0);
  VertexId next = 0;
  for (auto v : x.members()) index[v] = next++;
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (x.contains(e.tail) && x.contains(e.head)) kept.push_back(Edge{e.id, index[e.tail], index[e.head]});
  }
  return MultiGraph::from_edges(x.size(), std::move(kept));
}

/// E[X, Y]: non-loop edges with one end in each set.
inline EdgeSet edge_cut(const MultiGraph& g, VertexSet x, VertexSet y) {
  EdgeSet cut;
  for (const auto& e : g.edges()) {
    if ((x.contains(e.tail) && y.contains(e.head)) || (y.contains(e.tail) && x.contains(e.head))) {
      cut.insert(e.id);
    }
  }
  return cut;
}

/// A bond together with the side containing the smallest vertex of its
/// component.
struct BondSide {
  EdgeSet bond;
  VertexSet side;
  VertexSet component;
};

/// Every bond E[X, W\X] with G[X], G[W\X] connected, once per unordered
/// partition, sorted lexicographically by edge list.
inline std::vector<BondSide> bond_sides(const MultiGraph& g) {
  const auto adj = g.adjacency();
  std::vector<BondSide> out;
  for (const auto w : components(g)) {
    const auto anchor = w.members().front();
    const std::uint64_t rest = w.bits() & ~(std::uint64_t{1} << anchor);
    // submasks of rest, excluding rest itself (X must be proper)
    for (std::uint64_t y = rest;; y = (y - 1) & rest) {
      if (y != rest) {
        const std::uint64_t xs = y | (std::uint64_t{1} << anchor);
        const std::uint64_t ys = w.bits() & ~xs;
        if (detail::induced_connected(adj, xs) && detail::induced_connected(adj, ys)) {
          out.push_back(BondSide{edge_cut(g, VertexSet(xs), VertexSet(ys)), VertexSet(xs), w});
        }
      }
      if (y == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const BondSide& a, const BondSide& b) { return lex_less(a.bond, b.bond); });
  return out;
}

inline std::vector<EdgeSet> bonds(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  for (const auto& b : bond_sides(g)) out.push_back(b.bond);
  return out;
}

inline bool is_bridgeless(const MultiGraph& g) {
  const auto bs = bond_sides(g);
  return std::none_of(bs.begin(), bs.end(), [](const BondSide& b) { return b.bond.size() == 1; });
}

inline bool is_two_edge_connected(const MultiGraph& g) {
  return component_count(g) == 1 && is_bridgeless(g);
}

/// Nonempty X with G[X] connected and c(G - X) = c(G), sorted
/// lexicographically by member list.
inline std::vector<VertexSet> lambda_family(const MultiGraph& g) {
  const auto adj = g.adjacency();
  const std::uint64_t all = g.all_vertices().bits();
  const auto c = detail::induced_component_count(adj, all);
  std::vector<VertexSet> out;
  for (const auto w : components(g)) {
    const std::uint64_t wb = w.bits();
    for (std::uint64_t x = wb; x != 0; x = (x - 1) & wb) {
      if (!detail::induced_connected(adj, x)) continue;
      if (detail::induced_component_count(adj, all & ~x) == c) out.emplace_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

}  // namespace nzflow

#endif  // NZFLOW_GRAPH_HPP
