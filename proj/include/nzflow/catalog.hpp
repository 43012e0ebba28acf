#ifndef NZFLOW_CATALOG_HPP
#define NZFLOW_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace nzflow::catalog {

struct Entry {
  std::string name;
  MultiGraph graph;
};

using Pair = std::pair<VertexId, VertexId>;

namespace detail {

inline std::string describe(std::size_t n, const std::vector<Pair>& edges) {
  std::string s = "n" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges[i].first) + '-' + std::to_string(edges[i].second);
  }
  return s;
}

/// Lexicographically smallest sorted edge list over all vertex relabelings.
inline std::vector<Pair> canonical(std::size_t n, const std::vector<Pair>& edges) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<Pair> best;
  bool first = true;
  std::vector<Pair> mapped(edges.size());
  do {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto a = perm[edges[i].first];
      auto b = perm[edges[i].second];
      mapped[i] = a <= b ? Pair{a, b} : Pair{b, a};
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// All multigraphs (loops and parallel edges allowed) with 1..max_n vertices
/// and 0..max_m edges, one per isomorphism class. Edges are oriented from
/// the smaller to the larger endpoint.
inline std::vector<Entry> small(std::size_t max_n, std::size_t max_m) {
  if (max_n > 6) throw ResourceError("small catalog is limited to 6 vertices");
  if (max_m > kMaxSetSize) throw ResourceError("small catalog is limited to 64 edges");
  std::vector<Entry> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Pair> slots;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a; b < n; ++b) slots.emplace_back(a, b);
    }
    for (std::size_t m = 0; m <= max_m; ++m) {
      // nondecreasing slot indices = multisets of size m
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<Pair> edges(m);
        for (std::size_t i = 0; i < m; ++i) edges[i] = slots[pick[i]];
        if (detail::canonical(n, edges) == edges) {
          out.push_back(Entry{detail::describe(n, edges), MultiGraph(n, edges)});
        }
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == slots.size() - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[i - 1];
      }
    }
  }
  return out;
}

inline MultiGraph cycle(std::size_t n) {
  std::vector<Pair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return MultiGraph(n, edges);
}

inline MultiGraph complete(std::size_t n) {
  std::vector<Pair> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return MultiGraph(n, edges);
}

/// C_3 .. C_max_n.
inline std::vector<Entry> cycles(std::size_t max_n) {
  std::vector<Entry> out;
  for (std::size_t n = 3; n <= max_n; ++n) out.push_back(Entry{"C" + std::to_string(n), cycle(n)});
  return out;
}

/// K_2 .. K_max_n, filtered to at most max_m edges.
inline std::vector<Entry> completes(std::size_t max_n, std::size_t max_m) {
  std::vector<Entry> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    if (n * (n - 1) / 2 > max_m) break;
    out.push_back(Entry{"K" + std::to_string(n), complete(n)});
  }
  return out;
}

/// Seeded random multigraphs; each has 1..max_n vertices and 0..max_m edges
/// with uniformly chosen ordered endpoints.
inline std::vector<Entry> random(std::uint64_t seed, std::size_t count, std::size_t max_n, std::size_t max_m) {
  if (max_n == 0) throw InputError("random catalog needs max_n >= 1");
  if (max_n > kMaxSetSize || max_m > kMaxSetSize) throw ResourceError("random catalog is limited to 64 vertices/edges");
  std::mt19937_64 rng(seed);
  std::vector<Entry> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = 1 + static_cast<std::size_t>(rng() % max_n);
    const auto m = static_cast<std::size_t>(rng() % (max_m + 1));
    std::vector<Pair> edges;
    for (std::size_t i = 0; i < m; ++i) {
      edges.emplace_back(static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n));
    }
    out.push_back(Entry{"r" + std::to_string(k) + "/" + detail::describe(n, edges), MultiGraph(n, edges)});
  }
  return out;
}

}  // namespace nzflow::catalog

#endif  // NZFLOW_CATALOG_HPP
