#ifndef NZFLOW_ASSIGNING_HPP
#define NZFLOW_ASSIGNING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "flows.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

namespace nzflow {

/// Default edge bound for exhaustive subset enumeration (2^24 subsets).
inline constexpr std::size_t kDefaultMaxEdges = 24;

/// A {0,1}-valued map on lambda_family(G), stored in that family's order.
struct Assigning {
  std::vector<VertexSet> domain;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(VertexSet x) const {
    auto it = std::find(domain.begin(), domain.end(), x);
    if (it == domain.end()) throw InputError("vertex set is not in the lambda family");
    return bits[static_cast<std::size_t>(it - domain.begin())];
  }

  bool is_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t v) { return v == 0; });
  }

  /// alpha(X) <= other(X) for every X; both must share a domain.
  bool pointwise_le(const Assigning& other) const {
    if (domain != other.domain) throw InputError("assignings live on different lambda families");
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] > other.bits[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Assigning&, const Assigning&) = default;
};

/// alpha_{G,b}(X) = 0 iff b sums to zero on X.
inline Assigning induced_assigning(const MultiGraph& g, const BFunction& b) {
  require_shape(g, b);
  Assigning a;
  a.domain = lambda_family(g);
  a.bits.reserve(a.domain.size());
  for (auto x : a.domain) a.bits.push_back(b.spec.is_zero(b.sum_over(x)) ? 0 : 1);
  return a;
}

/// Total order on E(G), listed smallest first.
class EdgeOrder {
 public:
  /// Increasing edge id.
  static EdgeOrder natural(const MultiGraph& g) {
    std::vector<EdgeId> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    return EdgeOrder(g, std::move(ids));
  }

  /// Uniform shuffle from a seeded mt19937_64; identical seeds give identical
  /// orders on every platform.
  static EdgeOrder random(const MultiGraph& g, std::uint64_t seed) {
    std::vector<EdgeId> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    std::mt19937_64 rng(seed);
    for (std::size_t i = ids.size(); i > 1; --i) {
      std::swap(ids[i - 1], ids[static_cast<std::size_t>(rng() % i)]);
    }
    return EdgeOrder(g, std::move(ids));
  }

  EdgeOrder(const MultiGraph& g, std::vector<EdgeId> ascending) : ascending_(std::move(ascending)) {
    if (ascending_.size() != g.edge_count()) throw InputError("edge order must list every edge exactly once");
    rank_.assign(kMaxSetSize, UINT32_MAX);
    for (std::size_t r = 0; r < ascending_.size(); ++r) {
      const auto id = ascending_[r];
      if (!g.has_edge(id)) throw InputError("edge order names unknown edge " + std::to_string(id));
      if (rank_[id] != UINT32_MAX) throw InputError("edge order repeats edge " + std::to_string(id));
      rank_[id] = static_cast<std::uint32_t>(r);
    }
  }

  const std::vector<EdgeId>& ascending() const noexcept { return ascending_; }
  std::uint32_t rank(EdgeId id) const { return rank_.at(id); }

  /// Largest member of a nonempty set.
  EdgeId max_of(EdgeSet s) const {
    if (s.empty()) throw InputError("maximum of an empty edge set");
    EdgeId best = 0;
    std::uint32_t best_rank = 0;
    bool first = true;
    for (auto id : s.members()) {
      if (first || rank(id) > best_rank) {
        best = id;
        best_rank = rank(id);
        first = false;
      }
    }
    return best;
  }

 private:
  std::vector<EdgeId> ascending_;
  std::vector<std::uint32_t> rank_;
};

/// Decides "G - S is b-compatible", memoized on the component partition of
/// G - S (the predicate depends on nothing else).
class CompatibilityTester {
 public:
  CompatibilityTester(const MultiGraph& g, const BFunction& b) : g_(&g), b_(&b) { require_shape(g, b); }

  struct Result {
    bool compatible;
    std::size_t components;
  };

  Result test(EdgeSet removed) {
    const auto c = component_labels(*g_, removed, labels_);
    const auto n = g_->vertex_count();
    const bool packable = n <= 16;
    std::uint64_t key = 0;
    if (packable) {
      for (std::size_t v = 0; v < n; ++v) key |= static_cast<std::uint64_t>(labels_[v]) << (4 * v);
      if (auto it = memo_.find(key); it != memo_.end()) return {it->second, c};
    }
    sums_.assign(c, b_->spec.zero());
    for (std::size_t v = 0; v < n; ++v) b_->spec.add_into(sums_[labels_[v]], b_->values[v]);
    const bool ok = std::all_of(sums_.begin(), sums_.end(), [&](const GroupElement& x) { return b_->spec.is_zero(x); });
    if (packable) memo_.emplace(key, ok);
    return {ok, c};
  }

  bool compatible(EdgeSet removed) { return test(removed).compatible; }

 private:
  const MultiGraph* g_;
  const BFunction* b_;
  std::vector<std::uint32_t> labels_;
  std::vector<GroupElement> sums_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

inline void require_edge_guard(const MultiGraph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw ResourceError("graph has " + std::to_string(g.edge_count()) + " edges; subset enumeration is limited to " +
                        std::to_string(max_edges));
  }
}

/// Sum over S with G - S b-compatible of (-1)^{|S|} k^{m(G-S)}.
inline IntPolynomial poly_subset_expansion(const MultiGraph& g, const BFunction& b,
                                           std::size_t max_edges = kDefaultMaxEdges) {
  require_compatible(g, b);
  require_edge_guard(g, max_edges);
  CompatibilityTester tester(g, b);
  const auto all = g.all_edges().bits();
  const auto m = g.edge_count();
  const auto n = g.vertex_count();
  std::vector<std::int64_t> coeffs(m + 1, 0);
  for (std::uint64_t s = all;; s = (s - 1) & all) {
    const EdgeSet removed(s);
    const auto r = tester.test(removed);
    if (r.compatible) {
      const auto rank = (m - removed.size()) + r.components - n;
      coeffs[rank] += (removed.size() % 2 == 0) ? 1 : -1;
    }
    if (s == 0) break;
  }
  return IntPolynomial(std::move(coeffs));
}

/// Bonds F of G with G - F b-compatible.
inline std::vector<EdgeSet> b_compatible_bonds(const MultiGraph& g, const BFunction& b) {
  require_compatible(g, b);
  std::vector<EdgeSet> out;
  for (const auto f : bonds(g)) {
    if (is_b_compatible(g, b, f)) out.push_back(f);
  }
  return out;
}

struct BrokenBond {
  EdgeSet edges;    // bond minus its largest edge
  EdgeId dropped;   // the largest edge
  EdgeSet bond;
};

/// One entry per b-compatible bond, in bond order.
inline std::vector<BrokenBond> broken_bond_sources(const MultiGraph& g, const BFunction& b, const EdgeOrder& order) {
  std::vector<BrokenBond> out;
  for (const auto f : b_compatible_bonds(g, b)) {
    const auto top = order.max_of(f);
    auto rest = f;
    rest.erase(top);
    out.push_back(BrokenBond{rest, top, f});
  }
  return out;
}

/// Distinct b-compatible broken bonds, sorted lexicographically.
inline std::vector<EdgeSet> broken_bonds(const MultiGraph& g, const BFunction& b, const EdgeOrder& order) {
  std::vector<EdgeSet> out;
  for (const auto& bb : broken_bond_sources(g, b, order)) out.push_back(bb.edges);
  std::sort(out.begin(), out.end(), [](EdgeSet x, EdgeSet y) { return lex_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// a_i = #{S : |S| = i, G - S b-compatible, S contains no b-compatible
/// broken bond}, for i = 0..m(G).
inline std::vector<std::int64_t> nbb_counts(const MultiGraph& g, const BFunction& b, const EdgeOrder& order,
                                            std::size_t max_edges = kDefaultMaxEdges) {
  require_compatible(g, b);
  require_edge_guard(g, max_edges);
  const auto top = cycle_rank(g);
  std::vector<std::int64_t> a(top + 1, 0);

  auto broken = broken_bonds(g, b, order);
  if (std::any_of(broken.begin(), broken.end(), [](EdgeSet s) { return s.empty(); })) return a;

  // Keep only inclusion-minimal broken bonds.
  std::vector<std::uint64_t> minimal;
  for (const auto x : broken) {
    const bool dominated = std::any_of(broken.begin(), broken.end(), [&](EdgeSet y) { return y != x && y.subset_of(x); });
    if (!dominated) minimal.push_back(x.bits());
  }

  std::vector<EdgeId> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  CompatibilityTester tester(g, b);

  // Depth-first include/exclude; a branch dies once S contains a broken bond.
  auto descend = [&](auto&& self, std::size_t i, std::uint64_t s) -> void {
    if (i == ids.size()) {
      if (!tester.compatible(EdgeSet(s))) return;
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (size > top) {
        throw VerificationError("a broken-bond-free subset with compatible complement exceeds m(G) edges");
      }
      ++a[size];
      return;
    }
    self(self, i + 1, s);
    const std::uint64_t with = s | (std::uint64_t{1} << ids[i]);
    for (auto bb : minimal) {
      if ((bb >> ids[i] & 1U) != 0 && (bb & ~with) == 0) return;
    }
    self(self, i + 1, with);
  };
  descend(descend, 0, 0);
  return a;
}

/// sum_i (-1)^i a_i k^{m(G)-i} with a_i from nbb_counts.
inline IntPolynomial poly_nbb(const MultiGraph& g, const BFunction& b, const EdgeOrder& order,
                              std::size_t max_edges = kDefaultMaxEdges) {
  return IntPolynomial::from_signless(nbb_counts(g, b, order, max_edges));
}

struct ComparisonReport {
  bool pointwise_le = false;
  std::vector<std::int64_t> coefficients;
  std::vector<std::int64_t> other_coefficients;
  /// Present iff pointwise_le; true when every a_i <= a'_i.
  std::optional<bool> verified;
};

/// b and b2 may live over different groups.
inline ComparisonReport compare_coefficients(const MultiGraph& g, const BFunction& b, const BFunction& b2) {
  require_compatible(g, b);
  require_compatible(g, b2);
  const auto order = EdgeOrder::natural(g);
  ComparisonReport r;
  r.pointwise_le = induced_assigning(g, b).pointwise_le(induced_assigning(g, b2));
  r.coefficients = nbb_counts(g, b, order);
  r.other_coefficients = nbb_counts(g, b2, order);
  if (r.pointwise_le) {
    bool ok = true;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) ok = ok && r.coefficients[i] <= r.other_coefficients[i];
    r.verified = ok;
  }
  return r;
}

/// Some b' in Z(G, spec) with alpha_{G,b'} = target, searched in
/// for_each_zero_sum order.
inline std::optional<BFunction> find_realization(const MultiGraph& g, const Assigning& target, const GroupSpec& spec) {
  std::optional<BFunction> found;
  for_each_zero_sum(g, spec, [&](const BFunction& b) {
    if (!found && induced_assigning(g, b) == target) found = b;
  });
  return found;
}

struct ConnectivityReport {
  bool connected = true;
  std::optional<BFunction> witness;  // a b with F*(G,b;A) = 0
  std::uint64_t functions_checked = 0;
  std::uint64_t assignings_seen = 0;
  bool cross_checked = false;  // every count also confirmed by brute force
};

/// Decides whether F*(G, b; A) > 0 for every b in Z(G, A). Counts come from
/// the subset expansion (shared across b with equal assignings); when the
/// brute-force budget allows, each count is confirmed independently.
inline ConnectivityReport is_A_connected(const MultiGraph& g, const GroupSpec& spec,
                                         std::uint64_t budget = kDefaultBudget,
                                         std::size_t max_edges = kDefaultMaxEdges) {
  require_edge_guard(g, max_edges);
  ConnectivityReport r;
  bool brute = true;
  try {
    detail::check_budget(spec.order() - 1, g.edge_count(), budget);
  } catch (const ResourceError&) {
    brute = false;
  }
  r.cross_checked = brute;
  const auto order_value = static_cast<std::int64_t>(spec.order());
  std::map<std::vector<std::uint8_t>, std::int64_t> by_assigning;
  for_each_zero_sum(g, spec, [&](const BFunction& b) {
    if (!r.connected) return;
    ++r.functions_checked;
    const auto alpha = induced_assigning(g, b);
    auto it = by_assigning.find(alpha.bits);
    if (it == by_assigning.end()) {
      it = by_assigning.emplace(alpha.bits, poly_subset_expansion(g, b, max_edges).eval(order_value)).first;
    }
    const auto count = it->second;
    if (brute) {
      const auto oracle = count_nz_flows_bruteforce(g, b, budget);
      if (static_cast<std::int64_t>(oracle) != count) {
        throw VerificationError("subset expansion and brute force disagree on a zero-sum function");
      }
    }
    if (count == 0) {
      r.connected = false;
      r.witness = b;
    }
  });
  r.assignings_seen = by_assigning.size();
  return r;
}

/// Every alpha_{G,b}, b in Z(G, a), also arises as alpha_{G,b'} for some b'
/// in Z(G, other).
inline bool assignings_covered(const MultiGraph& g, const GroupSpec& a, const GroupSpec& other) {
  std::vector<std::vector<std::uint8_t>> available;
  for_each_zero_sum(g, other, [&](const BFunction& b) { available.push_back(induced_assigning(g, b).bits); });
  std::sort(available.begin(), available.end());
  bool covered = true;
  for_each_zero_sum(g, a, [&](const BFunction& b) {
    if (covered) covered = std::binary_search(available.begin(), available.end(), induced_assigning(g, b).bits);
  });
  return covered;
}

}  // namespace nzflow

#endif  // NZFLOW_ASSIGNING_HPP
