#ifndef NZFLOW_FLOWS_HPP
#define NZFLOW_FLOWS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

namespace nzflow {

/// Default cap on enumerated candidate flows.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// b : V(G) -> A.
struct BFunction {
  GroupSpec spec;
  std::vector<GroupElement> values;

  static BFunction zero(const GroupSpec& spec, std::size_t vertex_count) {
    return BFunction{spec, std::vector<GroupElement>(vertex_count, spec.zero())};
  }

  /// Sum of b over the vertices of x.
  GroupElement sum_over(VertexSet x) const {
    auto acc = spec.zero();
    for (auto v : x.members()) spec.add_into(acc, values[v]);
    return acc;
  }

  bool is_zero() const {
    for (const auto& x : values) {
      if (!spec.is_zero(x)) return false;
    }
    return true;
  }

  friend bool operator==(const BFunction&, const BFunction&) = default;
};

/// f : E(G) -> A, indexed by position in G.edges().
struct EdgeFunction {
  GroupSpec spec;
  std::vector<GroupElement> values;
};

inline void require_shape(const MultiGraph& g, const BFunction& b) {
  if (b.values.size() != g.vertex_count()) {
    throw InputError("vertex function has " + std::to_string(b.values.size()) + " values for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  for (const auto& x : b.values) b.spec.require(x);
}

/// df(v) = sum of f over edges with head v minus sum over edges with tail v.
inline BFunction boundary(const MultiGraph& g, const EdgeFunction& f) {
  if (f.values.size() != g.edge_count()) {
    throw InputError("edge function has " + std::to_string(f.values.size()) + " values for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  auto out = BFunction::zero(f.spec, g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    f.spec.require(f.values[i]);
    if (e.is_loop()) continue;
    f.spec.add_into(out.values[e.head], f.values[i]);
    f.spec.add_into(out.values[e.tail], f.spec.negate(f.values[i]));
  }
  return out;
}

/// First component (of G - removed) on which b does not sum to zero.
inline std::optional<VertexSet> incompatible_component(const MultiGraph& g, const BFunction& b, EdgeSet removed = {}) {
  require_shape(g, b);
  std::vector<std::uint32_t> labels;
  const auto c = component_labels(g, removed, labels);
  std::vector<GroupElement> sums(c, b.spec.zero());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) b.spec.add_into(sums[labels[v]], b.values[v]);
  for (std::uint32_t k = 0; k < c; ++k) {
    if (!b.spec.is_zero(sums[k])) {
      VertexSet w;
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (labels[v] == k) w.insert(v);
      }
      return w;
    }
  }
  return std::nullopt;
}

/// b sums to zero on every component of G - removed.
inline bool is_b_compatible(const MultiGraph& g, const BFunction& b, EdgeSet removed = {}) {
  return !incompatible_component(g, b, removed).has_value();
}

/// Throws DomainError naming the offending component.
inline void require_compatible(const MultiGraph& g, const BFunction& b) {
  if (auto w = incompatible_component(g, b)) {
    std::string members;
    for (auto v : w->members()) members += (members.empty() ? "" : ",") + std::to_string(v);
    throw DomainError("b is not locally zero-sum: component {" + members + "} sums to (" +
                      GroupSpec::format(b.sum_over(*w)) + ")");
  }
}

/// |A|^(|V| - c(G)), the size of Z(G, A).
inline std::uint64_t zero_sum_count(const MultiGraph& g, const GroupSpec& spec) {
  return checked::pow<std::uint64_t>(spec.order(), g.vertex_count() - component_count(g));
}

/// Visits every locally zero-sum b. The largest vertex of each component is
/// forced; the remaining ("free") vertices run through A^free in mixed-radix
/// order with vertex 0 most significant.
inline void for_each_zero_sum(const MultiGraph& g, const GroupSpec& spec,
                              const std::function<void(const BFunction&)>& visit) {
  const auto n = g.vertex_count();
  std::vector<std::uint32_t> labels;
  const auto c = component_labels(g, EdgeSet{}, labels);
  std::vector<std::uint32_t> forced_of(c, 0);
  for (std::uint32_t v = 0; v < n; ++v) forced_of[labels[v]] = v;
  std::vector<std::uint32_t> free;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (forced_of[labels[v]] != v) free.push_back(v);
  }
  auto b = BFunction::zero(spec, n);
  const auto& orders = spec.cyclic_orders();
  while (true) {
    std::vector<GroupElement> sums(c, spec.zero());
    for (auto v : free) spec.add_into(sums[labels[v]], b.values[v]);
    for (std::uint32_t k = 0; k < c; ++k) b.values[forced_of[k]] = spec.negate(sums[k]);
    visit(b);
    // odometer over the free values, last residue of the last free vertex fastest
    bool carried = true;
    for (std::size_t i = free.size(); carried && i-- > 0;) {
      auto& x = b.values[free[i]].residues;
      for (std::size_t j = x.size(); carried && j-- > 0;) {
        if (++x[j] < orders[j]) {
          carried = false;
        } else {
          x[j] = 0;
        }
      }
    }
    if (carried) break;
  }
}

/// Z(G, A) materialized; ResourceError if it holds more than `limit` members.
inline std::vector<BFunction> enumerate_zero_sum(const MultiGraph& g, const GroupSpec& spec,
                                                 std::uint64_t limit = kDefaultBudget) {
  std::uint64_t size = 0;
  try {
    size = zero_sum_count(g, spec);
  } catch (const ArithmeticError&) {
    throw ResourceError("Z(G,A) is too large to enumerate");
  }
  if (size > limit) throw ResourceError("Z(G,A) has " + std::to_string(size) + " members, over the limit");
  std::vector<BFunction> out;
  out.reserve(size);
  for_each_zero_sum(g, spec, [&](const BFunction& b) { out.push_back(b); });
  return out;
}

/// F(G, b; A) = |A|^{m(G)} when G is b-compatible, else 0.
inline std::uint64_t count_flows(const MultiGraph& g, const BFunction& b) {
  if (!is_b_compatible(g, b)) return 0;
  return checked::pow<std::uint64_t>(b.spec.order(), cycle_rank(g));
}

namespace detail {

/// Group arithmetic on element indices, table-driven for small groups.
class IndexedGroup {
 public:
  explicit IndexedGroup(const GroupSpec& spec) : spec_(spec), order_(spec.order()) {
    if (order_ <= kTableLimit) {
      add_.resize(order_ * order_);
      neg_.resize(order_);
      for (std::uint64_t i = 0; i < order_; ++i) {
        const auto x = spec.element_at(i);
        neg_[i] = static_cast<std::uint32_t>(spec.index_of(spec.negate(x)));
        for (std::uint64_t j = 0; j < order_; ++j) {
          add_[i * order_ + j] = static_cast<std::uint32_t>(spec.index_of(spec.add(x, spec.element_at(j))));
        }
      }
    }
  }

  std::uint64_t order() const noexcept { return order_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!add_.empty()) return add_[a * order_ + b];
    return static_cast<std::uint32_t>(spec_.index_of(spec_.add(spec_.element_at(a), spec_.element_at(b))));
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (!neg_.empty()) return neg_[a];
    return static_cast<std::uint32_t>(spec_.index_of(spec_.negate(spec_.element_at(a))));
  }

 private:
  static constexpr std::uint64_t kTableLimit = 1024;
  GroupSpec spec_;
  std::uint64_t order_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

/// Exhaustive search over edge values; a vertex is checked against b as
/// soon as its last incident edge has been assigned.
class FlowEnumerator {
 public:
  FlowEnumerator(const MultiGraph& g, const BFunction& b, bool nowhere_zero)
      : group_(b.spec), nowhere_zero_(nowhere_zero), boundary_(g.vertex_count(), 0) {
    require_shape(g, b);
    const auto n = g.vertex_count();
    target_.resize(n);
    for (std::size_t v = 0; v < n; ++v) target_[v] = static_cast<std::uint32_t>(b.spec.index_of(b.values[v]));
    std::vector<long> last(n, -1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      ends_.emplace_back(e.tail, e.head);
      if (!e.is_loop()) {
        last[e.tail] = static_cast<long>(i);
        last[e.head] = static_cast<long>(i);
      }
    }
    closes_.resize(g.edge_count());
    for (std::uint32_t v = 0; v < n; ++v) {
      if (last[v] < 0) {
        untouched_.push_back(v);
      } else {
        closes_[static_cast<std::size_t>(last[v])].push_back(v);
      }
    }
  }

  std::uint64_t count() {
    for (auto v : untouched_) {
      if (target_[v] != 0) return 0;
    }
    return descend(0);
  }

 private:
  std::uint64_t descend(std::size_t i) {
    if (i == ends_.size()) return 1;
    const auto [tail, head] = ends_[i];
    std::uint64_t total = 0;
    const auto saved_tail = boundary_[tail];
    const auto saved_head = boundary_[head];
    for (std::uint32_t a = nowhere_zero_ ? 1U : 0U; a < group_.order(); ++a) {
      if (tail != head) {
        boundary_[head] = group_.add(saved_head, a);
        boundary_[tail] = group_.add(saved_tail, group_.neg(a));
      }
      bool ok = true;
      for (auto v : closes_[i]) {
        if (boundary_[v] != target_[v]) {
          ok = false;
          break;
        }
      }
      if (ok) total += descend(i + 1);
    }
    boundary_[tail] = saved_tail;
    boundary_[head] = saved_head;
    return total;
  }

  IndexedGroup group_;
  bool nowhere_zero_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<std::vector<std::uint32_t>> closes_;
  std::vector<std::uint32_t> untouched_;
  std::vector<std::uint32_t> target_;
  std::vector<std::uint32_t> boundary_;
};

inline void check_budget(std::uint64_t per_edge, std::size_t edges, std::uint64_t budget) {
  std::uint64_t leaves = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (per_edge != 0 && leaves > budget / per_edge) {
      throw ResourceError("brute-force enumeration of " + std::to_string(per_edge) + "^" + std::to_string(edges) +
                          " edge assignments exceeds the budget of " + std::to_string(budget));
    }
    leaves *= per_edge;
  }
  if (leaves > budget) throw ResourceError("brute-force enumeration exceeds the budget");
}

}  // namespace detail

/// F*(G, b; A) by exhaustive enumeration of (A \ {0})^E.
inline std::uint64_t count_nz_flows_bruteforce(const MultiGraph& g, const BFunction& b,
                                               std::uint64_t budget = kDefaultBudget) {
  detail::check_budget(b.spec.order() - 1, g.edge_count(), budget);
  return detail::FlowEnumerator(g, b, true).count();
}

/// F(G, b; A) by exhaustive enumeration of A^E, zeros allowed.
inline std::uint64_t count_flows_bruteforce(const MultiGraph& g, const BFunction& b,
                                            std::uint64_t budget = kDefaultBudget) {
  detail::check_budget(b.spec.order(), g.edge_count(), budget);
  return detail::FlowEnumerator(g, b, false).count();
}

struct DecompositionReport {
  std::uint64_t nowhere_zero_sum = 0;  // sum over Z(G,A) of F*
  std::uint64_t all_sum = 0;           // sum over Z(G,A) of F
  std::uint64_t nowhere_zero_target = 0;
  std::uint64_t all_target = 0;
  bool nowhere_zero_pass = false;
  bool all_pass = false;
  bool pass() const noexcept { return nowhere_zero_pass && all_pass; }
};

/// Sums F* (brute force) and F (closed form) over Z(G, A) and compares them
/// with (|A|-1)^m and |A|^m.
inline DecompositionReport decomposition_check(const MultiGraph& g, const GroupSpec& spec,
                                               std::uint64_t budget = kDefaultBudget) {
  detail::check_budget(spec.order() - 1, g.edge_count(), budget);
  DecompositionReport r;
  for_each_zero_sum(g, spec, [&](const BFunction& b) {
    r.nowhere_zero_sum = checked::add(r.nowhere_zero_sum, count_nz_flows_bruteforce(g, b, budget));
    r.all_sum = checked::add(r.all_sum, count_flows(g, b));
  });
  r.nowhere_zero_target = checked::pow<std::uint64_t>(spec.order() - 1, g.edge_count());
  r.all_target = checked::pow<std::uint64_t>(spec.order(), g.edge_count());
  r.nowhere_zero_pass = r.nowhere_zero_sum == r.nowhere_zero_target;
  r.all_pass = r.all_sum == r.all_target;
  return r;
}

}  // namespace nzflow

#endif  // NZFLOW_FLOWS_HPP
