#ifndef NZFLOW_ABELIAN_HPP
#define NZFLOW_ABELIAN_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nzflow {

using Residue = std::uint32_t;

/// Element of a product of cyclic groups, one canonical residue per factor.
struct GroupElement {
  std::vector<Residue> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Z_{n_1} x ... x Z_{n_r}, kept as the given factor list (Z2xZ3 and Z6 are
/// distinct specs).
class GroupSpec {
 public:
  GroupSpec() : orders_{1} {}

  explicit GroupSpec(std::vector<Residue> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw InputError("group needs at least one cyclic factor");
    std::uint64_t total = 1;
    for (auto n : orders_) {
      if (n < 1) throw InputError("cyclic order must be at least 1");
      if (total > std::numeric_limits<std::uint32_t>::max() / n) throw InputError("group order exceeds 2^32");
      total *= n;
    }
    order_ = total;
  }

  const std::vector<Residue>& cyclic_orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  GroupElement zero() const { return GroupElement{std::vector<Residue>(orders_.size(), 0)}; }

  bool conforms(const GroupElement& x) const noexcept {
    if (x.residues.size() != orders_.size()) return false;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (x.residues[j] >= orders_[j]) return false;
    }
    return true;
  }

  void require(const GroupElement& x) const {
    if (!conforms(x)) throw InputError("element " + format(x) + " does not belong to " + name());
  }

  GroupElement add(const GroupElement& x, const GroupElement& y) const {
    require(x);
    require(y);
    GroupElement out = x;
    add_into(out, y);
    return out;
  }

  GroupElement negate(const GroupElement& x) const {
    require(x);
    GroupElement out = x;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      out.residues[j] = out.residues[j] == 0 ? 0 : orders_[j] - out.residues[j];
    }
    return out;
  }

  GroupElement subtract(const GroupElement& x, const GroupElement& y) const { return add(x, negate(y)); }

  /// acc += y without shape checks; both must conform.
  void add_into(GroupElement& acc, const GroupElement& y) const noexcept {
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      auto s = static_cast<std::uint64_t>(acc.residues[j]) + y.residues[j];
      acc.residues[j] = static_cast<Residue>(s >= orders_[j] ? s - orders_[j] : s);
    }
  }

  bool is_zero(const GroupElement& x) const noexcept {
    for (auto r : x.residues) {
      if (r != 0) return false;
    }
    return true;
  }

  /// Mixed-radix index, last factor fastest; agrees with element order.
  std::uint64_t index_of(const GroupElement& x) const {
    require(x);
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + x.residues[j];
    return idx;
  }

  GroupElement element_at(std::uint64_t idx) const {
    if (idx >= order_) throw InputError("element index out of range");
    GroupElement x{std::vector<Residue>(orders_.size(), 0)};
    for (std::size_t j = orders_.size(); j-- > 0;) {
      x.residues[j] = static_cast<Residue>(idx % orders_[j]);
      idx /= orders_[j];
    }
    return x;
  }

  /// "Z2xZ2"
  std::string name() const {
    std::string s;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (j) s += 'x';
      s += 'Z' + std::to_string(orders_[j]);
    }
    return s;
  }

  /// Comma-separated residues, the BDocument line format.
  static std::string format(const GroupElement& x) {
    std::string s;
    for (std::size_t j = 0; j < x.residues.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(x.residues[j]);
    }
    return s;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept { return a.orders_ == b.orders_; }

 private:
  std::vector<Residue> orders_;
  std::uint64_t order_ = 1;
};

/// Forward range over every element, zero first, lexicographic on residues.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GroupElement;
    using difference_type = std::ptrdiff_t;
    using reference = const GroupElement&;
    using pointer = const GroupElement*;

    iterator() = default;
    iterator(const GroupSpec* spec, std::uint64_t pos) : spec_(spec), pos_(pos) {
      if (spec_ && pos_ < spec_->order()) current_ = spec_->zero();
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      ++pos_;
      const auto& orders = spec_->cyclic_orders();
      for (std::size_t j = orders.size(); j-- > 0;) {
        if (++current_.residues[j] < orders[j]) break;
        current_.residues[j] = 0;
      }
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }

    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.pos_ == b.pos_; }

   private:
    const GroupSpec* spec_ = nullptr;
    std::uint64_t pos_ = 0;
    GroupElement current_;
  };

  explicit ElementRange(const GroupSpec& spec) : spec_(&spec) {}
  iterator begin() const { return iterator(spec_, 0); }
  iterator end() const { return iterator(spec_, spec_->order()); }

 private:
  const GroupSpec* spec_;
};

inline ElementRange elements(const GroupSpec& spec) { return ElementRange(spec); }

/// Parses `Z<int>(xZ<int>)*`.
inline GroupSpec parse_group(std::string_view text) {
  std::vector<Residue> orders;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> GroupSpec {
    throw ParseError("bad group '" + std::string(text) + "': " + why);
  };
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z') return fail("expected 'Z' at position " + std::to_string(pos));
    ++pos;
    Residue n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
    if (ec != std::errc{} || ptr == text.data() + pos) return fail("expected a cyclic order after 'Z'");
    if (n < 1) return fail("cyclic order must be at least 1");
    orders.push_back(n);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != 'x') return fail("expected 'x' between factors");
    ++pos;
  }
  try {
    return GroupSpec(std::move(orders));
  } catch (const InputError& e) {
    return fail(e.what());
  }
}

}  // namespace nzflow

#endif  // NZFLOW_ABELIAN_HPP
