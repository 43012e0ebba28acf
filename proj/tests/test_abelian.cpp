#include <catch_amalgamated.hpp>

#include <vector>

#include "nzflow/abelian.hpp"

using namespace nzflow;

namespace {

GroupElement el(std::vector<Residue> r) { return GroupElement{std::move(r)}; }

// Every factor list with product <= 16.
std::vector<GroupSpec> small_specs() {
  std::vector<GroupSpec> out;
  std::vector<std::vector<Residue>> pending{{}};
  while (!pending.empty()) {
    auto cur = pending.back();
    pending.pop_back();
    Residue prod = 1;
    for (auto n : cur) prod *= n;
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == 3) continue;
    for (Residue n = 1; prod * n <= 16; ++n) {
      auto next = cur;
      next.push_back(n);
      pending.push_back(next);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("add") {
  const GroupSpec z2z2({2, 2});
  CHECK(z2z2.add(el({1, 1}), el({1, 0})) == el({0, 1}));
  const GroupSpec z6({6});
  CHECK(z6.add(el({4}), el({5})) == el({3}));
  CHECK(z6.add(el({4}), z6.zero()) == el({4}));
  CHECK_THROWS_AS(z6.add(el({4, 0}), el({1})), InputError);
  CHECK_THROWS_AS(z6.add(el({6}), el({1})), InputError);
}

TEST_CASE("negate") {
  CHECK(GroupSpec({5}).negate(el({2})) == el({3}));
  CHECK(GroupSpec({2, 2}).negate(el({1, 1})) == el({1, 1}));
  CHECK(GroupSpec({7}).negate(GroupSpec({7}).zero()) == el({0}));
  CHECK_THROWS_AS(GroupSpec({5}).negate(el({1, 1})), InputError);
}

TEST_CASE("elements: zero first, lexicographic") {
  std::vector<GroupElement> seen;
  const GroupSpec z3({3});
  for (const auto& x : elements(z3)) seen.push_back(x);
  CHECK(seen == std::vector<GroupElement>{el({0}), el({1}), el({2})});

  seen.clear();
  const GroupSpec z2z2({2, 2});
  for (const auto& x : elements(z2z2)) seen.push_back(x);
  CHECK(seen == std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})});

  seen.clear();
  const GroupSpec z1({1});
  for (const auto& x : elements(z1)) seen.push_back(x);
  CHECK(seen == std::vector<GroupElement>{el({0})});
}

TEST_CASE("parse_group") {
  CHECK(parse_group("Z4").cyclic_orders() == std::vector<Residue>{4});
  CHECK(parse_group("Z2xZ2").cyclic_orders() == std::vector<Residue>{2, 2});
  CHECK(parse_group("Z2xZ3").cyclic_orders() == std::vector<Residue>{2, 3});
  CHECK_FALSE(parse_group("Z2xZ3") == parse_group("Z6"));
  CHECK(parse_group("Z2xZ3").order() == 6);
  for (const char* bad : {"", "Z", "Z0", "4", "Z2x", "Z2*Z2", "z2", "Z-1", "Z2xZ2 "}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_group(bad), ParseError);
  }
  CHECK(parse_group("Z12xZ1").name() == "Z12xZ1");
}

TEST_CASE("index round trip") {
  const GroupSpec spec({3, 2, 4});
  std::uint64_t i = 0;
  for (const auto& x : elements(spec)) {
    REQUIRE(spec.index_of(x) == i);
    REQUIRE(spec.element_at(i) == x);
    ++i;
  }
  CHECK(i == 24);
}

TEST_CASE("group axioms hold exhaustively up to order 16") {
  const auto specs = small_specs();
  REQUIRE(specs.size() > 20);
  for (const auto& spec : specs) {
    INFO(spec.name());
    std::vector<GroupElement> all;
    for (const auto& x : elements(spec)) all.push_back(x);
    REQUIRE(all.size() == spec.order());
    const auto zero = spec.zero();
    for (const auto& x : all) {
      REQUIRE(spec.add(x, zero) == x);
      REQUIRE(spec.add(x, spec.negate(x)) == zero);
      for (const auto& y : all) {
        const auto xy = spec.add(x, y);
        REQUIRE(spec.conforms(xy));
        REQUIRE(xy == spec.add(y, x));
        for (const auto& z : all) REQUIRE(spec.add(xy, z) == spec.add(x, spec.add(y, z)));
      }
    }
  }
}

TEST_CASE("Z4 and Z2xZ2 differ in exponent") {
  auto exponent = [](const GroupSpec& spec) {
    unsigned best = 1;
    for (const auto& x : elements(spec)) {
      auto acc = x;
      unsigned k = 1;
      while (!spec.is_zero(acc)) {
        acc = spec.add(acc, x);
        ++k;
      }
      best = std::max(best, k);
    }
    return best;
  };
  CHECK(GroupSpec({4}).order() == GroupSpec({2, 2}).order());
  CHECK(exponent(GroupSpec({4})) == 4);
  CHECK(exponent(GroupSpec({2, 2})) == 2);
}
