#include <doctest.h>

#include <map>
#include <set>

#include "charcol/errors.hpp"
#include "charcol/hgroup.hpp"

using namespace charcol;

namespace {

// Conjugacy classes of H wr S_k as orbits, computed with no cycle-type logic.
std::vector<std::set<WreathElement>> orbits(const FiniteGroup& h, int k) {
  auto all = enumerate_wreath(h, k, 100000);
  std::set<WreathElement> seen;
  std::vector<std::set<WreathElement>> out;
  for (auto& x : all) {
    if (seen.count(x)) continue;
    std::set<WreathElement> orbit;
    for (auto& g : all) orbit.insert(multiply(h, multiply(h, g, x), inverse(h, g)));
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

GroupTable s3_table() {
  GroupTable t;
  t.name = "S3";
  t.order = 6;
  t.classes = {{"e", 1}, {"(12)", 3}, {"(123)", 2}};
  t.irreps = {{"t", 1, {1, 1, 1}}, {"s", 1, {1, -1, 1}}, {"v", 2, {2, 0, -1}}};
  return t;
}

}  // namespace

TEST_CASE("built-in groups") {
  auto z2 = builtin_group("Z2");
  CHECK(z2.table.order == 2);
  CHECK(z2.num_elements() == 2);
  CHECK(z2.inverse(1) == 1);
  CHECK_NOTHROW(validate_table(z2.table));
  CHECK_NOTHROW(validate_columns(z2.table));
  CHECK(builtin_group("trivial").table.order == 1);
  CHECK_THROWS(builtin_group("no-such-group.json"));
}

TEST_CASE("table validation names the broken relation") {
  auto t = s3_table();
  CHECK_NOTHROW(validate_table(t));
  CHECK_NOTHROW(validate_columns(t));
  auto bad = t;
  bad.classes[1].size = 2;
  CHECK_THROWS_AS(validate_table(bad), ValidationError);
  bad = t;
  bad.irreps[2].values[2] = 1;
  CHECK_THROWS_AS(validate_table(bad), ValidationError);
  bad = t;
  bad.irreps[2].dim = 3;
  CHECK_THROWS_AS(validate_table(bad), ValidationError);
}

TEST_CASE("table JSON round trip") {
  auto t = s3_table();
  auto back = table_from_json(table_to_json(t));
  CHECK(back.name == "S3");
  CHECK(back.order == 6);
  CHECK(back.class_labels() == t.class_labels());
  CHECK(back.irreps[2].values == t.irreps[2].values);
  auto j = table_to_json(t);
  j.erase("irreps");
  CHECK_THROWS_AS(table_from_json(j), UsageError);
}

TEST_CASE("Z2 wr S2 orbits") {
  auto z2 = builtin_group("Z2");
  auto orbs = orbits(z2, 2);
  CHECK(orbs.size() == 5);
  std::multiset<std::size_t> sizes;
  for (auto& o : orbs) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2, 2, 2});
  // Every orbit carries a single coloured cycle type, and the counts agree.
  for (auto& o : orbs) {
    auto c = colored_cycle_type(z2, *o.begin());
    for (auto& x : o) CHECK(colored_cycle_type(z2, x) == c);
    CHECK(wreath_class_size(z2, c) == Integer(o.size()));
  }
}

TEST_CASE("wreath class sizes by orbit and by counting agree") {
  auto z2 = builtin_group("Z2");
  for (int k = 1; k <= 4; ++k) {
    auto counted = wreath_classes(z2, k, 100000);
    auto orbs = orbits(z2, k);
    CHECK(counted.size() == orbs.size());
    Integer total = 0;
    for (auto& [c, size] : counted) {
      CHECK(wreath_class_size(z2, c) == size);
      total += size;
    }
    CHECK(total == (Integer(1) << k) * factorial(k));
  }
}

TEST_CASE("group laws on Z2 wr S3") {
  auto z2 = builtin_group("Z2");
  auto all = enumerate_wreath(z2, 3, 1000);
  CHECK(all.size() == 48);
  auto e = identity_element(3);
  for (auto& x : all) {
    CHECK(multiply(z2, x, e) == x);
    CHECK(multiply(z2, x, inverse(z2, x)) == e);
  }
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 5)
      for (std::size_t l = 0; l < all.size(); l += 11)
        CHECK(multiply(z2, multiply(z2, all[i], all[j]), all[l]) == multiply(z2, all[i], multiply(z2, all[j], all[l])));
}

TEST_CASE("symmetric tables") {
  for (int k = 0; k <= 7; ++k) {
    const auto& t = symmetric_character_table(k);
    CHECK(t.irreps.size() == t.classes.size());
    CHECK(t.order == factorial(k));
    auto g = t.to_group_table(builtin_group("trivial"), "S" + std::to_string(k));
    CHECK_NOTHROW(validate_table(g));
    CHECK_NOTHROW(validate_columns(g));
  }
  const auto& s3 = symmetric_character_table(3);
  int v = s3.irrep_index(WreathIrrepLabel::single(0, Partition({2, 1})));
  int c3 = s3.class_index(ColoredCycleType{{Partition({3})}});
  CHECK(s3.values[v][c3] == -1);
  CHECK(s3.class_index(ColoredCycleType{{Partition({4})}}) == -1);
}

TEST_CASE("brute-force wreath tables are valid character tables") {
  auto z2 = builtin_group("Z2");
  for (int k = 1; k <= 3; ++k) {
    auto t = wreath_char_table(z2, k);
    auto g = t.to_group_table(z2, "Z2 wr S" + std::to_string(k));
    CHECK_NOTHROW(validate_table(g));
    CHECK_NOTHROW(validate_columns(g));
  }
}

TEST_CASE("size bound") {
  auto z2 = builtin_group("Z2");
  CHECK_THROWS_AS(enumerate_wreath(z2, 5, 100), ResourceBoundError);
  set_max_order_override(Integer(10));
  CHECK(default_max_order() == 10);
  CHECK_THROWS_AS(wreath_char_table(z2, 3), ResourceBoundError);
  set_max_order_override(std::nullopt);
  CHECK_NOTHROW(wreath_char_table(z2, 3));
}
