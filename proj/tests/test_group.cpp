#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "zsum/automorphisms.hpp"
#include "zsum/group.hpp"

using namespace zsum;

TEST_CASE("make_group normalizes to invariant-factor form") {
  CHECK(make_group({3, 3}).invariant_factors() == std::vector<int>{3, 3});
  CHECK(make_group({2, 3}).invariant_factors() == std::vector<int>{6});
  CHECK(make_group({4, 2}).invariant_factors() == std::vector<int>{2, 4});
  CHECK(make_group({6, 10}).invariant_factors() == std::vector<int>{2, 30});
  CHECK(make_group({12, 2, 3}).invariant_factors() == std::vector<int>{6, 12});

  auto g = make_group({2, 3});
  CHECK(g.exponent() == 6);
  CHECK(g.order() == 6);
  CHECK(g.rank() == 1);
  CHECK(g == make_group({6}));

  auto g2 = make_group({4, 2});
  CHECK(g2.exponent() == 4);
  CHECK(g2.order() == 8);
}

TEST_CASE("trivial group") {
  AbelianGroup t = make_group(std::initializer_list<int>{});
  CHECK(t.is_trivial());
  CHECK(t.order() == 1);
  CHECK(t.exponent() == 1);
  CHECK(t.rank() == 0);
  CHECK(t.to_string() == "1");
  auto elems = enumerate_elements(t);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].coords.empty());
}

TEST_CASE("invalid factors rejected") {
  CHECK_THROWS_AS(make_group({0, 4}), Error);
  CHECK_THROWS_AS(make_group({1}), Error);
  CHECK_THROWS_AS(make_group({-2}), Error);
  CHECK_THROWS_AS(parse_group("0,4"), Error);
  CHECK_THROWS_AS(parse_group("2,x"), Error);
}

TEST_CASE("group string round trip") {
  CHECK(parse_group("2,4").to_string() == "2,4");
  CHECK(parse_group("2,3").to_string() == "6");
  CHECK(parse_group("6").to_string() == "6");
  CHECK(parse_group("1").is_trivial());
  CHECK(parse_group("").is_trivial());
}

TEST_CASE("element arithmetic in C_2 + C_4") {
  auto g = make_group({2, 4});
  GroupElement a{{1, 3}}, b{{1, 2}};
  CHECK(g.add(a, b) == GroupElement{{0, 1}});
  CHECK(g.negate(a) == GroupElement{{1, 1}});
  CHECK(g.is_zero(GroupElement{{0, 0}}));
  CHECK_FALSE(g.is_zero(a));
  CHECK_THROWS_AS(g.add(a, GroupElement{{1}}), Error);

  for (long long i = 0; i < g.order(); ++i) {
    CHECK(g.add_index(i, g.negate_index(i)) == 0);
    CHECK(g.index_of(g.element_at(i)) == i);
  }
}

TEST_CASE("enumerate_elements order and identity") {
  auto c3 = make_group({3});
  auto elems = enumerate_elements(c3);
  REQUIRE(elems.size() == 3);
  CHECK(elems[0] == GroupElement{{0}});
  CHECK(elems[1] == GroupElement{{1}});
  CHECK(elems[2] == GroupElement{{2}});

  auto c22 = make_group({2, 2});
  auto e22 = enumerate_elements(c22);
  REQUIRE(e22.size() == 4);
  CHECK(e22[0] == GroupElement{{0, 0}});
  CHECK(e22[1] == GroupElement{{0, 1}});
  CHECK(e22[2] == GroupElement{{1, 0}});
  CHECK(e22[3] == GroupElement{{1, 1}});

  // no duplicates on a larger group
  auto g = make_group({2, 2, 4});
  auto all = enumerate_elements(g);
  std::set<std::vector<int>> seen;
  for (const auto& e : all) seen.insert(e.coords);
  CHECK(seen.size() == static_cast<size_t>(g.order()));

  CHECK_THROWS_AS(enumerate_elements(make_group({2, 2}), 3), Error);
}

TEST_CASE("p-group detection") {
  CHECK(make_group({2, 4}).prime() == 2);
  CHECK(make_group({3, 9}).prime() == 3);
  CHECK_FALSE(make_group({6}).prime().has_value());
  CHECK_FALSE(make_group(std::initializer_list<int>{}).prime().has_value());
  CHECK(make_group({5, 5}).is_p_group(5));
  CHECK_FALSE(make_group({5, 5}).is_p_group(2));
}

namespace {

// brute-force |Aut| for tiny groups: try all generator-image assignments
long long brute_force_aut_count(const AbelianGroup& g) {
  const int r = g.rank();
  const long long n = g.order();
  std::vector<long long> images(static_cast<size_t>(r), 0);
  long long count = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (long long x = 0; x < n; ++x) {
        auto coords = g.element_at(x).coords;
        long long acc = 0;
        for (int i = 0; i < r; ++i) acc = g.add_index(acc, g.scale_index(coords[i], images[i]));
        if (seen[static_cast<size_t>(acc)]++) return;
      }
      ++count;
      return;
    }
    for (long long cand = 0; cand < n; ++cand) {
      if (g.scale_index(g.invariant_factors()[pos], cand) != 0) continue;
      images[static_cast<size_t>(pos)] = cand;
      self(self, pos + 1);
    }
  };
  if (r == 0) return 1;
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("automorphism generators, closure size, and order formula agree") {
  for (auto factors : {std::vector<int>{3}, {4}, {2, 2}, {5}, {8}, {2, 4}, {2, 2, 2}, {9}, {3, 3},
                       {2, 2, 4}, {4, 4}, {2, 8}, {6}, {12}, {2, 6}}) {
    AbelianGroup g = make_group(factors);
    CAPTURE(g.to_string());
    auto closure = automorphism_closure(g);
    REQUIRE(closure.complete);
    long long formula = automorphism_group_order(g);
    CHECK(static_cast<long long>(closure.perms.size()) == formula);
    if (g.order() <= 16) CHECK(brute_force_aut_count(g) == formula);
  }
}

TEST_CASE("expected automorphism group sizes") {
  CHECK(automorphism_closure(make_group({3})).perms.size() == 2);
  CHECK(automorphism_closure(make_group({2, 2})).perms.size() == 6);
  CHECK(automorphism_closure(make_group({4})).perms.size() == 2);
  CHECK(automorphism_closure(make_group({2, 4})).perms.size() == 8);
}

TEST_CASE("every automorphism respects addition and fixes the identity") {
  for (auto factors : {std::vector<int>{2, 4}, {3, 3}, {2, 2, 2}, {12}}) {
    AbelianGroup g = make_group(factors);
    auto closure = automorphism_closure(g);
    REQUIRE_FALSE(closure.perms.empty());
    for (const auto& perm : closure.perms) {
      CHECK(perm[0] == 0);
      for (long long a = 0; a < g.order(); ++a)
        for (long long b = 0; b < g.order(); ++b)
          CHECK(perm[static_cast<size_t>(g.add_index(a, b))] ==
                g.add_index(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]));
    }
  }
}

TEST_CASE("automorphism cap disables symmetry") {
  CHECK_FALSE(automorphism_generators(make_group({128}), 64).has_value());
  CHECK(automorphism_closure(make_group({128}), 64).perms.empty());
}

TEST_CASE("canonical tuple test under Aut(C_3)") {
  auto g = make_group({3});
  auto closure = automorphism_closure(g);
  // orbit {1,2}: 1 is canonical, 2 is not
  std::vector<int> one{1}, two{2};
  CHECK(is_canonical_tuple(one, closure.perms));
  CHECK_FALSE(is_canonical_tuple(two, closure.perms));
}
