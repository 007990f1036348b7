#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "zsum/search.hpp"

using namespace zsum;

TEST_CASE("max_l_free worked examples") {
  SearchOptions opts;

  // C_2+C_2 with L = N+: D = 3, so the longest zero-sum-free length is 2
  auto r1 = max_l_free(make_group({2, 2}), LengthSpec::all(), opts);
  CHECK(r1.max_length == 2);
  CHECK(r1.exhaustive);
  CHECK(r1.certificate.expanded() == std::vector<int>{1, 2});  // (0,1), (1,0)

  // C_3 with the zeta_2 length set: (0,1,1) avoids it at length 3
  auto r2 = max_l_free(make_group({3}), LengthSpec::residue_up_from(2), opts);
  CHECK(r2.max_length == 3);
  CHECK(r2.certificate.expanded() == std::vector<int>{0, 1, 1});

  // C_5 avoiding zero-sums of length exactly 5: maximum is 8 (s(C_5) = 9)
  SearchOptions capped = opts;
  capped.length_cap = 12;
  auto r3 = max_l_free(make_group({5}), LengthSpec::exact(5), capped);
  CHECK(r3.max_length == 8);
  CHECK(r3.exhaustive);
}

TEST_CASE("s_l paper-backed values") {
  CHECK(s_l(make_group({2, 2}), LengthSpec::range(1, 2)).value == 4);   // eta(C_2^2)
  CHECK(s_l(make_group({3, 3}), LengthSpec::exact(3)).value == 9);      // s(C_3^2)
  CHECK(s_l(make_group({3}), LengthSpec::multiples()).value == 5);      // D + n - 1
}

TEST_CASE("named invariants dispatch to the right length sets") {
  CHECK(named_invariant(make_group({2, 4}), Invariant::Eta).value == 6);
  CHECK(named_invariant(make_group({3}), Invariant::Zeta, 2).value == 4);
  CHECK(named_invariant(make_group({2}), Invariant::Davenport).value == 2);
  CHECK(named_invariant(make_group({5}), Invariant::EgzS).value == 9);
  CHECK(named_invariant(make_group({4}), Invariant::EtaI, 3).value == 6);

  CHECK(invariant_spec(Invariant::Davenport, 4) == LengthSpec::all());
  CHECK(invariant_spec(Invariant::Eta, 4) == LengthSpec::range(1, 4));
  CHECK(invariant_spec(Invariant::EgzS, 4) == LengthSpec::exact(4));
  CHECK(invariant_spec(Invariant::Zeta, 4, 2) == LengthSpec::residue_up_from(2));
  CHECK(invariant_spec(Invariant::EtaI, 4, 2) == LengthSpec::range(2, 4));
  CHECK_THROWS_AS(invariant_spec(Invariant::Zeta, 4, 5), Error);
  CHECK_THROWS_AS(invariant_spec(Invariant::EtaI, 4, std::nullopt), Error);
}

TEST_CASE("trivial group invariants") {
  auto t = make_group(std::initializer_list<int>{});
  CHECK(named_invariant(t, Invariant::Davenport).value == 1);
  CHECK(named_invariant(t, Invariant::Eta).value == 1);
  CHECK(named_invariant(t, Invariant::EgzS).value == 1);
  CHECK(named_invariant(t, Invariant::Davenport).certificate.empty());
}

TEST_CASE("s_l agrees with direct quantification on tiny groups") {
  const std::vector<LengthSpec> specs = {LengthSpec::all(), LengthSpec::multiples()};
  for (auto factors : {std::vector<int>{2}, {3}, {4}, {2, 2}}) {
    AbelianGroup g = make_group(factors);
    for (const auto& spec : specs) {
      CAPTURE(g.to_string());
      CAPTURE(spec.to_string());
      auto direct = testing::naive_s_l(g, spec, 12);
      REQUIRE(direct.has_value());
      CHECK(s_l(g, spec).value == *direct);
    }
    auto eta_direct = testing::naive_s_l(g, LengthSpec::range(1, g.exponent()), 12);
    REQUIRE(eta_direct.has_value());
    CHECK(s_l(g, LengthSpec::range(1, g.exponent())).value == *eta_direct);
    auto egz_direct = testing::naive_s_l(g, LengthSpec::exact(g.exponent()), 12);
    REQUIRE(egz_direct.has_value());
    CHECK(s_l(g, LengthSpec::exact(g.exponent())).value == *egz_direct);
  }
  // zeta_2 on C_3 and C_4 against direct quantification
  CHECK(s_l(make_group({3}), LengthSpec::residue_up_from(2)).value ==
        testing::naive_s_l(make_group({3}), LengthSpec::residue_up_from(2), 12).value());
  CHECK(s_l(make_group({4}), LengthSpec::residue_up_from(2)).value ==
        testing::naive_s_l(make_group({4}), LengthSpec::residue_up_from(2), 12).value());
}

TEST_CASE("certificates re-validate") {
  for (auto factors : {std::vector<int>{3, 3}, {2, 4}, {9}}) {
    AbelianGroup g = make_group(factors);
    for (auto inv : {Invariant::Davenport, Invariant::Eta, Invariant::EgzS}) {
      auto res = named_invariant(g, inv);
      CHECK(res.certificate.length() == res.value - 1);
      CHECK_FALSE(has_zero_sum_in(res.certificate, res.spec,
                                  std::max(kDefaultDpLengthCap, res.certificate.length())));
    }
  }
}

TEST_CASE("zeta chain and endpoints on C_4 and C_2+C_4") {
  for (auto factors : {std::vector<int>{4}, {2, 4}}) {
    AbelianGroup g = make_group(factors);
    const int n = g.exponent();
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
      auto zi = named_invariant(g, Invariant::Zeta, i);
      CHECK(zi.value > prev);
      prev = zi.value;
      if (i == 1) CHECK(zi.value == named_invariant(g, Invariant::Davenport).value);
      if (i == n) CHECK(zi.value == s_l(g, LengthSpec::multiples()).value);
    }
  }
}

TEST_CASE("eta chain endpoints on C_2+C_2") {
  auto g = make_group({2, 2});
  auto eta1 = named_invariant(g, Invariant::EtaI, 1);
  auto eta2 = named_invariant(g, Invariant::EtaI, 2);
  CHECK(eta1.value == 4);
  CHECK(eta2.value == 5);
  CHECK(eta1.value == named_invariant(g, Invariant::Eta).value);
  CHECK(eta2.value == named_invariant(g, Invariant::EgzS).value);
}

TEST_CASE("thread counts do not change value or certificate") {
  for (auto factors : {std::vector<int>{3, 3}, {2, 2, 4}}) {
    AbelianGroup g = make_group(factors);
    SearchOptions one, two, eight;
    two.threads = 2;
    eight.threads = 8;
    auto a = s_l(g, LengthSpec::range(1, g.exponent()), one);
    auto b = s_l(g, LengthSpec::range(1, g.exponent()), two);
    auto c = s_l(g, LengthSpec::range(1, g.exponent()), eight);
    CHECK(a.value == b.value);
    CHECK(b.value == c.value);
    CHECK(a.certificate == b.certificate);
    CHECK(b.certificate == c.certificate);
    CHECK(a.exhaustive == c.exhaustive);
  }
}

TEST_CASE("symmetry pruning never changes the result") {
  for (auto factors : {std::vector<int>{2, 4}, {3, 3}, {8}}) {
    AbelianGroup g = make_group(factors);
    SearchOptions with, without;
    without.symmetry = false;
    for (auto spec : {LengthSpec::all(), LengthSpec::range(1, g.exponent())}) {
      auto a = s_l(g, spec, with);
      auto b = s_l(g, spec, without);
      CHECK(a.value == b.value);
      CHECK(a.certificate == b.certificate);
      CHECK(a.stats.symmetry_pruned > 0);
      CHECK(b.stats.symmetry_pruned == 0);
    }
  }
}

TEST_CASE("length cap reached reports a non-exhaustive lower bound") {
  // s_{exact:2}(C_3) is infinite: all-ones sequences never contain a
  // zero-sum subsequence of length 2, so the search must hit the cap
  SearchOptions opts;
  opts.length_cap = 9;
  auto res = s_l(make_group({3}), LengthSpec::exact(2), opts);
  CHECK_FALSE(res.exhaustive);
  CHECK(res.value == 10);  // lower bound: cap-length avoider exists
}

TEST_CASE("node budget aborts with a non-exhaustive flag") {
  SearchOptions opts;
  opts.node_budget = 50;
  auto res = s_l(make_group({3, 9}), LengthSpec::all(), opts);
  CHECK_FALSE(res.exhaustive);
  CHECK(res.value >= 1);
}

TEST_CASE("group order cap enforced") {
  SearchOptions opts;
  opts.order_cap = 8;
  CHECK_THROWS_AS(s_l(make_group({3, 9}), LengthSpec::all(), opts), Error);
}
