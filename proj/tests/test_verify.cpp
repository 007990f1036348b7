#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "naive.hpp"
#include "zsum/automorphisms.hpp"
#include "zsum/verify.hpp"

using namespace zsum;

namespace {

std::set<std::vector<int>> expanded_set(const std::vector<Sequence>& seqs) {
  std::set<std::vector<int>> out;
  for (const auto& s : seqs) out.insert(s.expanded());
  return out;
}

const ReportEntry* find_entry(const std::vector<ReportEntry>& entries, const std::string& check) {
  for (const auto& e : entries)
    if (e.check == check) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("enumerate_sequences worked examples") {
  auto c2 = make_group({2});
  EnumerationOptions zs;
  zs.zero_sum_only = true;
  auto r = enumerate_sequences(c2, 2, zs);
  CHECK(r.outcome == EnumerationOutcome::Complete);
  CHECK(expanded_set(r.sequences) == std::set<std::vector<int>>{{0, 0}, {1, 1}});

  auto c3 = make_group({3});
  EnumerationOptions aut;
  aut.up_to_aut = true;
  auto reps = enumerate_sequences(c3, 2, aut);
  CHECK(expanded_set(reps.sequences) ==
        std::set<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});

  auto c22 = make_group({2, 2});
  EnumerationOptions zs1;
  zs1.zero_sum_only = true;
  auto r1 = enumerate_sequences(c22, 1, zs1);
  CHECK(expanded_set(r1.sequences) == std::set<std::vector<int>>{{0}});
}

TEST_CASE("enumeration budget give a capped outcome") {
  EnumerationOptions opts;
  opts.budget = 10;
  auto r = enumerate_sequences(make_group({2, 4}), 5, opts);
  CHECK(r.outcome == EnumerationOutcome::Capped);
  CHECK(r.sequences.size() == 10);
}

TEST_CASE("orbit representatives cover every multiset") {
  for (auto factors : {std::vector<int>{3}, {4}, {2, 2}, {2, 4}}) {
    AbelianGroup g = make_group(factors);
    auto closure = automorphism_closure(g);
    REQUIRE(closure.complete);
    for (int length : {1, 2, 3}) {
      EnumerationOptions aut;
      aut.up_to_aut = true;
      auto reps = enumerate_sequences(g, length, aut);
      std::set<std::vector<int>> covered;
      for (const auto& rep : reps.sequences) {
        auto tuple = rep.expanded();
        for (const auto& perm : closure.perms) covered.insert(apply_to_tuple(perm, tuple));
      }
      EnumerationOptions all;
      auto full = enumerate_sequences(g, length, all);
      CHECK(covered == expanded_set(full.sequences));
      // each representative is the least member of its own orbit
      for (const auto& rep : reps.sequences) CHECK(is_canonical_tuple(rep.expanded(), closure.perms));
    }
  }
}

TEST_CASE("up_to_aut filtering commutes with re-running without it") {
  auto g = make_group({2, 4});
  VerifyOptions with, without;
  without.up_to_aut = false;
  auto a = check_short_zss_containment(g, 3, with);
  auto b = check_short_zss_containment(g, 3, without);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].status == b[i].status);
}

TEST_CASE("check_short_zss_containment worked examples") {
  auto entries24 = check_short_zss_containment(make_group({2, 4}), 3);
  REQUIRE(entries24.size() == 3);
  for (const auto& e : entries24) CHECK(e.status == CheckStatus::Pass);

  auto entries3 = check_short_zss_containment(make_group({3}), 3);
  REQUIRE(entries3.size() == 3);
  for (const auto& e : entries3) CHECK(e.status == CheckStatus::Pass);

  // D(C_3^3) = 7 > 2*3 - 1: hypotheses fail
  auto inap = check_short_zss_containment(make_group({3, 3, 3}), 1);
  REQUIRE(inap.size() == 1);
  CHECK(inap[0].status == CheckStatus::Inapplicable);

  // non-p-group
  auto np = check_short_zss_containment(make_group({6}), 1);
  REQUIRE(np.size() == 1);
  CHECK(np[0].status == CheckStatus::Inapplicable);

  CHECK_THROWS_AS(check_short_zss_containment(make_group({2, 4}), 4), Error);  // beyond 2n - D
}

TEST_CASE("check_short_zss budget caps the entry") {
  VerifyOptions opts;
  opts.enumeration_budget = 5;
  auto entries = check_short_zss_containment(make_group({2, 4}), 1, opts);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].status == CheckStatus::Capped);
}

TEST_CASE("check_eta_chain on the worked groups") {
  {
    auto entries = check_eta_chain(make_group({3, 3}));
    auto* strict = find_entry(entries, "eta_chain_strict");
    REQUIRE(strict);
    CHECK(strict->status == CheckStatus::Pass);
    CHECK(strict->details == "eta_1=7, eta_2=8, eta_3=9");
    auto* full = find_entry(entries, "eta_full_chain_observation");
    REQUIRE(full);
    CHECK(full->details.find("full chain holds") != std::string::npos);
  }
  {
    auto entries = check_eta_chain(make_group({2, 2}));
    auto* strict = find_entry(entries, "eta_chain_strict");
    REQUIRE(strict);
    CHECK(strict->status == CheckStatus::Pass);
    CHECK(strict->details == "eta_1=4, eta_2=5");
    auto* half = find_entry(entries, "eta_half_range[i=2]");
    REQUIRE(half);
    CHECK(half->status == CheckStatus::Pass);
  }
  {
    auto entries = check_eta_chain(make_group({4}));
    auto* strict = find_entry(entries, "eta_chain_strict");
    REQUIRE(strict);
    CHECK(strict->status == CheckStatus::Pass);
    CHECK(strict->details == "eta_1=4, eta_2=5, eta_3=6, eta_4=7");
    auto* eq = find_entry(entries, "eta_n_equals_s");
    REQUIRE(eq);
    CHECK(eq->status == CheckStatus::Pass);
  }
}

TEST_CASE("hunt_conjecture worked examples") {
  {
    auto entries = hunt_conjecture(make_group({2, 4}), 2);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].status == CheckStatus::Pass);
    CHECK(entries[0].check == "conjecture_hunt[ell=2,len=9]");
  }
  {
    auto entries = hunt_conjecture(make_group({2, 4}), 1);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].status == CheckStatus::Pass);
    CHECK(entries[0].check == "conjecture_hunt[ell=1,len=8]");
  }
  {
    auto entries = hunt_conjecture(make_group({3}), 1);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].status == CheckStatus::Pass);
    CHECK(entries[0].check == "conjecture_hunt[ell=1,len=5]");
  }
  CHECK_THROWS_AS(hunt_conjecture(make_group({3}), 2), Error);  // ell beyond D + 1 - n
  auto inap = hunt_conjecture(make_group({6}), 1);
  REQUIRE(inap.size() == 1);
  CHECK(inap[0].status == CheckStatus::Inapplicable);
}

TEST_CASE("hunt scan_extra visits increasing lengths") {
  auto entries = hunt_conjecture(make_group({3}), 1, 1);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].check == "conjecture_hunt[ell=1,len=5]");
  CHECK(entries[1].check == "conjecture_hunt[ell=1,len=6]");
  CHECK(entries[0].status == CheckStatus::Pass);
  CHECK(entries[1].status == CheckStatus::Pass);
}

TEST_CASE("verify_group on C_2+C_4: everything applicable passes") {
  Report rep = verify_group(make_group({2, 4}));
  CHECK_FALSE(rep.any_fail());
  CHECK_FALSE(rep.any_capped());

  auto* dd = find_entry(rep.entries, "davenport_equals_dstar");
  REQUIRE(dd);
  CHECK(dd->status == CheckStatus::Pass);
  auto* eta = find_entry(rep.entries, "pgroup_eta_main");
  REQUIRE(eta);
  CHECK(eta->status == CheckStatus::Pass);
  CHECK(eta->details.find("search 6") != std::string::npos);
  auto* z3 = find_entry(rep.entries, "zeta_value[i=3]");
  REQUIRE(z3);
  CHECK(z3->status == CheckStatus::Pass);
  CHECK(z3->details.find("7") != std::string::npos);
  auto* p2 = find_entry(rep.entries, "p2_chain_observation");
  REQUIRE(p2);
  CHECK(p2->details.find("chain holds") != std::string::npos);
}

TEST_CASE("verify_group on C_3+C_3") {
  Report rep = verify_group(make_group({3, 3}));
  CHECK_FALSE(rep.any_fail());
  auto* dd = find_entry(rep.entries, "davenport_equals_dstar");
  REQUIRE(dd);
  CHECK(dd->status == CheckStatus::Pass);
  CHECK(dd->details.find("search 5") != std::string::npos);
  auto* z2 = find_entry(rep.entries, "zeta_value[i=2]");
  REQUIRE(z2);
  CHECK(z2->status == CheckStatus::Pass);
  CHECK(z2->details.find("6") != std::string::npos);
  auto* r2e = find_entry(rep.entries, "rank2_eta");
  REQUIRE(r2e);
  CHECK(r2e->status == CheckStatus::Pass);
}

TEST_CASE("verify_group on C_6: p-group entries inapplicable, rank-2 passes") {
  Report rep = verify_group(make_group({6}));
  CHECK_FALSE(rep.any_fail());
  auto* dd = find_entry(rep.entries, "davenport_equals_dstar");
  REQUIRE(dd);
  CHECK(dd->status == CheckStatus::Inapplicable);
  auto* eta = find_entry(rep.entries, "pgroup_eta_main");
  REQUIRE(eta);
  CHECK(eta->status == CheckStatus::Inapplicable);
  auto* r2e = find_entry(rep.entries, "rank2_eta");
  REQUIRE(r2e);
  CHECK(r2e->status == CheckStatus::Pass);
  CHECK(r2e->details.find("search 6") != std::string::npos);
  auto* r2s = find_entry(rep.entries, "rank2_s");
  REQUIRE(r2s);
  CHECK(r2s->status == CheckStatus::Pass);
  CHECK(r2s->details.find("search 11") != std::string::npos);
  // inductive bound applies via the coprime Sylow split
  auto* ind = find_entry(rep.entries, "bound_eta_upper_inductive");
  REQUIRE(ind);
  CHECK(ind->status == CheckStatus::Pass);
}

TEST_CASE("verify_group suite filtering") {
  VerifyOptions chain_only;
  chain_only.suite = "chain";
  Report rep = verify_group(make_group({2, 2}), chain_only);
  CHECK(find_entry(rep.entries, "eta_chain_strict"));
  CHECK_FALSE(find_entry(rep.entries, "davenport_equals_dstar"));
}

TEST_CASE("fail entries carry re-validating counterexamples") {
  // enumeration checks only fail when a counterexample exists; simulate by
  // checking the invariant on all entries of a few reports
  for (auto factors : {std::vector<int>{2, 4}, {3, 3}, {6}}) {
    Report rep = verify_group(make_group(factors));
    for (const auto& e : rep.entries) {
      if (e.status != CheckStatus::Fail) continue;
      REQUIRE(e.counterexample.has_value());
      CHECK(e.counterexample->group() == rep.group);
    }
  }
}

TEST_CASE("default catalog") {
  auto catalog = default_catalog();
  // all abelian p-groups of order <= 32 (35 of them) plus C_6 and C_2+C_12
  CHECK(catalog.size() == 37);
  auto has = [&](std::vector<int> factors) {
    AbelianGroup g = make_group(factors);
    return std::any_of(catalog.begin(), catalog.end(), [&](const AbelianGroup& x) { return x == g; });
  };
  CHECK(has({2}));
  CHECK(has({32}));
  CHECK(has({2, 2, 2, 2, 2}));
  CHECK(has({4, 8}));
  CHECK(has({3, 9}));
  CHECK(has({31}));
  CHECK(has({6}));
  CHECK(has({2, 12}));
  CHECK_FALSE(has({64}));
  for (size_t i = 1; i < catalog.size(); ++i) CHECK(catalog[i - 1].order() <= catalog[i].order());
}
