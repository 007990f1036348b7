#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/closed_forms.hpp"
#include "zsum/search.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

enum class CheckStatus { Pass, Fail, Inapplicable, Capped };
std::string_view to_string(CheckStatus status);
std::optional<CheckStatus> check_status_from_string(std::string_view s);

// One verification outcome. A Fail entry always carries a counterexample that
// re-validates under the sequence engine.
struct ReportEntry {
  std::string check;  // instance id, e.g. "zeta_value[i=3]"
  std::string claim;  // the statement being exercised
  CheckStatus status = CheckStatus::Inapplicable;
  std::string details;
  std::optional<Sequence> counterexample;
};

struct Report {
  AbelianGroup group;
  std::vector<ReportEntry> entries;
  bool any_fail() const;
  bool any_capped() const;
};

struct EnumerationOptions {
  bool zero_sum_only = false;
  bool up_to_aut = false;
  std::uint64_t budget = kDefaultEnumerationBudget;  // multisets visited
};

enum class EnumerationOutcome { Complete, Capped, Stopped };

// Streams every multiset of the given length over G in lexicographic order
// (optionally only zero-sum ones; optionally one representative per
// automorphism orbit, the lexicographically least in canonical element
// order). The callback receives the sequence and its zero-sum length set and
// returns false to stop. Budget exhaustion yields Capped.
EnumerationOutcome for_each_sequence(
    const AbelianGroup& g, int length, const EnumerationOptions& opts,
    const std::function<bool(const Sequence&, const LengthSet&)>& fn);

struct EnumerationResult {
  std::vector<Sequence> sequences;
  EnumerationOutcome outcome = EnumerationOutcome::Complete;
};
EnumerationResult enumerate_sequences(const AbelianGroup& g, int length,
                                      const EnumerationOptions& opts = {});

struct VerifyOptions {
  VerifyOptions() { search.node_budget = 20'000'000; }
  SearchOptions search;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  bool up_to_aut = true;
  int short_zss_i_max = 0;  // 0 => the full admissible range [1, 2 exp - D]
  int hunt_scan_extra = 0;
  std::string suite = "all";  // all | oracles | bounds | chain | zss | hunt
};

// For each i in [1, i_max]: every zero-sum sequence of length D(G) + i must
// contain a zero-sum subsequence of length in [i, exp(G)]. Requires a p-group
// with D <= 2 exp - 1; enumerates the stated lengths only (sampled, with the
// entry details saying so).
std::vector<ReportEntry> check_short_zss_containment(const AbelianGroup& g, int i_max,
                                                     const VerifyOptions& opts = {});

// Computes eta_i for i in [1, exp] by search: asserts the strict chain and
// the half-range equality eta_i = eta + i - 1 (2 <= i <= floor(n/2) + 1), and
// records (without asserting) whether the full chain holds up to i = n.
std::vector<ReportEntry> check_eta_chain(const AbelianGroup& g, const VerifyOptions& opts = {});

// Scans all sequences of length D + (n-2) + ell (plus scan_extra longer
// lengths) for a counterexample to the final conjecture: every such sequence
// has a zero-sum subsequence of length exactly n, or one of length 2n that
// itself contains a zero-sum subsequence of length in [(2n-1) - D + ell, n-1].
std::vector<ReportEntry> hunt_conjecture(const AbelianGroup& g, int ell, int scan_extra = 0,
                                         const VerifyOptions& opts = {});

// Runs every applicable check against G and aggregates the entries in a fixed
// order; individual failures never abort the report.
Report verify_group(const AbelianGroup& g, const VerifyOptions& opts = {});

// All abelian p-groups of order <= 32 plus C_6 and C_2 + C_12.
std::vector<AbelianGroup> default_catalog();

}  // namespace zsum
