#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "zsum/length_spec.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

inline constexpr long long kDefaultSearchOrderCap = 4096;

struct SearchOptions {
  int length_cap = 0;      // 0 => 4*exp(G) + D*(G)
  int threads = 1;
  bool symmetry = true;    // automorphism orbit pruning at shallow depths
  int symmetry_depth = 2;
  int split_depth = 2;     // subtree granularity handed to the worker pool
  double time_budget_seconds = 0.0;  // 0 => unlimited
  std::uint64_t node_budget = 0;     // 0 => unlimited
  long long order_cap = kDefaultSearchOrderCap;
};

struct SearchStats {
  std::uint64_t nodes = 0;            // avoider nodes visited
  std::uint64_t symmetry_pruned = 0;  // shallow branches discarded as non-canonical
  double wall_seconds = 0.0;
};

// Maximum length of an L-zero-sum-free sequence, with a witness.
// `exhaustive` is false when the search was stopped by the length cap or a
// budget, in which case max_length is only a lower bound.
struct MaxFreeResult {
  int max_length = 0;
  Sequence certificate;
  bool exhaustive = true;
  SearchStats stats;
};

// Depth-first search over multisets grown in non-decreasing element order.
// Every node is an L-zero-sum-free multiset (children that acquire an
// L-zero-sum are pruned; the avoider property is hereditary). The certificate
// is the lexicographically least maximum-length avoider and is independent of
// the thread count.
MaxFreeResult max_l_free(const AbelianGroup& g, const LengthSpec& l, const SearchOptions& opts = {});

struct InvariantResult {
  AbelianGroup group;
  LengthSpec spec = LengthSpec::all();
  int value = 0;
  bool exhaustive = true;
  Sequence certificate;  // length value-1, no zero-sum subsequence with length in L
  SearchStats stats;

  InvariantResult() : group(), certificate(AbelianGroup{}) {}
};

// s_L(G) = 1 + max_l_free, by heredity of the avoider property. When the
// search is non-exhaustive the value is a lower bound.
InvariantResult s_l(const AbelianGroup& g, const LengthSpec& l, const SearchOptions& opts = {});

enum class Invariant { Davenport, Eta, EgzS, Zeta, EtaI };

std::string_view invariant_name(Invariant inv);
std::optional<Invariant> invariant_from_name(std::string_view name);

// The admissible-length set of a named invariant for the given exponent.
// Zeta and EtaI require 1 <= i <= exponent (ErrorKind::InvalidIndex).
LengthSpec invariant_spec(Invariant inv, int exponent, std::optional<int> i = std::nullopt);

InvariantResult named_invariant(const AbelianGroup& g, Invariant inv,
                                std::optional<int> i = std::nullopt,
                                const SearchOptions& opts = {});

int default_length_cap(const AbelianGroup& g);

}  // namespace zsum
