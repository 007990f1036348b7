#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

// Automorphisms are permutations of element indices; perm[i] is the image of
// element i. Every automorphism fixes index 0.
using Permutation = std::vector<int>;

inline constexpr long long kDefaultAutomorphismOrderCap = 64;
inline constexpr std::size_t kDefaultClosureCap = 50000;

// A generating set for Aut(G): diagonal unit maps plus admissible
// transvections on each Sylow component. Returns nullopt when |G| exceeds the
// cap; callers must then fall back to identity-only pruning.
std::optional<std::vector<Permutation>> automorphism_generators(
    const AbelianGroup& g, long long order_cap = kDefaultAutomorphismOrderCap);

// |Aut(G)|, computed per Sylow component from the invariant-factor exponents.
long long automorphism_group_order(const AbelianGroup& g);

struct AutomorphismList {
  std::vector<Permutation> perms;  // empty when symmetry is unavailable
  bool complete = false;           // true iff perms is all of Aut(G)
};

// Closure of the generating set under composition, truncated at `closure_cap`
// permutations. A truncated list is still sound for orbit pruning (it is a
// subset of Aut(G)); it just prunes less.
AutomorphismList automorphism_closure(const AbelianGroup& g,
                                      long long order_cap = kDefaultAutomorphismOrderCap,
                                      std::size_t closure_cap = kDefaultClosureCap);

// Memoized variant; the search and verifier call this once per node batch.
const AutomorphismList& automorphism_closure_cached(const AbelianGroup& g);

// True when the non-decreasing index tuple is lexicographically minimal among
// its images under the given permutations (images are sorted before compare).
bool is_canonical_tuple(std::span<const int> sorted_tuple, const std::vector<Permutation>& perms);

// Sorted image of the tuple under one permutation.
std::vector<int> apply_to_tuple(const Permutation& perm, std::span<const int> sorted_tuple);

}  // namespace zsum
