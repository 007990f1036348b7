#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/errors.hpp"

namespace zsum {

inline constexpr long long kDefaultElementEnumerationCap = 1 << 20;

// An element given by its coordinate vector, coords[i] in [0, n_i).
struct GroupElement {
  std::vector<int> coords;
  bool operator==(const GroupElement&) const = default;
};

// A finite abelian group in invariant-factor normal form n_1 | n_2 | ... | n_r.
// Construction canonicalizes any factor list presenting an isomorphic group
// (coprime parts are merged CRT-style, then redistributed into a divisibility
// chain), so equal groups compare equal. The trivial group has an empty list.
//
// Elements are addressed by index in the lexicographic order of their
// coordinate vectors; index 0 is the identity. Instances are immutable and
// cheap to copy.
class AbelianGroup {
 public:
  AbelianGroup();  // trivial group

  const std::vector<int>& invariant_factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int exponent() const { return exponent_; }
  long long order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }

  // The prime p when every invariant factor is a power of p (requires a
  // nontrivial group); nullopt otherwise.
  std::optional<int> prime() const;
  bool is_p_group(int p) const;

  // --- index-based element arithmetic ---------------------------------
  long long index_of(const GroupElement& g) const;
  GroupElement element_at(long long index) const;
  long long add_index(long long a, long long b) const;
  long long negate_index(long long a) const;
  long long scale_index(long long c, long long a) const;  // c*a, c may be any integer
  long long element_order(long long a) const;

  // --- coordinate-level arithmetic (validates rank) -------------------
  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement negate(const GroupElement& g) const;
  bool is_zero(const GroupElement& g) const;

  std::string to_string() const;  // comma-separated factors; "1" for trivial

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  friend AbelianGroup make_group(std::span<const int>);
  std::vector<int> factors_;
  std::vector<long long> strides_;  // strides_[i] = prod of factors_[i+1..]
  long long order_ = 1;
  int exponent_ = 1;
};

// Builds the group presented by the given cyclic factors (each >= 2; the
// empty list yields the trivial group). Throws ErrorKind::InvalidFactor.
AbelianGroup make_group(std::span<const int> factors);
AbelianGroup make_group(std::initializer_list<int> factors);

// Parses a comma-separated factor list ("2,4"); "1" or "" gives the trivial
// group. Inverse of AbelianGroup::to_string up to canonicalization.
AbelianGroup parse_group(std::string_view text);

// All |G| elements in canonical (lexicographic) order; index 0 is the
// identity. Throws ErrorKind::GroupTooLarge past the cap.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& g,
                                             long long cap = kDefaultElementEnumerationCap);

}  // namespace zsum
