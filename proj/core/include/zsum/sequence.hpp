#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zsum/bitvec.hpp"
#include "zsum/group.hpp"
#include "zsum/length_spec.hpp"

namespace zsum {

inline constexpr int kDefaultDpLengthCap = 64;

// A multiset of group elements. Order-insensitive; stored as (element index,
// count) pairs in canonical (ascending index) order. Immutable value type.
class Sequence {
 public:
  explicit Sequence(AbelianGroup group);
  static Sequence from_indices(AbelianGroup group, std::span<const int> indices);
  static Sequence from_indices(AbelianGroup group, std::initializer_list<int> indices) {
    return from_indices(std::move(group), std::span<const int>(indices.begin(), indices.size()));
  }
  static Sequence from_elements(AbelianGroup group, std::span<const GroupElement> elements);

  const AbelianGroup& group() const { return group_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  const std::vector<std::pair<int, int>>& multiplicities() const { return mults_; }
  int count_of(int index) const;

  std::vector<int> expanded() const;  // ascending indices, with repetition
  int sum_index() const;
  bool contains_submultiset(const Sequence& sub) const;
  Sequence plus(int index, int count = 1) const;

  bool operator==(const Sequence& o) const {
    return group_ == o.group_ && mults_ == o.mults_;
  }

 private:
  AbelianGroup group_;
  std::vector<std::pair<int, int>> mults_;
  int length_ = 0;
};

// The exact set of lengths t >= 1 at which a nonempty zero-sum subsequence
// exists; max_length is the length of the source sequence.
class LengthSet {
 public:
  LengthSet(int max_length, BitVec bits) : max_length_(max_length), bits_(std::move(bits)) {}
  int max_length() const { return max_length_; }
  bool contains(int t) const { return t >= 1 && bits_.test(t); }
  std::vector<int> to_list() const { return bits_.to_list(); }
  const BitVec& bits() const { return bits_; }
  bool operator==(const LengthSet&) const = default;

 private:
  int max_length_;
  BitVec bits_;
};

// Dynamic-programming table over (group element) x (sub-multiset length):
// row(h) bit t is set iff some sub-multiset of length t sums to element h.
// The empty table has only row(0) bit 0. Extension by one element is
// order-independent, which makes the table reusable along any DFS that grows
// a multiset one item at a time.
class SubsetSumDp {
 public:
  SubsetSumDp(AbelianGroup group, int max_length);

  const AbelianGroup& group() const { return group_; }
  int max_length() const { return max_length_; }
  int words() const { return words_; }
  void reset();

  std::span<const uint64_t> row(int h) const {
    return {bits_.data() + static_cast<size_t>(h) * words_, static_cast<size_t>(words_)};
  }
  bool row_bit(int h, int t) const {
    return (bits_[static_cast<size_t>(h) * words_ + (t >> 6)] >> (t & 63)) & 1;
  }

  // dst := src extended by one copy of element g (dst must share shape).
  static void extend(const SubsetSumDp& src, SubsetSumDp& dst, int g);

  // Lengths (bit positions) of zero-sum sub-multisets of the extension by g
  // intersected with lmask; true means appending g creates an L-zero-sum.
  bool extension_hits(int g, const BitVec& lmask) const;

  // Zero-sum lengths currently realized, intersected with lmask.
  bool zero_hits(const BitVec& lmask) const;

 private:
  AbelianGroup group_;
  int max_length_;
  int words_;
  int order_;
  std::vector<uint64_t> bits_;
};

// Exact zero-sum length set of S, by DP over the multiset items.
// Throws ErrorKind::LengthCap when |S| exceeds the cap.
LengthSet length_set(const Sequence& s, int length_cap = kDefaultDpLengthCap);

// t in L under the given exponent (operation form of LengthSpec::contains).
bool spec_contains(const LengthSpec& l, long long t, int exponent);

// True iff S has a nonempty zero-sum subsequence whose length lies in L.
bool has_zero_sum_in(const Sequence& s, const LengthSpec& l, int length_cap = kDefaultDpLengthCap);

// A concrete witness subsequence: zero-sum, length in L, smallest admissible
// length with ties broken toward the lexicographically least index tuple.
// Returns nullopt when no witness exists. The result re-validates before
// being returned.
std::optional<Sequence> extract_witness(const Sequence& s, const LengthSpec& l,
                                        int length_cap = kDefaultDpLengthCap);

}  // namespace zsum
