#include "zsum/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace zsum {

Sequence::Sequence(AbelianGroup group) : group_(std::move(group)) {
  if (group_.order() > std::numeric_limits<int>::max())
    throw Error(ErrorKind::GroupTooLarge, "group too large for sequence indexing");
}

Sequence Sequence::from_indices(AbelianGroup group, std::span<const int> indices) {
  Sequence s(std::move(group));
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  for (int idx : sorted) {
    if (idx < 0 || idx >= s.group_.order())
      throw Error(ErrorKind::IncompatibleElement, "element index out of range");
    if (!s.mults_.empty() && s.mults_.back().first == idx)
      ++s.mults_.back().second;
    else
      s.mults_.emplace_back(idx, 1);
  }
  s.length_ = static_cast<int>(sorted.size());
  return s;
}

Sequence Sequence::from_elements(AbelianGroup group, std::span<const GroupElement> elements) {
  std::vector<int> idx;
  idx.reserve(elements.size());
  for (const auto& e : elements) idx.push_back(static_cast<int>(group.index_of(e)));
  return from_indices(std::move(group), idx);
}

int Sequence::count_of(int index) const {
  auto it = std::lower_bound(mults_.begin(), mults_.end(), index,
                             [](const auto& p, int v) { return p.first < v; });
  return it != mults_.end() && it->first == index ? it->second : 0;
}

std::vector<int> Sequence::expanded() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(length_));
  for (auto [idx, cnt] : mults_)
    for (int i = 0; i < cnt; ++i) out.push_back(idx);
  return out;
}

int Sequence::sum_index() const {
  long long acc = 0;
  for (auto [idx, cnt] : mults_) acc = group_.add_index(acc, group_.scale_index(cnt, idx));
  return static_cast<int>(acc);
}

bool Sequence::contains_submultiset(const Sequence& sub) const {
  if (!(group_ == sub.group_)) return false;
  for (auto [idx, cnt] : sub.mults_)
    if (count_of(idx) < cnt) return false;
  return true;
}

Sequence Sequence::plus(int index, int count) const {
  Sequence out = *this;
  if (index < 0 || index >= group_.order())
    throw Error(ErrorKind::IncompatibleElement, "element index out of range");
  auto it = std::lower_bound(out.mults_.begin(), out.mults_.end(), index,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != out.mults_.end() && it->first == index)
    it->second += count;
  else
    out.mults_.insert(it, {index, count});
  out.length_ += count;
  return out;
}

SubsetSumDp::SubsetSumDp(AbelianGroup group, int max_length)
    : group_(std::move(group)),
      max_length_(max_length),
      words_((max_length + 64) / 64),
      order_(static_cast<int>(group_.order())),
      bits_(static_cast<size_t>(order_) * words_, 0) {
  bits_[0] = 1;  // empty sub-multiset: length 0, sum 0
}

void SubsetSumDp::reset() {
  std::fill(bits_.begin(), bits_.end(), 0);
  bits_[0] = 1;
}

void SubsetSumDp::extend(const SubsetSumDp& src, SubsetSumDp& dst, int g) {
  dst.bits_ = src.bits_;
  const auto& factors = src.group_.invariant_factors();
  const int r = static_cast<int>(factors.size());
  const int words = src.words_;
  GroupElement ge = src.group_.element_at(g);
  // odometer over the coordinates of h; s = h + g recomputed per step
  std::vector<int> dh(static_cast<size_t>(r), 0);
  std::vector<long long> strides(static_cast<size_t>(r), 1);
  for (int i = r - 2; i >= 0; --i) strides[i] = strides[i + 1] * factors[i + 1];
  for (int h = 0; h < src.order_; ++h) {
    long long s = 0;
    for (int j = 0; j < r; ++j) {
      int c = dh[j] + ge.coords[j];
      if (c >= factors[j]) c -= factors[j];
      s += c * strides[j];
    }
    const uint64_t* from = src.bits_.data() + static_cast<size_t>(h) * words;
    uint64_t* to = dst.bits_.data() + static_cast<size_t>(s) * words;
    uint64_t carry = 0;
    for (int w = 0; w < words; ++w) {
      uint64_t v = from[w];
      to[w] |= (v << 1) | carry;
      carry = v >> 63;
    }
    for (int j = r - 1; j >= 0; --j) {
      if (++dh[j] < factors[j]) break;
      dh[j] = 0;
    }
  }
}

bool SubsetSumDp::extension_hits(int g, const BitVec& lmask) const {
  const int neg = static_cast<int>(group_.negate_index(g));
  const uint64_t* from = bits_.data() + static_cast<size_t>(neg) * words_;
  const uint64_t* mask = lmask.data();
  const int mwords = std::min(words_, lmask.words());
  uint64_t carry = 0;
  for (int w = 0; w < mwords; ++w) {
    uint64_t shifted = (from[w] << 1) | carry;
    if (shifted & mask[w]) return true;
    carry = from[w] >> 63;
  }
  return false;
}

bool SubsetSumDp::zero_hits(const BitVec& lmask) const {
  const uint64_t* zero_row = bits_.data();
  const uint64_t* mask = lmask.data();
  const int mwords = std::min(words_, lmask.words());
  for (int w = 0; w < mwords; ++w)
    if (zero_row[w] & mask[w]) return true;
  return false;
}

LengthSet length_set(const Sequence& s, int length_cap) {
  if (s.length() > length_cap)
    throw Error(ErrorKind::LengthCap, "sequence length " + std::to_string(s.length()) +
                                          " exceeds DP cap " + std::to_string(length_cap));
  SubsetSumDp cur(s.group(), s.length());
  SubsetSumDp next(s.group(), s.length());
  for (auto [idx, cnt] : s.multiplicities())
    for (int c = 0; c < cnt; ++c) {
      SubsetSumDp::extend(cur, next, idx);
      std::swap(cur, next);
    }
  BitVec bits(s.length());
  for (int t = 1; t <= s.length(); ++t)
    if (cur.row_bit(0, t)) bits.set(t);
  return LengthSet(s.length(), std::move(bits));
}

bool spec_contains(const LengthSpec& l, long long t, int exponent) {
  if (t < 1 || exponent < 1)
    throw Error(ErrorKind::InvalidSpec, "spec_contains requires t >= 1 and exponent >= 1");
  return l.contains(t, exponent);
}

bool has_zero_sum_in(const Sequence& s, const LengthSpec& l, int length_cap) {
  LengthSet ls = length_set(s, length_cap);
  BitVec mask = l.mask(s.group().exponent(), s.length());
  return ls.bits().intersects(mask);
}

std::optional<Sequence> extract_witness(const Sequence& s, const LengthSpec& l, int length_cap) {
  if (s.length() > length_cap)
    throw Error(ErrorKind::LengthCap, "sequence length exceeds DP cap");
  const AbelianGroup& g = s.group();
  const std::vector<int> items = s.expanded();
  const int k = s.length();

  // suffix[j] covers items[j..k); suffix[k] is empty
  std::vector<SubsetSumDp> suffix;
  suffix.reserve(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) suffix.emplace_back(g, k);
  for (int j = k - 1; j >= 0; --j) SubsetSumDp::extend(suffix[j + 1], suffix[j], items[j]);

  BitVec mask = l.mask(g.exponent(), k);
  int target_len = -1;
  for (int t = 1; t <= k; ++t)
    if (mask.test(t) && suffix[0].row_bit(0, t)) {
      target_len = t;
      break;
    }
  if (target_len < 0) return std::nullopt;

  // greedy: take the earliest item whenever a completion still exists; this
  // yields the lexicographically least index tuple of the target length
  std::vector<int> chosen;
  long long cur_sum = 0;
  int remaining = target_len;
  for (int j = 0; j < k && remaining > 0; ++j) {
    long long with = g.add_index(cur_sum, items[j]);
    int need = static_cast<int>(g.negate_index(with));
    if (suffix[j + 1].row_bit(need, remaining - 1)) {
      chosen.push_back(items[j]);
      cur_sum = with;
      --remaining;
    }
  }

  Sequence witness = Sequence::from_indices(g, chosen);
  if (remaining != 0 || witness.sum_index() != 0 || !s.contains_submultiset(witness) ||
      !l.contains(witness.length(), g.exponent()))
    throw std::logic_error("witness extraction produced an invalid certificate");
  return witness;
}

}  // namespace zsum
