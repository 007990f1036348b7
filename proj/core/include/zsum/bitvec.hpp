#pragma once

#include <cstdint>
#include <vector>

namespace zsum {

// Fixed-capacity bit vector used for length sets. Bit t = "length t is present".
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), w_((nbits + 64) / 64, 0) {}

  int capacity() const { return nbits_; }
  int words() const { return static_cast<int>(w_.size()); }

  void set(int t) { w_[t >> 6] |= 1ull << (t & 63); }
  bool test(int t) const { return t >= 0 && t <= nbits_ && (w_[t >> 6] >> (t & 63)) & 1; }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  bool intersects(const BitVec& o) const {
    int n = std::min(words(), o.words());
    for (int i = 0; i < n; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Lowest set bit position, or -1 when empty.
  int lowest() const {
    for (int i = 0; i < words(); ++i)
      if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
    return -1;
  }

  int highest() const {
    for (int i = words() - 1; i >= 0; --i)
      if (w_[i]) return i * 64 + 63 - __builtin_clzll(w_[i]);
    return -1;
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (int i = 0; i < words(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        out.push_back(i * 64 + __builtin_ctzll(x));
        x &= x - 1;
      }
    }
    return out;
  }

  bool operator==(const BitVec& o) const = default;

  const uint64_t* data() const { return w_.data(); }
  uint64_t* data() { return w_.data(); }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace zsum
