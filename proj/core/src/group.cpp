#include "zsum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace zsum {

namespace {

// factor -> list of prime powers
void prime_power_split(int f, std::map<int, std::vector<int>>& out) {
  int m = f;
  for (int d = 2; static_cast<long long>(d) * d <= m; ++d) {
    if (m % d == 0) {
      int pe = 1;
      while (m % d == 0) {
        m /= d;
        pe *= d;
      }
      out[d].push_back(pe);
    }
  }
  if (m > 1) out[m].push_back(m);
}

}  // namespace

AbelianGroup::AbelianGroup() = default;

AbelianGroup make_group(std::span<const int> factors) {
  std::map<int, std::vector<int>> pp;
  for (int f : factors) {
    if (f <= 1) throw Error(ErrorKind::InvalidFactor, "group factor must be >= 2, got " + std::to_string(f));
    prime_power_split(f, pp);
  }
  size_t rank = 0;
  for (auto& [p, powers] : pp) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    rank = std::max(rank, powers.size());
  }
  // k-th largest prime powers across primes multiply into the k-th largest
  // invariant factor; this yields the unique divisibility chain.
  std::vector<int> inv;
  for (size_t k = 0; k < rank; ++k) {
    long long v = 1;
    for (const auto& [p, powers] : pp)
      if (k < powers.size()) v *= powers[k];
    inv.push_back(static_cast<int>(v));
  }
  std::reverse(inv.begin(), inv.end());

  AbelianGroup g;
  g.factors_ = std::move(inv);
  g.strides_.assign(g.factors_.size(), 1);
  for (int i = static_cast<int>(g.factors_.size()) - 2; i >= 0; --i)
    g.strides_[i] = g.strides_[i + 1] * g.factors_[i + 1];
  g.order_ = 1;
  for (int f : g.factors_) g.order_ *= f;
  g.exponent_ = g.factors_.empty() ? 1 : g.factors_.back();
  return g;
}

AbelianGroup make_group(std::initializer_list<int> factors) {
  return make_group(std::span<const int>(factors.begin(), factors.size()));
}

AbelianGroup parse_group(std::string_view text) {
  if (text.empty() || text == "1") return AbelianGroup{};
  std::vector<int> factors;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size() || v <= 1 || v > (1ll << 31))
        throw Error(ErrorKind::InvalidFactor, "bad group factor '" + tok + "'");
      factors.push_back(static_cast<int>(v));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidFactor, "bad group factor '" + tok + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make_group(factors);
}

std::optional<int> AbelianGroup::prime() const {
  if (is_trivial()) return std::nullopt;
  int m = factors_.front();
  int p = 2;
  while (m % p != 0) ++p;
  for (int f : factors_) {
    while (f % p == 0) f /= p;
    if (f != 1) return std::nullopt;
  }
  return p;
}

bool AbelianGroup::is_p_group(int p) const {
  auto q = prime();
  return q.has_value() && *q == p;
}

long long AbelianGroup::index_of(const GroupElement& g) const {
  if (static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorKind::IncompatibleElement, "element rank mismatch");
  long long idx = 0;
  for (int i = 0; i < rank(); ++i) {
    int c = g.coords[i] % factors_[i];
    if (c < 0) c += factors_[i];
    idx += c * strides_[i];
  }
  return idx;
}

GroupElement AbelianGroup::element_at(long long index) const {
  GroupElement g;
  g.coords.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    g.coords[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return g;
}

long long AbelianGroup::add_index(long long a, long long b) const {
  long long out = 0;
  for (int i = 0; i < rank(); ++i) {
    int ca = static_cast<int>(a / strides_[i]) % factors_[i];
    int cb = static_cast<int>(b / strides_[i]) % factors_[i];
    int c = ca + cb;
    if (c >= factors_[i]) c -= factors_[i];
    out += c * strides_[i];
  }
  return out;
}

long long AbelianGroup::negate_index(long long a) const {
  long long out = 0;
  for (int i = 0; i < rank(); ++i) {
    int c = static_cast<int>(a / strides_[i]) % factors_[i];
    if (c != 0) c = factors_[i] - c;
    out += c * strides_[i];
  }
  return out;
}

long long AbelianGroup::scale_index(long long c, long long a) const {
  long long out = 0;
  for (int i = 0; i < rank(); ++i) {
    long long ca = (a / strides_[i]) % factors_[i];
    long long v = (ca * (c % factors_[i])) % factors_[i];
    if (v < 0) v += factors_[i];
    out += v * strides_[i];
  }
  return out;
}

long long AbelianGroup::element_order(long long a) const {
  long long ord = 1;
  for (int i = 0; i < rank(); ++i) {
    long long c = (a / strides_[i]) % factors_[i];
    long long o = factors_[i] / std::gcd(static_cast<long long>(factors_[i]), c);
    ord = std::lcm(ord, o);
  }
  return ord;
}

GroupElement AbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
  if (g.coords.size() != h.coords.size() || static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorKind::IncompatibleElement, "element rank mismatch in add");
  GroupElement out;
  out.coords.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    int c = g.coords[i] + h.coords[i];
    if (c >= factors_[i]) c -= factors_[i];
    out.coords[i] = c;
  }
  return out;
}

GroupElement AbelianGroup::negate(const GroupElement& g) const {
  if (static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorKind::IncompatibleElement, "element rank mismatch in negate");
  GroupElement out;
  out.coords.resize(rank());
  for (int i = 0; i < rank(); ++i)
    out.coords[i] = g.coords[i] == 0 ? 0 : factors_[i] - g.coords[i];
  return out;
}

bool AbelianGroup::is_zero(const GroupElement& g) const {
  if (static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorKind::IncompatibleElement, "element rank mismatch in is_zero");
  return std::all_of(g.coords.begin(), g.coords.end(), [](int c) { return c == 0; });
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& g, long long cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::GroupTooLarge,
                "group order " + std::to_string(g.order()) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(g.order()));
  for (long long i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

}  // namespace zsum
