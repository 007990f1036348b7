#include "zsum/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace zsum {

namespace {

long long pow_ll(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long long mul_mod(long long a, long long b, long long m) { return (a % m) * (b % m) % m; }

// inverse of a mod m, gcd(a, m) = 1
long long inv_mod(long long a, long long m) {
  long long t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    long long q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return t < 0 ? t + m : t;
}

int vp(long long n, int p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

long long mult_order(long long u, long long m) {
  long long k = 1, c = u % m;
  while (c != 1) {
    c = c * u % m;
    ++k;
  }
  return k;
}

// Generators of the unit group (Z/pe)^* for a prime power pe.
std::vector<long long> unit_group_generators(long long pe, int p) {
  if (pe <= 2) return {};
  long long phi = pe / p * (p - 1);
  if (p != 2 || pe == 4) {
    for (long long u = 2; u < pe; ++u)
      if (std::gcd(u, pe) == 1 && mult_order(u, pe) == phi) return {u};
  }
  return {pe - 1, 3};  // (Z/2^e)^* = <-1, 3> for e >= 3
}

std::vector<int> sylow_primes(const AbelianGroup& g) {
  std::vector<int> primes;
  for (int f : g.invariant_factors()) {
    int m = f;
    for (int d = 2; static_cast<long long>(d) * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

// Permutation of element indices induced by generator images; nullopt when
// the images do not define an automorphism.
std::optional<Permutation> permutation_from_images(const AbelianGroup& g,
                                                   const std::vector<long long>& images) {
  const int r = g.rank();
  const auto& f = g.invariant_factors();
  for (int i = 0; i < r; ++i)
    if (g.scale_index(f[i], images[i]) != 0) return std::nullopt;
  const long long n = g.order();
  Permutation perm(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (long long idx = 0; idx < n; ++idx) {
    GroupElement e = g.element_at(idx);
    long long acc = 0;
    for (int i = 0; i < r; ++i) acc = g.add_index(acc, g.scale_index(e.coords[i], images[i]));
    perm[static_cast<size_t>(idx)] = static_cast<int>(acc);
    if (seen[static_cast<size_t>(acc)]) return std::nullopt;
    seen[static_cast<size_t>(acc)] = 1;
  }
  return perm;
}

}  // namespace

std::optional<std::vector<Permutation>> automorphism_generators(const AbelianGroup& g,
                                                                long long order_cap) {
  if (g.order() > order_cap) return std::nullopt;
  std::vector<Permutation> gens;
  if (g.is_trivial()) return gens;

  const int r = g.rank();
  const auto& f = g.invariant_factors();
  auto generator_index = [&](int i) {
    GroupElement e;
    e.coords.assign(r, 0);
    e.coords[i] = 1;
    return g.index_of(e);
  };
  std::vector<long long> identity_images(r);
  for (int i = 0; i < r; ++i) identity_images[i] = generator_index(i);

  for (int p : sylow_primes(g)) {
    std::vector<int> idxs;
    for (int i = 0; i < r; ++i)
      if (f[i] % p == 0) idxs.push_back(i);
    std::vector<int> es(r, 0);
    for (int i : idxs) es[i] = vp(f[i], p);
    // idempotent that is 1 mod p^e_i and 0 mod (n_i / p^e_i); multiplying by
    // it projects the i-th coordinate onto its p-primary part
    auto p_part_coeff = [&](int i) {
      long long n = f[i], pe = pow_ll(p, es[i]), m = n / pe;
      return mul_mod(m, inv_mod(m % pe, pe), n);
    };

    // diagonal maps: act as a unit u on the p-part of one coordinate
    for (int i : idxs) {
      long long pe = pow_ll(p, es[i]);
      for (long long u : unit_group_generators(pe, p)) {
        auto images = identity_images;
        long long c = p_part_coeff(i);
        long long n = f[i];
        long long coef = ((1 - c + c * u) % n + n) % n;
        images[i] = g.scale_index(coef, generator_index(i));
        auto perm = permutation_from_images(g, images);
        if (perm) gens.push_back(std::move(*perm));
      }
    }
    // transvections: e_i -> e_i + c * e_j with the least admissible c
    for (int i : idxs)
      for (int j : idxs) {
        if (i == j) continue;
        auto images = identity_images;
        long long c = pow_ll(p, std::max(0, es[j] - es[i]));
        long long mj = f[j] / pow_ll(p, es[j]);
        long long coef = mul_mod(mul_mod(p_part_coeff(i), c, f[j]), mj, f[j]);
        images[i] = g.add_index(generator_index(i), g.scale_index(coef, generator_index(j)));
        auto perm = permutation_from_images(g, images);
        if (perm) gens.push_back(std::move(*perm));
      }
  }
  return gens;
}

long long automorphism_group_order(const AbelianGroup& g) {
  long long total = 1;
  for (int p : sylow_primes(g)) {
    std::vector<int> es;
    for (int f : g.invariant_factors())
      if (f % p == 0) es.push_back(vp(f, p));
    std::sort(es.begin(), es.end());
    const int n = static_cast<int>(es.size());
    // Hillar-Rhea: |Aut| with d_k/c_k the largest/smallest position sharing e_k
    std::vector<int> dk(n), ck(n);
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l)
        if (es[l] == es[k]) dk[k] = l + 1;
      for (int l = n - 1; l >= 0; --l)
        if (es[l] == es[k]) ck[k] = l + 1;
    }
    long long o = 1;
    for (int k = 0; k < n; ++k) o *= pow_ll(p, dk[k]) - pow_ll(p, k);
    for (int j = 0; j < n; ++j) o *= pow_ll(pow_ll(p, es[j]), n - dk[j]);
    for (int i = 0; i < n; ++i) o *= pow_ll(pow_ll(p, es[i] - 1), n - ck[i] + 1);
    total *= o;
  }
  return total;
}

AutomorphismList automorphism_closure(const AbelianGroup& g, long long order_cap,
                                      std::size_t closure_cap) {
  AutomorphismList out;
  auto gens = automorphism_generators(g, order_cap);
  if (!gens) return out;  // symmetry disabled
  const long long n = g.order();
  Permutation ident(static_cast<size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  std::set<Permutation> seen{ident};
  std::deque<const Permutation*> queue{&*seen.begin()};
  bool truncated = false;
  while (!queue.empty() && !truncated) {
    const Permutation& cur = *queue.front();
    queue.pop_front();
    for (const auto& gen : *gens) {
      Permutation next(static_cast<size_t>(n));
      for (long long i = 0; i < n; ++i)
        next[static_cast<size_t>(i)] = gen[static_cast<size_t>(cur[static_cast<size_t>(i)])];
      auto [it, inserted] = seen.insert(std::move(next));
      if (inserted) {
        if (seen.size() >= closure_cap) {
          truncated = true;
          break;
        }
        queue.push_back(&*it);
      }
    }
  }
  out.perms.assign(seen.begin(), seen.end());
  out.complete = !truncated;
  return out;
}

const AutomorphismList& automorphism_closure_cached(const AbelianGroup& g) {
  static std::mutex mu;
  static std::map<std::vector<int>, AutomorphismList> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.invariant_factors());
  if (it == cache.end())
    it = cache.emplace(g.invariant_factors(), automorphism_closure(g)).first;
  return it->second;
}

std::vector<int> apply_to_tuple(const Permutation& perm, std::span<const int> sorted_tuple) {
  std::vector<int> image(sorted_tuple.size());
  for (size_t i = 0; i < sorted_tuple.size(); ++i)
    image[i] = perm[static_cast<size_t>(sorted_tuple[i])];
  std::sort(image.begin(), image.end());
  return image;
}

bool is_canonical_tuple(std::span<const int> sorted_tuple, const std::vector<Permutation>& perms) {
  for (const auto& perm : perms) {
    auto image = apply_to_tuple(perm, sorted_tuple);
    if (std::lexicographical_compare(image.begin(), image.end(), sorted_tuple.begin(),
                                     sorted_tuple.end()))
      return false;
  }
  return true;
}

}  // namespace zsum
