#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

// One theorem/lemma evaluation: an exact value or an interval, plus an
// explicit applicability verdict. Inapplicability is an output, never an
// exception, so verification reports can distinguish "formula wrong" from
// "formula not applicable".
struct FormulaValue {
  std::string name;    // statement identifier
  std::string target;  // which invariant the value/interval constrains
  bool applicable = false;
  std::string reason;
  std::optional<long long> value;
  std::optional<long long> lo;
  std::optional<long long> hi;
};

// D*(G) = sum (n_i - 1) + 1; a universal lower bound for D(G), exact for
// p-groups and groups of rank <= 2.
long long d_star(const AbelianGroup& g);

// s and eta for C_{n1} + C_{n2}, 1 <= n1 | n2 (n1 = 1 covers cyclic groups).
struct Rank2Formulas {
  bool applicable = false;
  std::string reason;
  long long s = 0;
  long long eta = 0;
};
Rank2Formulas cf_rank2(long long n1, long long n2);

// Closed forms for a p-group: D = D*, s_{nN+} = D + n - 1, zeta_i = D + i - 1,
// and, when D <= 2n - 1 (large exponent), eta = 2D - n with
// eta_i = 2D - n + (i - 1) for i up to max(2n - D, floor(n/2) + 1).
struct PGroupFormulas {
  bool applicable = false;
  std::string reason;
  int p = 0;
  long long davenport = 0;
  long long exponent = 1;

  long long s_multiples() const { return davenport + exponent - 1; }
  long long zeta(long long i) const;  // throws ErrorKind::InvalidIndex outside [1, exponent]
  bool large_exponent() const { return davenport <= 2 * exponent - 1; }
  std::optional<long long> eta() const;
  long long eta_i_max() const;
  std::optional<long long> eta_i(long long i) const;
};
PGroupFormulas cf_pgroup(const AbelianGroup& g, int p);

// Formulas for the extension C_a + G of a large-exponent p-group G.
// The D part holds for every a >= 1 and is computed as D*(C_a + G) on the
// canonical normalization; the eta part additionally requires p not to
// divide a.
struct ExtensionFormulas {
  bool applicable = false;      // hypotheses on (a, G) for the D part
  bool eta_applicable = false;  // additionally gcd(a, p) = 1
  std::string reason;
  AbelianGroup extended;
  long long d_ext = 0;
  std::optional<long long> eta_ext;
};
ExtensionFormulas cf_extension(long long a, const AbelianGroup& g, int p);

// Interval constraints on eta(G) and s(G) from the chain theorems and the
// subgroup bounds. Hypotheses arrive as flags and numeric inputs; bounds
// whose hypotheses fail are omitted.
struct EtaBoundsInput {
  long long davenport = 0;
  long long exponent = 1;
  bool odd_p_group = false;  // G is a p-group for an odd prime

  // G = C_n + H with exp(H) | n: eta >= 2(D(H) - 1) + n
  std::optional<long long> subgroup_davenport;
  bool subgroup_exponent_divides = false;

  // subgroup H with exp(G) = exp(H) exp(G/H): eta <= (eta(H)-1) exp(G/H) + eta(G/H)
  struct Inductive {
    long long eta_subgroup = 0;
    long long eta_quotient = 0;
    long long exp_quotient = 1;
  };
  std::optional<Inductive> inductive;
  bool exponent_multiplicative = false;
};
std::vector<FormulaValue> bounds_eta(const EtaBoundsInput& input);

}  // namespace zsum
