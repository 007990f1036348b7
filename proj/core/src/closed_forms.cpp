#include "zsum/closed_forms.hpp"

#include <algorithm>
#include <numeric>

namespace zsum {

long long d_star(const AbelianGroup& g) {
  long long v = 1;
  for (int f : g.invariant_factors()) v += f - 1;
  return v;
}

Rank2Formulas cf_rank2(long long n1, long long n2) {
  Rank2Formulas out;
  if (n1 < 1 || n2 < n1 || n2 % n1 != 0) {
    out.reason = "requires 1 <= n1 | n2";
    return out;
  }
  out.applicable = true;
  out.s = 2 * n1 + 2 * n2 - 3;
  out.eta = 2 * n1 + n2 - 2;
  return out;
}

long long PGroupFormulas::zeta(long long i) const {
  if (i < 1 || i > exponent)
    throw Error(ErrorKind::InvalidIndex, "zeta index must lie in [1, exp(G)]");
  return davenport + i - 1;
}

std::optional<long long> PGroupFormulas::eta() const {
  if (!large_exponent()) return std::nullopt;
  return 2 * davenport - exponent;
}

long long PGroupFormulas::eta_i_max() const {
  return std::max(2 * exponent - davenport, exponent / 2 + 1);
}

std::optional<long long> PGroupFormulas::eta_i(long long i) const {
  if (i < 1 || i > exponent)
    throw Error(ErrorKind::InvalidIndex, "eta_i index must lie in [1, exp(G)]");
  if (!large_exponent() || i > eta_i_max()) return std::nullopt;
  return 2 * davenport - exponent + (i - 1);
}

PGroupFormulas cf_pgroup(const AbelianGroup& g, int p) {
  PGroupFormulas out;
  if (!g.is_p_group(p) && !g.is_trivial()) {
    out.reason = "not a " + std::to_string(p) + "-group";
    return out;
  }
  out.applicable = true;
  out.p = p;
  out.davenport = d_star(g);  // exact for p-groups
  out.exponent = g.exponent();
  return out;
}

ExtensionFormulas cf_extension(long long a, const AbelianGroup& g, int p) {
  ExtensionFormulas out;
  PGroupFormulas base = cf_pgroup(g, p);
  if (a < 1) {
    out.reason = "requires a >= 1";
    return out;
  }
  if (!base.applicable) {
    out.reason = base.reason;
    return out;
  }
  if (!base.large_exponent()) {
    out.reason = "requires D(G) <= 2 exp(G) - 1";
    return out;
  }
  std::vector<int> factors = g.invariant_factors();
  if (a > 1) factors.push_back(static_cast<int>(a));
  out.extended = make_group(factors);
  out.applicable = true;
  out.d_ext = d_star(out.extended);
  if (a % p != 0) {
    out.eta_applicable = true;
    out.eta_ext = 2 * out.d_ext - out.extended.exponent();
  } else {
    out.reason = "eta part requires p not dividing a";
  }
  return out;
}

std::vector<FormulaValue> bounds_eta(const EtaBoundsInput& in) {
  std::vector<FormulaValue> out;
  const long long d = in.davenport;
  const long long n = in.exponent;

  {
    FormulaValue v{"general_chain_eta", "eta", true, "D(G) <= eta(G)", std::nullopt, d, std::nullopt};
    out.push_back(std::move(v));
    FormulaValue w{"general_chain_s", "s", true, "eta(G) + exp(G) - 1 <= s(G) with eta >= D",
                   std::nullopt, d + n - 1, std::nullopt};
    out.push_back(std::move(w));
  }

  if (in.odd_p_group && d <= 2 * n - 1) {
    FormulaValue v{"pgroup_chain_eta", "eta", true,
                   "2D - 1 <= eta + n - 1 and s <= D + 2n - 2 (odd p, D <= 2n-1)",
                   std::nullopt, 2 * d - n, d + n - 1};
    out.push_back(std::move(v));
    FormulaValue w{"pgroup_chain_s", "s", true,
                   "2D - 1 <= eta + n - 1 <= s <= D + 2n - 2 (odd p, D <= 2n-1)",
                   std::nullopt, 2 * d - 1, d + 2 * n - 2};
    out.push_back(std::move(w));
  }

  if (in.subgroup_exponent_divides && in.subgroup_davenport) {
    FormulaValue v{"eta_lower_subgroup", "eta", true,
                   "G = C_n + H with exp(H) | n gives eta >= 2(D(H) - 1) + n",
                   std::nullopt, 2 * (*in.subgroup_davenport - 1) + n, std::nullopt};
    out.push_back(std::move(v));
  }

  if (in.exponent_multiplicative && in.inductive) {
    const auto& ind = *in.inductive;
    FormulaValue v{"eta_upper_inductive", "eta", true,
                   "exp(G) = exp(H) exp(G/H) gives eta <= (eta(H)-1) exp(G/H) + eta(G/H)",
                   std::nullopt, std::nullopt,
                   (ind.eta_subgroup - 1) * ind.exp_quotient + ind.eta_quotient};
    out.push_back(std::move(v));
  }

  return out;
}

}  // namespace zsum
