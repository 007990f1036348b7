#include "zsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "zsum/automorphisms.hpp"

namespace zsum {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inapplicable: return "inapplicable";
    case CheckStatus::Capped: return "capped";
  }
  return {};
}

std::optional<CheckStatus> check_status_from_string(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "inapplicable") return CheckStatus::Inapplicable;
  if (s == "capped") return CheckStatus::Capped;
  return std::nullopt;
}

bool Report::any_fail() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.status == CheckStatus::Fail; });
}

bool Report::any_capped() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.status == CheckStatus::Capped; });
}

namespace {

// Orbit-representative tests apply at most this many automorphisms; a longer
// closure list costs more per node than the duplicates it removes.
constexpr std::size_t kEnumerationPermCap = 512;

std::string format_count(std::uint64_t n) { return std::to_string(n); }

double multiset_count(long long order, int length) {
  // C(order + length - 1, length) as a double, for coverage reporting
  double v = 1.0;
  for (int i = 1; i <= length; ++i) v *= static_cast<double>(order - 1 + i) / i;
  return v;
}

}  // namespace

EnumerationOutcome for_each_sequence(const AbelianGroup& g, int length,
                                     const EnumerationOptions& opts,
                                     const std::function<bool(const Sequence&, const LengthSet&)>& fn) {
  if (g.order() > kDefaultSearchOrderCap)
    throw Error(ErrorKind::GroupTooLarge, "group too large to enumerate sequences over");
  const int order = static_cast<int>(g.order());

  const std::vector<Permutation>* perms = nullptr;
  std::vector<Permutation> truncated;
  if (opts.up_to_aut) {
    const auto& closure = automorphism_closure_cached(g);
    if (closure.perms.size() > kEnumerationPermCap) {
      truncated.assign(closure.perms.begin(), closure.perms.begin() + kEnumerationPermCap);
      perms = &truncated;
    } else if (!closure.perms.empty()) {
      perms = &closure.perms;
    }
  }

  std::vector<SubsetSumDp> tables;
  tables.reserve(static_cast<size_t>(length) + 1);
  for (int d = 0; d <= length; ++d) tables.emplace_back(g, length);
  std::vector<int> path;
  std::uint64_t visited = 0;
  EnumerationOutcome outcome = EnumerationOutcome::Complete;

  auto rec = [&](auto&& self, int depth, int min_index, long long sum) -> bool {
    if (depth == length) {
      if (++visited > opts.budget) {
        outcome = EnumerationOutcome::Capped;
        return false;
      }
      if (opts.zero_sum_only && sum != 0) return true;
      Sequence seq = Sequence::from_indices(g, path);
      BitVec bits(length);
      for (int t = 1; t <= length; ++t)
        if (tables[depth].row_bit(0, t)) bits.set(t);
      if (!fn(seq, LengthSet(length, std::move(bits)))) {
        outcome = EnumerationOutcome::Stopped;
        return false;
      }
      return true;
    }
    for (int cand = min_index; cand < order; ++cand) {
      path.push_back(cand);
      // a non-canonical prefix can only extend to non-canonical multisets
      if (perms && !is_canonical_tuple(path, *perms)) {
        path.pop_back();
        continue;
      }
      SubsetSumDp::extend(tables[depth], tables[depth + 1], cand);
      bool keep = self(self, depth + 1, cand, g.add_index(sum, cand));
      path.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  rec(rec, 0, 0, 0);
  return outcome;
}

EnumerationResult enumerate_sequences(const AbelianGroup& g, int length,
                                      const EnumerationOptions& opts) {
  EnumerationResult out;
  out.outcome = for_each_sequence(g, length, opts, [&](const Sequence& s, const LengthSet&) {
    out.sequences.push_back(s);
    return true;
  });
  return out;
}

namespace {

// Is there a zero-sum sub-multiset B of S with |B| = size whose own zero-sum
// length set meets [lo, hi]?
bool exists_nested_witness(const Sequence& s, int size, int lo, int hi) {
  const auto& mults = s.multiplicities();
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(size));
  int total_remaining = s.length();

  auto rec = [&](auto&& self, size_t pos, int remaining, int avail) -> bool {
    if (remaining == 0) {
      Sequence b = Sequence::from_indices(s.group(), chosen);
      if (b.sum_index() != 0) return false;
      LengthSet ls = length_set(b, b.length());
      for (int t = lo; t <= hi; ++t)
        if (ls.contains(t)) return true;
      return false;
    }
    if (pos == mults.size() || avail < remaining) return false;
    auto [idx, cnt] = mults[pos];
    int take_max = std::min(cnt, remaining);
    for (int take = take_max; take >= 0; --take) {
      for (int c = 0; c < take; ++c) chosen.push_back(idx);
      if (self(self, pos + 1, remaining - take, avail - cnt)) return true;
      for (int c = 0; c < take; ++c) chosen.pop_back();
    }
    return false;
  };
  (void)total_remaining;
  return rec(rec, 0, size, s.length());
}

struct Gate {
  bool ok = false;
  std::string reason;
  PGroupFormulas pg;
};

Gate large_exponent_gate(const AbelianGroup& g) {
  Gate gate;
  auto p = g.prime();
  if (!p) {
    gate.reason = "not a p-group";
    return gate;
  }
  gate.pg = cf_pgroup(g, *p);
  if (!gate.pg.large_exponent()) {
    gate.reason = "D(G) = " + std::to_string(gate.pg.davenport) + " exceeds 2 exp(G) - 1 = " +
                  std::to_string(2 * gate.pg.exponent - 1);
    return gate;
  }
  gate.ok = true;
  return gate;
}

}  // namespace

std::vector<ReportEntry> check_short_zss_containment(const AbelianGroup& g, int i_max,
                                                     const VerifyOptions& opts) {
  static const std::string kClaim =
      "every zero-sum sequence of length D(G)+i over a p-group with D <= 2 exp - 1 "
      "contains a zero-sum subsequence of length in [i, exp(G)]";
  std::vector<ReportEntry> out;
  Gate gate = large_exponent_gate(g);
  if (!gate.ok) {
    out.push_back({"short_zss", kClaim, CheckStatus::Inapplicable, gate.reason, std::nullopt});
    return out;
  }
  const long long d = gate.pg.davenport;
  const int n = g.exponent();
  const int full_range = static_cast<int>(2 * n - d);
  if (i_max <= 0) i_max = full_range;
  if (i_max > full_range)
    throw Error(ErrorKind::InvalidIndex,
                "i_max must lie in [1, 2 exp - D] = [1, " + std::to_string(full_range) + "]");

  for (int i = 1; i <= i_max; ++i) {
    const int len = static_cast<int>(d) + i;
    BitVec want = LengthSpec::range(i, n).mask(n, len);
    std::uint64_t scanned = 0;
    std::optional<Sequence> counterexample;
    EnumerationOptions eopts{true, opts.up_to_aut, opts.enumeration_budget};
    EnumerationOutcome outcome =
        for_each_sequence(g, len, eopts, [&](const Sequence& seq, const LengthSet& ls) {
          ++scanned;
          if (ls.bits().intersects(want)) return true;
          counterexample = seq;
          return false;
        });
    ReportEntry entry;
    entry.check = "short_zss[i=" + std::to_string(i) + "]";
    entry.claim = kClaim;
    std::ostringstream det;
    if (counterexample) {
      entry.status = CheckStatus::Fail;
      entry.counterexample = counterexample;
      det << "zero-sum sequence of length " << len << " with no zero-sum subsequence of length in ["
          << i << ", " << n << "]";
    } else if (outcome == EnumerationOutcome::Capped) {
      entry.status = CheckStatus::Capped;
      det << "enumeration budget reached after " << format_count(scanned)
          << " zero-sum sequences of length " << len;
    } else {
      entry.status = CheckStatus::Pass;
      det << format_count(scanned) << " zero-sum sequences of length " << len
          << (opts.up_to_aut ? " (orbit representatives)" : "")
          << " all contain one; sampled at this length only";
    }
    entry.details = det.str();
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ReportEntry> check_eta_chain(const AbelianGroup& g, const VerifyOptions& opts) {
  std::vector<ReportEntry> out;
  const int n = g.exponent();
  std::vector<InvariantResult> eta(static_cast<size_t>(n) + 1);
  bool any_capped = false;
  for (int i = 1; i <= n; ++i) {
    eta[static_cast<size_t>(i)] = s_l(g, LengthSpec::range(i, n), opts.search);
    any_capped = any_capped || !eta[static_cast<size_t>(i)].exhaustive;
  }
  InvariantResult egz = s_l(g, LengthSpec::exact(n), opts.search);
  any_capped = any_capped || !egz.exhaustive;

  auto values_string = [&] {
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) {
      if (i > 1) os << ", ";
      os << "eta_" << i << "=" << eta[static_cast<size_t>(i)].value;
    }
    return os.str();
  };

  {
    ReportEntry e;
    e.check = "eta_chain_strict";
    e.claim = "eta(G) = eta_1(G) < eta_2(G) < ... < eta_n(G) = s(G)";
    bool strict = true;
    for (int i = 2; i <= n; ++i)
      strict = strict && eta[static_cast<size_t>(i - 1)].value < eta[static_cast<size_t>(i)].value;
    e.status = any_capped ? CheckStatus::Capped : (strict ? CheckStatus::Pass : CheckStatus::Fail);
    if (e.status == CheckStatus::Fail) e.counterexample = eta[static_cast<size_t>(n)].certificate;
    e.details = values_string();
    out.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.check = "eta_n_equals_s";
    e.claim = "eta_n(G) = s(G)";
    bool capped = !eta[static_cast<size_t>(n)].exhaustive || !egz.exhaustive;
    bool equal = eta[static_cast<size_t>(n)].value == egz.value;
    e.status = capped ? CheckStatus::Capped : (equal ? CheckStatus::Pass : CheckStatus::Fail);
    if (e.status == CheckStatus::Fail) e.counterexample = egz.certificate;
    e.details = "eta_n=" + std::to_string(eta[static_cast<size_t>(n)].value) +
                ", s=" + std::to_string(egz.value);
    out.push_back(std::move(e));
  }
  for (int i = 2; i <= std::min(n, n / 2 + 1); ++i) {
    ReportEntry e;
    e.check = "eta_half_range[i=" + std::to_string(i) + "]";
    e.claim = "eta_i(G) = eta(G) + i - 1 for 2 <= i <= floor(n/2) + 1";
    bool capped = !eta[static_cast<size_t>(i)].exhaustive || !eta[1].exhaustive;
    bool equal = eta[static_cast<size_t>(i)].value == eta[1].value + i - 1;
    e.status = capped ? CheckStatus::Capped : (equal ? CheckStatus::Pass : CheckStatus::Fail);
    if (e.status == CheckStatus::Fail) e.counterexample = eta[static_cast<size_t>(i)].certificate;
    e.details = "eta_" + std::to_string(i) + "=" + std::to_string(eta[static_cast<size_t>(i)].value) +
                ", eta+" + std::to_string(i - 1) + "=" + std::to_string(eta[1].value + i - 1);
    out.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.check = "eta_full_chain_observation";
    e.claim = "eta_i(G) = eta(G) + i - 1 for all i (would follow from eta = s - exp + 1)";
    int deviation = 0;
    for (int i = 2; i <= n; ++i)
      if (eta[static_cast<size_t>(i)].value != eta[1].value + i - 1) {
        deviation = i;
        break;
      }
    e.status = any_capped ? CheckStatus::Capped : CheckStatus::Pass;
    e.details = deviation == 0
                    ? "full chain holds up to i = " + std::to_string(n) + " (observation, not asserted): " +
                          values_string()
                    : "full chain deviates first at i = " + std::to_string(deviation) +
                          " (observation, not asserted): " + values_string();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ReportEntry> hunt_conjecture(const AbelianGroup& g, int ell, int scan_extra,
                                         const VerifyOptions& opts) {
  static const std::string kClaim =
      "every sequence of length >= D + (n-2) + ell has a zero-sum subsequence of length n, or one "
      "of length 2n containing a zero-sum subsequence of length in [(2n-1) - D + ell, n-1]";
  std::vector<ReportEntry> out;
  Gate gate = large_exponent_gate(g);
  if (!gate.ok) {
    out.push_back({"conjecture_hunt", kClaim, CheckStatus::Inapplicable, gate.reason, std::nullopt});
    return out;
  }
  const long long d = gate.pg.davenport;
  const int n = g.exponent();
  const long long ell_max = d + 1 - n;
  if (ell < 1 || ell > ell_max)
    throw Error(ErrorKind::InvalidIndex,
                "ell must lie in [1, D + 1 - exp] = [1, " + std::to_string(ell_max) + "]");

  const int lo2 = static_cast<int>(2 * n - 1 - d) + ell;
  for (int extra = 0; extra <= scan_extra; ++extra) {
    const int len = static_cast<int>(d) + (n - 2) + ell + extra;
    std::uint64_t scanned = 0;
    std::optional<Sequence> counterexample;
    EnumerationOptions eopts{false, opts.up_to_aut, opts.enumeration_budget};
    EnumerationOutcome outcome =
        for_each_sequence(g, len, eopts, [&](const Sequence& seq, const LengthSet& ls) {
          ++scanned;
          if (ls.contains(n)) return true;  // disjunct (1)
          if (lo2 <= n - 1 && 2 * n <= len && ls.contains(2 * n) &&
              exists_nested_witness(seq, 2 * n, lo2, n - 1))
            return true;  // disjunct (2)
          counterexample = seq;
          return false;
        });
    ReportEntry entry;
    entry.check = "conjecture_hunt[ell=" + std::to_string(ell) + ",len=" + std::to_string(len) + "]";
    entry.claim = kClaim;
    std::ostringstream det;
    if (counterexample) {
      entry.status = CheckStatus::Fail;
      entry.counterexample = counterexample;
      det << "sequence of length " << len << " satisfying neither disjunct (window [" << lo2 << ", "
          << n - 1 << "])";
    } else if (outcome == EnumerationOutcome::Capped) {
      entry.status = CheckStatus::Capped;
      det << "no counterexample among " << format_count(scanned) << " of ~"
          << multiset_count(g.order(), len) << " sequences of length " << len
          << " before the enumeration budget (coverage "
          << (static_cast<double>(scanned) / multiset_count(g.order(), len)) << ")";
    } else {
      entry.status = CheckStatus::Pass;
      det << "no counterexample at length " << len << " (" << format_count(scanned) << " sequences"
          << (opts.up_to_aut ? ", orbit representatives" : "") << "; window [" << lo2 << ", "
          << n - 1 << "])";
    }
    entry.details = det.str();
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

struct GroupSearchCache {
  const AbelianGroup& group;
  const SearchOptions& options;
  std::map<std::string, InvariantResult> memo;

  const InvariantResult& get(const LengthSpec& spec) {
    auto key = spec.to_string();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, s_l(group, spec, options)).first;
    return it->second;
  }
};

}  // namespace

Report verify_group(const AbelianGroup& g, const VerifyOptions& opts) {
  Report rep;
  rep.group = g;
  auto want = [&](std::string_view suite) { return opts.suite == "all" || opts.suite == suite; };
  GroupSearchCache cache{g, opts.search, {}};

  const int n = g.exponent();
  const auto p = g.prime();
  const PGroupFormulas pg = p ? cf_pgroup(g, *p) : PGroupFormulas{};

  auto add = [&](std::string check, std::string claim, CheckStatus status, std::string details,
                 std::optional<Sequence> ce = std::nullopt) {
    rep.entries.push_back({std::move(check), std::move(claim), status, std::move(details), std::move(ce)});
  };
  auto equality_entry = [&](std::string check, std::string claim, const InvariantResult& res,
                            long long expected) {
    if (!res.exhaustive) {
      add(std::move(check), std::move(claim), CheckStatus::Capped,
          "search capped at value >= " + std::to_string(res.value));
      return;
    }
    bool ok = res.value == expected;
    add(std::move(check), std::move(claim), ok ? CheckStatus::Pass : CheckStatus::Fail,
        "search " + std::to_string(res.value) + " vs formula " + std::to_string(expected),
        ok ? std::nullopt : std::make_optional(res.certificate));
  };

  if (want("oracles")) {
    const InvariantResult& dres = cache.get(LengthSpec::all());
    const long long ds = d_star(g);
    if (!dres.exhaustive) {
      add("dstar_le_davenport", "D*(G) <= D(G)", CheckStatus::Capped,
          "search capped at value >= " + std::to_string(dres.value));
    } else {
      bool ok = ds <= dres.value;
      add("dstar_le_davenport", "D*(G) <= D(G)", ok ? CheckStatus::Pass : CheckStatus::Fail,
          "D* = " + std::to_string(ds) + ", search D = " + std::to_string(dres.value),
          ok ? std::nullopt : std::make_optional(dres.certificate));
    }
    if (p)
      equality_entry("davenport_equals_dstar", "D(G) = D*(G) for p-groups", dres, ds);
    else
      add("davenport_equals_dstar", "D(G) = D*(G) for p-groups", CheckStatus::Inapplicable,
          "not a p-group");

    if (g.rank() <= 2) {
      long long n1 = g.rank() == 2 ? g.invariant_factors()[0] : 1;
      long long n2 = g.rank() >= 1 ? g.invariant_factors().back() : 1;
      Rank2Formulas r2 = cf_rank2(n1, n2);
      equality_entry("rank2_eta", "eta = 2 n1 + n2 - 2 for rank <= 2",
                     cache.get(LengthSpec::range(1, n)), r2.eta);
      equality_entry("rank2_s", "s = 2 n1 + 2 n2 - 3 for rank <= 2",
                     cache.get(LengthSpec::exact(n)), r2.s);
    } else {
      add("rank2_eta", "eta = 2 n1 + n2 - 2 for rank <= 2", CheckStatus::Inapplicable, "rank > 2");
      add("rank2_s", "s = 2 n1 + 2 n2 - 3 for rank <= 2", CheckStatus::Inapplicable, "rank > 2");
    }

    if (p) {
      if (pg.eta())
        equality_entry("pgroup_eta_main", "eta = 2D - exp for p-groups with D <= 2 exp - 1",
                       cache.get(LengthSpec::range(1, n)), *pg.eta());
      else
        add("pgroup_eta_main", "eta = 2D - exp for p-groups with D <= 2 exp - 1",
            CheckStatus::Inapplicable, "D(G) > 2 exp(G) - 1");
      for (int i = 1; i <= n; ++i)
        equality_entry("zeta_value[i=" + std::to_string(i) + "]",
                       "zeta_i = D + i - 1 for p-groups",
                       cache.get(LengthSpec::residue_up_from(i)), pg.zeta(i));
      equality_entry("s_multiples_value", "s_{nN+} = D + n - 1 for p-groups",
                     cache.get(LengthSpec::multiples()), pg.s_multiples());
      if (pg.large_exponent()) {
        const long long upper = std::min<long long>(n, pg.eta_i_max());
        for (long long i = 1; i <= upper; ++i)
          equality_entry("eta_i_value[i=" + std::to_string(i) + "]",
                         "eta_i = 2D - exp + (i-1) on the corollary range",
                         cache.get(LengthSpec::range(static_cast<int>(i), n)), *pg.eta_i(i));
      }
      if (*p == 2 && pg.large_exponent()) {
        const InvariantResult& eres = cache.get(LengthSpec::range(1, n));
        const InvariantResult& sres = cache.get(LengthSpec::exact(n));
        if (!eres.exhaustive || !sres.exhaustive) {
          add("p2_chain_observation",
              "2D - 1 <= eta + exp - 1 <= s <= D + 2 exp - 2 (stated for odd p; observed at p = 2)",
              CheckStatus::Capped, "search capped");
        } else {
          bool holds = 2 * pg.davenport - 1 <= eres.value + n - 1 &&
                       eres.value + n - 1 <= sres.value && sres.value <= pg.davenport + 2 * n - 2;
          add("p2_chain_observation",
              "2D - 1 <= eta + exp - 1 <= s <= D + 2 exp - 2 (stated for odd p; observed at p = 2)",
              CheckStatus::Pass,
              std::string(holds ? "chain holds" : "chain DOES NOT hold") +
                  " at p = 2 (observation only): eta = " + std::to_string(eres.value) +
                  ", s = " + std::to_string(sres.value) + ", D = " + std::to_string(pg.davenport));
        }
      }
    } else {
      add("pgroup_eta_main", "eta = 2D - exp for p-groups with D <= 2 exp - 1",
          CheckStatus::Inapplicable, "not a p-group");
    }
  }

  if (want("bounds")) {
    const InvariantResult& dres = cache.get(LengthSpec::all());
    const InvariantResult& eres = cache.get(LengthSpec::range(1, n));
    const InvariantResult& sres = cache.get(LengthSpec::exact(n));
    if (!dres.exhaustive) {
      add("bounds", "interval bounds on eta(G) and s(G)", CheckStatus::Capped,
          "Davenport search capped; bounds not evaluated");
    } else {
      EtaBoundsInput input;
      input.davenport = dres.value;
      input.exponent = n;
      input.odd_p_group = p.has_value() && *p % 2 == 1;
      if (g.rank() >= 1) {
        std::vector<int> hf(g.invariant_factors().begin(), g.invariant_factors().end() - 1);
        AbelianGroup h = make_group(hf);
        input.subgroup_davenport = s_l(h, LengthSpec::all(), opts.search).value;
        input.subgroup_exponent_divides = true;  // invariant-factor chain
      }
      {
        // split off the smallest Sylow component when more than one prime is present
        std::vector<int> hs, qs;
        if (auto prime_of = [&](int f) {
              int q = 2;
              while (f % q != 0) ++q;
              return q;
            };
            !p && !g.is_trivial()) {
          int pmin = prime_of(g.invariant_factors().front());
          for (int f : g.invariant_factors()) {
            int pe = 1;
            while (f % pmin == 0) {
              f /= pmin;
              pe *= pmin;
            }
            if (pe > 1) hs.push_back(pe);
            if (f > 1) qs.push_back(f);
          }
          AbelianGroup h = make_group(hs), q = make_group(qs);
          EtaBoundsInput::Inductive ind;
          ind.eta_subgroup = s_l(h, LengthSpec::range(1, h.exponent()), opts.search).value;
          ind.eta_quotient = s_l(q, LengthSpec::range(1, q.exponent()), opts.search).value;
          ind.exp_quotient = q.exponent();
          input.inductive = ind;
          input.exponent_multiplicative = true;  // coprime direct summands
        }
      }
      for (const FormulaValue& bound : bounds_eta(input)) {
        const InvariantResult& target = bound.target == "s" ? sres : eres;
        if (!target.exhaustive) {
          add("bound_" + bound.name, bound.reason, CheckStatus::Capped,
              "search for " + bound.target + " capped");
          continue;
        }
        bool ok = (!bound.lo || *bound.lo <= target.value) && (!bound.hi || target.value <= *bound.hi);
        std::ostringstream det;
        det << bound.target << " = " << target.value << " in [";
        if (bound.lo) det << *bound.lo;
        det << ", ";
        if (bound.hi) det << *bound.hi;
        det << "]";
        add("bound_" + bound.name, bound.reason, ok ? CheckStatus::Pass : CheckStatus::Fail,
            det.str(), ok ? std::nullopt : std::make_optional(target.certificate));
      }
    }
  }

  if (want("chain"))
    for (auto& e : check_eta_chain(g, opts)) rep.entries.push_back(std::move(e));

  if (want("zss"))
    for (auto& e : check_short_zss_containment(g, opts.short_zss_i_max, opts))
      rep.entries.push_back(std::move(e));

  if (want("hunt")) {
    Gate gate = large_exponent_gate(g);
    if (!gate.ok) {
      add("conjecture_hunt", "final conjecture disjunction", CheckStatus::Inapplicable, gate.reason);
    } else {
      const long long ell_max = gate.pg.davenport + 1 - n;
      for (long long ell = 1; ell <= ell_max; ++ell)
        for (auto& e : hunt_conjecture(g, static_cast<int>(ell), opts.hunt_scan_extra, opts))
          rep.entries.push_back(std::move(e));
    }
  }

  return rep;
}

namespace {

void partitions_of(int k, int max_part, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (k == 0) {
    emit(cur);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(k - part, part, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> default_catalog() {
  std::vector<AbelianGroup> out;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    long long pk = p;
    for (int k = 1; pk <= 32; ++k, pk *= p) {
      std::vector<int> cur;
      partitions_of(k, k, cur, [&](const std::vector<int>& parts) {
        std::vector<int> factors;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
          int f = 1;
          for (int e = 0; e < *it; ++e) f *= p;
          factors.push_back(f);
        }
        out.push_back(make_group(factors));
      });
    }
  }
  out.push_back(make_group({6}));
  out.push_back(make_group({2, 12}));
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.invariant_factors() < b.invariant_factors();
  });
  return out;
}

}  // namespace zsum
