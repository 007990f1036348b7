#include "zsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "zsum/automorphisms.hpp"

namespace zsum {

namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
  const AbelianGroup* group = nullptr;
  BitVec lmask;
  int cap = 0;
  int order = 0;
  std::uint64_t node_budget = 0;
  bool has_deadline = false;
  Clock::time_point deadline;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> best_length{0};  // monotone progress register
  std::atomic<bool> abort{false};

  void note_nodes(std::uint64_t batch) {
    std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (node_budget && total > node_budget) abort.store(true, std::memory_order_relaxed);
    if (has_deadline && Clock::now() > deadline) abort.store(true, std::memory_order_relaxed);
  }
};

struct SubtreeTask {
  std::vector<int> prefix;  // non-decreasing element indices
};

struct SubtreeOutcome {
  int max_length = -1;
  std::vector<int> certificate;
  bool aborted = false;
};

// Serial DFS below one task prefix. Tables are kept per depth so a child
// reuses its parent's DP table extended by a single element.
class SubtreeExplorer {
 public:
  SubtreeExplorer(SharedState& shared) : shared_(shared) {}

  SubtreeOutcome run(const SubtreeTask& task) {
    out_ = SubtreeOutcome{};
    path_ = task.prefix;
    ensure_tables(static_cast<int>(task.prefix.size()) + 1);
    tables_[0].reset();
    for (size_t d = 0; d < task.prefix.size(); ++d)
      SubsetSumDp::extend(tables_[d], tables_[d + 1], task.prefix[d]);
    dfs(static_cast<int>(task.prefix.size()), task.prefix.empty() ? 0 : task.prefix.back());
    flush();
    return std::move(out_);
  }

 private:
  void ensure_tables(int depth) {
    while (static_cast<int>(tables_.size()) <= depth)
      tables_.emplace_back(*shared_.group, shared_.cap);
  }

  void flush() {
    if (pending_nodes_) {
      shared_.note_nodes(pending_nodes_);
      pending_nodes_ = 0;
    }
  }

  void dfs(int depth, int min_index) {
    if (++pending_nodes_ >= 1024) flush();
    if (depth > out_.max_length) {
      out_.max_length = depth;
      out_.certificate = path_;
      int prev = shared_.best_length.load(std::memory_order_relaxed);
      while (depth > prev &&
             !shared_.best_length.compare_exchange_weak(prev, depth, std::memory_order_relaxed)) {
      }
    }
    if (depth == shared_.cap) return;  // cannot extend; exhaustiveness handled by caller
    if (shared_.abort.load(std::memory_order_relaxed)) {
      out_.aborted = true;
      return;
    }
    ensure_tables(depth + 1);
    for (int g = min_index; g < shared_.order; ++g) {
      if (tables_[depth].extension_hits(g, shared_.lmask)) continue;
      SubsetSumDp::extend(tables_[depth], tables_[depth + 1], g);
      path_.push_back(g);
      dfs(depth + 1, g);
      path_.pop_back();
      if (out_.aborted) return;
    }
  }

  SharedState& shared_;
  std::vector<SubsetSumDp> tables_;
  std::vector<int> path_;
  SubtreeOutcome out_;
  std::uint64_t pending_nodes_ = 0;
};

}  // namespace

int default_length_cap(const AbelianGroup& g) {
  long long d_star = 1;
  for (int f : g.invariant_factors()) d_star += f - 1;
  return static_cast<int>(4ll * g.exponent() + d_star);
}

MaxFreeResult max_l_free(const AbelianGroup& g, const LengthSpec& l, const SearchOptions& opts) {
  if (g.order() > opts.order_cap)
    throw Error(ErrorKind::GroupTooLarge, "group order " + std::to_string(g.order()) +
                                              " exceeds search cap " + std::to_string(opts.order_cap));
  const auto t0 = Clock::now();
  const int cap = opts.length_cap > 0 ? opts.length_cap : default_length_cap(g);
  if (g.order() * (cap / 64 + 1) * 8 > (32ll << 20))
    throw Error(ErrorKind::GroupTooLarge,
                "group order x length cap needs more DP memory than the search supports");

  SharedState shared;
  shared.group = &g;
  shared.lmask = l.mask(g.exponent(), cap + 1);
  shared.cap = cap;
  shared.order = static_cast<int>(g.order());
  shared.node_budget = opts.node_budget;
  if (opts.time_budget_seconds > 0) {
    shared.has_deadline = true;
    shared.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(opts.time_budget_seconds));
  }

  const std::vector<Permutation>* perms = nullptr;
  if (opts.symmetry && g.order() <= kDefaultAutomorphismOrderCap) {
    const auto& closure = automorphism_closure_cached(g);
    if (!closure.perms.empty()) perms = &closure.perms;
  }

  // Phase 1: serial expansion to the split depth. Shallow nodes are recorded
  // as candidates; surviving nodes at the split depth become worker tasks.
  SearchStats stats;
  int best = 0;
  std::vector<int> best_cert;
  std::vector<SubtreeTask> tasks;
  const int split = std::min(std::max(opts.split_depth, 0), cap);

  {
    std::vector<SubsetSumDp> tables;
    for (int d = 0; d <= split; ++d) tables.emplace_back(g, cap);
    std::vector<int> path;
    auto expand = [&](auto&& self, int depth, int min_index) -> void {
      if (depth == split && depth < cap) {
        tasks.push_back({path});  // node counted by the worker exploring it
        return;
      }
      ++stats.nodes;
      if (depth > best) {
        best = depth;
        best_cert = path;
      }
      if (depth == split) return;  // split == cap: no extension possible
      for (int cand = min_index; cand < shared.order; ++cand) {
        if (tables[depth].extension_hits(cand, shared.lmask)) continue;
        if (perms && depth < opts.symmetry_depth) {
          path.push_back(cand);
          bool canonical = is_canonical_tuple(path, *perms);
          path.pop_back();
          if (!canonical) {
            ++stats.symmetry_pruned;
            continue;
          }
        }
        SubsetSumDp::extend(tables[depth], tables[depth + 1], cand);
        path.push_back(cand);
        self(self, depth + 1, cand);
        path.pop_back();
      }
    };
    expand(expand, 0, 0);
  }
  shared.best_length.store(best, std::memory_order_relaxed);

  // Phase 2: workers pull subtree tasks in order; outcomes land in a slot per
  // task so the merge below is schedule-independent.
  std::vector<SubtreeOutcome> outcomes(tasks.size());
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(tasks.size())));
  if (!tasks.empty()) {
    std::atomic<size_t> next{0};
    auto work = [&] {
      SubtreeExplorer explorer(shared);
      for (;;) {
        size_t idx = next.fetch_add(1, std::memory_order_relaxed);
        if (idx >= tasks.size()) break;
        outcomes[idx] = explorer.run(tasks[idx]);
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(threads));
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }

  // Phase 3: deterministic merge. Tasks are in lexicographic prefix order and
  // each subtree reports its lexicographically least maximum, so the first
  // subtree achieving the global maximum holds the canonical certificate.
  bool aborted = false;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    aborted = aborted || o.aborted;
    if (o.max_length > best) {
      best = o.max_length;
      best_cert = o.certificate;
    }
  }

  MaxFreeResult result{best, Sequence::from_indices(g, best_cert), true, stats};
  result.stats.nodes = stats.nodes + shared.nodes.load();
  result.stats.symmetry_pruned = stats.symmetry_pruned;
  result.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  result.exhaustive = !aborted && best < cap;
  return result;
}

InvariantResult s_l(const AbelianGroup& g, const LengthSpec& l, const SearchOptions& opts) {
  MaxFreeResult mf = max_l_free(g, l, opts);
  InvariantResult res;
  res.group = g;
  res.spec = l;
  res.value = mf.max_length + 1;
  res.exhaustive = mf.exhaustive;
  res.certificate = std::move(mf.certificate);
  res.stats = mf.stats;
  // the certificate must itself avoid L; cheap and worth checking every time
  if (res.certificate.length() != res.value - 1 ||
      has_zero_sum_in(res.certificate, l, std::max(kDefaultDpLengthCap, res.certificate.length())))
    throw std::logic_error("search produced an invalid certificate");
  return res;
}

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::Davenport: return "davenport";
    case Invariant::Eta: return "eta";
    case Invariant::EgzS: return "egz";
    case Invariant::Zeta: return "zeta";
    case Invariant::EtaI: return "eta_i";
  }
  return {};
}

std::optional<Invariant> invariant_from_name(std::string_view name) {
  if (name == "davenport") return Invariant::Davenport;
  if (name == "eta") return Invariant::Eta;
  if (name == "egz") return Invariant::EgzS;
  if (name == "zeta") return Invariant::Zeta;
  if (name == "eta_i") return Invariant::EtaI;
  return std::nullopt;
}

LengthSpec invariant_spec(Invariant inv, int exponent, std::optional<int> i) {
  switch (inv) {
    case Invariant::Davenport:
      return LengthSpec::all();
    case Invariant::Eta:
      return LengthSpec::range(1, exponent);
    case Invariant::EgzS:
      return LengthSpec::exact(exponent);
    case Invariant::Zeta:
    case Invariant::EtaI: {
      if (!i || *i < 1 || *i > exponent)
        throw Error(ErrorKind::InvalidIndex,
                    "invariant index must lie in [1, exp(G)] = [1, " + std::to_string(exponent) + "]");
      return inv == Invariant::Zeta ? LengthSpec::residue_up_from(*i) : LengthSpec::range(*i, exponent);
    }
  }
  throw Error(ErrorKind::InvalidIndex, "unknown invariant");
}

InvariantResult named_invariant(const AbelianGroup& g, Invariant inv, std::optional<int> i,
                                const SearchOptions& opts) {
  return s_l(g, invariant_spec(inv, g.exponent(), i), opts);
}

}  // namespace zsum
