#include "zsum/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zsum/closed_forms.hpp"
#include "zsum/records.hpp"

namespace zsum {

using ordered_json = nlohmann::ordered_json;

namespace {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("ZSUM_CACHE_DIR"); env && *env) return env;
  return ".zsum-cache";
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threads", cfg.threads, "Search worker count")->check(CLI::PositiveNumber);
  sub->add_option("--budget", cfg.budget_seconds, "Wall-clock budget per search, in seconds")
      ->check(CLI::PositiveNumber);
  auto* cap = sub->add_option("--cap", "Override the search length cap");
  cap->check(CLI::PositiveNumber)->each([&cfg](const std::string& v) { cfg.length_cap = std::stoi(v); });
  sub->add_option("--cache", "Cache directory (env ZSUM_CACHE_DIR)")
      ->each([&cfg](const std::string& v) { cfg.cache_dir = v; });
  sub->add_flag("--no-cache", cfg.no_cache, "Skip reading and writing the cache");
  sub->add_flag("--no-symmetry", cfg.no_symmetry, "Disable automorphism orbit pruning");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

RunConfig parse_with_cli11(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();

  CLI::App app{"exact zero-sum invariants of finite abelian groups"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute one invariant s_L(G) by exhaustive search");
  compute->add_option("--group", cfg.group, "Group as comma-separated invariant factors, e.g. 2,4")
      ->required();
  compute->add_option("--invariant", "Named invariant")
      ->check(CLI::IsMember({"davenport", "eta", "egz", "zeta", "eta_i"}))
      ->each([&cfg](const std::string& v) { cfg.invariant = v; });
  compute->add_option("--i", "Index for zeta / eta_i")
      ->each([&cfg](const std::string& v) { cfg.index_i = std::stoi(v); });
  compute->add_option("--spec", "Length spec: all | exact:k | range:a,b | multiples | resup:i")
      ->each([&cfg](const std::string& v) { cfg.spec = v; });
  add_common_flags(compute, cfg);

  auto* verify = app.add_subcommand("verify", "Run the theorem verification suite");
  verify->add_option("--group", cfg.group, "Group to verify (defaults to the whole catalog)");
  verify->add_option("--suite", "Which checks to run")
      ->check(CLI::IsMember({"all", "oracles", "bounds", "chain", "zss", "hunt"}))
      ->each([&cfg](const std::string& v) { cfg.suite = v; });
  verify->add_flag("--up-to-aut,!--no-up-to-aut", cfg.up_to_aut,
                   "Enumerate one representative per automorphism orbit (default on)");
  add_common_flags(verify, cfg);

  auto* hunt = app.add_subcommand("hunt", "Hunt for counterexamples to the final conjecture");
  hunt->add_option("--group", cfg.group, "Group to scan")->required();
  hunt->add_option("--ell", "Window parameter, in [1, D + 1 - exp]")
      ->required()
      ->each([&cfg](const std::string& v) { cfg.ell = std::stoi(v); });
  hunt->add_option("--scan-extra", cfg.scan_extra, "Additionally scan this many longer lengths")
      ->check(CLI::NonNegativeNumber);
  hunt->add_flag("--up-to-aut,!--no-up-to-aut", cfg.up_to_aut,
                 "Enumerate one representative per automorphism orbit (default on)");
  add_common_flags(hunt, cfg);

  auto* report = app.add_subcommand("report", "Summarize cached verification reports");
  add_common_flags(report, cfg);

  std::vector<const char*> argv;
  argv.push_back("zsum");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (const CLI::App* sub : app.get_subcommands({}))
      if (sub->parsed()) text = sub->help();
    throw HelpRequested(text);
  }

  cfg.command = app.get_subcommands().front()->get_name();

  if (cfg.command == "compute") {
    if (cfg.invariant.has_value() == cfg.spec.has_value())
      throw UsageError("compute requires exactly one of --invariant or --spec");
    if (cfg.invariant && (*cfg.invariant == "zeta" || *cfg.invariant == "eta_i") && !cfg.index_i)
      throw UsageError("--invariant " + *cfg.invariant + " requires --i");
  }
  if (!cfg.group.empty()) {
    try {
      (void)parse_group(cfg.group);
    } catch (const Error& e) {
      throw UsageError(std::string("bad --group: ") + e.what());
    }
  }
  return cfg;
}

std::string format_sequence(const Sequence& s) {
  if (s.empty()) return "(empty)";
  std::ostringstream os;
  bool first = true;
  for (auto [idx, cnt] : s.multiplicities()) {
    if (!first) os << ' ';
    first = false;
    os << '(';
    const auto coords = s.group().element_at(idx).coords;
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) os << ',';
      os << coords[i];
    }
    os << ')';
    if (cnt > 1) os << 'x' << cnt;
  }
  return os.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Prediction {
  std::string name;
  long long value;
  bool exact;  // false: bound annotation only
};

std::vector<Prediction> oracle_predictions(const AbelianGroup& g, const LengthSpec& spec) {
  std::vector<Prediction> out;
  const int n = g.exponent();
  const auto p = g.prime();
  const PGroupFormulas pg = p ? cf_pgroup(g, *p) : PGroupFormulas{};
  Rank2Formulas r2;
  if (g.rank() <= 2)
    r2 = cf_rank2(g.rank() == 2 ? g.invariant_factors()[0] : 1,
                  g.rank() >= 1 ? g.invariant_factors().back() : 1);

  using Kind = LengthSpec::Kind;
  switch (spec.kind()) {
    case Kind::All:
      if (p)
        out.push_back({"D = D* (p-group)", d_star(g), true});
      else if (g.rank() <= 2)
        out.push_back({"D = D* (rank <= 2)", d_star(g), true});
      else
        out.push_back({"D >= D* (lower bound)", d_star(g), false});
      break;
    case Kind::Range:
      if (spec.a() == 1 && spec.b() == n) {
        if (r2.applicable) out.push_back({"eta = 2n1 + n2 - 2 (rank <= 2)", r2.eta, true});
        if (pg.applicable && pg.eta())
          out.push_back({"eta = 2D - n (p-group, D <= 2n-1)", *pg.eta(), true});
      } else if (spec.b() == n && pg.applicable && pg.large_exponent()) {
        if (auto v = pg.eta_i(spec.a()))
          out.push_back({"eta_i = 2D - n + (i-1) (p-group, D <= 2n-1)", *v, true});
      }
      break;
    case Kind::Exact:
      if (spec.a() == n && r2.applicable)
        out.push_back({"s = 2n1 + 2n2 - 3 (rank <= 2)", r2.s, true});
      break;
    case Kind::Multiples:
      if (pg.applicable) out.push_back({"s_{nN+} = D + n - 1 (p-group)", pg.s_multiples(), true});
      break;
    case Kind::ResidueUpFrom:
      if (pg.applicable && spec.a() <= n)
        out.push_back({"zeta_i = D + i - 1 (p-group)", pg.zeta(spec.a()), true});
      break;
  }
  return out;
}

int entries_exit_code(const std::vector<ReportEntry>& entries) {
  bool fail = false, capped = false;
  for (const auto& e : entries) {
    fail = fail || e.status == CheckStatus::Fail;
    capped = capped || e.status == CheckStatus::Capped;
  }
  return fail ? 1 : (capped ? 3 : 0);
}

void print_entries_table(std::ostream& out, const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries) {
    out << "  [" << std::setw(12) << std::left << to_string(e.status) << "] " << e.check << ": "
        << e.details;
    if (e.counterexample) out << "  counterexample: " << format_sequence(*e.counterexample);
    out << '\n';
  }
}

void print_entries_csv(std::ostream& out, const std::string& group,
                       const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries)
    out << csv_escape(group) << ',' << csv_escape(e.check) << ','
        << csv_escape(std::string(to_string(e.status))) << ',' << csv_escape(e.details) << '\n';
}

int run_compute(const RunConfig& cfg, std::ostream& out) {
  AbelianGroup g = parse_group(cfg.group);
  LengthSpec spec = cfg.spec ? LengthSpec::parse(*cfg.spec)
                             : invariant_spec(*invariant_from_name(*cfg.invariant), g.exponent(),
                                              cfg.index_i);
  SearchOptions sopts;
  sopts.length_cap = cfg.length_cap.value_or(0);
  sopts.threads = cfg.threads;
  sopts.symmetry = !cfg.no_symmetry;
  sopts.time_budget_seconds = cfg.budget_seconds;

  ResultCache cache(cfg.cache_dir);
  std::optional<InvariantResult> result;
  bool cache_hit = false;
  if (!cfg.no_cache) {
    result = cache.load(g, spec);
    cache_hit = result.has_value();
  }
  if (!result) {
    result = s_l(g, spec, sopts);
    if (!cfg.no_cache) cache.store(*result);
  }
  auto predictions = oracle_predictions(g, spec);

  if (cfg.format == "json") {
    ordered_json j = ordered_json::parse(result_to_json(*result));
    ordered_json preds = ordered_json::array();
    for (const auto& p : predictions)
      preds.push_back({{"name", p.name}, {"value", p.value}, {"exact", p.exact}});
    j["predictions"] = std::move(preds);
    j["cache_hit"] = cache_hit;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "group,spec,value,exhaustive\n";
    out << csv_escape(g.to_string()) << ',' << csv_escape(spec.to_string()) << ',' << result->value
        << ',' << (result->exhaustive ? "true" : "false") << '\n';
  } else {
    out << "group " << g.to_string() << "  spec " << spec.to_string() << '\n';
    out << "s_L = " << result->value << (result->exhaustive ? "" : "  [capped: lower bound only]")
        << (cache_hit ? "  [cached]" : "") << '\n';
    out << "extremal certificate (length " << result->certificate.length()
        << "): " << format_sequence(result->certificate) << '\n';
    for (const auto& p : predictions)
      out << "oracle " << p.name << ": " << p.value << (p.exact ? "" : " (bound)") << '\n';
    if (!cache_hit)
      out << "nodes " << result->stats.nodes << ", symmetry pruned " << result->stats.symmetry_pruned
          << ", " << std::fixed << std::setprecision(3) << result->stats.wall_seconds << "s\n";
  }
  return result->exhaustive ? 0 : 3;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions vopts;
  vopts.search.length_cap = cfg.length_cap.value_or(0);
  vopts.search.threads = cfg.threads;
  vopts.search.symmetry = !cfg.no_symmetry;
  vopts.search.time_budget_seconds = cfg.budget_seconds;
  vopts.suite = cfg.suite.value_or("all");
  vopts.up_to_aut = cfg.up_to_aut;
  return vopts;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<AbelianGroup> groups;
  if (cfg.group.empty())
    groups = default_catalog();
  else
    groups.push_back(parse_group(cfg.group));
  VerifyOptions vopts = verify_options(cfg);
  ResultCache cache(cfg.cache_dir);

  std::vector<Report> reports;
  for (const auto& g : groups) {
    reports.push_back(verify_group(g, vopts));
    if (!cfg.no_cache) cache.store_report(reports.back());
  }

  int exit_code = 0;
  if (cfg.format == "json") {
    if (reports.size() == 1) {
      out << report_to_json(reports.front(), 2) << '\n';
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(ordered_json::parse(report_to_json(r)));
      out << arr.dump(2) << '\n';
    }
  } else if (cfg.format == "csv") {
    out << "group,check,status,details\n";
    for (const auto& r : reports) print_entries_csv(out, r.group.to_string(), r.entries);
  } else {
    for (const auto& r : reports) {
      size_t pass = 0, fail = 0, inap = 0, capped = 0;
      for (const auto& e : r.entries) {
        pass += e.status == CheckStatus::Pass;
        fail += e.status == CheckStatus::Fail;
        inap += e.status == CheckStatus::Inapplicable;
        capped += e.status == CheckStatus::Capped;
      }
      out << "group " << r.group.to_string() << ": " << pass << " pass, " << fail << " fail, "
          << inap << " inapplicable, " << capped << " capped\n";
      print_entries_table(out, r.entries);
    }
  }
  for (const auto& r : reports) exit_code = std::max(exit_code, entries_exit_code(r.entries));
  return exit_code;
}

int run_hunt(const RunConfig& cfg, std::ostream& out) {
  AbelianGroup g = parse_group(cfg.group);
  VerifyOptions vopts = verify_options(cfg);
  auto entries = hunt_conjecture(g, cfg.ell.value_or(1), cfg.scan_extra, vopts);
  Report rep{g, entries};
  if (cfg.format == "json") {
    out << report_to_json(rep, 2) << '\n';
  } else if (cfg.format == "csv") {
    out << "group,check,status,details\n";
    print_entries_csv(out, g.to_string(), entries);
  } else {
    out << "group " << g.to_string() << " hunt ell=" << cfg.ell.value_or(1) << '\n';
    print_entries_table(out, entries);
  }
  return entries_exit_code(entries);
}

int run_report(const RunConfig& cfg, std::ostream& out) {
  ResultCache cache(cfg.cache_dir);
  auto reports = cache.load_reports();
  int exit_code = 0;
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(ordered_json::parse(report_to_json(r)));
    out << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "group,check,status,details\n";
    for (const auto& r : reports) print_entries_csv(out, r.group.to_string(), r.entries);
  } else {
    out << std::setw(12) << std::left << "group" << std::setw(7) << "pass" << std::setw(7) << "fail"
        << std::setw(14) << "inapplicable" << std::setw(7) << "capped" << '\n';
    size_t tp = 0, tf = 0, ti = 0, tc = 0;
    for (const auto& r : reports) {
      size_t pass = 0, fail = 0, inap = 0, capped = 0;
      for (const auto& e : r.entries) {
        pass += e.status == CheckStatus::Pass;
        fail += e.status == CheckStatus::Fail;
        inap += e.status == CheckStatus::Inapplicable;
        capped += e.status == CheckStatus::Capped;
      }
      out << std::setw(12) << std::left << r.group.to_string() << std::setw(7) << pass
          << std::setw(7) << fail << std::setw(14) << inap << std::setw(7) << capped << '\n';
      tp += pass;
      tf += fail;
      ti += inap;
      tc += capped;
      for (const auto& e : r.entries)
        if (e.status == CheckStatus::Fail)
          out << "  FAIL " << r.group.to_string() << " " << e.check << ": " << e.details << '\n';
    }
    out << std::setw(12) << std::left << "total" << std::setw(7) << tp << std::setw(7) << tf
        << std::setw(14) << ti << std::setw(7) << tc << '\n';
  }
  for (const auto& r : reports) exit_code = std::max(exit_code, entries_exit_code(r.entries));
  return exit_code;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  try {
    return parse_with_cli11(args);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  if (cfg.command == "compute") return run_compute(cfg, out);
  if (cfg.command == "verify") return run_verify(cfg, out);
  if (cfg.command == "hunt") return run_hunt(cfg, out);
  if (cfg.command == "report") return run_report(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what() << '\n';
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    return run(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace zsum
