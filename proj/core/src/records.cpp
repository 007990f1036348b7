#include "zsum/records.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace zsum {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json sequence_json(const Sequence& s) {
  ordered_json arr = ordered_json::array();
  const AbelianGroup& g = s.group();
  for (auto [idx, cnt] : s.multiplicities()) {
    ordered_json rec = ordered_json::array();
    for (int c : g.element_at(idx).coords) rec.push_back(c);
    rec.push_back(cnt);
    arr.push_back(std::move(rec));
  }
  return arr;
}

Sequence sequence_from(const AbelianGroup& g, const ordered_json& arr) {
  Sequence seq(g);
  for (const auto& rec : arr) {
    if (!rec.is_array() || rec.size() != static_cast<size_t>(g.rank()) + 1)
      throw Error(ErrorKind::IncompatibleElement, "malformed sequence record");
    GroupElement e;
    for (int i = 0; i < g.rank(); ++i) e.coords.push_back(rec[static_cast<size_t>(i)].get<int>());
    int count = rec[static_cast<size_t>(g.rank())].get<int>();
    seq = seq.plus(static_cast<int>(g.index_of(e)), count);
  }
  return seq;
}

ordered_json result_json(const InvariantResult& r) {
  ordered_json j;
  j["group"] = r.group.to_string();
  j["spec"] = r.spec.to_string();
  j["value"] = r.value;
  j["exhaustive"] = r.exhaustive;
  j["certificate"] = sequence_json(r.certificate);
  j["stats"] = {{"nodes", r.stats.nodes},
                {"symmetry_pruned", r.stats.symmetry_pruned},
                {"wall_seconds", r.stats.wall_seconds}};
  return j;
}

InvariantResult result_from(const ordered_json& j) {
  InvariantResult r;
  r.group = parse_group(j.at("group").get<std::string>());
  r.spec = LengthSpec::parse(j.at("spec").get<std::string>());
  r.value = j.at("value").get<int>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.certificate = sequence_from(r.group, j.at("certificate"));
  if (j.contains("stats")) {
    r.stats.nodes = j["stats"].value("nodes", 0ull);
    r.stats.symmetry_pruned = j["stats"].value("symmetry_pruned", 0ull);
    r.stats.wall_seconds = j["stats"].value("wall_seconds", 0.0);
  }
  return r;
}

ordered_json entry_json(const AbelianGroup& g, const ReportEntry& e) {
  (void)g;
  ordered_json j;
  j["check"] = e.check;
  j["claim"] = e.claim;
  j["status"] = std::string(to_string(e.status));
  j["details"] = e.details;
  j["counterexample"] = e.counterexample ? sequence_json(*e.counterexample) : ordered_json(nullptr);
  return j;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["group"] = r.group.to_string();
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(r.group, e));
  j["entries"] = std::move(entries);
  return j;
}

Report report_from(const ordered_json& j) {
  Report r;
  r.group = parse_group(j.at("group").get<std::string>());
  for (const auto& je : j.at("entries")) {
    ReportEntry e;
    e.check = je.at("check").get<std::string>();
    e.claim = je.at("claim").get<std::string>();
    auto status = check_status_from_string(je.at("status").get<std::string>());
    if (!status) throw Error(ErrorKind::InvalidSpec, "unknown report status");
    e.status = *status;
    e.details = je.at("details").get<std::string>();
    if (!je.at("counterexample").is_null()) e.counterexample = sequence_from(r.group, je["counterexample"]);
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

std::string sanitize(std::string_view key) {
  std::string out;
  for (char c : key)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == ',' || c == '-' || c == '_' || c == '.')
               ? c
               : '-';
  return out;
}

}  // namespace

std::string sequence_to_json(const Sequence& s, int indent) { return dump(sequence_json(s), indent); }

Sequence sequence_from_json(const AbelianGroup& g, const std::string& text) {
  return sequence_from(g, ordered_json::parse(text));
}

std::string result_to_json(const InvariantResult& r, int indent) { return dump(result_json(r), indent); }

InvariantResult result_from_json(const std::string& text) {
  return result_from(ordered_json::parse(text));
}

std::string report_to_json(const Report& r, int indent) { return dump(report_json(r), indent); }

Report report_from_json(const std::string& text) { return report_from(ordered_json::parse(text)); }

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::result_key(const AbelianGroup& g, const LengthSpec& spec) {
  return sanitize(g.to_string()) + "__" + sanitize(spec.to_string());
}

std::optional<InvariantResult> ResultCache::load(const AbelianGroup& g, const LengthSpec& spec) const {
  auto path = dir_ / "results" / (result_key(g, spec) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    InvariantResult r = result_from_json(text);
    if (!(r.group == g) || !(r.spec == spec)) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are treated as misses
  }
}

void ResultCache::store(const InvariantResult& r) const {
  std::filesystem::create_directories(dir_ / "results");
  auto path = dir_ / "results" / (result_key(r.group, r.spec) + ".json");
  std::ofstream out(path);
  out << result_to_json(r, 2) << '\n';
}

void ResultCache::store_report(const Report& r) const {
  std::filesystem::create_directories(dir_ / "reports");
  auto path = dir_ / "reports" / (sanitize(r.group.to_string()) + ".json");
  std::ofstream out(path);
  out << report_to_json(r, 2) << '\n';
}

std::vector<Report> ResultCache::load_reports() const {
  std::vector<Report> out;
  auto dir = dir_ / "reports";
  if (!std::filesystem::exists(dir)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      out.push_back(report_from_json(text));
    } catch (const std::exception&) {
      // skip unreadable files
    }
  }
  return out;
}

}  // namespace zsum
