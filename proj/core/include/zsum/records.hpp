#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zsum/search.hpp"
#include "zsum/verify.hpp"

namespace zsum {

// JSON record forms with a stable field order, suitable for diff-based
// regression testing. Sequences serialize as a list of [coords..., count]
// records in canonical element order.

std::string sequence_to_json(const Sequence& s, int indent = -1);
Sequence sequence_from_json(const AbelianGroup& g, const std::string& text);

std::string result_to_json(const InvariantResult& r, int indent = -1);
InvariantResult result_from_json(const std::string& text);

std::string report_to_json(const Report& r, int indent = -1);
Report report_from_json(const std::string& text);

// File-backed store keyed by (group string, spec string). Results land in
// results/, verification reports in reports/.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<InvariantResult> load(const AbelianGroup& g, const LengthSpec& spec) const;
  void store(const InvariantResult& r) const;

  void store_report(const Report& r) const;
  std::vector<Report> load_reports() const;

  static std::string result_key(const AbelianGroup& g, const LengthSpec& spec);

 private:
  std::filesystem::path dir_;
};

}  // namespace zsum
