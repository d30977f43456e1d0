#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "parstab/cover.hpp"
#include "parstab/hurwitz.hpp"
#include "parstab/parabolic.hpp"

namespace parstab {

// Cover file format, version 1:
// {
//   "version": 1,
//   "base_genus": 0,
//   "degree": 3,
//   "characteristic": 0,
//   "handles": [ {"a": "(1 2)", "b": "()"} ],
//   "branch":  [ {"label": "y1", "sigma": "(1 2)"} ]
// }
// Permutations are cycle-notation strings or 1-based image arrays.
Cover cover_from_json(const nlohmann::json& j);
nlohmann::json cover_to_json(const Cover& d);

ParabolicData parabolic_from_json(const nlohmann::json& j);
nlohmann::json parabolic_to_json(const ParabolicData& p);

PullbackProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const PullbackProfile& p);

// Reads and parses a whole file; throws ParseError on any malformation.
nlohmann::json load_json_file(const std::string& path);
Cover load_cover_file(const std::string& path);

struct AnalyzeOptions {
  bool run_closure_check = true;
  std::size_t closure_cap = 10080;
};

// Full analysis report as canonical JSON: object keys sorted, rationals as
// reduced "num/den" strings, deterministic array orders. Byte-identical
// across runs.
nlohmann::json analysis_report(const Cover& d, const AnalyzeOptions& opt = {});
std::string render_analysis_text(const nlohmann::json& report);

// Enumeration report: one row per conjugacy class (canonical tuple, group
// order, verdict, certificates) plus a verdict histogram.
nlohmann::json census_report(const HurwitzQuery& query, const HurwitzCaps& caps,
                             int threads = 0);
std::string render_census_text(const nlohmann::json& report);

nlohmann::json pullback_report(const ParabolicData& data, const PullbackProfile& profile);
std::string render_pullback_text(const nlohmann::json& report);

std::string dump_canonical(const nlohmann::json& j);  // 2-space indent + newline

}  // namespace parstab
