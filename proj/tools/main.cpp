#include <cctype>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parstab/cover.hpp"
#include "parstab/errors.hpp"
#include "parstab/hurwitz.hpp"
#include "parstab/io.hpp"
#include "parstab/parabolic.hpp"

namespace {

using parstab::ParseError;

// Branch type lists like "[2,1]x4" or "[4],[4]" or "[2,2],[2,1,1]x2".
std::vector<std::vector<unsigned>> parse_types(const std::string& text) {
  std::vector<std::vector<unsigned>> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&](const char* what) {
    skip_space();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::string("expected ") + what + " in cycle type list");
    }
    unsigned long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned long long>(text[i] - '0');
      if (v > 1'000'000) throw ParseError("cycle type entry is out of range");
      ++i;
    }
    return static_cast<unsigned>(v);
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '[') throw ParseError("expected '[' in cycle type list");
    ++i;
    std::vector<unsigned> type;
    skip_space();
    while (i < text.size() && text[i] != ']') {
      type.push_back(read_uint("a cycle length"));
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      } else {
        break;
      }
    }
    skip_space();
    if (i >= text.size() || text[i] != ']') throw ParseError("unterminated cycle type");
    ++i;
    unsigned repeat = 1;
    skip_space();
    if (i < text.size() && text[i] == 'x') {
      ++i;
      repeat = read_uint("a repeat count");
      if (repeat == 0) throw ParseError("repeat count must be positive");
    }
    for (unsigned r = 0; r < repeat; ++r) out.push_back(type);
    skip_space();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ',' between cycle types");
      ++i;
      skip_space();
      if (i >= text.size()) throw ParseError("trailing ',' in cycle type list");
    }
  }
  return out;
}

void emit(const nlohmann::json& report, const std::string& format,
          std::string (*render)(const nlohmann::json&)) {
  if (format == "json") {
    std::cout << parstab::dump_canonical(report);
  } else {
    std::cout << render(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parabolic pushforward analyzer for branched covers"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string cover_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a cover file against the datum rules");
  validate_cmd->add_option("file", cover_path, "cover file (JSON)")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full pushforward and stability report");
  analyze_cmd->add_option("file", cover_path, "cover file (JSON)")->required();
  bool skip_closure = false;
  std::size_t closure_cap = 10080;
  analyze_cmd->add_flag("--skip-closure-check", skip_closure,
                        "do not pull back along the Galois closure");
  analyze_cmd->add_option("--closure-cap", closure_cap,
                          "largest monodromy group order the closure check will expand")
      ->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enumerate", "census of covers with prescribed branching");
  unsigned degree = 0;
  unsigned genus = 0;
  std::string types_text;
  int threads = 0;
  std::uint64_t node_budget = parstab::HurwitzCaps{}.node_budget;
  enum_cmd->add_option("--degree", degree, "covering degree")->required();
  enum_cmd->add_option("--genus", genus, "base curve genus")->capture_default_str();
  enum_cmd->add_option("--types", types_text, "branch cycle types, e.g. \"[2,1]x4\"");
  enum_cmd->add_option("--threads", threads, "worker count (0 = default)")->capture_default_str();
  enum_cmd->add_option("--node-budget", node_budget, "search size cap")->capture_default_str();

  auto* pull_cmd = app.add_subcommand("pullback", "pull a parabolic bundle back along a cover");
  std::string bundle_path;
  std::string profile_path;
  pull_cmd->add_option("--bundle", bundle_path, "parabolic bundle file (JSON)")->required();
  pull_cmd->add_option("--profile", profile_path, "pullback profile file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      parstab::Cover d = parstab::load_cover_file(cover_path);
      parstab::ValidationReport rep = parstab::validate(d);
      if (format == "json") {
        nlohmann::json j = {{"ok", rep.ok}, {"violations", rep.violations}};
        std::cout << parstab::dump_canonical(j);
      } else if (rep.ok) {
        std::cout << "ok\n";
      } else {
        for (const std::string& v : rep.violations) std::cout << "violation: " << v << "\n";
      }
      return rep.ok ? 0 : 1;
    }
    if (*analyze_cmd) {
      parstab::Cover d = parstab::load_cover_file(cover_path);
      parstab::AnalyzeOptions opt;
      opt.run_closure_check = !skip_closure;
      opt.closure_cap = closure_cap;
      emit(parstab::analysis_report(d, opt), format, parstab::render_analysis_text);
      return 0;
    }
    if (*enum_cmd) {
      parstab::HurwitzQuery query;
      query.base_genus = genus;
      query.degree = degree;
      query.branch_types = parse_types(types_text);
      parstab::HurwitzCaps caps;
      caps.node_budget = node_budget;
      emit(parstab::census_report(query, caps, threads), format, parstab::render_census_text);
      return 0;
    }
    if (*pull_cmd) {
      parstab::ParabolicData data =
          parstab::parabolic_from_json(parstab::load_json_file(bundle_path));
      parstab::PullbackProfile profile =
          parstab::profile_from_json(parstab::load_json_file(profile_path));
      emit(parstab::pullback_report(data, profile), format, parstab::render_pullback_text);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const parstab::TheoremViolation& e) {
    std::cerr << "internal error (theorem violation): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
