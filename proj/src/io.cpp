#include "parstab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parstab/direct_image.hpp"
#include "parstab/errors.hpp"
#include "parstab/stability.hpp"

namespace parstab {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

long long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<long long>();
}

unsigned as_unsigned(const json& j, const char* what) {
  long long v = as_integer(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

Perm perm_from_json(const json& j, unsigned degree, const char* what) {
  if (j.is_string()) return Perm::parse_cycles(j.get<std::string>(), degree);
  if (j.is_array()) {
    std::vector<unsigned> img;
    img.reserve(j.size());
    for (const json& e : j) img.push_back(as_unsigned(e, what));
    if (img.size() != degree) {
      throw ParseError(std::string(what) + " image array has length " +
                       std::to_string(img.size()) + ", expected " + std::to_string(degree));
    }
    try {
      return Perm(std::move(img));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(what) + ": " + e.what());
    }
  }
  throw ParseError(std::string(what) + " must be a cycle string or a 1-based image array");
}

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError(std::string(what) + " must be an integer or a \"num/den\" string");
}

void require_version(const json& j) {
  const json& v = require_field(j, "version");
  if (!v.is_number_integer() || v.get<long long>() != 1) {
    throw ParseError("unsupported file version; expected 1");
  }
}

json parabolic_facts(const ParabolicData& p) {
  json j = parabolic_to_json(p);
  j["par_deg"] = p.par_deg().str();
  j["par_slope"] = p.par_slope().str();
  return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string type_brackets(const json& arr) {
  std::vector<std::string> parts;
  for (const json& e : arr) parts.push_back(std::to_string(e.get<long long>()));
  return "[" + join(parts, ",") + "]";
}

// "num/den" -> "num" when den is 1; report fields store the canonical form.
std::string pretty_rational(const std::string& canonical) {
  auto slash = canonical.find('/');
  if (slash != std::string::npos && canonical.substr(slash) == "/1") {
    return canonical.substr(0, slash);
  }
  return canonical;
}

void render_bundle(std::ostringstream& out, const char* title, const json& b) {
  out << title << ": rank " << b.at("rank").get<long long>() << ", degree "
      << b.at("degree").get<long long>() << ", parabolic degree "
      << pretty_rational(b.at("par_deg").get<std::string>()) << "\n";
  for (const auto& [label, entries] : b.at("points").items()) {
    out << "  " << label << ":";
    for (const json& e : entries) {
      out << " " << pretty_rational(e.at("weight").get<std::string>()) << " x"
          << e.at("multiplicity").get<long long>();
    }
    out << "\n";
  }
}

}  // namespace

Cover cover_from_json(const json& j) {
  require_version(j);
  Cover d;
  d.base_genus = as_unsigned(require_field(j, "base_genus"), "base_genus");
  d.degree = as_unsigned(require_field(j, "degree"), "degree");
  if (d.degree == 0) throw ParseError("degree must be a positive integer");
  if (j.contains("characteristic")) {
    d.characteristic = as_unsigned(j.at("characteristic"), "characteristic");
  }
  if (j.contains("handles")) {
    for (const json& h : as_array(j.at("handles"), "handles")) {
      Perm a = perm_from_json(require_field(h, "a"), d.degree, "handle entry 'a'");
      Perm b = perm_from_json(require_field(h, "b"), d.degree, "handle entry 'b'");
      d.handles.emplace_back(std::move(a), std::move(b));
    }
  }
  if (j.contains("branch")) {
    for (const json& b : as_array(j.at("branch"), "branch")) {
      BranchPoint bp{as_string(require_field(b, "label"), "branch label"),
                     perm_from_json(require_field(b, "sigma"), d.degree, "branch permutation")};
      d.branch.push_back(std::move(bp));
    }
  }
  return d;
}

json cover_to_json(const Cover& d) {
  json j;
  j["version"] = 1;
  j["base_genus"] = d.base_genus;
  j["degree"] = d.degree;
  j["characteristic"] = d.characteristic;
  j["handles"] = json::array();
  for (const auto& [a, b] : d.handles) {
    j["handles"].push_back({{"a", a.cycle_string()}, {"b", b.cycle_string()}});
  }
  j["branch"] = json::array();
  for (const BranchPoint& bp : d.branch) {
    j["branch"].push_back({{"label", bp.label}, {"sigma", bp.sigma.cycle_string()}});
  }
  return j;
}

ParabolicData parabolic_from_json(const json& j) {
  unsigned rank = as_unsigned(require_field(j, "rank"), "rank");
  long long degree = as_integer(require_field(j, "degree"), "degree");
  std::map<std::string, WeightSystem> points;
  if (j.contains("points")) {
    const json& pts = j.at("points");
    if (!pts.is_object()) throw ParseError("'points' must map labels to weight lists");
    for (const auto& [label, list] : pts.items()) {
      std::vector<WeightSystem::Entry> entries;
      for (const json& e : as_array(list, "weight list")) {
        entries.push_back({rational_from_json(require_field(e, "weight"), "weight"),
                           as_unsigned(require_field(e, "multiplicity"), "multiplicity")});
      }
      try {
        points[label] = WeightSystem::from_entries(std::move(entries));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("point '") + label + "': " + e.what());
      }
    }
  }
  try {
    return ParabolicData(rank, degree, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json parabolic_to_json(const ParabolicData& p) {
  json j;
  j["rank"] = p.rank();
  j["degree"] = p.underlying_degree();
  j["points"] = json::object();
  for (const auto& [label, ws] : p.points()) {
    json list = json::array();
    for (const auto& e : ws.entries()) {
      list.push_back({{"weight", e.weight.str()}, {"multiplicity", e.multiplicity}});
    }
    j["points"][label] = std::move(list);
  }
  return j;
}

PullbackProfile profile_from_json(const json& j) {
  unsigned cover_degree = as_unsigned(require_field(j, "cover_degree"), "cover_degree");
  std::map<std::string, std::vector<PullbackProfile::Preimage>> fibers;
  const json& fj = require_field(j, "fibers");
  if (!fj.is_object()) throw ParseError("'fibers' must map labels to preimage lists");
  for (const auto& [label, list] : fj.items()) {
    std::vector<PullbackProfile::Preimage> fiber;
    for (const json& e : as_array(list, "fiber")) {
      fiber.push_back({as_string(require_field(e, "label"), "preimage label"),
                       as_unsigned(require_field(e, "multiplicity"), "multiplicity")});
    }
    fibers[label] = std::move(fiber);
  }
  try {
    return PullbackProfile(cover_degree, std::move(fibers));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json profile_to_json(const PullbackProfile& p) {
  json j;
  j["cover_degree"] = p.cover_degree();
  j["fibers"] = json::object();
  for (const auto& [label, fiber] : p.fibers()) {
    json list = json::array();
    for (const auto& pre : fiber) {
      list.push_back({{"label", pre.label}, {"multiplicity", pre.multiplicity}});
    }
    j["fibers"][label] = std::move(list);
  }
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

Cover load_cover_file(const std::string& path) {
  return cover_from_json(load_json_file(path));
}

json analysis_report(const Cover& d, const AnalyzeOptions& opt) {
  require_valid(d);
  if (d.degree < 2) throw std::invalid_argument("analysis requires covering degree >= 2");

  json j;
  j["version"] = 1;
  j["cover"] = cover_to_json(d);

  json prof = json::object();
  for (const auto& [label, type] : ramification_profile(d)) prof[label] = type;
  j["ramification"] = {{"profile", std::move(prof)},
                       {"source_genus", source_genus(d)},
                       {"pushforward_degree", pushforward_degree(d)}};

  j["pushforward"] = parabolic_facts(pushforward_parabolic(d));
  j["trace_free"] = parabolic_facts(trace_free_summand(d));

  DegreeZeroRecord rec = check_degree_zero(d);
  json contributions = json::array();
  for (const auto& c : rec.contributions) {
    contributions.push_back({{"point", c.point},
                             {"branch_label", c.branch_label},
                             {"multiplicity", c.multiplicity},
                             {"amount", c.amount.str()}});
  }
  json dz = {{"contributions", std::move(contributions)},
             {"weight_total", rec.weight_total.str()},
             {"underlying_degree", rec.underlying_degree},
             {"par_deg_pushforward", rec.par_deg_pushforward.str()}};
  if (rec.par_deg_trace_free) dz["par_deg_trace_free"] = rec.par_deg_trace_free->str();
  j["degree_zero_check"] = std::move(dz);

  StabilityReport rep = analyze(d);
  j["group"] = {{"degree", rep.facts.degree},
                {"order", rep.facts.order.str()},
                {"transitive", rep.facts.transitive},
                {"two_transitive", rep.facts.two_transitive},
                {"primitive", rep.facts.primitive},
                {"classification", to_string(rep.facts.classification)},
                {"morse", rep.facts.morse},
                {"genuinely_ramified", rep.facts.genuinely_ramified},
                {"etale", rep.facts.etale}};

  json certs = json::array();
  for (const Certificate& c : rep.certificates) {
    json cj = {{"kind", to_string(c.kind)}};
    if (c.kind == Certificate::Kind::Imprimitive) cj["blocks"] = c.blocks;
    certs.push_back(std::move(cj));
  }
  j["stability"] = {{"rank", rep.rank},
                    {"par_deg", rep.par_deg.str()},
                    {"polystable", rep.polystable},
                    {"verdict", to_string(rep.verdict)},
                    {"certificates", std::move(certs)}};

  if (opt.run_closure_check) {
    try {
      ClosureCheck cc = closure_trivialization_check(d, opt.closure_cap);
      auto facts = [](const ClosureCheck::PullbackFacts& f) {
        return json{{"rank", f.rank}, {"degree", f.degree}, {"weightless", f.weightless}};
      };
      j["closure_check"] = {{"status", "pass"},
                            {"galois_degree", cc.galois_degree},
                            {"pushforward_pullback", facts(cc.pushforward_pullback)},
                            {"trace_free_pullback", facts(cc.trace_free_pullback)},
                            {"self_pullback", facts(cc.self_pullback)}};
    } catch (const CapExceeded&) {
      j["closure_check"] = {{"status", "skipped: cap"}, {"cap", opt.closure_cap}};
    }
  } else {
    j["closure_check"] = {{"status", "skipped: flag"}};
  }

  if (d.branch.empty()) {
    j["note"] = "unbranched cover: the pushforward carries no parabolic points";
  }
  return j;
}

std::string render_analysis_text(const json& report) {
  std::ostringstream out;
  const json& cover = report.at("cover");
  const json& ram = report.at("ramification");
  out << "cover: degree " << cover.at("degree").get<long long>() << ", base genus "
      << cover.at("base_genus").get<long long>() << ", characteristic "
      << cover.at("characteristic").get<long long>() << "\n";
  out << "source genus: " << ram.at("source_genus").get<long long>() << "\n";
  for (const auto& [label, type] : ram.at("profile").items()) {
    out << "branch " << label << ": cycle type " << type_brackets(type) << "\n";
  }
  if (report.contains("note")) out << report.at("note").get<std::string>() << "\n";

  render_bundle(out, "pushforward", report.at("pushforward"));
  render_bundle(out, "trace-free summand", report.at("trace_free"));

  const json& dz = report.at("degree_zero_check");
  out << "degree-zero check: pass (weight total "
      << pretty_rational(dz.at("weight_total").get<std::string>()) << ", underlying degree "
      << dz.at("underlying_degree").get<long long>() << ")\n";

  const json& g = report.at("group");
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "monodromy: order " << g.at("order").get<std::string>() << ", transitive "
      << yn(g.at("transitive").get<bool>()) << ", two-transitive "
      << yn(g.at("two_transitive").get<bool>()) << ", primitive "
      << yn(g.at("primitive").get<bool>()) << ", classification "
      << g.at("classification").get<std::string>() << "\n";
  out << "branching: morse " << yn(g.at("morse").get<bool>()) << ", genuinely ramified "
      << yn(g.at("genuinely_ramified").get<bool>()) << ", etale "
      << yn(g.at("etale").get<bool>()) << "\n";

  const json& st = report.at("stability");
  out << "trace-free summand is polystable of parabolic degree "
      << pretty_rational(st.at("par_deg").get<std::string>()) << "\n";
  out << "verdict: " << st.at("verdict").get<std::string>() << "\n";
  std::vector<std::string> kinds;
  for (const json& c : st.at("certificates")) kinds.push_back(c.at("kind").get<std::string>());
  out << "certificates: " << (kinds.empty() ? "none" : join(kinds, "; ")) << "\n";
  for (const json& c : st.at("certificates")) {
    if (c.contains("blocks")) {
      out << "  blocks:";
      for (const json& blk : c.at("blocks")) {
        std::vector<std::string> pts;
        for (const json& p : blk) pts.push_back(std::to_string(p.get<long long>()));
        out << " {" << join(pts, ",") << "}";
      }
      out << "\n";
    }
  }

  const json& cc = report.at("closure_check");
  std::string status = cc.at("status").get<std::string>();
  if (status == "pass") {
    out << "closure check: pass (Galois degree " << cc.at("galois_degree").get<long long>()
        << "; pullback ranks " << cc.at("pushforward_pullback").at("rank").get<long long>()
        << "/" << cc.at("trace_free_pullback").at("rank").get<long long>() << "/"
        << cc.at("self_pullback").at("rank").get<long long>()
        << ", all weightless of degree 0)\n";
  } else {
    out << "closure check: " << status << "\n";
  }
  return out.str();
}

json census_report(const HurwitzQuery& query, const HurwitzCaps& caps, int threads) {
  if (query.degree < 2) throw std::invalid_argument("census requires covering degree >= 2");
  std::vector<Word> classes = enumerate_classes(query, caps, threads);

  json j;
  j["version"] = 1;
  j["query"] = {{"base_genus", query.base_genus},
                {"degree", query.degree},
                {"branch_types", query.branch_types}};
  j["class_count"] = classes.size();

  std::map<std::string, std::size_t> verdicts{
      {to_string(Verdict::Stable), 0},
      {to_string(Verdict::NotStable), 0},
      {to_string(Verdict::Undetermined), 0}};

  json rows = json::array();
  for (const Word& w : classes) {
    Cover c = cover_from_word(query, w);
    StabilityReport rep = analyze(c);
    json word = json::array();
    for (const Perm& p : w) word.push_back(p.cycle_string());
    json certs = json::array();
    for (const Certificate& cert : rep.certificates) certs.push_back(to_string(cert.kind));
    rows.push_back({{"word", std::move(word)},
                    {"order", rep.facts.order.str()},
                    {"source_genus", source_genus(c)},
                    {"verdict", to_string(rep.verdict)},
                    {"certificates", std::move(certs)}});
    ++verdicts[to_string(rep.verdict)];
  }
  j["rows"] = std::move(rows);
  j["verdicts"] = verdicts;
  return j;
}

std::string render_census_text(const json& report) {
  std::ostringstream out;
  const json& q = report.at("query");
  std::vector<std::string> types;
  for (const json& t : q.at("branch_types")) types.push_back(type_brackets(t));
  out << "query: degree " << q.at("degree").get<long long>() << ", base genus "
      << q.at("base_genus").get<long long>() << ", branch types "
      << (types.empty() ? "none" : join(types, " ")) << "\n";
  out << "classes: " << report.at("class_count").get<std::size_t>() << "\n";
  std::size_t i = 0;
  for (const json& row : report.at("rows")) {
    std::vector<std::string> word;
    for (const json& p : row.at("word")) word.push_back(p.get<std::string>());
    std::vector<std::string> certs;
    for (const json& c : row.at("certificates")) certs.push_back(c.get<std::string>());
    out << "  " << ++i << ". " << join(word, " | ") << "  order "
        << row.at("order").get<std::string>() << "  genus "
        << row.at("source_genus").get<long long>() << "  " << row.at("verdict").get<std::string>()
        << "  [" << join(certs, ", ") << "]\n";
  }
  const json& v = report.at("verdicts");
  out << "verdicts:";
  for (const auto& [name, count] : v.items()) out << " " << name << " " << count.get<std::size_t>();
  out << "\n";
  return out.str();
}

json pullback_report(const ParabolicData& data, const PullbackProfile& profile) {
  ParabolicData up = pullback(data, profile);
  json j;
  j["version"] = 1;
  j["input"] = parabolic_facts(data);
  j["profile"] = profile_to_json(profile);
  j["result"] = parabolic_facts(up);
  j["multiplicative"] = true;  // pullback() verifies the degree identity
  return j;
}

std::string render_pullback_text(const json& report) {
  std::ostringstream out;
  render_bundle(out, "input", report.at("input"));
  out << "covering degree: " << report.at("profile").at("cover_degree").get<long long>() << "\n";
  render_bundle(out, "pullback", report.at("result"));
  out << "parabolic degree multiplies by the covering degree: "
      << (report.at("multiplicative").get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace parstab
