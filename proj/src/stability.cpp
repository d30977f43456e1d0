#include "parstab/stability.hpp"

#include <stdexcept>

#include "parstab/direct_image.hpp"
#include "parstab/errors.hpp"

namespace parstab {

bool sum_zero_module_irreducible(const Cover& d) {
  require_valid(d);
  return monodromy_group(d).is_two_transitive();
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::NotStable: return "not stable";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::RankOne: return "rank one";
    case Certificate::Kind::Imprimitive: return "imprimitive";
    case Certificate::Kind::TwoTransitive: return "two-transitive";
    case Certificate::Kind::Symmetric: return "symmetric";
    case Certificate::Kind::Alternating: return "alternating";
    case Certificate::Kind::MorseAndGenuinelyRamified: return "morse and genuinely ramified";
  }
  return "?";
}

StabilityReport analyze(const Cover& d) {
  require_valid(d);
  if (d.degree < 2) throw std::invalid_argument("stability analysis requires degree >= 2");

  PermGroup G = monodromy_group(d);

  StabilityReport rep;
  rep.rank = d.degree - 1;
  rep.par_deg = trace_free_summand(d).par_deg();
  rep.polystable = true;

  rep.facts.degree = d.degree;
  rep.facts.order = G.order();
  rep.facts.transitive = G.is_transitive();
  rep.facts.two_transitive = G.is_two_transitive();
  rep.facts.primitive = G.is_primitive();
  rep.facts.classification = G.symmetric_or_alternating();
  rep.facts.morse = is_morse(d);
  rep.facts.genuinely_ramified = is_genuinely_ramified(d);
  rep.facts.etale = d.branch.empty();

  if (rep.facts.two_transitive && !rep.facts.primitive) {
    throw TheoremViolation("a two-transitive action must be primitive");
  }

  auto factorizations = intermediate_factorizations(d);

  if (d.degree == 2) {
    rep.certificates.push_back({Certificate::Kind::RankOne, {}});
  }
  if (!factorizations.empty()) {
    rep.certificates.push_back({Certificate::Kind::Imprimitive, factorizations.front()});
  }
  if (rep.facts.two_transitive) {
    rep.certificates.push_back({Certificate::Kind::TwoTransitive, {}});
  }
  if (rep.facts.classification == PermGroup::Classification::Symmetric) {
    rep.certificates.push_back({Certificate::Kind::Symmetric, {}});
  }
  if (rep.facts.classification == PermGroup::Classification::Alternating && d.degree >= 4) {
    rep.certificates.push_back({Certificate::Kind::Alternating, {}});
  }
  if (rep.facts.morse && rep.facts.genuinely_ramified) {
    if (rep.facts.classification != PermGroup::Classification::Symmetric) {
      throw TheoremViolation(
          "a Morse genuinely ramified cover must have full symmetric monodromy");
    }
    rep.certificates.push_back({Certificate::Kind::MorseAndGenuinelyRamified, {}});
  }

  bool has_stable = false;
  bool has_not_stable = false;
  for (const Certificate& c : rep.certificates) {
    switch (c.kind) {
      case Certificate::Kind::RankOne:
      case Certificate::Kind::TwoTransitive:
      case Certificate::Kind::Symmetric:
      case Certificate::Kind::Alternating:
      case Certificate::Kind::MorseAndGenuinelyRamified:
        has_stable = true;
        break;
      case Certificate::Kind::Imprimitive:
        has_not_stable = true;
        break;
    }
  }
  if (has_stable && has_not_stable) {
    throw TheoremViolation("stability certificates contradict each other");
  }
  for (const Certificate& c : rep.certificates) {
    if ((c.kind == Certificate::Kind::Symmetric || c.kind == Certificate::Kind::Alternating) &&
        !rep.facts.two_transitive) {
      throw TheoremViolation("symmetric or alternating monodromy must be two-transitive");
    }
  }

  if (has_not_stable) {
    rep.verdict = Verdict::NotStable;
  } else if (has_stable) {
    rep.verdict = Verdict::Stable;
  } else {
    rep.verdict = Verdict::Undetermined;
  }
  return rep;
}

}  // namespace parstab
