#pragma once

#include <string>
#include <vector>

#include "parstab/bigint.hpp"
#include "parstab/cover.hpp"
#include "parstab/rational.hpp"

namespace parstab {

// Whether the monodromy action leaves no proper invariant subspace of the
// sum-zero part of the permutation module, i.e. is two-transitive.
bool sum_zero_module_irreducible(const Cover& d);

enum class Verdict { Stable, NotStable, Undetermined };

struct Certificate {
  enum class Kind {
    RankOne,                   // degree 2: a parabolic line bundle
    Imprimitive,               // a proper intermediate factorization exists
    TwoTransitive,             // sum-zero module irreducible
    Symmetric,                 // full symmetric monodromy
    Alternating,               // alternating monodromy, degree >= 4
    MorseAndGenuinelyRamified  // simple branching and transitive branch closure
  };
  Kind kind;
  std::vector<std::vector<unsigned>> blocks;  // Imprimitive only
};

const char* to_string(Verdict v);
const char* to_string(Certificate::Kind k);

struct GroupFacts {
  unsigned degree = 0;
  BigInt order;
  bool transitive = false;
  bool two_transitive = false;
  bool primitive = false;
  PermGroup::Classification classification = PermGroup::Classification::Neither;
  bool morse = false;
  bool genuinely_ramified = false;
  bool etale = false;  // no branch points
};

// The trace-free summand always has parabolic degree 0, hence is polystable;
// the verdict concerns stability proper. Stable and NotStable certificates
// can never coexist, and a Morse genuinely ramified cover must have full
// symmetric monodromy; both are enforced as internal assertions.
struct StabilityReport {
  unsigned rank = 0;  // rank of the trace-free summand
  Rational par_deg;   // always 0
  bool polystable = true;
  Verdict verdict = Verdict::Undetermined;
  std::vector<Certificate> certificates;
  GroupFacts facts;
};

// Requires a valid datum of degree >= 2.
StabilityReport analyze(const Cover& d);

}  // namespace parstab
