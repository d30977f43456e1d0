#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parstab/cover.hpp"
#include "parstab/parabolic.hpp"
#include "parstab/rational.hpp"

namespace parstab {

// Parabolic structure of the pushforward of the structure sheaf: rank equal
// to the covering degree, underlying degree from pushforward_degree, and at
// each branch point one weight j/m (j = 0..m-1, multiplicity 1) per cycle of
// length m, merged by reduced value.
ParabolicData pushforward_parabolic(const Cover& d);

// The trace-free complement of the trivial line subbundle: rank degree-1,
// same underlying degree, weight-0 multiplicity reduced by one at every
// branch point. Requires degree >= 2.
ParabolicData trace_free_summand(const Cover& d);

// Proof record for the vanishing of the parabolic degree: each ramification
// point contributes (m-1)/2 of weight, and the total cancels the underlying
// degree exactly, for the pushforward and for the trace-free summand alike.
struct DegreeZeroRecord {
  struct Contribution {
    std::string point;         // "<branch label>#<k>"
    std::string branch_label;
    unsigned multiplicity = 0; // local multiplicity m >= 2
    Rational amount;           // (m-1)/2
  };
  std::vector<Contribution> contributions;
  Rational weight_total;
  long long underlying_degree = 0;
  Rational par_deg_pushforward;
  std::optional<Rational> par_deg_trace_free;  // absent for degree-1 covers
};

// Throws TheoremViolation if any total fails to vanish.
DegreeZeroRecord check_degree_zero(const Cover& d);

// Pulling back along the Galois closure trivializes both bundles: the
// pullbacks of the pushforward, of the trace-free summand, and of the
// closure's own pushforward are weightless of degree 0 with ranks r, r-1 and
// |monodromy group|. Requires degree >= 2; throws CapExceeded when the group
// order exceeds cap, TheoremViolation if any assertion fails.
struct ClosureCheck {
  struct PullbackFacts {
    unsigned rank = 0;
    long long degree = 0;
    bool weightless = false;
  };
  unsigned long long galois_degree = 0;
  PullbackFacts pushforward_pullback;
  PullbackFacts trace_free_pullback;
  PullbackFacts self_pullback;
};

ClosureCheck closure_trivialization_check(const Cover& d, std::size_t cap = 10080);

}  // namespace parstab
