#pragma once

#include <cstdint>
#include <vector>

#include "parstab/cover.hpp"
#include "parstab/perm.hpp"

namespace parstab {

// One monodromy tuple: handle images a_1, b_1, ..., a_g, b_g followed by the
// branch permutations.
using Word = std::vector<Perm>;

struct HurwitzQuery {
  unsigned base_genus = 0;
  unsigned degree = 1;
  // One cycle type per branch point. Entries may omit fixed points; each type
  // is padded with 1s to the degree and must contain an entry >= 2.
  std::vector<std::vector<unsigned>> branch_types;
};

struct HurwitzCaps {
  unsigned max_degree = 8;
  unsigned max_branch = 6;
  unsigned max_genus = 2;
  // Upper bound on the estimated number of search leaves.
  std::uint64_t node_budget = 50'000'000;
};

// All tuples satisfying the defining relation, with the prescribed branch
// cycle types and transitive joint action, up to simultaneous conjugation.
// Each class is returned as its lexicographically least representative, in
// sorted order; the result is independent of the worker count. threads = 0
// uses the OpenMP default.
std::vector<Word> enumerate_classes(const HurwitzQuery& query,
                                    const HurwitzCaps& caps = {},
                                    int threads = 0);

// Reference implementation: plain exhaustive scan over full conjugacy-class
// candidate lists with no elimination and no conjugation quotient. Returns
// every valid tuple, sorted. Feasible only at small sizes; kept serial on
// purpose so the optimized enumerator can be checked against it.
std::vector<Word> enumerate_tuples_naive(const HurwitzQuery& query,
                                         const HurwitzCaps& caps = {});

// Wraps a word as a cover datum (characteristic 0, labels "b1", "b2", ...).
Cover cover_from_word(const HurwitzQuery& query, const Word& word);

std::vector<Cover> enumerate_covers(const HurwitzQuery& query,
                                    const HurwitzCaps& caps = {},
                                    int threads = 0);

}  // namespace parstab
