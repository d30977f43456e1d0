#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parstab/group.hpp"
#include "parstab/perm.hpp"

namespace parstab {

struct BranchPoint {
  std::string label;
  Perm sigma;
};

// Combinatorial description of a connected branched cover of a genus-g curve:
// monodromy images of the handle generators and of one loop around each
// branch point, all permutations of {1..degree}. The defining relation is
//   [a_1,b_1]...[a_g,b_g] * sigma_1 * ... * sigma_k = identity,
// commutators of the handle pairs first, then the branch permutations in
// listed order, composed left to right ([a,b] = a*b*inverse(a)*inverse(b)).
struct Cover {
  unsigned base_genus = 0;
  unsigned degree = 1;
  unsigned long long characteristic = 0;  // 0 or a prime > degree
  std::vector<std::pair<Perm, Perm>> handles;
  std::vector<BranchPoint> branch;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Collects every violated invariant; never throws on bad data.
ValidationReport validate(const Cover& d);

// Throws std::invalid_argument listing all violations.
void require_valid(const Cover& d);

// Cycle type of each branch permutation, keyed by label.
std::map<std::string, std::vector<unsigned>> ramification_profile(const Cover& d);

// Genus of the total space, from 2g_X - 2 = degree*(2g_Y - 2) + sum(m - 1).
unsigned source_genus(const Cover& d);

// Degree of the pushforward of the structure sheaf. Computed two ways,
//   degree*(g_Y - 1) - g_X + 1   and   -(1/2) * sum(m - 1),
// which must agree exactly.
long long pushforward_degree(const Cover& d);

PermGroup monodromy_group(const Cover& d);

// The cover's Galois closure as a cover datum of degree |monodromy group|:
// the right-regular action of each generator on the lexicographically ordered
// element list (so labels are reproducible). The result always validates; its
// characteristic is set to 0, which the closure of any tame datum satisfies.
// Throws CapExceeded when the group has more than cap elements.
Cover galois_closure(const Cover& d, std::size_t cap);

// Every branch permutation is a single transposition. An unramified datum
// has no branch permutations and counts as true; callers report that case
// separately.
bool is_morse(const Cover& d);

// The normal closure of the branch permutations inside the monodromy group
// acts transitively. Unramified data of degree >= 2 are never genuinely
// ramified.
bool is_genuinely_ramified(const Cover& d);

// Nontrivial minimal block systems of the monodromy action; each one is a
// factorization of the cover through a curve of intermediate degree.
// Empty iff the action is primitive.
std::vector<std::vector<std::vector<unsigned>>> intermediate_factorizations(const Cover& d);

}  // namespace parstab
