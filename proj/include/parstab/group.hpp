#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "parstab/bigint.hpp"
#include "parstab/perm.hpp"

namespace parstab {

struct Bsgs;  // deterministic Schreier-Sims stabilizer chain, see group.cpp

// Finitely generated permutation group. Immutable after construction; the
// stabilizer chain is built once, on the first query that needs it, and all
// queries afterwards are read-only and safe to run concurrently.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> generators);

  PermGroup(const PermGroup&);
  PermGroup& operator=(const PermGroup&);
  ~PermGroup();

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial() const;

  const BigInt& order() const;
  bool contains(const Perm& g) const;

  // All elements in lexicographic order (identity first). Throws CapExceeded
  // once more than cap elements have been generated.
  std::vector<Perm> elements(std::size_t cap) const;

  std::vector<unsigned> orbit(unsigned point) const;  // sorted
  bool is_transitive() const;
  bool is_two_transitive() const;  // degree >= 2

  // Finest G-invariant partition in which a and b share a block.
  // Requires a transitive group and a != b.
  std::vector<std::vector<unsigned>> minimal_block_system(unsigned a, unsigned b) const;
  bool is_primitive() const;  // transitive group, degree >= 2

  // All distinct nontrivial minimal block systems, one seed pair (1, b) per
  // b, deduplicated, in a fixed canonical order. Empty iff primitive.
  std::vector<std::vector<std::vector<unsigned>>> nontrivial_minimal_block_systems() const;

  PermGroup point_stabilizer(unsigned point) const;
  PermGroup normal_closure(const std::vector<Perm>& elems) const;

  enum class Classification { Symmetric, Alternating, Neither };
  Classification symmetric_or_alternating() const;  // transitive group

private:
  const Bsgs& chain() const;

  unsigned degree_;
  std::vector<Perm> gens_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Bsgs> chain_;
};

const char* to_string(PermGroup::Classification c);

}  // namespace parstab
