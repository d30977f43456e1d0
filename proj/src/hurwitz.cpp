#include "parstab/hurwitz.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parstab/errors.hpp"

namespace parstab {

namespace {

constexpr std::size_t kNoFreeSlot = static_cast<std::size_t>(-1);

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

struct Instance {
  unsigned n = 1;
  unsigned g = 0;
  std::size_t k = 0;
  std::vector<std::vector<unsigned>> types;   // descending, padded with 1s
  std::vector<Perm> all;                      // S_n in lexicographic order
  std::vector<std::vector<Perm>> classes;     // aligned with types, each sorted
};

Instance prepare(const HurwitzQuery& q, const HurwitzCaps& caps) {
  if (q.degree == 0) throw std::invalid_argument("degree must be positive");
  if (q.degree > caps.max_degree) {
    throw CapExceeded("degree " + std::to_string(q.degree) + " exceeds enumeration cap of " +
                      std::to_string(caps.max_degree));
  }
  if (q.branch_types.size() > caps.max_branch) {
    throw CapExceeded("branch point count " + std::to_string(q.branch_types.size()) +
                      " exceeds enumeration cap of " + std::to_string(caps.max_branch));
  }
  if (q.base_genus > caps.max_genus) {
    throw CapExceeded("base genus " + std::to_string(q.base_genus) +
                      " exceeds enumeration cap of " + std::to_string(caps.max_genus));
  }

  Instance inst;
  inst.n = q.degree;
  inst.g = q.base_genus;
  inst.k = q.branch_types.size();
  for (std::vector<unsigned> t : q.branch_types) {
    unsigned long long sum = 0;
    for (unsigned e : t) {
      if (e == 0) throw std::invalid_argument("cycle type entries must be positive");
      sum += e;
    }
    if (sum > q.degree) throw std::invalid_argument("branch cycle type sums past the degree");
    while (sum < q.degree) {
      t.push_back(1);
      ++sum;
    }
    std::sort(t.begin(), t.end(), std::greater<unsigned>());
    if (t.front() < 2) {
      throw std::invalid_argument("each branch point needs a cycle of length >= 2");
    }
    inst.types.push_back(std::move(t));
  }

  std::vector<unsigned> img(inst.n);
  std::iota(img.begin(), img.end(), 1u);
  do {
    inst.all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  for (const auto& t : inst.types) {
    std::vector<Perm> cls;
    for (const Perm& p : inst.all) {
      if (p.cycle_type() == t) cls.push_back(p);
    }
    inst.classes.push_back(std::move(cls));
  }
  return inst;
}

// One representative per cycle type; since `all` is sorted, the first hit per
// type is the least element of its conjugacy class.
std::vector<Perm> class_min_reps(const std::vector<Perm>& all) {
  std::set<std::vector<unsigned>> seen;
  std::vector<Perm> reps;
  for (const Perm& p : all) {
    if (seen.insert(p.cycle_type()).second) reps.push_back(p);
  }
  return reps;
}

std::vector<Perm> centralizer(const std::vector<Perm>& all, const Perm& c) {
  std::vector<Perm> out;
  for (const Perm& u : all) {
    if (u * c == c * u) out.push_back(u);
  }
  return out;
}

// Product of [a_1,b_1]...[a_g,b_g] followed by whatever branch entries the
// word currently holds.
Perm relation_product(const Word& w, unsigned g, unsigned n) {
  Perm acc(n);
  for (unsigned h = 0; h < g; ++h) {
    const Perm& a = w[2 * h];
    const Perm& b = w[2 * h + 1];
    acc = acc * a;
    acc = acc * b;
    acc = acc * a.inverse();
    acc = acc * b.inverse();
  }
  for (std::size_t i = 2 * static_cast<std::size_t>(g); i < w.size(); ++i) acc = acc * w[i];
  return acc;
}

bool word_transitive(const Word& w, unsigned n) {
  if (n <= 1) return true;
  std::vector<unsigned> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Perm& p : w) {
    for (unsigned i = 1; i <= n; ++i) {
      unsigned a = find(i);
      unsigned b = find(p[i]);
      if (a != b) parent[a] = b;
    }
  }
  unsigned roots = 0;
  for (unsigned i = 1; i <= n; ++i) {
    if (find(i) == i) ++roots;
  }
  return roots == 1;
}

// Least simultaneous conjugate of w over the given subgroup elements. The
// first slot is assumed fixed by every element, so it never changes.
Word canonical_form(const Word& w, const std::vector<Perm>& cent) {
  Word best = w;
  for (const Perm& u : cent) {
    if (u.is_identity()) continue;
    bool smaller = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Perm c = conjugate(w[i], u);
      auto cmp = c <=> best[i];
      if (cmp < 0) {
        smaller = true;
        break;
      }
      if (cmp > 0) break;
    }
    if (smaller) {
      Word cand;
      cand.reserve(w.size());
      for (const Perm& p : w) cand.push_back(conjugate(p, u));
      best = std::move(cand);
    }
  }
  return best;
}

template <class Leaf>
void scan_slots(const std::vector<const std::vector<Perm>*>& slots, std::size_t i, Word& acc,
                Leaf&& leaf) {
  if (i == slots.size()) {
    leaf(acc);
    return;
  }
  for (const Perm& p : *slots[i]) {
    acc.push_back(p);
    scan_slots(slots, i + 1, acc, leaf);
    acc.pop_back();
  }
}

void check_budget(std::uint64_t estimate, const HurwitzCaps& caps) {
  if (estimate > caps.node_budget) {
    throw CapExceeded("estimated search size " + std::to_string(estimate) +
                      " exceeds node budget " + std::to_string(caps.node_budget));
  }
}

}  // namespace

std::vector<Word> enumerate_classes(const HurwitzQuery& query, const HurwitzCaps& caps,
                                    int threads) {
  Instance inst = prepare(query, caps);

  if (inst.g == 0 && inst.k == 0) {
    return inst.n == 1 ? std::vector<Word>{Word{}} : std::vector<Word>{};
  }
  if (inst.g == 0 && inst.k == 1) {
    // The single branch permutation must equal the identity, which its cycle
    // type forbids.
    return {};
  }

  // First slot candidates; each class representative is least in its class,
  // which is exactly the first entry a canonical word can carry.
  std::vector<Perm> tops;
  std::vector<const std::vector<Perm>*> free_slots;
  const bool determined_last = inst.k >= 1;
  if (inst.g == 0) {
    tops = {inst.classes[0].front()};
    for (std::size_t i = 1; i + 1 < inst.k; ++i) free_slots.push_back(&inst.classes[i]);
  } else {
    tops = class_min_reps(inst.all);
    for (unsigned s = 1; s < 2 * inst.g; ++s) free_slots.push_back(&inst.all);
    for (std::size_t i = 0; i + 1 < inst.k; ++i) free_slots.push_back(&inst.classes[i]);
  }

  std::uint64_t estimate = tops.size();
  for (const auto* slot : free_slots) estimate = sat_mul(estimate, slot->size());
  check_budget(estimate, caps);

  std::vector<std::vector<Perm>> cents;
  cents.reserve(tops.size());
  for (const Perm& c : tops) cents.push_back(centralizer(inst.all, c));

  struct Task {
    std::size_t top;
    std::size_t first;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < tops.size(); ++s) {
    if (free_slots.empty()) {
      tasks.push_back({s, kNoFreeSlot});
    } else {
      for (std::size_t j = 0; j < free_slots[0]->size(); ++j) tasks.push_back({s, j});
    }
  }

  std::vector<const std::vector<Perm>*> rest;
  if (!free_slots.empty()) rest.assign(free_slots.begin() + 1, free_slots.end());

  std::vector<std::vector<Word>> buckets(tasks.size());
  const int task_count = static_cast<int>(tasks.size());

  auto run_task = [&](int ti) {
    const Task& task = tasks[static_cast<std::size_t>(ti)];
    const std::vector<Perm>& cent = cents[task.top];
    std::vector<Word>& out = buckets[static_cast<std::size_t>(ti)];
    Word acc;
    acc.reserve(2 * static_cast<std::size_t>(inst.g) + inst.k);
    acc.push_back(tops[task.top]);
    if (task.first != kNoFreeSlot) acc.push_back((*free_slots[0])[task.first]);
    scan_slots(rest, 0, acc, [&](Word& partial) {
      Word full = partial;
      if (determined_last) {
        Perm last = relation_product(full, inst.g, inst.n).inverse();
        if (last.cycle_type() != inst.types.back()) return;
        full.push_back(std::move(last));
      } else if (!relation_product(full, inst.g, inst.n).is_identity()) {
        return;
      }
      if (!word_transitive(full, inst.n)) return;
      out.push_back(canonical_form(full, cent));
    });
  };

#ifdef _OPENMP
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (int ti = 0; ti < task_count; ++ti) run_task(ti);
#else
  (void)threads;
  for (int ti = 0; ti < task_count; ++ti) run_task(ti);
#endif

  std::vector<Word> result;
  for (auto& b : buckets) {
    result.insert(result.end(), std::make_move_iterator(b.begin()),
                  std::make_move_iterator(b.end()));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Word> enumerate_tuples_naive(const HurwitzQuery& query, const HurwitzCaps& caps) {
  Instance inst = prepare(query, caps);

  std::vector<const std::vector<Perm>*> slots;
  for (unsigned s = 0; s < 2 * inst.g; ++s) slots.push_back(&inst.all);
  for (const auto& cls : inst.classes) slots.push_back(&cls);

  std::uint64_t estimate = 1;
  for (const auto* slot : slots) estimate = sat_mul(estimate, slot->size());
  check_budget(estimate, caps);

  std::vector<Word> result;
  Word acc;
  acc.reserve(slots.size());
  scan_slots(slots, 0, acc, [&](Word& w) {
    if (!relation_product(w, inst.g, inst.n).is_identity()) return;
    if (!word_transitive(w, inst.n)) return;
    result.push_back(w);
  });
  std::sort(result.begin(), result.end());
  return result;
}

Cover cover_from_word(const HurwitzQuery& query, const Word& word) {
  const std::size_t expected =
      2 * static_cast<std::size_t>(query.base_genus) + query.branch_types.size();
  if (word.size() != expected) {
    throw std::invalid_argument("word length does not match the query shape");
  }
  Cover c;
  c.base_genus = query.base_genus;
  c.degree = query.degree;
  c.characteristic = 0;
  for (unsigned h = 0; h < query.base_genus; ++h) {
    c.handles.emplace_back(word[2 * h], word[2 * h + 1]);
  }
  for (std::size_t i = 0; i < query.branch_types.size(); ++i) {
    c.branch.push_back({"b" + std::to_string(i + 1),
                        word[2 * static_cast<std::size_t>(query.base_genus) + i]});
  }
  return c;
}

std::vector<Cover> enumerate_covers(const HurwitzQuery& query, const HurwitzCaps& caps,
                                    int threads) {
  std::vector<Cover> out;
  for (const Word& w : enumerate_classes(query, caps, threads)) {
    out.push_back(cover_from_word(query, w));
  }
  return out;
}

}  // namespace parstab
