#include "parstab/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "parstab/errors.hpp"

namespace parstab {

// Deterministic Schreier-Sims stabilizer chain with explicit transversals.
// Each added strong generator strictly enlarges some level's orbit or adds a
// base point, so the rebuild loop terminates; the final chain satisfies the
// Schreier condition (every Schreier generator sifts to the identity), which
// makes the product of orbit sizes the exact group order.
struct Bsgs {
  unsigned degree = 0;
  std::vector<unsigned> base;
  std::vector<Perm> strong;

  struct Level {
    unsigned base_point = 0;
    std::vector<std::size_t> gens;      // indices into strong
    std::vector<int> slot;              // point-1 -> transversal index, -1 outside
    std::vector<Perm> transversal;      // transversal[slot[p-1]] maps base_point -> p
    std::vector<unsigned> orbit;        // in BFS order
  };
  std::vector<Level> levels;
  BigInt order = 1;

  // Sift g through levels from..end; returns the residue and the level it
  // stopped at (levels.size() when it passed every level).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const Level& L = levels[i];
      unsigned beta = g[L.base_point];
      int s = L.slot[beta - 1];
      if (s < 0) return {std::move(g), i};
      g = g * L.transversal[s].inverse();
    }
    return {std::move(g), levels.size()};
  }

  bool contains(const Perm& g) const {
    auto [res, lvl] = sift(g, 0);
    return lvl == levels.size() && res.is_identity();
  }
};

namespace {

bool fixes_all(const Perm& g, const std::vector<unsigned>& points, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    if (g[points[i]] != points[i]) return false;
  }
  return true;
}

std::shared_ptr<const Bsgs> build_bsgs(unsigned degree, const std::vector<Perm>& gens,
                                       const std::vector<unsigned>& seed_base) {
  auto B = std::make_shared<Bsgs>();
  B->degree = degree;
  for (const Perm& g : gens) {
    if (!g.is_identity() && std::find(B->strong.begin(), B->strong.end(), g) == B->strong.end()) {
      B->strong.push_back(g);
    }
  }
  for (unsigned b : seed_base) {
    if (b == 0 || b > degree) throw std::invalid_argument("base point out of range");
    if (std::find(B->base.begin(), B->base.end(), b) == B->base.end()) B->base.push_back(b);
  }
  auto cover_with_base = [&](const Perm& g) {
    if (fixes_all(g, B->base, B->base.size())) B->base.push_back(g.smallest_moved_point());
  };
  for (const Perm& g : B->strong) cover_with_base(g);

  auto rebuild = [&] {
    B->levels.clear();
    B->order = 1;
    for (std::size_t i = 0; i < B->base.size(); ++i) {
      Bsgs::Level L;
      L.base_point = B->base[i];
      for (std::size_t gi = 0; gi < B->strong.size(); ++gi) {
        if (fixes_all(B->strong[gi], B->base, i)) L.gens.push_back(gi);
      }
      L.slot.assign(degree, -1);
      L.slot[L.base_point - 1] = 0;
      L.transversal.push_back(Perm(degree));
      L.orbit.push_back(L.base_point);
      for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
        unsigned p = L.orbit[qi];
        for (std::size_t gi : L.gens) {
          const Perm& g = B->strong[gi];
          unsigned q = g[p];
          if (L.slot[q - 1] < 0) {
            L.transversal.push_back(L.transversal[L.slot[p - 1]] * g);
            L.slot[q - 1] = static_cast<int>(L.transversal.size()) - 1;
            L.orbit.push_back(q);
          }
        }
      }
      B->order *= L.orbit.size();
      B->levels.push_back(std::move(L));
    }
  };
  rebuild();

  bool changed = true;
  while (changed) {
    changed = false;
    // After rebuild() the level references are stale; `changed` short-circuits
    // both conditions before they can touch them.
    for (std::size_t i = 0; !changed && i < B->levels.size(); ++i) {
      const Bsgs::Level& L = B->levels[i];
      for (std::size_t oi = 0; !changed && oi < L.orbit.size(); ++oi) {
        unsigned beta = L.orbit[oi];
        const Perm& u_beta = L.transversal[L.slot[beta - 1]];
        for (std::size_t gi : L.gens) {
          const Perm& g = B->strong[gi];
          unsigned target = g[beta];
          Perm s = (u_beta * g) * L.transversal[L.slot[target - 1]].inverse();
          if (s.is_identity()) continue;
          auto [res, lvl] = B->sift(std::move(s), i + 1);
          if (res.is_identity()) continue;
          cover_with_base(res);
          B->strong.push_back(std::move(res));
          rebuild();
          changed = true;
          break;
        }
      }
    }
  }
  return B;
}

}  // namespace

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators) : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("group degree must be >= 1");
  for (Perm& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.push_back(Perm(degree));
}

PermGroup::PermGroup(const PermGroup& o) : degree_(o.degree_), gens_(o.gens_) {
  std::lock_guard<std::mutex> lk(o.mu_);
  chain_ = o.chain_;
}

PermGroup& PermGroup::operator=(const PermGroup& o) {
  if (this == &o) return *this;
  std::shared_ptr<const Bsgs> snap;
  {
    std::lock_guard<std::mutex> lk(o.mu_);
    snap = o.chain_;
  }
  std::lock_guard<std::mutex> lk(mu_);
  degree_ = o.degree_;
  gens_ = o.gens_;
  chain_ = std::move(snap);
  return *this;
}

PermGroup::~PermGroup() = default;

const Bsgs& PermGroup::chain() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (!chain_) chain_ = build_bsgs(degree_, gens_, {});
  return *chain_;
}

bool PermGroup::is_trivial() const {
  return gens_.size() == 1 && gens_[0].is_identity();
}

const BigInt& PermGroup::order() const { return chain().order; }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");
  return chain().contains(g);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  std::set<Perm> seen;
  std::vector<const Perm*> queue;
  auto [it, fresh] = seen.insert(Perm(degree_));
  queue.push_back(&*it);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : gens_) {
      Perm next = *queue[qi] * g;
      auto [pos, inserted] = seen.insert(std::move(next));
      if (inserted) {
        if (seen.size() > cap) {
          throw CapExceeded("group enumeration exceeds cap of " + std::to_string(cap) +
                            " elements");
        }
        queue.push_back(&*pos);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<unsigned> PermGroup::orbit(unsigned point) const {
  if (point == 0 || point > degree_) throw std::invalid_argument("point out of range");
  std::vector<bool> in(degree_ + 1, false);
  std::vector<unsigned> queue{point};
  in[point] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : gens_) {
      unsigned q = g[queue[qi]];
      if (!in[q]) {
        in[q] = true;
        queue.push_back(q);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == degree_; }

bool PermGroup::is_two_transitive() const {
  if (degree_ < 2) throw std::invalid_argument("two-transitivity needs degree >= 2");
  if (!is_transitive()) return false;
  return point_stabilizer(1).orbit(2).size() == degree_ - 1;
}

std::vector<std::vector<unsigned>> PermGroup::minimal_block_system(unsigned a, unsigned b) const {
  if (a == 0 || a > degree_ || b == 0 || b > degree_) {
    throw std::invalid_argument("point out of range");
  }
  if (a == b) throw std::invalid_argument("block seed points must differ");
  if (!is_transitive()) throw std::invalid_argument("block systems need a transitive group");

  // Union-find closure: whenever two points are forced together, so is every
  // generator image of the pair.
  std::vector<unsigned> parent(degree_ + 1);
  for (unsigned i = 0; i <= degree_; ++i) parent[i] = i;
  auto find = [&](unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<unsigned, unsigned>> work{{a, b}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    unsigned ru = find(u), rv = find(v);
    if (ru == rv) continue;
    parent[ru] = rv;
    for (const Perm& g : gens_) work.emplace_back(g[u], g[v]);
  }

  std::map<unsigned, std::vector<unsigned>> classes;
  for (unsigned p = 1; p <= degree_; ++p) classes[find(p)].push_back(p);
  std::vector<std::vector<unsigned>> blocks;
  for (auto& [rep, members] : classes) blocks.push_back(std::move(members));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return blocks;
}

bool PermGroup::is_primitive() const {
  if (degree_ < 2) throw std::invalid_argument("primitivity needs degree >= 2");
  if (!is_transitive()) throw std::invalid_argument("primitivity needs a transitive group");
  for (unsigned b = 2; b <= degree_; ++b) {
    if (minimal_block_system(1, b).size() > 1) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<unsigned>>> PermGroup::nontrivial_minimal_block_systems()
    const {
  std::set<std::vector<std::vector<unsigned>>> out;
  for (unsigned b = 2; b <= degree_; ++b) {
    auto sys = minimal_block_system(1, b);
    if (sys.size() > 1) out.insert(std::move(sys));
  }
  return {out.begin(), out.end()};
}

PermGroup PermGroup::point_stabilizer(unsigned point) const {
  if (point == 0 || point > degree_) throw std::invalid_argument("point out of range");
  auto chain_at = build_bsgs(degree_, gens_, {point});
  std::vector<Perm> stab_gens;
  for (const Perm& g : chain_at->strong) {
    if (g[point] == point) stab_gens.push_back(g);
  }
  return PermGroup(degree_, std::move(stab_gens));
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& elems) const {
  std::vector<Perm> ngens;
  for (const Perm& e : elems) {
    if (!contains(e)) throw std::invalid_argument("normal closure seed is not a group element");
    if (!e.is_identity() && std::find(ngens.begin(), ngens.end(), e) == ngens.end()) {
      ngens.push_back(e);
    }
  }
  if (ngens.empty()) return PermGroup(degree_, {});
  for (;;) {
    PermGroup n(degree_, ngens);
    bool grew = false;
    std::size_t count = ngens.size();
    for (const Perm& g : gens_) {
      for (std::size_t i = 0; i < count; ++i) {
        Perm c = conjugate(ngens[i], g);
        if (!n.contains(c) && std::find(ngens.begin(), ngens.end(), c) == ngens.end()) {
          ngens.push_back(std::move(c));
          grew = true;
        }
      }
    }
    if (!grew) return n;
  }
}

PermGroup::Classification PermGroup::symmetric_or_alternating() const {
  if (!is_transitive()) {
    throw std::invalid_argument("symmetric/alternating recognition needs a transitive group");
  }
  BigInt full = factorial(degree_);
  if (order() == full) return Classification::Symmetric;
  if (order() * 2 == full) {
    bool all_even = true;
    for (const Perm& g : gens_) {
      if (g.sign() < 0) all_even = false;
    }
    if (all_even) return Classification::Alternating;
  }
  return Classification::Neither;
}

const char* to_string(PermGroup::Classification c) {
  switch (c) {
    case PermGroup::Classification::Symmetric: return "symmetric";
    case PermGroup::Classification::Alternating: return "alternating";
    case PermGroup::Classification::Neither: return "neither";
  }
  return "neither";
}

}  // namespace parstab
