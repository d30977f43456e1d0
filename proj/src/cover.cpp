#include "parstab/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parstab/errors.hpp"

namespace parstab {

namespace {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<Perm> relation_word(const Cover& d) {
  std::vector<Perm> word;
  for (const auto& [a, b] : d.handles) {
    word.push_back(a);
    word.push_back(b);
    word.push_back(a.inverse());
    word.push_back(b.inverse());
  }
  for (const BranchPoint& bp : d.branch) word.push_back(bp.sigma);
  return word;
}

std::vector<Perm> all_generators(const Cover& d) {
  std::vector<Perm> gens;
  for (const auto& [a, b] : d.handles) {
    gens.push_back(a);
    gens.push_back(b);
  }
  for (const BranchPoint& bp : d.branch) gens.push_back(bp.sigma);
  return gens;
}

// Sum of (m - 1) over all cycles of all branch permutations.
long long total_ramification(const Cover& d) {
  long long total = 0;
  for (const BranchPoint& bp : d.branch) {
    total += static_cast<long long>(d.degree) -
             static_cast<long long>(bp.sigma.cycle_type().size());
  }
  return total;
}

// 2g_X - 2 for a datum whose permutation degrees are consistent.
long long euler_number(const Cover& d) {
  return static_cast<long long>(d.degree) * (2LL * d.base_genus - 2) + total_ramification(d);
}

}  // namespace

ValidationReport validate(const Cover& d) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  if (d.degree == 0) fail("degree must be a positive integer");

  bool degrees_ok = d.degree > 0;
  for (const auto& [a, b] : d.handles) {
    if (a.degree() != d.degree || b.degree() != d.degree) degrees_ok = false;
  }
  for (const BranchPoint& bp : d.branch) {
    if (bp.sigma.degree() != d.degree) degrees_ok = false;
  }
  if (!degrees_ok && d.degree > 0) {
    fail("every permutation must have degree " + std::to_string(d.degree));
  }

  std::set<std::string> labels;
  for (const BranchPoint& bp : d.branch) {
    if (bp.label.empty()) fail("branch point label is empty");
    if (!labels.insert(bp.label).second) {
      fail("branch point label '" + bp.label + "' repeats");
    }
    if (bp.sigma.is_identity()) {
      fail("branch permutation at '" + bp.label + "' is the identity");
    }
  }

  if (d.characteristic != 0) {
    if (!is_prime(d.characteristic)) {
      fail("characteristic must be 0 or a prime");
    } else if (d.characteristic <= d.degree) {
      fail("tameness hypothesis violated: a nonzero characteristic must satisfy "
           "Char(k) > degree(f)");
    }
  }

  if (degrees_ok) {
    if (!word_product(relation_word(d), d.degree).is_identity()) {
      fail("product relation fails (convention: commutators of handle pairs first, then "
           "branch permutations in listed order, composed left to right)");
    }
    if (!monodromy_group(d).is_transitive()) {
      fail("the permutations do not act transitively (the cover is disconnected)");
    }
    long long e = euler_number(d);
    if (e % 2 != 0) {
      fail("total ramification has the wrong parity for an integer source genus");
    } else if (e + 2 < 0) {
      fail("source genus would be negative");
    }
  }

  return rep;
}

void require_valid(const Cover& d) {
  ValidationReport rep = validate(d);
  if (rep.ok) return;
  std::string msg = "invalid cover datum:";
  for (const std::string& v : rep.violations) msg += "\n  - " + v;
  throw std::invalid_argument(msg);
}

std::map<std::string, std::vector<unsigned>> ramification_profile(const Cover& d) {
  require_valid(d);
  std::map<std::string, std::vector<unsigned>> out;
  for (const BranchPoint& bp : d.branch) out[bp.label] = bp.sigma.cycle_type();
  return out;
}

unsigned source_genus(const Cover& d) {
  require_valid(d);
  long long e = euler_number(d);
  return static_cast<unsigned>((e + 2) / 2);
}

long long pushforward_degree(const Cover& d) {
  require_valid(d);
  long long via_genus = static_cast<long long>(d.degree) * (static_cast<long long>(d.base_genus) - 1) -
                        static_cast<long long>(source_genus(d)) + 1;
  long long ram = total_ramification(d);
  if (ram % 2 != 0) throw TheoremViolation("total ramification is odd");
  long long via_ramification = -ram / 2;
  if (via_genus != via_ramification) {
    throw TheoremViolation("the two pushforward degree computations disagree: " +
                           std::to_string(via_genus) + " vs " +
                           std::to_string(via_ramification));
  }
  return via_ramification;
}

PermGroup monodromy_group(const Cover& d) {
  return PermGroup(d.degree, all_generators(d));
}

Cover galois_closure(const Cover& d, std::size_t cap) {
  require_valid(d);
  PermGroup G = monodromy_group(d);
  std::vector<Perm> elems = G.elements(cap);
  std::map<Perm, unsigned> index;
  for (unsigned i = 0; i < elems.size(); ++i) index.emplace(elems[i], i + 1);

  unsigned n = static_cast<unsigned>(elems.size());
  auto regular = [&](const Perm& u) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = index.at(elems[i] * u);
    return Perm(std::move(img));
  };

  Cover out;
  out.base_genus = d.base_genus;
  out.degree = n;
  out.characteristic = 0;
  for (const auto& [a, b] : d.handles) out.handles.emplace_back(regular(a), regular(b));
  for (const BranchPoint& bp : d.branch) out.branch.push_back({bp.label, regular(bp.sigma)});
  require_valid(out);
  return out;
}

bool is_morse(const Cover& d) {
  require_valid(d);
  for (const BranchPoint& bp : d.branch) {
    auto type = bp.sigma.cycle_type();
    if (type[0] != 2) return false;
    if (type.size() > 1 && type[1] != 1) return false;
  }
  return true;
}

bool is_genuinely_ramified(const Cover& d) {
  require_valid(d);
  std::vector<Perm> sigmas;
  for (const BranchPoint& bp : d.branch) sigmas.push_back(bp.sigma);
  return monodromy_group(d).normal_closure(sigmas).is_transitive();
}

std::vector<std::vector<std::vector<unsigned>>> intermediate_factorizations(const Cover& d) {
  require_valid(d);
  if (d.degree < 2) return {};
  return monodromy_group(d).nontrivial_minimal_block_systems();
}

}  // namespace parstab
