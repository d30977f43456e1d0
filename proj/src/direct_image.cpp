#include "parstab/direct_image.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "parstab/errors.hpp"

namespace parstab {

ParabolicData pushforward_parabolic(const Cover& d) {
  require_valid(d);
  long long deg = pushforward_degree(d);
  std::map<std::string, WeightSystem> points;
  for (const BranchPoint& bp : d.branch) {
    std::vector<WeightSystem::Entry> entries;
    for (unsigned m : bp.sigma.cycle_type()) {
      for (unsigned j = 0; j < m; ++j) {
        entries.push_back({Rational(j, m), 1});
      }
    }
    points[bp.label] = WeightSystem::from_entries(std::move(entries));
  }
  return ParabolicData(d.degree, deg, std::move(points));
}

ParabolicData trace_free_summand(const Cover& d) {
  require_valid(d);
  if (d.degree < 2) {
    throw std::invalid_argument("trace-free summand requires covering degree >= 2");
  }
  ParabolicData push = pushforward_parabolic(d);
  std::map<std::string, WeightSystem> points;
  for (const auto& [label, ws] : push.points()) {
    std::vector<WeightSystem::Entry> entries = ws.entries();
    bool removed = false;
    for (auto& e : entries) {
      if (e.weight.is_zero()) {
        --e.multiplicity;
        removed = true;
        break;
      }
    }
    if (!removed) {
      // Every permutation has at least one cycle, so the zero weight is
      // always present.
      throw TheoremViolation("pushforward weight system lacks the zero weight at '" + label +
                             "'");
    }
    points[label] = WeightSystem::from_entries(std::move(entries));
  }
  return ParabolicData(d.degree - 1, push.underlying_degree(), std::move(points));
}

DegreeZeroRecord check_degree_zero(const Cover& d) {
  require_valid(d);
  DegreeZeroRecord rec;
  Rational total = 0;
  for (const BranchPoint& bp : d.branch) {
    unsigned idx = 0;
    for (unsigned m : bp.sigma.cycle_type()) {
      if (m < 2) continue;
      ++idx;
      Rational amount(static_cast<long long>(m) - 1, 2);
      rec.contributions.push_back(
          {bp.label + "#" + std::to_string(idx), bp.label, m, amount});
      total += amount;
    }
  }
  rec.weight_total = total;
  rec.underlying_degree = pushforward_degree(d);
  ParabolicData push = pushforward_parabolic(d);
  rec.par_deg_pushforward = push.par_deg();
  if (push.par_weight() != total) {
    throw TheoremViolation("ramification weight bookkeeping disagrees with the parabolic data");
  }
  if (!rec.par_deg_pushforward.is_zero()) {
    throw TheoremViolation("pushforward parabolic degree fails to vanish");
  }
  if (d.degree >= 2) {
    Rational tf = trace_free_summand(d).par_deg();
    rec.par_deg_trace_free = tf;
    if (!tf.is_zero()) {
      throw TheoremViolation("trace-free parabolic degree fails to vanish");
    }
  }
  return rec;
}

ClosureCheck closure_trivialization_check(const Cover& d, std::size_t cap) {
  require_valid(d);
  if (d.degree < 2) {
    throw std::invalid_argument("closure check requires covering degree >= 2");
  }
  Cover closure = galois_closure(d, cap);

  std::map<std::string, std::vector<PullbackProfile::Preimage>> fibers;
  for (const BranchPoint& bp : closure.branch) {
    auto type = bp.sigma.cycle_type();
    for (unsigned m : type) {
      if (m != type.front()) {
        throw TheoremViolation("regular action has cycles of unequal length over '" + bp.label +
                               "'");
      }
    }
    std::vector<PullbackProfile::Preimage> fiber;
    for (std::size_t i = 0; i < type.size(); ++i) {
      fiber.push_back({bp.label + "#" + std::to_string(i + 1), type[i]});
    }
    fibers[bp.label] = std::move(fiber);
  }
  PullbackProfile profile(closure.degree, std::move(fibers));

  auto run = [&profile](const ParabolicData& data) {
    ParabolicData up = pullback(data, profile);
    ClosureCheck::PullbackFacts f;
    f.rank = up.rank();
    f.degree = up.underlying_degree();
    f.weightless = up.points().empty();
    return f;
  };
  auto expect = [](const ClosureCheck::PullbackFacts& f, unsigned rank, const char* which) {
    if (f.rank != rank || f.degree != 0 || !f.weightless) {
      throw TheoremViolation(std::string(which) +
                             " fails to trivialize along the Galois closure");
    }
  };

  ClosureCheck out;
  out.galois_degree = closure.degree;
  out.pushforward_pullback = run(pushforward_parabolic(d));
  out.trace_free_pullback = run(trace_free_summand(d));
  out.self_pullback = run(pushforward_parabolic(closure));
  expect(out.pushforward_pullback, d.degree, "pushforward pullback");
  expect(out.trace_free_pullback, d.degree - 1, "trace-free pullback");
  expect(out.self_pullback, closure.degree, "closure self-pullback");
  return out;
}

}  // namespace parstab
