#include "parstab/parabolic.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "parstab/errors.hpp"

namespace parstab {

namespace {

long long checked_add(long long a, long long b) {
  __int128 s = __int128(a) + b;
  if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("degree arithmetic overflow");
  }
  return static_cast<long long>(s);
}

long long checked_mul(long long a, long long b) {
  __int128 s = __int128(a) * b;
  if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("degree arithmetic overflow");
  }
  return static_cast<long long>(s);
}

}  // namespace

WeightSystem WeightSystem::from_entries(std::vector<Entry> entries) {
  std::vector<Entry> kept;
  for (const Entry& e : entries) {
    if (e.multiplicity == 0) continue;
    if (e.weight < Rational(0) || e.weight >= Rational(1)) {
      throw std::invalid_argument("parabolic weight " + e.weight.str() +
                                  " lies outside [0,1)");
    }
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Entry& a, const Entry& b) { return a.weight < b.weight; });
  WeightSystem ws;
  for (const Entry& e : kept) {
    if (!ws.entries_.empty() && ws.entries_.back().weight == e.weight) {
      ws.entries_.back().multiplicity += e.multiplicity;
    } else {
      ws.entries_.push_back(e);
    }
  }
  return ws;
}

unsigned WeightSystem::total_multiplicity() const {
  unsigned total = 0;
  for (const Entry& e : entries_) total += e.multiplicity;
  return total;
}

Rational WeightSystem::weight_sum() const {
  Rational sum;
  for (const Entry& e : entries_) {
    sum += e.weight * Rational(static_cast<long long>(e.multiplicity));
  }
  return sum;
}

unsigned WeightSystem::zero_multiplicity() const {
  for (const Entry& e : entries_) {
    if (e.weight.is_zero()) return e.multiplicity;
  }
  return 0;
}

bool WeightSystem::weightless() const {
  for (const Entry& e : entries_) {
    if (!e.weight.is_zero()) return false;
  }
  return true;
}

ParabolicData::ParabolicData(unsigned rank, long long underlying_degree,
                             std::map<std::string, WeightSystem> points)
    : rank_(rank), degree_(underlying_degree), points_(std::move(points)) {
  if (rank_ == 0) throw std::invalid_argument("parabolic rank must be positive");
  for (const auto& [label, ws] : points_) {
    if (label.empty()) throw std::invalid_argument("parabolic point label is empty");
    if (ws.total_multiplicity() != rank_) {
      throw std::invalid_argument("weight multiplicities at '" + label +
                                  "' sum to " + std::to_string(ws.total_multiplicity()) +
                                  ", expected the rank " + std::to_string(rank_));
    }
  }
  std::erase_if(points_, [](const auto& kv) { return kv.second.weightless(); });
}

Rational ParabolicData::par_weight() const {
  Rational sum;
  for (const auto& [label, ws] : points_) sum += ws.weight_sum();
  return sum;
}

Rational ParabolicData::par_deg() const { return Rational(degree_) + par_weight(); }

Rational ParabolicData::par_slope() const {
  return par_deg() / Rational(static_cast<long long>(rank_));
}

ParabolicData direct_sum(const ParabolicData& a, const ParabolicData& b) {
  unsigned rank = a.rank() + b.rank();
  long long degree = checked_add(a.underlying_degree(), b.underlying_degree());
  std::set<std::string> labels;
  for (const auto& [l, ws] : a.points()) labels.insert(l);
  for (const auto& [l, ws] : b.points()) labels.insert(l);
  std::map<std::string, WeightSystem> points;
  for (const std::string& label : labels) {
    std::vector<WeightSystem::Entry> entries;
    auto collect = [&](const ParabolicData& p) {
      auto it = p.points().find(label);
      if (it != p.points().end()) {
        const auto& es = it->second.entries();
        entries.insert(entries.end(), es.begin(), es.end());
      } else {
        entries.push_back({Rational(0), p.rank()});
      }
    };
    collect(a);
    collect(b);
    points[label] = WeightSystem::from_entries(std::move(entries));
  }
  return ParabolicData(rank, degree, std::move(points));
}

PullbackProfile::PullbackProfile(unsigned cover_degree,
                                 std::map<std::string, std::vector<Preimage>> fibers)
    : cover_degree_(cover_degree), fibers_(std::move(fibers)) {
  if (cover_degree_ == 0) throw std::invalid_argument("covering degree must be positive");
  std::set<std::string> seen;
  for (const auto& [label, fiber] : fibers_) {
    if (label.empty()) throw std::invalid_argument("fiber label is empty");
    if (fiber.empty()) throw std::invalid_argument("fiber over '" + label + "' is empty");
    unsigned long long total = 0;
    for (const Preimage& pre : fiber) {
      if (pre.multiplicity == 0) {
        throw std::invalid_argument("zero multiplicity in fiber over '" + label + "'");
      }
      if (pre.label.empty()) throw std::invalid_argument("preimage label is empty");
      if (!seen.insert(pre.label).second) {
        throw std::invalid_argument("preimage label '" + pre.label + "' repeats");
      }
      total += pre.multiplicity;
    }
    if (total != cover_degree_) {
      throw std::invalid_argument("multiplicities over '" + label + "' sum to " +
                                  std::to_string(total) + ", expected the covering degree " +
                                  std::to_string(cover_degree_));
    }
  }
}

ParabolicData pullback(const ParabolicData& data, const PullbackProfile& profile) {
  long long degree =
      checked_mul(static_cast<long long>(profile.cover_degree()), data.underlying_degree());
  std::map<std::string, WeightSystem> points;
  for (const auto& [label, ws] : data.points()) {
    auto fib = profile.fibers().find(label);
    if (fib == profile.fibers().end()) {
      throw std::invalid_argument("profile has no fiber over parabolic point '" + label + "'");
    }
    for (const auto& pre : fib->second) {
      std::vector<WeightSystem::Entry> entries;
      for (const auto& e : ws.entries()) {
        Rational scaled = e.weight * Rational(static_cast<long long>(pre.multiplicity));
        degree = checked_add(degree,
                             checked_mul(static_cast<long long>(e.multiplicity), scaled.floor()));
        entries.push_back({scaled.frac(), e.multiplicity});
      }
      points[pre.label] = WeightSystem::from_entries(std::move(entries));
    }
  }
  ParabolicData out(data.rank(), degree, std::move(points));
  if (out.par_deg() !=
      Rational(static_cast<long long>(profile.cover_degree())) * data.par_deg()) {
    throw TheoremViolation("pullback parabolic degree is not multiplicative");
  }
  return out;
}

}  // namespace parstab
