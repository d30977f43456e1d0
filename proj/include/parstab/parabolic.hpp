#pragma once

#include <map>
#include <string>
#include <vector>

#include "parstab/rational.hpp"

namespace parstab {

// Multiset of parabolic weights at one marked point: strictly increasing
// weights in [0,1) with positive multiplicities. Weight 0 is stored
// explicitly when present.
class WeightSystem {
public:
  struct Entry {
    Rational weight;
    unsigned multiplicity = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  WeightSystem() = default;

  // Sorts, merges entries with equal reduced weight, drops multiplicity-0
  // entries, and rejects weights outside [0,1).
  static WeightSystem from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  unsigned total_multiplicity() const;
  Rational weight_sum() const;  // sum of weight * multiplicity
  unsigned zero_multiplicity() const;
  bool weightless() const;  // no entry with positive weight

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
  std::vector<Entry> entries_;
};

// Vector bundle of rank r and integer degree with weight systems at finitely
// many labeled points. Every stored system sums to the rank; points whose
// system is entirely weight 0 are dropped (the canonical form of "no
// parabolic structure there").
class ParabolicData {
public:
  ParabolicData(unsigned rank, long long underlying_degree,
                std::map<std::string, WeightSystem> points);

  unsigned rank() const { return rank_; }
  long long underlying_degree() const { return degree_; }
  const std::map<std::string, WeightSystem>& points() const { return points_; }

  Rational par_weight() const;  // total weight contribution over all points
  Rational par_deg() const;     // underlying degree + par_weight
  Rational par_slope() const;   // par_deg / rank

  friend bool operator==(const ParabolicData&, const ParabolicData&) = default;

private:
  unsigned rank_;
  long long degree_;
  std::map<std::string, WeightSystem> points_;
};

// A point of a summand that is missing a marked point carries weight 0 there
// with multiplicity equal to that summand's rank; equal weights merge.
ParabolicData direct_sum(const ParabolicData& a, const ParabolicData& b);

// Combinatorial shadow of a covering map: for each downstairs label, the
// preimage labels with their local multiplicities. Each fiber's
// multiplicities sum to the covering degree; preimage labels are globally
// distinct.
class PullbackProfile {
public:
  struct Preimage {
    std::string label;
    unsigned multiplicity = 0;
  };

  PullbackProfile(unsigned cover_degree,
                  std::map<std::string, std::vector<Preimage>> fibers);

  unsigned cover_degree() const { return cover_degree_; }
  const std::map<std::string, std::vector<Preimage>>& fibers() const { return fibers_; }

private:
  unsigned cover_degree_;
  std::map<std::string, std::vector<Preimage>> fibers_;
};

// Parabolic pullback. A weight a with multiplicity d over a point with local
// multiplicity m becomes frac(m*a) with multiplicity d upstairs, and the
// underlying degree picks up d*floor(m*a); the underlying bundle degree is
// multiplied by the covering degree. The parabolic degree of the result is
// exactly cover_degree * par_deg(data); that identity is verified on every
// call. Every parabolic point of data must appear in profile.fibers.
ParabolicData pullback(const ParabolicData& data, const PullbackProfile& profile);

}  // namespace parstab
