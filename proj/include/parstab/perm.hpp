#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parstab {

// Permutation of {1..n}, stored as a 1-based image table. Products compose
// left to right: x^(p*q) = (x^p)^q, so the left factor acts first.
class Perm {
public:
  explicit Perm(unsigned degree);  // identity
  explicit Perm(std::vector<unsigned> images);

  // Cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity. Points are
  // 1-based, separated by whitespace or commas; fixed points may be omitted.
  static Perm parse_cycles(const std::string& text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator[](unsigned point) const { return img_[point - 1]; }
  const std::vector<unsigned>& images() const { return img_; }

  bool is_identity() const;
  unsigned smallest_moved_point() const;  // 0 when identity
  Perm inverse() const;
  int sign() const;  // +1 even, -1 odd
  unsigned long long order() const;
  std::vector<unsigned> cycle_type() const;  // descending, fixed points included
  std::string cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);  // a first, then b
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

private:
  std::vector<unsigned> img_;
};

// Classical composition: apply q first, then p.
Perm compose(const Perm& p, const Perm& q);

// Relabel the points of p via u; equals inverse(u) * p * u.
Perm conjugate(const Perm& p, const Perm& u);

// Left-to-right product of a word; identity for the empty word.
Perm word_product(const std::vector<Perm>& word, unsigned degree);

}  // namespace parstab
