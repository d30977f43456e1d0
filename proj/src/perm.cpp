#include "parstab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "parstab/errors.hpp"

namespace parstab {

Perm::Perm(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be >= 1");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 1u);
}

Perm::Perm(std::vector<unsigned> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(img_.size() + 1, false);
  for (unsigned v : img_) {
    if (v == 0 || v > img_.size() || seen[v]) {
      throw std::invalid_argument("image table is not a permutation");
    }
    seen[v] = true;
  }
}

Perm Perm::parse_cycles(const std::string& text, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 1u);
  std::vector<bool> seen(degree + 1, false);

  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  bool any = false;
  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<unsigned> cyc;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        ++i;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle in '" + text + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' in cycle notation: '" + text + "'");
      }
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v == 0 || v > degree) {
        throw ParseError("point out of range 1.." + std::to_string(degree) + " in '" + text + "'");
      }
      if (seen[v]) throw ParseError("point " + std::to_string(v) + " repeated in '" + text + "'");
      seen[v] = true;
      cyc.push_back(static_cast<unsigned>(v));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    any = true;
    skip_blank();
  }
  if (!any) throw ParseError("empty permutation string; use \"()\" for the identity");
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (img_[i] != i + 1) return false;
  }
  return true;
}

unsigned Perm::smallest_moved_point() const {
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (img_[i] != i + 1) return i + 1;
  }
  return 0;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(img_.size());
  for (unsigned i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

int Perm::sign() const {
  return (degree() - cycle_type().size()) % 2 == 0 ? 1 : -1;
}

unsigned long long Perm::order() const {
  unsigned long long ord = 1;
  for (unsigned len : cycle_type()) ord = std::lcm(ord, (unsigned long long)len);
  return ord;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> type;
  std::vector<bool> seen(img_.size() + 1, false);
  for (unsigned p = 1; p <= img_.size(); ++p) {
    if (seen[p]) continue;
    unsigned len = 0;
    for (unsigned q = p; !seen[q]; q = img_[q - 1]) {
      seen[q] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size() + 1, false);
  for (unsigned p = 1; p <= img_.size(); ++p) {
    if (seen[p] || img_[p - 1] == p) {
      seen[p] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (unsigned q = p; !seen[q]; q = img_[q - 1]) {
      seen[q] = true;
      if (!first) out += ' ';
      out += std::to_string(q);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<unsigned> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i] - 1];
  return Perm(std::move(img));
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  return a.img_ <=> b.img_;
}

Perm compose(const Perm& p, const Perm& q) { return q * p; }

Perm conjugate(const Perm& p, const Perm& u) {
  if (p.degree() != u.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  std::vector<unsigned> img(p.degree());
  for (unsigned i = 1; i <= p.degree(); ++i) img[u[i] - 1] = u[p[i]];
  return Perm(std::move(img));
}

Perm word_product(const std::vector<Perm>& word, unsigned degree) {
  Perm acc(degree);
  for (const Perm& w : word) acc = acc * w;
  return acc;
}

}  // namespace parstab
