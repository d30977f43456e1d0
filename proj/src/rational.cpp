#include "parstab/rational.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "parstab/errors.hpp"

namespace parstab {

namespace {

using I128 = __int128;

I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(I128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

struct Parts {
  long long num;
  long long den;
};

Parts make_reduced(I128 num, I128 den) {
  if (den == 0) throw std::invalid_argument("rational denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  I128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {narrow(num), narrow(den)};
}

}  // namespace

Rational::Rational(long long num, long long den) {
  Parts p = make_reduced(num, den);
  num_ = p.num;
  den_ = p.den;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::pretty() const {
  if (den_ == 1) return std::to_string(num_);
  return str();
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> long long {
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty number in rational '" + s + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s.substr(begin, end - begin + 1), &used);
    } catch (const std::exception&) {
      throw ParseError("malformed rational component '" + s + "'");
    }
    if (begin + used != end + 1) throw ParseError("trailing characters in rational '" + s + "'");
    return v;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
  return Rational(num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  Parts p = make_reduced(I128(a.num_) * b.den_ + I128(b.num_) * a.den_,
                         I128(a.den_) * b.den_);
  return Rational(p.num, p.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  Parts p = make_reduced(I128(a.num_) * b.den_ - I128(b.num_) * a.den_,
                         I128(a.den_) * b.den_);
  return Rational(p.num, p.den);
}

Rational operator-(const Rational& a) { return Rational(narrow(-I128(a.num_)), a.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  Parts p = make_reduced(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
  return Rational(p.num, p.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  Parts p = make_reduced(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
  return Rational(p.num, p.den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  I128 lhs = I128(a.num_) * b.den_;
  I128 rhs = I128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace parstab
