#pragma once

#include <compare>
#include <string>

namespace parstab {

// Exact rational arithmetic on 64-bit words. Values are kept in lowest terms
// with a positive denominator. Arithmetic that would leave the 64-bit range
// throws std::overflow_error instead of wrapping; the quantities handled here
// (parabolic weights and degrees) stay far below that bound.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  long long floor() const;
  Rational frac() const;  // *this - floor(), always in [0,1)

  std::string str() const;     // canonical "num/den", e.g. "0/1", "-3/2"
  std::string pretty() const;  // "num" when integral, else "num/den"
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace parstab
