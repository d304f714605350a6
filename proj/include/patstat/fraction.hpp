#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace patstat {

// Exact rational number used for fractional patent counts. Arbitrary
// precision, so accumulating thousands of shares like 1/3 never overflows
// and renders without float drift.
class Fraction {
 public:
  using Int = boost::multiprecision::cpp_int;

  Fraction() : num_(0), den_(1) {}
  Fraction(long long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  Fraction(long long numerator, long long denominator);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  Fraction& operator+=(const Fraction& rhs);
  friend Fraction operator+(Fraction lhs, const Fraction& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

  // Fixed-point decimal rendering, rounding half away from zero:
  // Fraction(1219, 2).to_decimal(1) == "609.5".
  std::string to_decimal(int places) const;

  // "num/den", or just "num" when the value is integral.
  std::string to_string() const;

 private:
  void normalize();

  Int num_;
  Int den_;  // > 0, gcd(num_, den_) == 1
};

}  // namespace patstat
