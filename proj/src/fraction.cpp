#include "patstat/fraction.hpp"

#include <stdexcept>
#include <utility>

namespace patstat {

Fraction::Fraction(long long numerator, long long denominator)
    : num_(numerator), den_(denominator) {
  if (denominator == 0) throw std::invalid_argument("Fraction: zero denominator");
  normalize();
}

void Fraction::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

std::string Fraction::to_decimal(int places) const {
  if (places < 0) throw std::invalid_argument("Fraction: negative decimal places");
  const bool negative = num_ < 0;
  Int abs_num = negative ? Int(-num_) : num_;

  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  Int scaled = abs_num * scale;
  Int q = scaled / den_;
  Int r = scaled % den_;
  if (r * 2 >= den_) ++q;  // half away from zero

  std::string digits = q.str();
  std::string out;
  if (negative && q != 0) out += '-';
  if (places == 0) {
    out += digits;
    return out;
  }
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  out += '.';
  out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace patstat
