#pragma once

#include <iosfwd>
#include <string>

namespace avgconn {

// Exact rational arithmetic on 64-bit numerator / positive denominator.
// Intermediates are 128-bit; a result that does not fit back into 64 bits
// after reduction throws std::overflow_error. Connectivity totals and the
// closed-form bounds handled here stay far below that limit, so an overflow
// always signals a bug rather than a precision fallback.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // Free operators so the implicit integer conversion applies on either side.
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  // "7/3" or "4" when the denominator is 1.
  std::string str() const;
  double to_double() const;

 private:
  static Rational reduced(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace avgconn
