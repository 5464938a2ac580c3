#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "divkit/errors.hpp"

namespace divkit {

// Exact non-negative rational. Stored reduced with den > 0. Arithmetic runs
// through __int128 and throws if a reduced result leaves the 64-bit range;
// every metric in scope is dyadic or small-integer valued, so hitting the
// guard means out-of-scope input rather than normal operation.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(std::int64_t num) : Rational(num, 1) {}
  static Rational from_int(std::int64_t v) { return Rational(v, 1); }
  // 1 / base^exp, exp >= 0.
  static Rational inverse_pow(std::int64_t base, unsigned exp);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;  // throws if result < 0
  Rational operator*(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Always "num/den", e.g. "3/2", "0/1". parse() accepts that plus bare
  // integers; parse(format(r)) == r for every value.
  std::string format() const;
  static Rational parse(std::string_view text);

  double to_double() const { return double(num_) / double(den_); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace divkit
