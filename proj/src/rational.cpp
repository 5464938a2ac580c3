#include "divkit/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace divkit {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw Error("rational overflow: value outside 64-bit range after reduction");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw Error("negative rational");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::inverse_pow(std::int64_t base, unsigned exp) {
  if (base <= 0) throw Error("inverse_pow base must be positive");
  i128 d = 1;
  for (unsigned i = 0; i < exp; ++i) {
    d *= base;
    if (d > i128(INT64_MAX)) throw Error("rational overflow in inverse_pow");
  }
  Rational r;
  r.num_ = 1;
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g == 0) g = 1;
  Rational r;
  r.num_ = checked_narrow(n / g);
  r.den_ = checked_narrow(d / g);
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
  if (n < 0) throw Error("rational subtraction went negative");
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g == 0) g = 1;
  Rational r;
  r.num_ = checked_narrow(n / g);
  r.den_ = checked_narrow(d / g);
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  i128 n = i128(num_) * o.num_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g == 0) g = 1;
  Rational r;
  r.num_ = checked_narrow(n / g);
  r.den_ = checked_narrow(d / g);
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::format() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad integer in rational: '" + std::string(s) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  std::int64_t num, den;
  if (slash == std::string_view::npos) {
    num = parse_int(text);
    den = 1;
  } else {
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
  }
  if (num < 0 || den < 0) {
    throw ParseError("negative rational: '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.format();
}

}  // namespace divkit
