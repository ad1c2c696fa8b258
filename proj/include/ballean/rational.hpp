#ifndef BALLEAN_RATIONAL_HPP
#define BALLEAN_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "ballean/errors.hpp"

namespace ballean {

// Exact rational with a positive denominator, always reduced. Distances are
// never floats anywhere in this library; intermediates go through 128-bit
// arithmetic and overflow of the reduced result is an error, not a wrap.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    __int128 n = numerator;
    __int128 d = denominator;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    reduce_and_store(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) = default;

  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return static_cast<__int128>(lhs.num_) * rhs.den_ <
           static_cast<__int128>(rhs.num_) * lhs.den_;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

  friend Rational operator+(const Rational& lhs, const Rational& rhs) {
    __int128 n = static_cast<__int128>(lhs.num_) * rhs.den_ +
                 static_cast<__int128>(rhs.num_) * lhs.den_;
    __int128 d = static_cast<__int128>(lhs.den_) * rhs.den_;
    Rational out;
    out.reduce_and_store(n, d);
    return out;
  }

  std::string to_string() const {
    std::string text = std::to_string(num_);
    if (den_ != 1) {
      text += '/';
      text += std::to_string(den_);
    }
    return text;
  }

  // Accepts "p" or "p/q" with an optional leading minus on p.
  static Rational parse(std::string_view text) {
    std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    return Rational(parse_int(num_part, text), parse_int(den_part, text));
  }

 private:
  void reduce_and_store(__int128 n, __int128 d) {
    // d > 0 at this point.
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
    constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
    if (n > kMax || n < kMin || d > kMax)
      throw InputError("rational arithmetic overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    bool negative = false;
    std::size_t start = 0;
    if (!digits.empty() && digits[0] == '-') {
      negative = true;
      start = 1;
    }
    if (start == digits.size())
      throw InputError("malformed rational '" + std::string(whole) + "'");
    __int128 value = 0;
    for (std::size_t i = start; i < digits.size(); ++i) {
      char c = digits[i];
      if (c < '0' || c > '9')
        throw InputError("malformed rational '" + std::string(whole) + "'");
      value = value * 10 + (c - '0');
      if (value > std::numeric_limits<std::int64_t>::max())
        throw InputError("rational literal out of range '" + std::string(whole) + "'");
    }
    return static_cast<std::int64_t>(negative ? -value : value);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace ballean

#endif
