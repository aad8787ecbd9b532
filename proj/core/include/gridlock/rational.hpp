#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridlock {

// 128-bit intermediates (GCC/Clang extension; the __extension__ marker keeps
// -Wpedantic builds quiet).
__extension__ typedef __int128 int128_t;

// Exact rational on 64-bit numerator/denominator, always kept in canonical
// reduced form: gcd(|num|, den) == 1, den >= 1. Intermediate products run in
// 128-bit; a result that does not fit 64 bits throws std::overflow_error
// instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator) : num_(numerator) {}  // NOLINT(implicit)
  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    int128_t n = numerator;
    int128_t d = denominator;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign_reduced(n, d);
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from_int128(int128_t(a.num_) + b.num_);
    Rational r;
    r.assign_reduced(int128_t(a.num_) * b.den_ + int128_t(b.num_) * a.den_,
                     int128_t(a.den_) * b.den_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from_int128(int128_t(a.num_) - b.num_);
    Rational r;
    r.assign_reduced(int128_t(a.num_) * b.den_ - int128_t(b.num_) * a.den_,
                     int128_t(a.den_) * b.den_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.assign_reduced(int128_t(a.num_) * b.num_, int128_t(a.den_) * b.den_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    int128_t n = int128_t(a.num_) * b.den_;
    int128_t d = int128_t(a.den_) * b.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    r.assign_reduced(n, d);
    return r;
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;  // |num| <= INT64_MAX after reduction, negation safe
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // Comparisons are exact: cross-multiplication in 128 bits cannot overflow.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return int128_t(a.num_) * b.den_ < int128_t(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q" or plain "p"; q must be positive. Throws std::invalid_argument on
  // malformed input (including "p/0").
  static Rational parse(std::string_view text);

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational from_int128(int128_t v) {
    Rational r;
    r.num_ = narrow(v);
    r.den_ = 1;
    return r;
  }
  static std::int64_t narrow(int128_t v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<std::int64_t>(v);
  }
  static int128_t gcd128(int128_t a, int128_t b) {
    if (a < 0) a = -a;
    while (b != 0) {
      int128_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void assign_reduced(int128_t n, int128_t d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    int128_t g = gcd128(n, d);
    num_ = narrow(n / g);
    den_ = narrow(d / g);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("Rational: empty number");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = (s[0] == '-');
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("Rational: sign without digits");
    int128_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational: invalid character in number");
      v = v * 10 + (s[i] - '0');
      if (v > int128_t(INT64_MAX) + 1) throw std::overflow_error("Rational: literal too large");
    }
    return narrow(neg ? -v : v);
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
  return Rational(num, den);
}

}  // namespace gridlock
