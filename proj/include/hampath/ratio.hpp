#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "hampath/error.hpp"

namespace hampath {

/// Exact rational in lowest terms with positive denominator. Intermediate
/// products are taken in 128 bits; results that do not fit back into 64
/// bits raise DomainError instead of wrapping.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Ratio(std::int64_t num, std::int64_t den) { *this = reduce(num, den); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Always "p/q", including integers ("1/1").
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p/q" or a bare integer.
  static Ratio parse(std::string_view text) {
    auto to_int = [&](std::string_view s) {
      std::size_t used = 0;
      std::string str(s);
      long long x = 0;
      try {
        x = std::stoll(str, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != str.size())
        throw Error(ErrorKind::DomainError, "cannot parse ratio '" + std::string(text) + "'");
      return static_cast<std::int64_t>(x);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Ratio(to_int(text));
    return Ratio(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num_ == 0) throw Error(ErrorKind::DomainError, "division by zero ratio");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Ratio from_wide(__int128 num, __int128 den) {
    if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw Error(ErrorKind::DomainError, "ratio overflow");
    Ratio r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static Ratio reduce(std::int64_t num, std::int64_t den) { return from_wide(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace hampath
