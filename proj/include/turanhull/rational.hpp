#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace turanhull {

/// Exact rational over checked 128-bit integers, always in lowest terms with a
/// positive denominator. Every operation throws std::overflow_error instead of
/// wrapping.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  Rational(Int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// Decimal form of a 128-bit integer.
std::string int128_to_string(__int128 v);

}  // namespace turanhull
