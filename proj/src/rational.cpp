#include "turanhull/rational.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace turanhull {

namespace {

using U128 = unsigned __int128;
constexpr U128 kMaxPositive = (~U128{0}) >> 1;

int ctz128(U128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

U128 gcd128(U128 a, U128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

U128 magnitude(__int128 v) { return v < 0 ? U128(0) - static_cast<U128>(v) : static_cast<U128>(v); }

[[noreturn]] void overflow() { throw std::overflow_error("rational arithmetic exceeds 128 bits"); }

__int128 mul(__int128 a, __int128 b) {
  __int128 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

__int128 add(__int128 a, __int128 b) {
  __int128 out = 0;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("zero denominator");
  U128 n = magnitude(num);
  U128 d = magnitude(den);
  const bool negative = (num < 0) != (den < 0) && num != 0;
  const U128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (n > kMaxPositive || d > kMaxPositive) overflow();
  num_ = negative ? -static_cast<Int>(n) : static_cast<Int>(n);
  den_ = static_cast<Int>(d);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(add(a.num_, b.num_), a.den_);
  // Scale by lcm(den_a, den_b) to keep intermediates small.
  const auto g = static_cast<__int128>(gcd128(static_cast<U128>(a.den_), static_cast<U128>(b.den_)));
  const __int128 da = a.den_ / g;
  const __int128 db = b.den_ / g;
  return Rational(add(mul(a.num_, db), mul(b.num_, da)), mul(a.den_, db));
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational neg = b;
  neg.num_ = -neg.num_;
  return a + neg;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  const auto g1 = static_cast<__int128>(gcd128(magnitude(a.num_), static_cast<U128>(b.den_)));
  const auto g2 = static_cast<__int128>(gcd128(magnitude(b.num_), static_cast<U128>(a.den_)));
  return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return (a - b).num_ <=> 0;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  U128 m = magnitude(v);
  std::string s;
  while (m != 0) {
    s += static_cast<char>('0' + static_cast<int>(m % 10));
    m /= 10;
  }
  if (v < 0) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

}  // namespace turanhull
