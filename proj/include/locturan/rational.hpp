#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace locturan {

// Exact arithmetic for every bound, identity and comparison in the library.
// cpp_rational keeps values reduced with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b), zero when b < 0 or a < b (including negative a), C(a, 0) = 1.
inline BigInt binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline std::uint64_t binom_u64(int a, int b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

}  // namespace locturan
