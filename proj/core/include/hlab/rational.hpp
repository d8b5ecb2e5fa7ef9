#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hlab {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational_pow: zero to negative power");
    return Rational(0);
  }
  Rational acc(1), b = base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) return Rational(1) / acc;
  return acc;
}

// exact integer n-th root, if it exists
inline std::optional<Integer> integer_root(const Integer& v, unsigned n) {
  if (n == 0) throw std::domain_error("integer_root: zeroth root");
  if (v < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = integer_root(-v, n);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (v == 0 || v == 1) return v;
  // bisection on [1, v]
  Integer lo = 1, hi = v;
  while (lo <= hi) {
    Integer mid = (lo + hi) / 2;
    Integer p = 1;
    bool over = false;
    for (unsigned i = 0; i < n; ++i) {
      p *= mid;
      if (p > v) { over = true; break; }
    }
    if (!over && p == v) return mid;
    if (over || p > v) hi = mid - 1; else lo = mid + 1;
  }
  return std::nullopt;
}

// exact rational q-th root, if it exists
inline std::optional<Rational> rational_root(const Rational& v, unsigned q) {
  auto num = integer_root(boost::multiprecision::numerator(v), q);
  auto den = integer_root(boost::multiprecision::denominator(v), q);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace hlab
