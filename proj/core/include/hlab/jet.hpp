#pragma once

#include "hlab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hlab {

// Order-2 truncated Taylor data (value, d/dt, d2/dt2) at a sample time.
// Product rule at order 2: (fg)'' = f''g + 2f'g' + fg''.
template <class T>
struct JetT {
  T v{}, d1{}, d2{};

  JetT() = default;
  JetT(const T& value) : v(value), d1(T(0)), d2(T(0)) {}
  JetT(const T& value, const T& first, const T& second) : v(value), d1(first), d2(second) {}

  static JetT constant(const T& c) { return JetT(c); }

  friend JetT operator+(const JetT& a, const JetT& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
  friend JetT operator-(const JetT& a, const JetT& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
  JetT operator-() const { return {-v, -d1, -d2}; }
  friend JetT operator*(const JetT& a, const JetT& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + T(2) * a.d1 * b.d1 + a.v * b.d2};
  }
  friend JetT operator/(const JetT& a, const JetT& b) { return a * reciprocal(b); }

  JetT& operator+=(const JetT& o) { *this = *this + o; return *this; }
  JetT& operator-=(const JetT& o) { *this = *this - o; return *this; }
  JetT& operator*=(const JetT& o) { *this = *this * o; return *this; }

  bool operator==(const JetT& o) const { return v == o.v && d1 == o.d1 && d2 == o.d2; }

  friend JetT reciprocal(const JetT& g) {
    if (g.v == T(0)) throw std::domain_error("jet reciprocal: value is zero");
    T inv = T(1) / g.v;
    T h0 = inv;
    T h1 = -g.d1 * inv * inv;
    T h2 = (T(2) * g.d1 * g.d1 - g.d2 * g.v) * inv * inv * inv;
    return {h0, h1, h2};
  }

  // derivative shift: the d2 slot of the result would need a third
  // derivative and is set to zero; results are valid to order 1 only
  friend JetT shift(const JetT& f) { return {f.d1, f.d2, T(0)}; }
};

using Jet2 = JetT<double>;
using QJet = JetT<Rational>;

namespace detail {
inline double value_pow(double base, long num, long den) {
  return std::pow(base, static_cast<double>(num) / static_cast<double>(den));
}
inline Rational value_pow(const Rational& base, long num, long den) {
  auto root = rational_root(base, static_cast<unsigned>(den));
  if (!root) throw std::domain_error("jet_pow: base has no exact rational root");
  return rational_pow(*root, num);
}
inline bool positive(double x) { return x > 0; }
inline bool positive(const Rational& x) { return x > 0; }
} // namespace detail

// f^(num/den) with f.v > 0; exact when T is Rational and the root exists.
// h' = a f^(a-1) f', h'' = a(a-1) f^(a-2) (f')^2 + a f^(a-1) f'' with a = num/den.
template <class T>
JetT<T> jet_pow(const JetT<T>& f, long num, long den) {
  if (den == 0) throw std::domain_error("jet_pow: zero denominator in exponent");
  if (den < 0) { num = -num; den = -den; }
  if (!detail::positive(f.v)) throw std::domain_error("jet_pow: base value must be positive");
  if (num == static_cast<long>(den)) return f;
  T a = T(num) / T(den);
  T p = detail::value_pow(f.v, num, den);           // f^a
  T pm1 = p / f.v;                                  // f^(a-1)
  T pm2 = pm1 / f.v;                                // f^(a-2)
  T h1 = a * pm1 * f.d1;
  T h2 = a * (a - T(1)) * pm2 * f.d1 * f.d1 + a * pm1 * f.d2;
  return {p, h1, h2};
}

template <class T>
JetT<T> jet_sqrt(const JetT<T>& f) { return jet_pow(f, 1, 2); }

} // namespace hlab
