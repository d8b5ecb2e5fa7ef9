#pragma once

#include "hlab/jet.hpp"
#include "hlab/poly.hpp"

#include <variant>

namespace hlab {

// Tagged union over the three coefficient rings. The only implicit
// promotions are Rational -> Poly and Rational -> Jet2 (constants embed in
// either ring); mixing Poly with Jet2 is a hard error, never a guess.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& r) : v_(r) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(const Poly& p) : v_(p) {}
  Scalar(const Jet2& j) : v_(j) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_poly() const { return std::holds_alternative<Poly>(v_); }
  bool is_jet() const { return std::holds_alternative<Jet2>(v_); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const Poly& poly() const { return std::get<Poly>(v_); }
  const Jet2& jet() const { return std::get<Jet2>(v_); }

  bool is_zero() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  bool operator==(const Scalar& o) const;

  std::string str() const;

private:
  std::variant<Rational, Poly, Jet2> v_;
};

// rational-exponent power on the jet ring; rationals promote to constant jets
Scalar jet_pow(const Scalar& s, long num, long den);

// polynomial substitution; all-bound collapses to Rational when possible
Scalar poly_subst(const Scalar& s, const std::map<std::string, Poly>& bindings);

} // namespace hlab
