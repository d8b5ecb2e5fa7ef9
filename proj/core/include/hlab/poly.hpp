#pragma once

#include "hlab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hlab {

// Multivariate polynomials over the rationals, used for symbolic family
// parameters (r, a, b, ...) and for the quadratic extension generators q2, q3
// with q2^2 = 2, q3^2 = 3. Exponents of extension generators are reduced
// modulo their defining relation, so values such as sqrt(2) stay exact.

struct Monomial {
  std::map<std::string, int> powers; // var -> exponent > 0

  bool operator==(const Monomial& o) const { return powers == o.powers; }
  bool operator<(const Monomial& o) const { return powers < o.powers; }
  bool empty() const { return powers.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [v, e] : powers) d += e;
    return d;
  }
};

class Poly {
public:
  Poly() = default;
  Poly(const Rational& c) { if (c != 0) terms_[Monomial{}] = c; }
  Poly(long c) : Poly(Rational(c)) {}
  static Poly var(const std::string& name, int exp = 1);

  // register an additional generator with g^2 = square (square > 0)
  static void register_sqrt(const std::string& name, const Rational& square);
  static bool is_sqrt_var(const std::string& name);
  static Rational sqrt_square(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_rational_constant() const { return is_constant(); }
  Rational constant_value() const; // throws if not constant

  std::vector<std::string> variables() const;
  int total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  friend Poly operator/(const Poly& a, const Poly& b) { return a * inverse(b); }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(unsigned e) const;

  // restricted exact inversion: nonzero rational constants, c*m with m a
  // product of extension generators, and binomials u + v*m of that shape
  friend Poly inverse(const Poly& p);

  // ring homomorphism; bindings of extension generators must square to the
  // defining relation. unbound variables survive into the result.
  Poly subst(const std::map<std::string, Poly>& bindings) const;

  Rational eval_rational(const std::map<std::string, Rational>& vals) const;
  double eval_double(const std::map<std::string, double>& vals) const;

  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

Poly parse_poly(const std::string& text); // scalars coefficient grammar

} // namespace hlab
