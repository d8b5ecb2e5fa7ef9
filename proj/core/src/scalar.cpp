#include "hlab/scalar.hpp"

namespace hlab {

namespace {
[[noreturn]] void ring_mismatch(const char* op) {
  throw std::domain_error(std::string("scalar rings do not mix: Poly and Jet2 in ") + op);
}

template <class F>
Scalar combine(const Scalar& a, const Scalar& b, const char* name, F f) {
  if (a.is_rational() && b.is_rational()) return Scalar(f(a.rational(), b.rational()));
  if (a.is_poly() || b.is_poly()) {
    if (a.is_jet() || b.is_jet()) ring_mismatch(name);
    Poly pa = a.is_poly() ? a.poly() : Poly(a.rational());
    Poly pb = b.is_poly() ? b.poly() : Poly(b.rational());
    return Scalar(f(pa, pb));
  }
  Jet2 ja = a.is_jet() ? a.jet() : Jet2(to_double(a.rational()));
  Jet2 jb = b.is_jet() ? b.jet() : Jet2(to_double(b.rational()));
  return Scalar(f(ja, jb));
}
} // namespace

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  if (is_poly()) return poly().is_zero();
  const Jet2& j = jet();
  return j.v == 0 && j.d1 == 0 && j.d2 == 0;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, "+", [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, "-", [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, "*", [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) {
    if (b.rational() == 0) throw std::domain_error("scalar division by zero");
    return Scalar(a.rational() / b.rational());
  }
  if (a.is_poly() || b.is_poly()) {
    if (a.is_jet() || b.is_jet()) ring_mismatch("/");
    Poly pa = a.is_poly() ? a.poly() : Poly(a.rational());
    Poly pb = b.is_poly() ? b.poly() : Poly(b.rational());
    return Scalar(pa / pb);
  }
  Jet2 ja = a.is_jet() ? a.jet() : Jet2(to_double(a.rational()));
  Jet2 jb = b.is_jet() ? b.jet() : Jet2(to_double(b.rational()));
  return Scalar(ja / jb);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-rational());
  if (is_poly()) return Scalar(-poly());
  return Scalar(-jet());
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  if ((is_poly() || is_rational()) && (o.is_poly() || o.is_rational())) {
    Poly pa = is_poly() ? poly() : Poly(rational());
    Poly pb = o.is_poly() ? o.poly() : Poly(o.rational());
    return pa == pb;
  }
  if (is_jet() && o.is_jet()) return jet() == o.jet();
  return false;
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(rational());
  if (is_poly()) return poly().str();
  const Jet2& j = jet();
  return "jet(" + std::to_string(j.v) + ", " + std::to_string(j.d1) + ", " + std::to_string(j.d2) + ")";
}

Scalar jet_pow(const Scalar& s, long num, long den) {
  if (s.is_poly()) throw std::domain_error("jet_pow: not defined on the polynomial ring");
  Jet2 j = s.is_jet() ? s.jet() : Jet2(to_double(s.rational()));
  return Scalar(jet_pow(j, num, den));
}

Scalar poly_subst(const Scalar& s, const std::map<std::string, Poly>& bindings) {
  if (s.is_jet()) throw std::domain_error("poly_subst: not defined on the jet ring");
  Poly p = s.is_poly() ? s.poly() : Poly(s.rational());
  Poly out = p.subst(bindings);
  if (out.is_constant()) return Scalar(out.constant_value());
  return Scalar(out);
}

} // namespace hlab
