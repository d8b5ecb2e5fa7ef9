#include "hlab/poly.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <sstream>

namespace hlab {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

namespace {
std::map<std::string, Rational>& sqrt_table() {
  static std::map<std::string, Rational> t{{"q2", Rational(2)}, {"q3", Rational(3)}};
  return t;
}
std::mutex sqrt_mutex;
} // namespace

void Poly::register_sqrt(const std::string& name, const Rational& square) {
  if (square <= 0) throw std::domain_error("register_sqrt: square must be positive");
  std::lock_guard<std::mutex> lock(sqrt_mutex);
  auto it = sqrt_table().find(name);
  if (it != sqrt_table().end() && it->second != square)
    throw std::domain_error("register_sqrt: generator already bound to a different square");
  sqrt_table()[name] = square;
}

bool Poly::is_sqrt_var(const std::string& name) {
  std::lock_guard<std::mutex> lock(sqrt_mutex);
  return sqrt_table().count(name) > 0;
}

Rational Poly::sqrt_square(const std::string& name) {
  std::lock_guard<std::mutex> lock(sqrt_mutex);
  return sqrt_table().at(name);
}

Poly Poly::var(const std::string& name, int exp) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0]))))
    throw std::invalid_argument("variable names start with a letter: " + name);
  if (exp < 0) throw std::invalid_argument("negative exponent in Poly::var");
  Poly p;
  if (exp == 0) return Poly(Rational(1));
  Monomial m;
  m.powers[name] = exp;
  Rational c(1);
  // reduce extension generators immediately
  if (is_sqrt_var(name) && exp >= 2) {
    c = rational_pow(sqrt_square(name), exp / 2);
    int rem = exp % 2;
    if (rem == 0) m.powers.erase(name); else m.powers[name] = 1;
  }
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("Poly::constant_value: not a constant: " + str());
  return terms_.begin()->second;
}

std::vector<std::string> Poly::variables() const {
  std::map<std::string, int> seen;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.powers) seen[v] = 1;
  std::vector<std::string> out;
  for (auto& [v, _] : seen) out.push_back(v);
  return out;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {
// multiply two monomials, reducing extension generators; returns extra factor
Rational mul_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
  out = a;
  Rational extra(1);
  for (auto& [v, e] : b.powers) out.powers[v] += e;
  for (auto it = out.powers.begin(); it != out.powers.end();) {
    if (Poly::is_sqrt_var(it->first) && it->second >= 2) {
      extra *= rational_pow(Poly::sqrt_square(it->first), it->second / 2);
      it->second %= 2;
    }
    if (it->second == 0) it = out.powers.erase(it); else ++it;
  }
  return extra;
}
} // namespace

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      Monomial m;
      Rational extra = mul_monomials(ma, mb, m);
      r.add_term(m, ca * cb * extra);
    }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(Rational(1)), b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

namespace {
// m must be a product of extension generators with exponent 1 each;
// returns the rational square of the monomial
bool sqrt_monomial_square(const Monomial& m, Rational& sq) {
  sq = 1;
  for (auto& [v, e] : m.powers) {
    if (e != 1 || !Poly::is_sqrt_var(v)) return false;
    sq *= Poly::sqrt_square(v);
  }
  return true;
}
} // namespace

Poly inverse(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("inverse: division by zero");
  const auto& ts = p.terms();
  if (ts.size() == 1) {
    auto& [m, c] = *ts.begin();
    Rational sq;
    if (m.empty()) return Poly(Rational(1) / c);
    if (sqrt_monomial_square(m, sq)) {
      // 1/(c*m) = m/(c*m^2) = m/(c*sq)
      Poly mono;
      mono = Poly(Rational(1));
      for (auto& [v, e] : m.powers) mono = mono * Poly::var(v);
      return Poly(Rational(1) / (c * sq)) * mono;
    }
    throw std::domain_error("inverse: monomial is not invertible in this ring: " + p.str());
  }
  if (ts.size() == 2) {
    // u + v*m with u, v rational and m a square-root monomial: multiply by the conjugate
    auto it = ts.begin();
    auto& [m1, c1] = *it;
    ++it;
    auto& [m2, c2] = *it;
    if (m1.empty()) {
      Rational sq;
      if (sqrt_monomial_square(m2, sq)) {
        Rational denom = c1 * c1 - c2 * c2 * sq; // (u + v m)(u - v m) = u^2 - v^2 m^2
        if (denom == 0) throw std::domain_error("inverse: conjugate norm vanishes: " + p.str());
        Poly mono(Rational(1));
        for (auto& [v, e] : m2.powers) mono = mono * Poly::var(v);
        return Poly(c1 / denom) - Poly(c2 / denom) * mono;
      }
    }
  }
  throw std::domain_error("inverse: polynomial is not invertible in this ring: " + p.str());
}

Poly Poly::subst(const std::map<std::string, Poly>& bindings) const {
  for (auto& [name, value] : bindings) {
    if (is_sqrt_var(name)) {
      // only substitutions compatible with the quadratic relation are ring maps
      Poly sqv = value * value;
      if (!(sqv == Poly(sqrt_square(name))))
        throw std::domain_error("subst: binding for " + name + " violates its quadratic relation");
    }
  }
  Poly out;
  for (auto& [m, c] : terms_) {
    Poly term(c);
    for (auto& [v, e] : m.powers) {
      auto it = bindings.find(v);
      if (it == bindings.end()) term = term * Poly::var(v, e);
      else term = term * it->second.pow(static_cast<unsigned>(e));
    }
    out += term;
  }
  return out;
}

Rational Poly::eval_rational(const std::map<std::string, Rational>& vals) const {
  Rational out(0);
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [v, e] : m.powers) {
      auto it = vals.find(v);
      if (it == vals.end())
        throw std::domain_error("eval_rational: unbound variable " + v);
      if (is_sqrt_var(v))
        throw std::domain_error("eval_rational: no rational value for generator " + v);
      t *= rational_pow(it->second, e);
    }
    out += t;
  }
  return out;
}

double Poly::eval_double(const std::map<std::string, double>& vals) const {
  double out = 0;
  for (auto& [m, c] : terms_) {
    double t = to_double(c);
    for (auto& [v, e] : m.powers) {
      double x;
      auto it = vals.find(v);
      if (it != vals.end()) x = it->second;
      else if (is_sqrt_var(v)) x = std::sqrt(to_double(sqrt_square(v)));
      else throw std::domain_error("eval_double: unbound variable " + v);
      t *= std::pow(x, e);
    }
    out += t;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      if (a < 0) { os << " - "; a = -a; } else os << " + ";
    }
    bool coeff_one = (a == 1) && !m.empty();
    if (!coeff_one) os << to_string(a);
    bool need_star = !coeff_one;
    for (auto& [v, e] : m.powers) {
      if (need_star) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

// ---- coefficient grammar ----
// product ::= [sign] factor ('*' factor)*
// factor  ::= rational | identifier ['^' integer]
// rational::= integer ['/' integer]

namespace {
struct CoeffParser {
  const std::string& s;
  size_t i = 0;
  explicit CoeffParser(const std::string& text) : s(text) {}

  void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool done() { skip_ws(); return i >= s.size(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("coefficient parse error at column " + std::to_string(i + 1) +
                                ": " + msg + " in \"" + s + "\"");
  }

  Rational parse_number() {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected denominator");
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    return parse_rational(s.substr(start, i - start));
  }

  std::string parse_ident() {
    size_t start = i;
    if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail("expected identifier");
    ++i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }

  Poly parse_factor() {
    skip_ws();
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) return Poly(parse_number());
    std::string name = parse_ident();
    int exp = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail("expected exponent");
      exp = std::stoi(s.substr(start, i - start));
    }
    return Poly::var(name, exp);
  }

  Poly parse_product() {
    skip_ws();
    Rational sign(1);
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    Poly p(sign);
    p = p * parse_factor();
    skip_ws();
    while (i < s.size() && s[i] == '*') {
      ++i;
      p = p * parse_factor();
      skip_ws();
    }
    return p;
  }
};
} // namespace

Poly parse_poly(const std::string& text) {
  CoeffParser p(text);
  Poly out = p.parse_product();
  if (!p.done()) p.fail("trailing characters");
  return out;
}

} // namespace hlab
