#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/poly.hpp"

#include <map>

using namespace hlab;

namespace {
Poly P(long n) { return Poly(n); }
} // namespace

TEST_CASE("rational literals parse and print") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("two"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic over named parameters") {
  Poly r = Poly::var("r"), a = Poly::var("a");
  Poly p = r * r + Rational(3, 2) * a;
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p * P(0) == Poly());
  CHECK((r + a) * (r - a) == r * r - a * a);
  CHECK(p.variables() == std::vector<std::string>{"a", "r"});
  CHECK(Poly::var("r", 3) == r * r * r);
}

TEST_CASE("square root generators reduce against their defining square") {
  Poly q2 = Poly::var("q2"), q3 = Poly::var("q3");
  CHECK(q2 * q2 == P(2));
  CHECK(q3 * q3 == P(3));
  CHECK(q2.pow(4) == P(4));
  // mixed products stay irreducible
  Poly m = q2 * q3;
  CHECK_FALSE(m.is_constant());
  CHECK(m * m == P(6));
  CHECK(Poly::is_sqrt_var("q2"));
  CHECK_FALSE(Poly::is_sqrt_var("r"));
}

TEST_CASE("registering a generator twice must agree on the square") {
  Poly::register_sqrt("q2", Rational(2)); // same square is fine
  CHECK_THROWS_AS(Poly::register_sqrt("q2", Rational(5)), std::domain_error);
  CHECK_THROWS_AS(Poly::register_sqrt("qneg", Rational(-1)), std::domain_error);
}

TEST_CASE("restricted inversion covers the shapes basis changes need") {
  Poly q2 = Poly::var("q2");
  CHECK(inverse(P(4)) == Poly(Rational(1, 4)));
  CHECK(inverse(Rational(3) * q2) * (Rational(3) * q2) == P(1));
  Poly b = P(1) + q2; // binomial with a generator part
  CHECK(inverse(b) * b == P(1));
  CHECK_THROWS_AS(inverse(Poly()), std::exception);
  CHECK_THROWS_AS(inverse(Poly::var("r") + P(1)), std::exception);
}

TEST_CASE("substitution and evaluation agree") {
  Poly r = Poly::var("r"), a = Poly::var("a");
  Poly p = r * r * a - Rational(1, 2) * a;
  std::map<std::string, Poly> binding{{"r", P(3)}};
  Poly q = p.subst(binding);
  CHECK(q == P(9) * a - Rational(1, 2) * a);
  CHECK(p.eval_rational({{"r", Rational(3)}, {"a", Rational(2)}}) == Rational(17));
  CHECK(p.eval_double({{"r", 3.0}, {"a", 2.0}}) == doctest::Approx(17.0));
  // partial substitution keeps the other variable symbolic
  CHECK(q.variables() == std::vector<std::string>{"a"});
}

TEST_CASE("coefficient grammar parses signed products") {
  CHECK(parse_poly("-3*r^2") == Rational(-3) * Poly::var("r", 2));
  CHECK(parse_poly("1/2*a*b") == Rational(1, 2) * Poly::var("a") * Poly::var("b"));
  CHECK(parse_poly("q2") == Poly::var("q2"));
  CHECK(parse_poly("+5") == Poly(5L));
  CHECK_THROWS_AS(parse_poly("r + a"), std::invalid_argument); // one product only
  CHECK_THROWS_AS(parse_poly("3r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("r^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("printing is stable and readable") {
  Poly r = Poly::var("r");
  CHECK((r * r + P(1)).str() == "1 + r^2");
  CHECK((P(0) - r).str() == "-r");
  CHECK(Poly().str() == "0");
  CHECK((Rational(1, 2) * Poly::var("a") * r).str() == "1/2*a*r");
}

TEST_CASE("constant recognition") {
  CHECK(P(7).is_constant());
  CHECK(P(7).constant_value() == Rational(7));
  CHECK_FALSE(Poly::var("x").is_constant());
  CHECK_THROWS_AS(Poly::var("x").constant_value(), std::exception);
}
