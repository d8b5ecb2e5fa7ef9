#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/form.hpp"

using namespace hlab;

namespace {
Form e(std::initializer_list<int> idx) { return Form::basis(5, idx); }
} // namespace

TEST_CASE("wedge is graded-commutative") {
  Form a = e({1}), b = e({2});
  CHECK(wedge(a, b) == -wedge(b, a));
  Form two = e({1, 2}), one = e({3});
  CHECK(wedge(two, one) == wedge(one, two)); // even degree commutes
  CHECK(wedge(a, a).is_zero());
}

TEST_CASE("wedge respects the determinant convention") {
  // (e1 ^ e2)(E1, E2) = 1 with no 1/k! factor
  Form f = wedge(e({1}), e({2}));
  std::vector<std::vector<Poly>> v{{Poly(1L), Poly(), Poly(), Poly(), Poly()},
                                   {Poly(), Poly(1L), Poly(), Poly(), Poly()}};
  CHECK(eval(f, v) == Poly(1L));
  std::swap(v[0], v[1]);
  CHECK(eval(f, v) == Poly(-1L));
}

TEST_CASE("merge sign counts the transpositions") {
  CHECK(Form::merge_sign(Form::mask_of({1}), Form::mask_of({2})) == 1);
  CHECK(Form::merge_sign(Form::mask_of({2}), Form::mask_of({1})) == -1);
  CHECK(Form::merge_sign(Form::mask_of({1, 4}), Form::mask_of({2, 3})) == 1);
  CHECK(Form::merge_sign(Form::mask_of({2, 3}), Form::mask_of({1, 4})) == 1);
  CHECK(Form::merge_sign(Form::mask_of({2}), Form::mask_of({1, 3})) == -1);
}

TEST_CASE("basis indices must increase strictly") {
  CHECK_THROWS_AS(Form::basis(5, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Form::basis(5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Form::basis(5, {1, 6}), std::invalid_argument);
  CHECK_THROWS_AS(Form(12), std::invalid_argument); // coframe cap
}

TEST_CASE("adding an opposite coefficient prunes the term") {
  Form f = e({1, 2});
  f.add(Form::mask_of({1, 2}), Poly(-1L));
  CHECK(f.is_zero());
  f.set(Form::mask_of({3, 4}), Poly());
  CHECK(f.terms().empty());
  CHECK(f.degree() == -1); // the zero form carries no degree
}

TEST_CASE("mixed-degree sums are rejected") {
  Form a = e({1}), b = e({1, 2});
  CHECK_THROWS_AS(a += b, std::invalid_argument);
  Form c(4);
  CHECK_THROWS_AS(a += c, std::invalid_argument); // different coframe
}

TEST_CASE("interior product is an antiderivation") {
  Form f = wedge(e({1, 2}), e({3}));
  // i_{E2}(e123) = -e13
  CHECK(contract_basis(2, f) == -Form::basis(5, {1, 3}));
  std::vector<Poly> X{Poly(), Poly(1L), Poly(), Poly(), Poly()};
  CHECK(contract(X, f) == -Form::basis(5, {1, 3}));
  // i_X i_X = 0
  CHECK(contract(X, contract(X, f)).is_zero());
}

TEST_CASE("coframe substitution matches hand expansion") {
  // f1 = e1 + e2, f2 = e2: e12 -> f1 ^ f2 under the inverse map e1 -> f1 - f2
  std::vector<std::vector<Poly>> M{
      {Poly(1L), Poly(-1L), Poly(), Poly(), Poly()},
      {Poly(), Poly(1L), Poly(), Poly(), Poly()},
      {Poly(), Poly(), Poly(1L), Poly(), Poly()},
      {Poly(), Poly(), Poly(), Poly(1L), Poly()},
      {Poly(), Poly(), Poly(), Poly(), Poly(1L)},
  };
  Form f = e({1, 2});
  CHECK(substitute_coframe(f, M, 5) == e({1, 2}));
  Form g = e({1});
  CHECK(substitute_coframe(g, M, 5) == e({1}) - e({2}));
}

TEST_CASE("jet coefficient forms differentiate term by term") {
  JetForm f(3);
  f.set(JetForm::mask_of({1, 2}), Jet2{1.0, 2.0, 3.0});
  JetForm df = time_derivative(f);
  CHECK(df.coeff(JetForm::mask_of({1, 2})).v == 2.0);
  CHECK(df.coeff(JetForm::mask_of({1, 2})).d1 == 3.0);
}

TEST_CASE("embedding keeps masks") {
  Form f = e({1, 4});
  Form g = embed_form(f, 6);
  CHECK(g.dim() == 6);
  CHECK(g.coeff(Form::mask_of({1, 4})) == Poly(1L));
  CHECK_THROWS_AS(embed_form(g, 5), std::invalid_argument);
}

TEST_CASE("rendering uses basis letters and signs") {
  Form f = e({1, 2}) - e({3, 4});
  CHECK(f.str() == "e12 - e34");
  CHECK((-f).str() == "-e12 + e34");
  CHECK(Form(5).str() == "0");
  CHECK(f.str("h") == "h12 - h34");
}

TEST_CASE("rational and double coefficient instantiations") {
  QForm q(4);
  q.set(QForm::mask_of({1, 3}), Rational(2, 3));
  CHECK(q.coeff(QForm::mask_of({1, 3})) == Rational(2, 3));
  Form p(4);
  p.set(Form::mask_of({1, 3}), Rational(2, 3) * Poly(1L));
  DForm d = eval_form(p, {});
  CHECK(max_abs(d) == doctest::Approx(2.0 / 3.0));
  QForm qq = eval_form_rational(p, {});
  CHECK(qq == q);
}
