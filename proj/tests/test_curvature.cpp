#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/catalog.hpp"
#include "hlab/curvature.hpp"

using namespace hlab;

namespace {

LieAlgebra heisenberg5() {
  Form de5 = Poly(-2L) * (Form::basis(4, {1, 4}) + Form::basis(4, {2, 3}));
  return extend(abelian(4), de5);
}

bool diag_is(const Mat<Poly>& ric, std::vector<Rational> expect) {
  int n = static_cast<int>(ric.size());
  if (n != static_cast<int>(expect.size())) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Poly& v = ric[i][j];
      if (i == j) {
        if (!(v == Poly(expect[static_cast<size_t>(i)]))) return false;
      } else if (!v.is_zero()) {
        return false;
      }
    }
  return true;
}

} // namespace

TEST_CASE("Koszul coefficients of the orthonormal metric") {
  LieAlgebra g = heisenberg5();
  ConnectionCoeffs cc = levi_civita(g);
  CHECK(cc.dim == 5);
  // [E1,E4] = 2 E5 splits evenly across the three Koszul terms
  CHECK(cc.coeff(5, 1, 4) == Poly(1L));
  CHECK(cc.coeff(5, 4, 1) == Poly(-1L));
  CHECK(cc.coeff(4, 1, 5) == Poly(-1L));
  CHECK(cc.coeff(1, 4, 5) == Poly(1L));
  CHECK(cc.coeff(1, 5, 4) == Poly(1L));
  CHECK(cc.coeff(2, 1, 4).is_zero());

  Brackets b = brackets_of(g);
  for (int k = 1; k <= 5; ++k)
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        // metric compatibility
        CHECK(cc.coeff(k, i, j) == -cc.coeff(j, i, k));
        // vanishing torsion against the brackets
        Poly c_kij;
        if (i < j && b.c.count({i, j})) c_kij = b.c.at({i, j})[static_cast<size_t>(k - 1)];
        if (i > j && b.c.count({j, i})) c_kij = -b.c.at({j, i})[static_cast<size_t>(k - 1)];
        CHECK(cc.coeff(k, i, j) - cc.coeff(k, j, i) == c_kij);
      }
}

TEST_CASE("curvature of the contact Heisenberg metric") {
  LieAlgebra g = heisenberg5();
  RiemannTensor R = riemann(g, levi_civita(g));
  // plane spanned with the bracket direction: sec = -3/4 |[X,Y]|^2
  CHECK(R.at(1, 4, 1, 4) == Poly(-3L));
  CHECK(R.at(2, 3, 2, 3) == Poly(-3L));
  // planes through the center: sec = +1
  CHECK(R.at(1, 5, 1, 5) == Poly(1L));
  CHECK(R.at(4, 5, 4, 5) == Poly(1L));
  CHECK(R.at(1, 2, 1, 2).is_zero());
  // symmetries on a sample of entries
  CHECK(R.at(1, 4, 1, 4) == R.at(4, 1, 4, 1));
  CHECK(R.at(1, 4, 4, 1) == -R.at(1, 4, 1, 4));
  CHECK(riemann_matches_curvature_forms(g));

  RicciReport ric = ricci(g);
  CHECK(diag_is(ric.ricci, {-2, -2, -2, -2, 4}));
  CHECK(ric.scalar == Poly(-4L));
  REQUIRE(ric.fit.has_value());
  CHECK(ric.fit->first == Poly(-2L));
  CHECK(ric.fit->second == Poly(6L));
}

TEST_CASE("pinned Ricci diagonals across the families") {
  CHECK(diag_is(ricci(family("F1", {{"r", Rational(1)}})).ricci,
                {Rational(-31, 2), -5, -5, Rational(11, 2), Rational(-1, 2)}));

  RicciReport f2 = ricci(family("F2", {{"r", Rational(1)}}));
  CHECK(diag_is(f2.ricci, {-8, -8, -8, -8, 4}));
  CHECK(f2.scalar == Poly(-28L));

  // the nilpotent point of F4 is the Heisenberg metric again
  CHECK(diag_is(ricci(family("F4", {{"a", Rational(0)}, {"b", Rational(0)}})).ricci,
                {-2, -2, -2, -2, 4}));
  CHECK(diag_is(ricci(family("F4", {{"a", Rational(1)}, {"b", Rational(1)}})).ricci,
                {-12, -12, 0, 0, 0}));

  CHECK(diag_is(ricci(family("F5", {{"r", Rational(2)}})).ricci, {-12, 0, -12, 0, 0}));
}

TEST_CASE("eta-Einstein fits, symbolic in the family parameter") {
  Poly r = Poly::var("r");
  RicciReport f2 = ricci(family("F2"));
  REQUIRE(f2.fit.has_value());
  CHECK(f2.fit->first == Poly(-2L) - Poly(6L) * r * r);
  CHECK(f2.fit->second == Poly(6L) + Poly(6L) * r * r);

  CHECK(!ricci(family("F1")).fit.has_value());
  CHECK(!ricci(family("F4")).fit.has_value());
  CHECK(!ricci(family("F5")).fit.has_value());
  CHECK(!ricci(family("F4", {{"a", Rational(2)}, {"b", Rational(0)}})).fit.has_value());

  // direct use of the solver on a matrix that does fit
  RicciReport nil = ricci(family("F4", {{"a", Rational(0)}, {"b", Rational(0)}}));
  auto fit = eta_einstein_fit(nil.ricci);
  REQUIRE(fit.has_value());
  CHECK(fit->first == Poly(-2L));
  CHECK(fit->second == Poly(6L));
}

TEST_CASE("Killing property of the Reeb direction") {
  CHECK(k_contact(family("F2")).pass); // symbolic, every r
  CHECK(k_contact(family("F4", {{"a", Rational(0)}, {"b", Rational(0)}})).pass);

  for (const char* id : {"F1", "F5"}) {
    auto rep = k_contact(family(id));
    CHECK(!rep.pass);
    bool witness14 = false;
    for (const auto& v : rep.violations)
      if (std::get<0>(v) == 1 && std::get<1>(v) == 4) witness14 = true;
    CHECK_MESSAGE(witness14, id, " should violate the Killing equation at (1,4)");
  }
  CHECK(!k_contact(family("F4", {{"a", Rational(1)}, {"b", Rational(0)}})).pass);
  CHECK(!k_contact(family("F3", {{"a", Rational(0)}, {"r", Rational(1)}})).pass);
  CHECK(!k_contact(family("F7", {{"a", Rational(0)}, {"r", Rational(1)}})).pass);
}

TEST_CASE("flat and six-dimensional cases") {
  LieAlgebra fl = abelian(5);
  ConnectionCoeffs cc = levi_civita(fl);
  for (int k = 1; k <= 5; ++k)
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) CHECK(cc.coeff(k, i, j).is_zero());
  for (const auto& row : curvature_forms(fl, cc))
    for (const Form& f : row) CHECK(f.is_zero());
  RicciReport ric = ricci(fl);
  CHECK(ric.scalar.is_zero());
  REQUIRE(ric.fit.has_value());
  CHECK(ric.fit->first.is_zero());
  CHECK(ric.fit->second.is_zero());

  CHECK(riemann_matches_curvature_forms(nilmanifold_algebra()));
  CHECK(riemann_matches_curvature_forms(
      g2_extension("K", {{"a", Rational(0)}, {"b", Rational(0)}, {"a1", Rational(2)}})));
  CHECK(riemann_matches_curvature_forms(family("F5", {{"r", Rational(2)}})));
}

TEST_CASE("connection forms assemble the same curvature") {
  LieAlgebra g = family("F2", {{"r", Rational(1)}});
  ConnectionCoeffs cc = levi_civita(g);
  Mat<Form> om = connection_forms(cc);
  REQUIRE(om.size() == 5);
  // omega^k_l = sum_i gamma[k][i][l] e^i, checked entrywise on one slot
  Form expect(5);
  for (int i = 1; i <= 5; ++i)
    expect += cc.coeff(1, i, 4) * Form::basis(5, {i});
  CHECK(om[0][3] == expect);

  Mat<Form> Om = curvature_forms(g, cc);
  RiemannTensor R = riemann(g, cc);
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l)
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
          Poly lhs = Om[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)].coeff(
              Form::mask_of({i, j}));
          CHECK(lhs == R.at(k, l, i, j));
        }
}
