#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/catalog.hpp"
#include "hlab/liealg.hpp"

#include <stdexcept>

using namespace hlab;

namespace {

Form e4(std::initializer_list<int> idx) { return Form::basis(4, idx); }
Form e5(std::initializer_list<int> idx) { return Form::basis(5, idx); }

// rank-one central extension of the abelian 4-space, de5 = -2e14 - 2e23
LieAlgebra heisenberg5() {
  Form de5 = Poly(-2L) * (e4({1, 4}) + e4({2, 3}));
  return extend(abelian(4), de5);
}

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim != b.dim) return false;
  for (int i = 1; i <= a.dim; ++i)
    if (!(a.diff(i) == b.diff(i))) return false;
  return true;
}

} // namespace

TEST_CASE("d extends to higher degree by the Leibniz rule") {
  LieAlgebra g = heisenberg5();
  CHECK(d_form(g, e5({1})).is_zero());
  CHECK(d_form(g, e5({5})) == Poly(-2L) * (e5({1, 4}) + e5({2, 3})));
  // d(e1^e5) = -e1^de5
  CHECK(d_form(g, wedge(e5({1}), e5({5}))) == Poly(2L) * e5({1, 2, 3}));
  // d(e5^e1) picks up the opposite sign
  CHECK(d_form(g, wedge(e5({5}), e5({1}))) == Poly(-2L) * e5({1, 2, 3}));
  Form f = e5({1, 5}) + Poly(3L) * e5({2, 5});
  CHECK(d_form(g, d_form(g, f)).is_zero());
}

TEST_CASE("jacobi check passes on every catalog entry, symbolically") {
  for (const auto& id : family_ids()) {
    auto rep = jacobi_check(family(id));
    CHECK_MESSAGE(rep.pass, "family ", id);
    CHECK(rep.failures.empty());
  }
  for (const char* id : {"h1", "h2", "h3", "h4", "h5"}) CHECK(jacobi_check(canonical(id)).pass);
  CHECK(jacobi_check(g2_extension("K")).pass);
  CHECK(jacobi_check(g2_extension("Ktilde")).pass);
  CHECK(jacobi_check(abelian(5)).pass);
}

TEST_CASE("jacobi check names the coframe indices that fail") {
  LieAlgebra bad;
  bad.dim = 4;
  bad.d = {e4({2, 3}), e4({1, 4}), Form::zero(4), Form::zero(4)};
  auto rep = jacobi_check(bad);
  CHECK(!rep.pass);
  REQUIRE(rep.failures.size() == 2);
  CHECK(rep.failures[0].first == 1);
  CHECK(rep.failures[0].second == -e4({1, 3, 4})); // d(e23) = de2^e3
  CHECK(rep.failures[1].first == 2);
  CHECK(rep.failures[1].second == e4({2, 3, 4})); // d(e14) = de1^e4
  CHECK(!bracket_jacobi_holds(brackets_of(bad)));
}

TEST_CASE("brackets round-trip through the differentials") {
  for (const LieAlgebra& g : {heisenberg5(), family("F1"), canonical("h2"), family("F4")}) {
    Brackets b = brackets_of(g);
    CHECK(bracket_jacobi_holds(b));
    CHECK(same_algebra(from_brackets(b), g));
  }
  // de5 = -2e14 - 2e23 means [E1,E4] = 2E5 and [E2,E3] = 2E5
  Brackets b = brackets_of(heisenberg5());
  CHECK(b.dim == 5);
  REQUIRE(b.c.count({1, 4}) == 1);
  CHECK(b.c.at({1, 4})[4] == Poly(2L));
  CHECK(b.c.at({2, 3})[4] == Poly(2L));
  for (int k = 0; k < 4; ++k) CHECK(b.c.at({1, 4})[k].is_zero());
  CHECK(b.c.count({1, 2}) == 0);
}

TEST_CASE("parameters can be listed and substituted") {
  LieAlgebra g = family("F2");
  CHECK(algebra_parameters(g) == std::vector<std::string>{"r"});
  LieAlgebra bound = evaluate_algebra(g, {{"r", Poly(1L)}});
  CHECK(same_algebra(bound, family("F2", {{"r", Rational(1)}})));
  CHECK(algebra_parameters(bound).empty());
  CHECK(algebra_parameters(heisenberg5()).empty());
}

TEST_CASE("coframe changes compose and invert") {
  LieAlgebra g = family("F2", {{"r", Rational(1)}});
  BasisChange B = mat_identity<Poly>(5);
  B[0][1] = Poly(1L);      // f1 = e1 + e2
  B[2][2] = Poly(1L, 2L);  // f3 = e3/2
  LieAlgebra h = apply_basis_change(g, B);
  CHECK(jacobi_check(h).pass);
  CHECK(!same_algebra(h, g));
  LieAlgebra back = apply_basis_change(h, mat_inverse(B));
  CHECK(same_algebra(back, g));
  // identity change is a no-op
  CHECK(same_algebra(apply_basis_change(g, mat_identity<Poly>(5)), g));
}

TEST_CASE("central extensions and lifted forms") {
  LieAlgebra g = heisenberg5();
  CHECK(g.dim == 5);
  for (int i = 1; i <= 4; ++i) {
    CHECK(g.diff(i).is_zero());
    CHECK(g.diff(i).dim() == 5);
  }
  CHECK(g.diff(5) == Poly(-2L) * (e5({1, 4}) + e5({2, 3})));
  // the new differential may also be given on the extended space directly
  LieAlgebra g2 = extend(abelian(4), Poly(-2L) * (e5({1, 4}) + e5({2, 3})));
  CHECK(same_algebra(g2, g));

  Form lifted = lift_form(e4({1, 2}), 5);
  CHECK(lifted.dim() == 5);
  CHECK(lifted == e5({1, 2}));
}

TEST_CASE("solvability verdicts separate the families from the nilpotent forms") {
  auto f1 = solvability_class(family("F1"));
  CHECK(f1.solvable);
  CHECK(!f1.nilpotent);
  CHECK(f1.consistent);
  CHECK(f1.points.size() == 3); // symbolic algebras are sampled
  for (const auto& p : f1.points) {
    CHECK(!p.point.empty());
    CHECK(p.derived_dims.front() == 5);
    CHECK(p.derived_dims.back() == 0);
  }

  auto f2 = solvability_class(family("F2"));
  CHECK(f2.solvable);
  CHECK(!f2.nilpotent);

  auto h2 = solvability_class(canonical("h2"));
  CHECK(h2.nilpotent);
  CHECK(h2.solvable);
  CHECK(h2.points.size() == 1); // no parameters, single point

  auto ab = solvability_class(abelian(5));
  CHECK(ab.nilpotent);
  CHECK(ab.points.at(0).derived_dims == std::vector<int>{5, 0});
  CHECK(ab.points.at(0).lower_central_dims == std::vector<int>{5, 0});
}

TEST_CASE("center dimension") {
  CHECK(center(abelian(5)) == 5);
  CHECK(center(heisenberg5()) == 1);
}

TEST_CASE("jet differentials are constant in time") {
  LieAlgebra g = heisenberg5();
  auto jd = jet_differentials(g, {});
  REQUIRE(jd.size() == 5);
  Jet2 c = jd[4].coeff(JetForm::mask_of({1, 4}));
  CHECK(c.v == -2.0);
  CHECK(c.d1 == 0.0);
  CHECK(c.d2 == 0.0);
  auto qd = exact_jet_differentials(g, {});
  QJet qc = qd[4].coeff(QJetForm::mask_of({1, 4}));
  CHECK(qc.v == Rational(-2));
  CHECK(qc.d1 == Rational(0));
}
