#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/catalog.hpp"
#include "hlab/structures.hpp"

#include <algorithm>
#include <stdexcept>

using namespace hlab;

namespace {

Form e5(std::initializer_list<int> idx) { return Form::basis(5, idx); }

bool same_structure(const SU2Structure& a, const SU2Structure& b) {
  return a.eta == b.eta && a.om1 == b.om1 && a.om2 == b.om2 && a.om3 == b.om3;
}

bool has_failure(const std::vector<std::string>& failures, const std::string& what) {
  return std::find(failures.begin(), failures.end(), what) != failures.end();
}

bool has_residual(const StructureCheck& c, const std::string& name) {
  for (const auto& [n, f] : c.residuals)
    if (n == name) return true;
  return false;
}

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim != b.dim) return false;
  for (int i = 1; i <= a.dim; ++i)
    if (!(a.diff(i) == b.diff(i))) return false;
  return true;
}

} // namespace

TEST_CASE("algebraic compatibility of the quadruplet") {
  SU2Structure s = standard_structure();
  auto rep = check_su2(s);
  CHECK(rep.pass);
  CHECK(rep.volume == Poly(2L) * e5({1, 2, 3, 4}));

  SU2Structure bad = s;
  bad.om2 = bad.om1;
  auto r2 = check_su2(bad);
  CHECK(!r2.pass);
  CHECK(has_failure(r2.failures, "om1 ^ om2 != 0"));

  bad = s;
  bad.om3 = Poly(2L) * bad.om3;
  auto r3 = check_su2(bad);
  CHECK(!r3.pass);
  CHECK(has_failure(r3.failures, "om3 ^ om3 differs from om1 ^ om1"));

  bad = s;
  bad.eta = e5({1});
  auto r4 = check_su2(bad);
  CHECK(!r4.pass);
  CHECK(has_failure(r4.failures, "eta ^ volume = 0"));

  bad = s;
  bad.om1 = Form(5);
  CHECK(has_failure(check_su2(bad).failures, "om1 ^ om1 = 0"));
}

TEST_CASE("algebraic compatibility of the triple") {
  CHECK(check_su3(flat_structure()).pass);
  SU3Structure bad = flat_structure();
  bad.psip = Poly(2L) * bad.psip;
  auto rep = check_su3(bad);
  CHECK(!rep.pass);
  CHECK(has_failure(rep.failures, "Psi+ ^ Psi- != 2/3 F^3"));

  bad = flat_structure();
  bad.F = Form::basis(6, {1, 2}) + Form::basis(6, {3, 4});
  CHECK(has_failure(check_su3(bad).failures, "F^3 = 0"));
}

TEST_CASE("the standard quadruplet is hypo-contact on every family, symbolically") {
  for (const auto& id : family_ids()) {
    auto chk = check_hypo_contact(family(id), standard_structure());
    CHECK_MESSAGE(chk.hypo, id);
    CHECK_MESSAGE(chk.contact, id);
    CHECK(chk.hypo_contact);
    CHECK(chk.residuals.empty());
  }
}

TEST_CASE("hypo and contact can fail separately") {
  // h2 has d e5 = 0, so the contact equation fails outright
  auto h2 = check_hypo_contact(canonical("h2"), standard_structure());
  CHECK(!h2.contact);
  CHECK(!h2.hypo_contact);
  CHECK(has_residual(h2, "d eta + 2 om3"));

  // scaling eta keeps the hypo closure but breaks d eta = -2 om3
  SU2Structure scaled = standard_structure();
  scaled.eta = Poly(2L) * scaled.eta;
  auto sc = check_hypo_contact(family("F2"), scaled);
  CHECK(sc.hypo);
  CHECK(!sc.contact);
  CHECK(has_residual(sc, "d eta + 2 om3"));

  // mixing om3 into om1 breaks the hypo closure but not the contact equation
  SU2Structure mixed = standard_structure();
  mixed.om1 = mixed.om2 + mixed.om3;
  auto mx = check_hypo_contact(family("F2"), mixed);
  CHECK(!mx.hypo);
  CHECK(mx.contact);
  CHECK(has_residual(mx, "d(om1 ^ eta)"));
}

TEST_CASE("closed om1, om2 happens only at the nilpotent point of F4") {
  CHECK(check_closed_omega12(family("F4", {{"a", Rational(0)}, {"b", Rational(0)}}),
                             standard_structure()));
  CHECK(!check_closed_omega12(family("F4", {{"a", Rational(1)}, {"b", Rational(0)}}),
                              standard_structure()));
  CHECK(!check_closed_omega12(family("F2", {{"r", Rational(1)}}), standard_structure()));
  CHECK(!check_closed_omega12(family("F5", {{"r", Rational(2)}}), standard_structure()));
}

TEST_CASE("product and restriction invert each other") {
  SU2Structure s = standard_structure();
  SU3Structure m = product_structure(s, 6);
  CHECK(check_su3(m).pass);
  SU2Structure back = restrict_by_normal(m, 6, RestrictionKind::Generic);
  CHECK(same_structure(back, s));

  // the adapted restriction moves the tangential part of F into om2
  SU2Structure adapted = restrict_by_normal(m, 6, RestrictionKind::HypoAdapted);
  CHECK(adapted.om2 == s.om3);
  CHECK(adapted.eta == s.eta);
  CHECK(check_su2(adapted).pass);

  CHECK_THROWS_AS(product_structure(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(restrict_by_normal(m, 7, RestrictionKind::Generic), std::invalid_argument);
}

TEST_CASE("restriction of the six-dimensional models") {
  SU2Structure q = restrict_by_normal(nilmanifold_structure(), 5, RestrictionKind::HypoAdapted);
  CHECK(check_su2(q).pass);
  // flipping the normal flips eta and the contracted forms
  SU2Structure qm = restrict_by_normal(nilmanifold_structure(), -5, RestrictionKind::HypoAdapted);
  CHECK(qm.eta == -q.eta);
  CHECK(qm.om2 == q.om2); // tangential part does not see the orientation
}

TEST_CASE("contraction identity detects dF = 2 Psi+") {
  Form z = check_contraction_identity(nilmanifold_algebra(), nilmanifold_structure(), 5);
  CHECK(z.is_zero());
  Form nz = check_contraction_identity(flat_algebra(), flat_structure(), 5);
  CHECK(!nz.is_zero());
  Form flipped = check_contraction_identity(flat_algebra(), flat_structure(), -5);
  CHECK(flipped == -nz);
}

TEST_CASE("circle-bundle lifts and the half-flat obstruction") {
  LieAlgebra f4 = family("F4", {{"a", Rational(0)}, {"b", Rational(0)}});
  Form de6 = Poly(2L) * e5({1, 2});

  LiftReport lift = lift_extension(f4, standard_structure(), de6, Poly(0L), Poly(1L));
  CHECK(lift.half_flat);
  CHECK(lift.d_FF.is_zero());
  CHECK(lift.d_psip.is_zero());
  CHECK(lift.d_de6.is_zero());
  CHECK(lift.obstruction.is_zero());
  CHECK(same_algebra(lift.g6, g2_extension("K", {{"a", Rational(0)}, {"b", Rational(0)},
                                                 {"a1", Rational(2)}})));
  CHECK(jacobi_check(lift.g6).pass);

  LiftReport blocked = lift_extension(f4, standard_structure(), de6, Poly(1L), Poly(0L));
  CHECK(!blocked.half_flat);
  CHECK(blocked.obstruction == Poly(2L) * e5({1, 2, 3, 4}));

  LieAlgebra f5 = family("F5", {{"r", Rational(1)}});
  Form de6t = Poly(-2L) * e5({1, 3});
  LiftReport tilde = lift_extension(f5, standard_structure(), de6t, Poly(1L), Poly(0L));
  CHECK(tilde.half_flat);
  CHECK(same_algebra(tilde.g6, g2_extension("Ktilde", {{"r", Rational(1)}, {"a2", Rational(-2)}})));

  CHECK_THROWS_AS(lift_extension(flat_algebra(), standard_structure(), de6, Poly(1L), Poly(0L)),
                  std::invalid_argument);
}

TEST_CASE("rotations in the (om1, om2)-plane") {
  SU2Structure s = standard_structure();
  Poly c(Rational(3, 5)), sn(Rational(4, 5));
  SU2Structure r = rotate_structure(s, c, sn);
  CHECK(r.eta == s.eta);
  CHECK(r.om3 == s.om3);
  CHECK(!(r.om1 == s.om1));
  CHECK(check_su2(r).pass);
  CHECK(check_su2(r).volume == check_su2(s).volume);
  // rotating back restores the structure
  CHECK(same_structure(rotate_structure(r, c, -sn), s));
  CHECK(same_structure(rotate_structure(s, Poly(1L), Poly(0L)), s));
  // the hypo-contact conditions are rotation invariant
  CHECK(check_hypo_contact(family("F2"), r).hypo_contact);
}

TEST_CASE("pullback along a coframe change") {
  SU2Structure s = standard_structure();
  CHECK(same_structure(pullback_structure(s, mat_identity<Poly>(5)), s));

  BasisChange twice = mat_identity<Poly>(5);
  for (int i = 0; i < 5; ++i) twice[i][i] = Poly(2L);
  SU2Structure dbl = pullback_structure(s, twice);
  CHECK(dbl.eta == Poly(2L) * s.eta);
  CHECK(dbl.om1 == Poly(4L) * s.om1);
  CHECK(dbl.om3 == Poly(4L) * s.om3);
}
