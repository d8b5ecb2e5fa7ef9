#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/holonomy.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

using namespace hlab;

namespace {

std::map<std::string, Rational> f2_nil() { return {{"r", Rational(0)}}; }
std::map<std::string, Rational> k_nil() {
  return {{"a", Rational(0)}, {"b", Rational(0)}, {"a1", Rational(2)}};
}

Trajectory f2_traj() { return integrate(build_hypo_ode("F2", f2_nil()), 0.5, 1e-10, {0.05, 0.1}); }

} // namespace

TEST_CASE("diagonal scaling patterns of the evolving metrics") {
  Jet2 f(4.0), g(2.0), h(3.0), k(1.0);
  auto s_f2 = frame_scalings<double>("F2", {f, g});
  REQUIRE(s_f2.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(s_f2[static_cast<size_t>(i)].v == 2.0);
  CHECK(s_f2[4].v == 1.0);

  auto s_f1 = frame_scalings<double>("F1", {f, g});
  CHECK(s_f1[0].v == 8.0); // f sqrt(f) g / 2
  CHECK(s_f1[1].v == 2.0);
  CHECK(s_f1[3].v == 0.5); // 2 / (sqrt(f) g)
  CHECK(s_f1[4].v == 1.0);

  auto s_f4 = frame_scalings<double>("F4", {f, g});
  CHECK(s_f4[0].v == 4.0);
  CHECK(s_f4[1].v == 4.0);
  CHECK(s_f4[2].v == 1.0);
  auto s_f5 = frame_scalings<double>("F5", {f, g});
  CHECK(s_f5[1].v == 1.0);
  CHECK(s_f5[2].v == 4.0);

  auto s_k = frame_scalings<double>("K", {f, h, k});
  REQUIRE(s_k.size() == 6);
  CHECK(s_k[0].v == 4.0);
  CHECK(s_k[2].v == 1.0);
  CHECK(s_k[4].v == 1.0);
  CHECK(s_k[5].v == 3.0);
  auto s_kt = frame_scalings<double>("Ktilde", {f, h, k});
  CHECK(s_kt[1].v == 1.0);
  CHECK(s_kt[2].v == 4.0);

  // exact coefficients when the jets are rational with square values
  auto s_q = frame_scalings<Rational>("F2", {QJet(Rational(4)), QJet(Rational(2))});
  CHECK(s_q[0].v == Rational(2));
  CHECK(s_q[4].v == Rational(1));

  CHECK_THROWS_AS(frame_scalings<double>("F2", {f, g, h}), std::invalid_argument);
  CHECK_THROWS_AS(frame_scalings<double>("F3", {f, g}), std::invalid_argument);
}

TEST_CASE("exact frame at the origin") {
  ExactCohomFrame fr = frame_at_origin("F2", f2_nil());
  REQUIRE(fr.scalings.size() == 5);
  // f = 1 + 2t - 2t^2 + ..., so sqrt(f) has jets (1, 1, -3)
  CHECK(fr.scalings[0] == QJet{Rational(1), Rational(1), Rational(-3)});
  // s5 = f'/2 with jets (1, -2, 12)
  CHECK(fr.scalings[4] == QJet{Rational(1), Rational(-2), Rational(12)});
  CHECK(fr.base.dim == 5);
}

TEST_CASE("frame differentials track the scaling speed") {
  std::vector<QJetForm> diffs(5, QJetForm(5)); // abelian base
  std::vector<QJet> s(5, QJet(Rational(1)));
  s[0] = QJet{Rational(1), Rational(2), Rational(0)};
  auto D = frame_differentials<Rational>(diffs, s);
  REQUIRE(D.size() == 5);
  // d eta^1 = -(s'/s) eta^{1,6}
  CHECK(D[0].coeff(QJetForm::mask_of({1, 6})).v == Rational(-2));
  for (int a = 2; a <= 5; ++a) CHECK(D[static_cast<size_t>(a - 1)].is_zero());
}

TEST_CASE("a static frame over the abelian base is flat") {
  std::vector<JetForm> diffs(5, JetForm(5));
  std::vector<Jet2> s(5, Jet2(1.0));
  FrameForms<double> ff = frame_curvature<double>(diffs, s);
  for (const auto& row : ff.curv)
    for (const JetForm& f : row) CHECK(max_abs_order1(f) == 0.0);

  CurvatureReport rep = curvature_forms(frame_at("abelian", {}, Trajectory{}, 0.0));
  CHECK(rep.dim == 6);
  CHECK(rep.rank == 0);
  CHECK(rep.residuals.at("first structure equation") == 0.0);
  CHECK(rep.residuals.at("bianchi") == 0.0);
}

TEST_CASE("curvature spots at the origin, exactly") {
  ExactCurvature f2 = exact_curvature_at_origin("F2", {{"r", Rational(1)}});
  const QJetForm& om12 = f2.curvature[0][1];
  // Omega^1_2 = -(1 + r^2)(eta^12 - eta^34) at r = 1
  CHECK(om12.coeff(QJetForm::mask_of({1, 2})).v == Rational(-2));
  CHECK(om12.coeff(QJetForm::mask_of({3, 4})).v == Rational(2));
  CHECK(om12.coeff(QJetForm::mask_of({1, 3})).v == Rational(0));

  ExactCurvature h = exact_curvature_at_origin("F4", {{"a", Rational(0)}, {"b", Rational(0)}});
  const QJetForm& hom12 = h.curvature[0][1];
  // Omega^1_2 = -((rho - 2)^2 / 4)(e^12 - e^34), rho = 0
  CHECK(hom12.coeff(QJetForm::mask_of({1, 2})).v == Rational(-1));
  CHECK(hom12.coeff(QJetForm::mask_of({3, 4})).v == Rational(1));

  // at rho = 2 that curvature slot degenerates to zero and the rank drops
  ExactCurvature deg = exact_curvature_at_origin("F4", {{"a", Rational(1)}, {"b", Rational(1)}});
  CHECK(deg.curvature[0][1].is_zero());
  CHECK(deg.rank == 5);
}

TEST_CASE("multi-time sampling recovers the full span at degenerate points") {
  std::map<std::string, Rational> rho2 = {{"a", Rational(1)}, {"b", Rational(1)}};
  Trajectory tr = integrate(build_hypo_ode("F4", rho2), 0.12, 1e-10, {0.05, 0.1});

  RankReport at0 = holonomy_rank("F4", rho2, tr, {0.0});
  CHECK(at0.rank == 5);
  RankReport multi = holonomy_rank("F4", rho2, tr, {0.0, 0.05, 0.1});
  CHECK(multi.rank == 8);
  CHECK(multi.times_used.size() == 3);
  CHECK(multi.times_skipped.empty());
  // the float cutoff should be decisive
  CHECK(multi.pivots.largest_pivot > 0.0);
  CHECK(multi.pivots.smallest_accepted_ratio > 100 * multi.pivots.largest_rejected_ratio);
}

TEST_CASE("sample times beyond the reached interval are skipped") {
  std::map<std::string, Rational> rho6 = {{"rho", Rational(6)}};
  Trajectory tr = integrate(build_hypo_ode("F4", rho6), 0.12, 1e-10, {0.05});
  CHECK(tr.status == "stopped-near-singularity");

  RankReport rep = holonomy_rank("F4", rho6, tr, {0.0, 0.05, 0.1});
  CHECK(rep.times_used.size() == 2);
  REQUIRE(rep.times_skipped.size() == 1);
  CHECK(rep.times_skipped[0] == doctest::Approx(0.1));
  CHECK(rep.rank == 8);

  RankReport none = holonomy_rank("F4", rho6, tr, {0.1});
  CHECK(none.times_used.empty());
  CHECK(none.rank == 0);
}

TEST_CASE("su(3) certification of the nilpotent F2 metric") {
  Trajectory tr = f2_traj();
  Su3Report rep = certify_su3("F2", f2_nil(), tr);
  CHECK(rep.verdict == "holonomy = SU(3)");
  CHECK(rep.rank == 8);
  CHECK(rep.rank_at_origin == 8);
  CHECK(rep.rank_exact);
  CHECK(rep.dF_residual < 1e-9);
  for (const auto& [name, v] : rep.dPsi_residuals) CHECK_MESSAGE(v < 1e-8, name);
  CHECK(!rep.times.empty());

  // the static abelian control never certifies
  Su3Report ab = certify_su3("abelian", {}, Trajectory{});
  CHECK(ab.verdict == "inconclusive");
}

TEST_CASE("g2 certification of the extension metrics") {
  HitchinSystem sys = build_hitchin_system("K", k_nil());
  Trajectory tr = integrate(sys, 0.12, 1e-10, {0.05, 0.1});
  G2Report rep = certify_g2("K", k_nil(), tr);
  CHECK(rep.verdict == "holonomy = G2");
  CHECK(rep.rank == 14);
  CHECK(rep.rank_at_origin <= 14);
  CHECK(rep.dphi_residual < 1e-9);
  CHECK(rep.dstarphi_residual < 1e-9);

  // switching the extension off caps the span at the su(3) block
  std::map<std::string, Rational> off = {{"a", Rational(0)}, {"b", Rational(0)},
                                         {"a1", Rational(0)}};
  Trajectory tr0 = integrate(build_hitchin_system("K", off), 0.12, 1e-10, {0.05, 0.1});
  G2Report ctl = certify_g2("K", off, tr0);
  CHECK(ctl.rank <= 8);
  CHECK(ctl.verdict == "inconclusive");
}

TEST_CASE("evolving structure forms carry the profile coefficients") {
  Jet2 f{2.0, 0.5, 0.0}, g{4.0, 1.0, 0.0};
  auto ev = evolved_structure<double>("F2", f, g);
  CHECK(ev.om1.coeff(JetForm::mask_of({1, 2})).v == 2.0);
  CHECK(ev.om1.coeff(JetForm::mask_of({1, 2})).d1 == 0.5);
  CHECK(ev.eta.coeff(JetForm::mask_of({5})).v == 2.0);
  CHECK(ev.om3 == f * (JetForm::basis(5, {1, 4}) + JetForm::basis(5, {2, 3})));
  CHECK_THROWS_AS(evolved_structure<double>("F9", f, g), std::invalid_argument);

  Jet2 h{3.0, 0.0, 0.0}, k{1.0, 0.0, 0.0};
  auto g2 = evolved_g2_forms<double>("K", f, h, k);
  CHECK(g2.F.coeff(JetForm::mask_of({5, 6})).v == 3.0); // k h
  CHECK(g2.psip.coeff(JetForm::mask_of({1, 2, 5})).v == -4.0); // -f^2 k^2
  CHECK_THROWS_AS((evolved_g2_forms<double>("Z", f, h, k)), std::invalid_argument);
}

TEST_CASE("circle lifts of the evolving structure satisfy both flow equations") {
  Trajectory tr = f2_traj();
  for (const auto& [lam, mu] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(0)},
           {Rational(0), Rational(1)},
           {Rational(3, 5), Rational(4, 5)}}) {
    LiftResiduals res = verify_hitchin_lift("F2", f2_nil(), tr, lam, mu);
    CHECK(res.flow_psip < 1e-9);
    CHECK(res.flow_f < 1e-9);
    CHECK(!res.times.empty());
  }
  CHECK_THROWS_AS(verify_hitchin_lift("F2", f2_nil(), tr, Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("worker cap reads the environment each call") {
  setenv("HOLONOMY_LAB_THREADS", "3", 1);
  CHECK(thread_budget() == 3);
  setenv("HOLONOMY_LAB_THREADS", "1", 1);
  CHECK(thread_budget() == 1);
  setenv("HOLONOMY_LAB_THREADS", "0", 1); // ignored, falls back to the hardware
  CHECK(thread_budget() >= 1);
  unsetenv("HOLONOMY_LAB_THREADS");
  CHECK(thread_budget() >= 1);
}
