#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/flow.hpp"

#include <cmath>
#include <stdexcept>

using namespace hlab;

namespace {

bool contains_time(const Trajectory& tr, double t) {
  for (double s : tr.times)
    if (std::fabs(s - t) < 1e-12) return true;
  return false;
}

std::map<std::string, Rational> rz() { return {{"r", Rational(0)}}; }

} // namespace

TEST_CASE("initial jets of the profile equations") {
  auto f2 = initial_profile_jets("F2", rz());
  CHECK(f2 == std::array<Rational, 4>{1, 2, -4, 24});
  CHECK(initial_profile_jets("F2", {{"r", Rational(1)}}) ==
        std::array<Rational, 4>{1, 2, -10, 48});
  CHECK(initial_profile_jets("F1", {{"r", Rational(1)}}) == std::array<Rational, 4>{1, 2, -7, 27});
  CHECK(initial_profile_jets("F5", {{"r", Rational(2)}}) == std::array<Rational, 4>{1, 2, -8, 32});
  CHECK(initial_profile_jets("F4", {{"a", Rational(1)}, {"b", Rational(1)}}) ==
        std::array<Rational, 4>{1, 2, -8, 32});
  // rho stands for a^2 + b^2 and admits values that are not sums of squares
  CHECK(initial_profile_jets("F4", {{"rho", Rational(2)}}) ==
        initial_profile_jets("F4", {{"a", Rational(1)}, {"b", Rational(1)}}));
  CHECK(initial_profile_jets("F4", {{"rho", Rational(6)}}) ==
        std::array<Rational, 4>{1, 2, -16, 0});
  CHECK_THROWS_AS(initial_profile_jets("F3", {}), std::invalid_argument);
  CHECK_THROWS_AS(initial_profile_jets("F4", {{"rho", Rational(-1)}}), std::invalid_argument);
}

TEST_CASE("the ode data agrees with the exact jets at t = 0") {
  for (const auto& [id, params] : std::vector<std::pair<std::string, std::map<std::string, Rational>>>{
           {"F2", {{"r", Rational(1)}}},
           {"F1", {{"r", Rational(1)}}},
           {"F4", {{"rho", Rational(2)}}},
           {"F5", {{"r", Rational(2)}}}}) {
    ScalarODE ode = build_hypo_ode(id, params);
    auto jets = initial_profile_jets(id, params);
    CHECK(ode.f0 == 1.0);
    CHECK(ode.fp0 == 2.0);
    CHECK(ode.fpp_of(1.0, 2.0) == doctest::Approx(to_double(jets[2])).epsilon(1e-12));
    CHECK(ode.fppp_of(1.0, 2.0, to_double(jets[2])) ==
          doctest::Approx(to_double(jets[3])).epsilon(1e-12));
    CHECK(ode.first_order_rhs(1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ode.second_order_residual(1.0, 2.0, to_double(jets[2])) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_hypo_ode("F3", {}), std::invalid_argument);
  CHECK_THROWS_AS(build_hypo_ode("F7", {}), std::invalid_argument);
}

TEST_CASE("the nilpotent F2 profile is sqrt(1 + 4t)") {
  ScalarODE ode = build_hypo_ode("F2", rz());
  Trajectory tr = integrate(ode, 1.0, 1e-10, {0.25, 0.5, 1.0});
  CHECK(tr.status == "completed");
  CHECK(tr.t_reached == doctest::Approx(1.0));
  CHECK(contains_time(tr, 0.25));
  CHECK(contains_time(tr, 1.0));
  for (size_t i = 0; i < tr.times.size(); ++i) {
    double t = tr.times[i];
    double f = std::sqrt(1 + 4 * t);
    CHECK(std::fabs(tr.at(i, 0).v - f) < 1e-9);
    CHECK(std::fabs(tr.at(i, 0).d1 - 2 / f) < 1e-9);
  }
  CHECK(first_integral_drift(ode, tr) < 1e-9);
  CHECK(max_equation_residual(ode, tr) < 1e-7);
}

TEST_CASE("conserved quantity and residual stay small across the families") {
  for (const auto& [id, params] : std::vector<std::pair<std::string, std::map<std::string, Rational>>>{
           {"F1", {{"r", Rational(1)}}},
           {"F2", {{"r", Rational(2)}}},
           {"F4", {{"a", Rational(1)}, {"b", Rational(1)}}},
           {"F5", {{"r", Rational(1)}}}}) {
    ScalarODE ode = build_hypo_ode(id, params);
    Trajectory tr = integrate(ode, 0.2, 1e-10);
    CHECK_MESSAGE(tr.status == "completed", id);
    CHECK(first_integral_drift(ode, tr) < 1e-9);
    CHECK(max_equation_residual(ode, tr) < 1e-7);
  }
}

TEST_CASE("integration stops ahead of the profile singularity") {
  // at rho = 6 the radicand of the first-order form crosses zero near t = 0.087
  ScalarODE ode = build_hypo_ode("F4", {{"rho", Rational(6)}});
  Trajectory tr = integrate(ode, 0.12, 1e-10, {0.05, 0.5});
  CHECK(tr.status == "stopped-near-singularity");
  CHECK(tr.t_reached > 0.05);
  CHECK(tr.t_reached < 0.095);
  CHECK(contains_time(tr, 0.05));
  CHECK(!contains_time(tr, 0.5)); // beyond reach, dropped
}

TEST_CASE("interpolated states reproduce the closed form between nodes") {
  ScalarODE ode = build_hypo_ode("F2", rz());
  Trajectory tr = integrate(ode, 0.5, 1e-10);
  double t0 = 0.123456;
  auto st = state_at(ode, tr, t0);
  REQUIRE(st.size() == 2);
  double u = 1 + 4 * t0;
  CHECK(std::fabs(st[0].v - std::sqrt(u)) < 1e-9);
  CHECK(std::fabs(st[0].d1 - 2 / std::sqrt(u)) < 1e-8);
  CHECK(std::fabs(st[0].d2 + 4 * std::pow(u, -1.5)) < 1e-7);
  // the pair (f, fp) carries the third derivative in the last slot
  CHECK(std::fabs(st[1].d2 - 24 * std::pow(u, -2.5)) < 1e-6);

  // at a stored node the interpolation returns the node itself
  size_t mid = tr.times.size() / 2;
  auto at_node = state_at(ode, tr, tr.times[mid]);
  CHECK(at_node[0].v == tr.at(mid, 0).v);

  CHECK_THROWS_AS(state_at(ode, tr, -0.1), std::out_of_range);
  CHECK_THROWS_AS(state_at(ode, tr, 0.6), std::out_of_range);
}

TEST_CASE("integration argument validation") {
  ScalarODE ode = build_hypo_ode("F2", rz());
  CHECK_THROWS_AS(integrate(ode, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(ode, 0.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(integrate(ScalarODE{}, 0.5, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(integrate(HitchinSystem{}, 0.5, 1e-10), std::invalid_argument);
}

TEST_CASE("the coupled system vanishes on the closed-form powers") {
  std::map<std::string, Rational> p = {{"a", Rational(0)}, {"b", Rational(0)}, {"a1", Rational(2)}};
  HitchinSystem sys = build_hitchin_system("K", p);
  for (double t : {0.0, 0.1, 0.5, 1.0}) {
    double u = 1 + 5 * t;
    std::array<double, 3> x = {std::pow(u, 0.6), std::pow(u, -0.2), std::pow(u, -0.4)};
    std::array<double, 3> expect = {3 * std::pow(u, -0.4), -std::pow(u, -1.2),
                                    -2 * std::pow(u, -1.4)};
    auto got = sys.rhs(x);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(got[i] - expect[i]) < 1e-12);
  }

  auto jets = hitchin_initial_jets("K", p);
  CHECK(jets[0] == QJet{Rational(1), Rational(3), Rational(-6)});
  CHECK(jets[1] == QJet{Rational(1), Rational(-1), Rational(6)});
  CHECK(jets[2] == QJet{Rational(1), Rational(-2), Rational(14)});

  auto second = sys.second({1, 1, 1}, sys.rhs({1, 1, 1}));
  CHECK(second[0] == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(second[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(second[2] == doctest::Approx(14.0).epsilon(1e-12));

  CHECK_THROWS_AS(build_hitchin_system("X", {}), std::invalid_argument);
  CHECK_THROWS_AS(hitchin_initial_jets("X", {}), std::invalid_argument);
}

TEST_CASE("the two coupled systems coincide at their shared degenerate point") {
  HitchinSystem k = build_hitchin_system("K", {{"a", Rational(0)}, {"b", Rational(0)},
                                               {"a1", Rational(2)}});
  HitchinSystem kt = build_hitchin_system("Ktilde", {{"r", Rational(0)}, {"a2", Rational(-2)}});
  for (const std::array<double, 3>& x :
       {std::array<double, 3>{1, 1, 1}, {1.3, 0.8, 0.9}, {2.0, 0.5, 0.7}}) {
    auto a = k.rhs(x), b = kt.rhs(x);
    for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-13));
  }
  auto ja = hitchin_initial_jets("K", {{"a", Rational(0)}, {"b", Rational(0)}, {"a1", Rational(2)}});
  auto jb = hitchin_initial_jets("Ktilde", {{"r", Rational(0)}, {"a2", Rational(-2)}});
  for (int i = 0; i < 3; ++i) CHECK(ja[static_cast<size_t>(i)] == jb[static_cast<size_t>(i)]);

  Trajectory ta = integrate(k, 0.3, 1e-11, {0.1, 0.2});
  Trajectory tb = integrate(kt, 0.3, 1e-11, {0.1, 0.2});
  CHECK(ta.status == "completed");
  CHECK(tb.status == "completed");
  for (double t : {0.1, 0.2, 0.3}) {
    auto sa = state_at(k, ta, t);
    auto sb = state_at(kt, tb, t);
    for (int u = 0; u < 3; ++u) CHECK(std::fabs(sa[static_cast<size_t>(u)].v -
                                                sb[static_cast<size_t>(u)].v) < 1e-9);
  }
}

TEST_CASE("integrated powers match the exact solution") {
  std::map<std::string, Rational> p = {{"a", Rational(0)}, {"b", Rational(0)}, {"a1", Rational(2)}};
  HitchinSystem sys = build_hitchin_system("K", p);
  Trajectory tr = integrate(sys, 1.0, 1e-11);
  CHECK(tr.status == "completed");
  REQUIRE(tr.unknowns.size() == 3);
  for (size_t i = 0; i < tr.times.size(); ++i) {
    double u = 1 + 5 * tr.times[i];
    CHECK(std::fabs(tr.at(i, 0).v - std::pow(u, 0.6)) < 1e-9);
    CHECK(std::fabs(tr.at(i, 1).v - std::pow(u, -0.2)) < 1e-9);
    CHECK(std::fabs(tr.at(i, 2).v - std::pow(u, -0.4)) < 1e-9);
  }
}

TEST_CASE("trajectory tables name the unknowns") {
  ScalarODE ode = build_hypo_ode("F2", rz());
  Trajectory tr = integrate(ode, 0.1, 1e-8);
  std::string table = trajectory_table(tr);
  CHECK(table.find('t') != std::string::npos);
  for (const auto& u : tr.unknowns) CHECK(table.find(u) != std::string::npos);
  CHECK(table.find('\n') != std::string::npos);
}
