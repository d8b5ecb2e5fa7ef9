#include "hlab/acceptance.hpp"

#include "hlab/catalog.hpp"
#include "hlab/curvature.hpp"
#include "hlab/flow.hpp"
#include "hlab/holonomy.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace hlab {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::map<std::string, Rational>;

Rational R(long n, long d = 1) { return Rational(n, d); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void require(CriterionResult& res, bool ok, const std::string& what) {
  if (!ok) {
    res.passed = false;
    res.notes.push_back("failed: " + what);
  }
}

bool algebras_equal(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim != b.dim) return false;
  for (int i = 1; i <= a.dim; ++i)
    if (!(a.diff(i) - b.diff(i)).is_zero()) return false;
  return true;
}

std::string diag_str(const Mat<Poly>& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + m[i][i].str();
  return s + ")";
}

bool diag_matches(const Mat<Poly>& m, const std::vector<Poly>& want) {
  if (m.size() != want.size()) return false;
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      const Poly& v = m[i][j];
      if (i == j ? !(v == want[i]) : !v.is_zero()) return false;
    }
  }
  return true;
}

Rational rnd_rational(std::mt19937_64& rng, int lo, int hi, int maxden, bool nonzero) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, maxden);
  Rational v;
  do {
    v = Rational(num(rng), den(rng));
  } while (nonzero && v == 0);
  return v;
}

// ---- criteria ----

CriterionResult c1_jacobi() {
  CriterionResult res{1, "jacobi identity across the catalog", true, 0, {}};
  for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F7"})
    require(res, jacobi_check(family(id)).pass, std::string(id) + " symbolic jacobi");
  require(res, jacobi_check(g2_extension("K", {{"a1", R(2)}})).pass, "K with de6 = 2 e12");
  require(res, jacobi_check(g2_extension("Ktilde", {{"a2", R(-2)}})).pass,
          "Ktilde with de6 = -2 e13");
  if (res.passed) res.notes.push_back("six families and both extensions close symbolically");
  return res;
}

CriterionResult c2_hypo_contact() {
  CriterionResult res{2, "hypo-contact closure of the standard structure", true, 0, {}};
  SU2Structure s = standard_structure();
  for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F7"}) {
    StructureCheck chk = check_hypo_contact(family(id), s);
    require(res, chk.hypo && chk.contact && chk.hypo_contact,
            std::string(id) + " symbolic hypo-contact");
  }
  return res;
}

CriterionResult c3_basis_changes() {
  CriterionResult res{3, "exact coframe changes onto the nilpotent normal forms", true, 0, {}};
  struct Case {
    const char* id;
    Params pt;
    const char* target;
  };
  const Case cases[] = {
      {"F1", {{"r", R(1)}}, "h2"},
      {"F2", {{"r", R(1)}}, "h3"},
      {"F3", {{"a", R(0)}, {"r", R(1)}}, "h4"},
      {"F5", {{"r", R(1)}}, "h5"},
      {"F7", {{"a", R(0)}, {"r", R(1)}}, "h5"},
  };
  for (const Case& c : cases) {
    CanonicalChange ch = basis_change_to_canonical(c.id, c.pt);
    require(res, ch.to == c.target, std::string(c.id) + " targets " + c.target);
    LieAlgebra moved = apply_basis_change(family(c.id, c.pt), ch.B);
    require(res, algebras_equal(moved, canonical(ch.to)),
            std::string(c.id) + " -> " + c.target + " exact differential match");
  }
  return res;
}

CriterionResult c4_ricci_tables() {
  CriterionResult res{4, "ricci diagonals of the four normalized families", true, 0, {}};
  Poly r2 = Poly::var("r", 2), r4 = Poly::var("r", 4);

  // symbolic diagonals first
  {
    Mat<Poly> d = ricci(family("F1")).ricci;
    std::vector<Poly> want = {R(-9, 2) * r4 + R(-9) * r2 + Poly(-2L),
                              R(-3) * r2 + Poly(-2L),
                              R(-3) * r2 + Poly(-2L),
                              R(9, 2) * r4 + R(3) * r2 + Poly(-2L),
                              R(-9, 2) * r4 + Poly(4L)};
    require(res, diag_matches(d, want), "F1 symbolic diagonal");
  }
  {
    Mat<Poly> d = ricci(family("F2")).ricci;
    Poly e = R(-6) * r2 + Poly(-2L);
    require(res, diag_matches(d, {e, e, e, e, Poly(4L)}), "F2 symbolic diagonal");
  }
  {
    Mat<Poly> d = ricci(family("F4")).ricci;
    Poly q = Poly::var("a", 2) + Poly::var("b", 2);
    Poly q2 = q * q;
    std::vector<Poly> want = {R(-1, 2) * (q2 + R(8) * q + Poly(4L)),
                              R(-1, 2) * (q2 + R(8) * q + Poly(4L)),
                              R(1, 2) * (q2 - Poly(4L)),
                              R(1, 2) * (q2 - Poly(4L)),
                              Poly(4L) - q2};
    require(res, diag_matches(d, want), "F4 symbolic diagonal in a, b");
  }
  {
    Mat<Poly> d = ricci(family("F5")).ricci;
    std::vector<Poly> want = {R(-1, 8) * (r4 + R(16) * r2 + Poly(16L)),
                              R(1, 8) * (r4 - Poly(16L)),
                              R(-1, 8) * (r4 + R(16) * r2 + Poly(16L)),
                              R(1, 8) * (r4 - Poly(16L)),
                              R(-1, 4) * (r4 - Poly(16L))};
    require(res, diag_matches(d, want), "F5 symbolic diagonal");
  }

  // pinned numeric rows
  struct Row {
    const char* id;
    Params pt;
    std::vector<Rational> want;
  };
  const Row rows[] = {
      {"F1", {{"r", R(1)}}, {R(-31, 2), R(-5), R(-5), R(11, 2), R(-1, 2)}},
      {"F2", {{"r", R(1)}}, {R(-8), R(-8), R(-8), R(-8), R(4)}},
      {"F4", {{"a", R(1)}, {"b", R(1)}}, {R(-17, 2), R(-17, 2), R(0), R(0), R(0)}},
      {"F5", {{"r", R(2)}}, {R(-12), R(0), R(-12), R(0), R(0)}},
  };
  for (const Row& row : rows) {
    Mat<Poly> d = ricci(family(row.id, row.pt)).ricci;
    std::vector<Poly> want;
    for (const Rational& v : row.want) want.emplace_back(v);
    bool ok = diag_matches(d, want);
    require(res, ok, std::string(row.id) + " pinned diagonal");
    if (!ok && std::string(row.id) == "F4") {
      res.notes.push_back("F4 at a = b = 1 computes " + diag_str(d));
      res.notes.push_back(
          "the required row (-17/2, -17/2, 0, 0, 0) is unattainable: with q = a^2 + b^2 the "
          "diagonal is (-(q^2+8q+4)/2, -(q^2+8q+4)/2, (q^2-4)/2, (q^2-4)/2, 4-q^2), so entries "
          "3..5 vanish only at q = 2, which forces entries 1, 2 to -(4+16+4)/2 = -12");
      res.notes.push_back("the symbolic diagonal above was verified exactly, so the computed "
                          "values stand and this row is reported red rather than patched");
    }
  }
  return res;
}

CriterionResult c5_eta_einstein() {
  CriterionResult res{5, "eta-einstein fits", true, 0, {}};
  Poly r2 = Poly::var("r", 2);
  {
    auto fit = ricci(family("F2")).fit;
    require(res, fit.has_value(), "F2 symbolic fit exists");
    if (fit) {
      require(res, fit->first == R(-6) * r2 + Poly(-2L), "F2 tau = -2 (1 + 3 r^2)");
      require(res, fit->second == R(6) * r2 + Poly(6L), "F2 nu = 6 (1 + r^2)");
    }
  }
  {
    auto fit = ricci(family("F4", {{"a", R(0)}, {"b", R(0)}})).fit;
    require(res, fit.has_value() && fit->first == Poly(-2L) && fit->second == Poly(6L),
            "F4 at a = b = 0 fits (-2, 6)");
  }
  require(res, !ricci(family("F1")).fit, "F1 has no fit symbolically");
  require(res, !ricci(family("F1", {{"r", R(1)}})).fit, "F1 has no fit at r = 1");
  require(res, !ricci(family("F5")).fit, "F5 has no fit symbolically");
  require(res, !ricci(family("F5", {{"r", R(2)}})).fit, "F5 has no fit at r = 2");
  for (const Params& pt : {Params{{"a", R(1)}, {"b", R(0)}}, Params{{"a", R(0)}, {"b", R(1)}},
                           Params{{"a", R(1)}, {"b", R(1)}}, Params{{"a", R(2)}, {"b", R(3)}}})
    require(res, !ricci(family("F4", pt)).fit, "F4 away from a = b = 0 has no fit");
  return res;
}

CriterionResult c6_k_contact() {
  CriterionResult res{6, "k-contact verdicts and witnesses", true, 0, {}};
  require(res, k_contact(family("F2")).pass, "F2 is k-contact symbolically");
  require(res, k_contact(family("F4", {{"a", R(0)}, {"b", R(0)}})).pass,
          "F4 at a = b = 0 is k-contact");
  auto fails_at_14 = [&res](const std::string& label, const LieAlgebra& g) {
    KContactReport rep = k_contact(g);
    require(res, !rep.pass, label + " is not k-contact");
    bool witness = false;
    for (const auto& t : rep.violations)
      if (std::get<0>(t) == 1 && std::get<1>(t) == 4) witness = true;
    require(res, witness, label + " carries the witness pair (1, 4)");
  };
  fails_at_14("F1", family("F1"));
  fails_at_14("F3", family("F3"));
  fails_at_14("F5", family("F5"));
  fails_at_14("F7", family("F7"));
  for (const Params& pt : {Params{{"a", R(1)}, {"b", R(0)}}, Params{{"a", R(0)}, {"b", R(1)}},
                           Params{{"a", R(1)}, {"b", R(1)}}, Params{{"a", R(2)}, {"b", R(3)}}})
    fails_at_14("F4 off the origin", family("F4", pt));
  return res;
}

CriterionResult c7_closed_omega12(std::uint64_t seed) {
  CriterionResult res{7, "closed omega_1, omega_2 only at the F4 origin", true, 0, {}};
  SU2Structure s = standard_structure();
  std::mt19937_64 rng(seed ^ 0xC7ULL);
  require(res, check_closed_omega12(family("F4", {{"a", R(0)}, {"b", R(0)}}), s),
          "F4 at a = b = 0 has d omega_1 = d omega_2 = 0");
  int sweeps = 0;
  for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F7"}) {
    std::string sid = id;
    for (int n = 0; n < 21; ++n) {
      Params pt;
      if (sid == "F3" || sid == "F7") {
        pt["a"] = rnd_rational(rng, -6, 6, 4, false);
        pt["r"] = rnd_rational(rng, -6, 6, 4, true);
      } else if (sid == "F4") {
        do {
          pt["a"] = rnd_rational(rng, -6, 6, 4, false);
          pt["b"] = rnd_rational(rng, -6, 6, 4, false);
        } while (pt["a"] == 0 && pt["b"] == 0);
      } else {
        pt["r"] = rnd_rational(rng, -6, 6, 4, true);
      }
      require(res, !check_closed_omega12(family(sid, pt), s),
              sid + " keeps d omega_1, d omega_2 nonzero away from the F4 origin");
      ++sweeps;
    }
  }
  res.notes.push_back(std::to_string(sweeps) + " sampled parameter points, 21 per family");
  return res;
}

CriterionResult c8_explicit_su3() {
  CriterionResult res{8, "explicit square-root evolution of F2 at r = 0", true, 0, {}};
  const double want_tol = 1e-9, ode_tol = 1e-10;
  ScalarODE ode = build_hypo_ode("F2", {{"r", R(0)}});
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  Trajectory tr = integrate(ode, 1.0, ode_tol, grid);
  require(res, tr.status == "completed", "integration reaches t = 1");
  double worst_f = 0, worst_g = 0;
  for (size_t i = 0; i < tr.times.size(); ++i) {
    double t = tr.times[i], u = std::sqrt(1 + 4 * t);
    worst_f = std::max(worst_f, std::abs(tr.at(i, 0).v - u));
    // metric coefficients: s_i^2 = f on e1..e4, s_5^2 = (f'/2)^2
    double s5 = tr.at(i, 1).v / 2;
    worst_g = std::max({worst_g, std::abs(tr.at(i, 0).v - u), std::abs(s5 * s5 - 1.0 / (u * u))});
  }
  require(res, worst_f < want_tol, "profile matches (1 + 4t)^(1/2) within 1e-9");
  require(res, worst_g < want_tol, "metric coefficients match the closed form within 1e-9");
  Su3Report rep = certify_su3("F2", {{"r", R(0)}}, tr);
  require(res, rep.rank_exact && rep.rank_at_origin == 8, "rational curvature rank 8 at t = 0");
  require(res, rep.rank == 8, "sampled holonomy rank 8");
  require(res, rep.verdict == "holonomy = SU(3)", "certification verdict");
  res.notes.push_back("profile error " + fmt(worst_f) + ", metric error " + fmt(worst_g) + ", " +
                      std::to_string(tr.times.size()) + " nodes");
  return res;
}

CriterionResult c9_curvature_spots() {
  CriterionResult res{9, "exact curvature spot values at t = 0", true, 0, {}};
  using mask_t = Form::mask_t;
  auto value_map = [](const FormT<QJet>& f) {
    std::map<mask_t, Rational> out;
    for (const auto& [m, c] : f.terms())
      if (c.v != 0) out[m] = c.v;
    return out;
  };
  mask_t m12 = Form::mask_of({1, 2}), m34 = Form::mask_of({3, 4});
  for (long rv : {1L, 2L}) {
    ExactCurvature ec = exact_curvature_at_origin("F2", {{"r", R(rv)}});
    Rational c = -(1 + R(rv) * R(rv));
    std::map<mask_t, Rational> want{{m12, c}, {m34, -c}};
    require(res, value_map(ec.curvature[0][1]) == want,
            "F2 r = " + std::to_string(rv) + " gives Omega^1_2 = -(1 + r^2)(eta^12 - eta^34)");
  }
  struct F4Case {
    Params pt;
    Rational rho;
  };
  const F4Case f4cases[] = {
      {{{"a", R(0)}, {"b", R(0)}}, R(0)},
      {{{"a", R(1)}, {"b", R(0)}}, R(1)},
      {{{"a", R(1)}, {"b", R(1)}}, R(2)},
      {{{"a", R(2)}, {"b", R(0)}}, R(4)},
  };
  for (const F4Case& c : f4cases) {
    ExactCurvature ec = exact_curvature_at_origin("F4", c.pt);
    Rational coeff = -(c.rho - 2) * (c.rho - 2) / 4;
    std::map<mask_t, Rational> want;
    if (coeff != 0) {
      want[m12] = coeff;
      want[m34] = -coeff;
    }
    require(res, value_map(ec.curvature[0][1]) == want,
            "F4 with a^2 + b^2 = " + to_string(c.rho) +
                " gives Omega^1_2 = -((rho - 2)^2 / 4)(e^12 - e^34)");
  }
  return res;
}

CriterionResult c10_su3_holonomy() {
  CriterionResult res{10, "su3 holonomy certification with multi-time sampling", true, 0, {}};
  const double res_tol = 1e-8;
  const std::vector<double> times{0.0, 0.05, 0.1};
  struct Case {
    const char* id;
    Params pt;
    const char* label;
  };
  const Case cases[] = {
      {"F2", {{"r", R(1)}}, "F2 r = 1"},       {"F4", {{"rho", R(0)}}, "F4 rho = 0"},
      {"F4", {{"rho", R(1)}}, "F4 rho = 1"},   {"F4", {{"rho", R(2)}}, "F4 rho = 2"},
      {"F4", {{"rho", R(6)}}, "F4 rho = 6"},   {"F5", {{"r", R(1)}}, "F5 r = 1"},
      {"F1", {{"r", R(1)}}, "F1 r = 1"},
  };
  std::map<std::string, Trajectory> kept;
  for (const Case& c : cases) {
    Trajectory tr = integrate(build_hypo_ode(c.id, c.pt), 0.12, 1e-10, {0.05, 0.1});
    RankReport rk = holonomy_rank(c.id, c.pt, tr, times);
    require(res, rk.rank == 8, std::string(c.label) + " curvature span rank 8");
    Su3Report su = certify_su3(c.id, c.pt, tr, res_tol);
    double worst = su.dF_residual;
    for (const auto& [k, v] : su.dPsi_residuals) worst = std::max(worst, v);
    require(res, worst < res_tol, std::string(c.label) + " residual suite under 1e-8");
    std::string skip;
    for (double t : rk.times_skipped) skip += " " + fmt(t);
    res.notes.push_back(std::string(c.label) + ": rank " + std::to_string(rk.rank) +
                        ", worst residual " + fmt(worst) +
                        (skip.empty() ? "" : ", skipped beyond reach:" + skip));
    kept.emplace(c.label, std::move(tr));
  }
  // the degenerate points genuinely need more than one sample time
  for (const char* label : {"F4 rho = 2", "F4 rho = 6"}) {
    Params pt{{"rho", label[9] == '2' ? R(2) : R(6)}};
    RankReport single = holonomy_rank("F4", pt, kept.at(label), {0.0});
    require(res, single.rank < 8, std::string(label) + " stays under rank 8 at t = 0 alone");
    res.notes.push_back(std::string(label) + ": rank at t = 0 alone is " +
                        std::to_string(single.rank) + ", so extra sample times are essential");
  }
  return res;
}

CriterionResult c11_explicit_g2() {
  CriterionResult res{11, "explicit fractional-power g2 evolution", true, 0, {}};
  Params pt{{"a", R(0)}, {"b", R(0)}, {"a1", R(2)}};
  HitchinSystem sys = build_hitchin_system("K", pt);
  double worst_rhs = 0;
  for (int i = 0; i < 100; ++i) {
    double t = i / 99.0, u = 1 + 5 * t;
    std::array<double, 3> x{std::pow(u, 0.6), std::pow(u, -0.2), std::pow(u, -0.4)};
    std::array<double, 3> want{3 * std::pow(u, -0.4), -std::pow(u, -1.2), -2 * std::pow(u, -1.4)};
    std::array<double, 3> got = sys.rhs(x);
    for (int k = 0; k < 3; ++k) worst_rhs = std::max(worst_rhs, std::abs(got[k] - want[k]));
  }
  require(res, worst_rhs < 1e-13, "(1+5t)^(3/5, -1/5, -2/5) zeroes the evolution system");
  Trajectory tr = integrate(sys, 1.0, 1e-12);
  double worst_traj = 0;
  for (size_t i = 0; i < tr.times.size(); ++i) {
    double u = 1 + 5 * tr.times[i];
    worst_traj = std::max({worst_traj, std::abs(tr.at(i, 0).v - std::pow(u, 0.6)),
                           std::abs(tr.at(i, 1).v - std::pow(u, -0.2)),
                           std::abs(tr.at(i, 2).v - std::pow(u, -0.4))});
  }
  require(res, worst_traj < 1e-9, "integrated profiles track the closed form");
  G2Report rep = certify_g2("K", pt, tr, 1e-10);
  require(res, rep.dphi_residual < 1e-10 && rep.dstarphi_residual < 1e-10,
          "d phi and d star phi residuals under 1e-10");
  require(res, rep.rank == 14, "curvature span rank 14");
  require(res, rep.verdict == "holonomy = G2", "certification verdict");
  res.notes.push_back("system residual " + fmt(worst_rhs) + ", trajectory error " +
                      fmt(worst_traj) + ", d phi " + fmt(rep.dphi_residual) + ", d star phi " +
                      fmt(rep.dstarphi_residual));
  // product control: without the twist the span stays inside su(3)
  Params flat{{"a", R(0)}, {"b", R(0)}, {"a1", R(0)}};
  Trajectory tr0 = integrate(build_hitchin_system("K", flat), 1.0, 1e-10);
  G2Report ctrl = certify_g2("K", flat, tr0, 1e-8);
  require(res, ctrl.rank <= 8, "a1 = 0 control keeps rank at most 8");
  res.notes.push_back("a1 = 0 control rank " + std::to_string(ctrl.rank));
  return res;
}

CriterionResult c12_g2_neighborhood() {
  CriterionResult res{12, "g2 certification near the explicit solutions", true, 0, {}};
  const double tol = 1e-8;
  struct Case {
    const char* kind;
    Params pt;
    const char* label;
  };
  const Case cases[] = {
      {"K", {{"a", R(1, 10)}, {"b", R(0)}, {"a1", R(2)}}, "K at a = 1/10"},
      {"K", {{"a", R(0)}, {"b", R(1, 10)}, {"a1", R(2)}}, "K at b = 1/10"},
      {"Ktilde", {{"r", R(1, 10)}, {"a2", R(-2)}}, "Ktilde at r = 1/10"},
      {"Ktilde", {{"r", R(1, 5)}, {"a2", R(-2)}}, "Ktilde at r = 1/5"},
  };
  for (const Case& c : cases) {
    Trajectory tr = integrate(build_hitchin_system(c.kind, c.pt), 1.0, 1e-10);
    G2Report rep = certify_g2(c.kind, c.pt, tr, tol);
    require(res, rep.rank == 14, std::string(c.label) + " rank 14");
    require(res, rep.dphi_residual < tol && rep.dstarphi_residual < tol,
            std::string(c.label) + " residuals under 1e-8");
    res.notes.push_back(std::string(c.label) + ": rank " + std::to_string(rep.rank) +
                        ", d phi " + fmt(rep.dphi_residual) + ", d star phi " +
                        fmt(rep.dstarphi_residual));
  }
  return res;
}

CriterionResult c13_hitchin_lifts() {
  CriterionResult res{13, "circle-bundle lift evolution identities", true, 0, {}};
  const double tol = 1e-10;
  struct Fam {
    const char* id;
    Params pt;
    const char* label;
  };
  const Fam fams[] = {
      {"F2", {{"r", R(0)}}, "F2 r = 0"},
      {"F4", {{"a", R(0)}, {"b", R(0)}}, "F4 a = b = 0"},
  };
  const std::pair<Rational, Rational> pairs[] = {{R(1), R(0)}, {R(0), R(1)}, {R(3, 5), R(4, 5)}};
  for (const Fam& f : fams) {
    Trajectory tr = integrate(build_hypo_ode(f.id, f.pt), 1.0, 1e-10);
    for (const auto& [lam, mu] : pairs) {
      LiftResiduals lr = verify_hitchin_lift(f.id, f.pt, tr, lam, mu);
      double worst = std::max(lr.flow_psip, lr.flow_f);
      require(res, worst < tol, std::string(f.label) + " lift with (lambda, mu) = (" +
                                    to_string(lam) + ", " + to_string(mu) + ")");
      res.notes.push_back(std::string(f.label) + " (" + to_string(lam) + ", " + to_string(mu) +
                          "): worst residual " + fmt(worst));
    }
  }
  return res;
}

CriterionResult c14_properties(std::uint64_t seed) {
  CriterionResult res{14, "randomized property suites", true, 0, {}};
  for (const PropertyOutcome& p : run_property_suites(seed, 200)) {
    require(res, p.failures == 0, p.name + " has no failing case");
    require(res, p.cases >= 200, p.name + " runs at least 200 cases");
    res.notes.push_back(p.name + ": " + std::to_string(p.cases) + " cases, worst " +
                        fmt(p.worst));
    for (const std::string& n : p.notes) res.notes.push_back("  " + n);
  }
  return res;
}

double time_limit(int n) {
  switch (n) {
    case 1: case 2: return 10;
    case 3: return 5;
    case 8: return 5;
    case 10: return 60;
    case 11: return 30;
    case 12: return 60;
    case 13: return 10;
    default: return 0;
  }
}

} // namespace

int criteria_count() { return 14; }

CriterionResult run_criterion(int number, std::uint64_t seed) {
  if (number < 1 || number > 14) throw std::out_of_range("criterion number must be 1..14");
  auto t0 = Clock::now();
  CriterionResult res;
  try {
    switch (number) {
      case 1: res = c1_jacobi(); break;
      case 2: res = c2_hypo_contact(); break;
      case 3: res = c3_basis_changes(); break;
      case 4: res = c4_ricci_tables(); break;
      case 5: res = c5_eta_einstein(); break;
      case 6: res = c6_k_contact(); break;
      case 7: res = c7_closed_omega12(seed); break;
      case 8: res = c8_explicit_su3(); break;
      case 9: res = c9_curvature_spots(); break;
      case 10: res = c10_su3_holonomy(); break;
      case 11: res = c11_explicit_g2(); break;
      case 12: res = c12_g2_neighborhood(); break;
      case 13: res = c13_hitchin_lifts(); break;
      case 14: res = c14_properties(seed); break;
    }
  } catch (const std::exception& e) {
    res.number = number;
    res.passed = false;
    res.notes.push_back(std::string("failed: unexpected exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (double lim = time_limit(number); lim > 0 && res.seconds >= lim) {
    res.passed = false;
    res.notes.push_back("failed: exceeded the " + fmt(lim) + " s budget (took " +
                        fmt(res.seconds) + " s)");
  }
  return res;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= criteria_count(); ++n) out.push_back(run_criterion(n, seed));
  return out;
}

// ---- property suites ----

namespace {

Poly rnd_poly(std::mt19937_64& rng, bool allow_roots) {
  static const char* vars[] = {"r", "a", "b", "x"};
  std::uniform_int_distribution<int> nterms(0, 4), nvars(0, 2), pick(0, 3), expd(1, 2), root(0, 5);
  Poly p;
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Poly m(rnd_rational(rng, -9, 9, 4, false));
    int k = nvars(rng);
    for (int v = 0; v < k; ++v) m = m * Poly::var(vars[pick(rng)], expd(rng));
    if (allow_roots && root(rng) == 0) m = m * Poly::var(root(rng) % 2 ? "q2" : "q3");
    p += m;
  }
  return p;
}

LieAlgebra random_pool_algebra(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9), hpick(1, 5);
  auto q = [&rng](bool nz) { return rnd_rational(rng, -5, 5, 3, nz); };
  switch (pick(rng)) {
    case 0: return family("F1", {{"r", q(true)}});
    case 1: return family("F2", {{"r", q(true)}});
    case 2: return family("F3", {{"a", q(false)}, {"r", q(true)}});
    case 3: return family("F4", {{"a", q(false)}, {"b", q(false)}});
    case 4: return family("F5", {{"r", q(true)}});
    case 5: return family("F7", {{"a", q(false)}, {"r", q(true)}});
    case 6: return canonical("h" + std::to_string(hpick(rng)));
    case 7: return g2_extension("K", {{"a", q(false)}, {"b", q(false)}, {"a1", q(false)}});
    case 8: return g2_extension("Ktilde", {{"r", q(true)}, {"a2", q(false)}});
    default: return abelian(5);
  }
}

Form rnd_form(std::mt19937_64& rng, int dim, int degree) {
  std::uniform_int_distribution<int> nterms(1, 4), coin(0, 4);
  Form f(dim);
  std::vector<Form::mask_t> masks;
  for (Form::mask_t m = 0; m < (1u << dim); ++m)
    if (std::popcount(static_cast<unsigned>(m)) == degree) masks.push_back(m);
  std::uniform_int_distribution<size_t> mi(0, masks.size() - 1);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Poly c(rnd_rational(rng, -9, 9, 4, false));
    if (coin(rng) == 0) c = c * Poly::var("s");
    f.add(masks[mi(rng)], c);
  }
  return f;
}

struct Suite {
  PropertyOutcome out;
  explicit Suite(std::string name) { out.name = std::move(name); }
  void tally(bool ok, double defect = 0) {
    ++out.cases;
    if (!ok) ++out.failures;
    out.worst = std::max(out.worst, defect);
  }
};

} // namespace

PropertyOutcome property_ring_laws(std::uint64_t seed, int cases) {
  Suite s("polynomial ring laws");
  std::mt19937_64 rng(seed ^ 0xA1ULL);
  for (int n = 0; n < cases; ++n) {
    Poly p = rnd_poly(rng, true), q = rnd_poly(rng, true), r = rnd_poly(rng, true);
    bool ok = ((p + q) + r == p + (q + r)) && (p * q == q * p) &&
              (p * (q + r) == p * q + p * r) && ((p * q) * r == p * (q * r)) &&
              (p - p).is_zero() && (Poly(1L) * p == p) && (Poly(0L) * p).is_zero();
    // evaluation is a homomorphism on root-free polynomials
    Poly pp = rnd_poly(rng, false), qq = rnd_poly(rng, false);
    std::map<std::string, Rational> at;
    for (const char* v : {"r", "a", "b", "x"}) at[v] = rnd_rational(rng, -4, 4, 3, false);
    ok = ok && (pp + qq).eval_rational(at) == pp.eval_rational(at) + qq.eval_rational(at) &&
         (pp * qq).eval_rational(at) == pp.eval_rational(at) * qq.eval_rational(at);
    s.tally(ok, ok ? 0 : 1);
  }
  s.out.worst = s.out.failures;
  return s.out;
}

PropertyOutcome property_d_squared(std::uint64_t seed, int cases) {
  Suite s("d compose d vanishes");
  std::mt19937_64 rng(seed ^ 0xA2ULL);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int n = 0; n < cases; ++n) {
    LieAlgebra g = random_pool_algebra(rng);
    Form f = rnd_form(rng, g.dim, deg(rng));
    s.tally(d_form(g, d_form(g, f)).is_zero());
  }
  s.out.worst = s.out.failures;
  return s.out;
}

PropertyOutcome property_antiderivation(std::uint64_t seed, int cases) {
  Suite s("leibniz rule for the wedge");
  std::mt19937_64 rng(seed ^ 0xA3ULL);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int n = 0; n < cases; ++n) {
    LieAlgebra g = random_pool_algebra(rng);
    int p = deg(rng), q = deg(rng);
    Form a = rnd_form(rng, g.dim, p), b = rnd_form(rng, g.dim, q);
    Form lhs = d_form(g, wedge(a, b));
    Form rhs = wedge(d_form(g, a), b);
    Form mixed = wedge(a, d_form(g, b));
    rhs += (p % 2 == 0) ? mixed : -mixed;
    s.tally((lhs - rhs).is_zero());
  }
  s.out.worst = s.out.failures;
  return s.out;
}

PropertyOutcome property_levi_civita_axioms(std::uint64_t seed, int cases) {
  Suite s("koszul compatibility and torsion");
  std::mt19937_64 rng(seed ^ 0xA4ULL);
  for (int n = 0; n < cases; ++n) {
    LieAlgebra g = random_pool_algebra(rng);
    ConnectionCoeffs cc = levi_civita(g);
    Brackets br = brackets_of(g);
    bool ok = true;
    for (int k = 1; k <= g.dim && ok; ++k)
      for (int i = 1; i <= g.dim && ok; ++i)
        for (int j = 1; j <= g.dim && ok; ++j)
          ok = cc.coeff(k, i, j) == -cc.coeff(j, i, k); // orthonormal metric is parallel
    for (int i = 1; i < g.dim && ok; ++i)
      for (int j = i + 1; j <= g.dim && ok; ++j) {
        auto it = br.c.find({i, j});
        for (int k = 1; k <= g.dim && ok; ++k) {
          Poly ck = it == br.c.end() ? Poly() : it->second.at(static_cast<size_t>(k - 1));
          ok = cc.coeff(k, i, j) - cc.coeff(k, j, i) == ck; // torsion-free
        }
      }
    s.tally(ok);
  }
  s.out.worst = s.out.failures;
  return s.out;
}

PropertyOutcome property_bianchi(std::uint64_t seed, int cases) {
  Suite s("riemann symmetries and first bianchi");
  std::mt19937_64 rng(seed ^ 0xA5ULL);
  for (int n = 0; n < cases; ++n) {
    LieAlgebra g = random_pool_algebra(rng);
    RiemannTensor Rm = riemann(g, levi_civita(g));
    bool ok = true;
    for (int k = 1; k <= g.dim && ok; ++k)
      for (int l = 1; l <= g.dim && ok; ++l)
        for (int i = 1; i <= g.dim && ok; ++i)
          for (int j = 1; j <= g.dim && ok; ++j) {
            ok = Rm.at(k, l, i, j) == -Rm.at(l, k, i, j) &&
                 Rm.at(k, l, i, j) == -Rm.at(k, l, j, i) &&
                 Rm.at(k, l, i, j) == Rm.at(i, j, k, l) &&
                 (Rm.at(k, l, i, j) + Rm.at(k, i, j, l) + Rm.at(k, j, l, i)).is_zero();
          }
    s.tally(ok);
  }
  s.out.worst = s.out.failures;
  return s.out;
}

namespace {

struct FlowDraw {
  std::string id;
  Params pt;
};

FlowDraw rnd_flow_family(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return {"F1", {{"r", rnd_rational(rng, 0, 4, 3, false) / 2}}};
    case 1: return {"F2", {{"r", rnd_rational(rng, 0, 4, 3, false)}}};
    case 2: return {"F4", {{"rho", rnd_rational(rng, 0, 3, 2, false)}}};
    default: return {"F5", {{"r", rnd_rational(rng, 0, 4, 3, false)}}};
  }
}

} // namespace

PropertyOutcome property_jet_finite_difference(std::uint64_t seed, int cases) {
  Suite s("jet slots against central differences");
  std::mt19937_64 rng(seed ^ 0xA6ULL);
  std::uniform_real_distribution<double> tpick(0.03, 0.12), hpick(0.005, 0.02);
  int done = 0;
  while (done < cases) {
    FlowDraw fd = rnd_flow_family(rng);
    ScalarODE ode = build_hypo_ode(fd.id, fd.pt);
    Trajectory tr = integrate(ode, 0.2, 1e-10);
    double cap = 0.8 * tr.t_reached;
    double t0 = tpick(rng), h = hpick(rng);
    if (t0 + h >= cap || t0 - h <= 0.005) continue;
    auto fat = [&](double t) { return state_at(ode, tr, t); };
    auto e_for = [&](double step, int slot) {
      std::vector<Jet2> plus = fat(t0 + step), minus = fat(t0 - step), mid = fat(t0);
      double fdiff = (plus[slot].v - minus[slot].v) / (2 * step);
      return std::abs(fdiff - mid[slot].d1);
    };
    double e1 = e_for(h, 0), e1h = e_for(h / 2, 0);
    double e2 = e_for(h, 1), e2h = e_for(h / 2, 1);
    // halving h divides a second-order defect by ~4; 2.8 leaves noise room
    bool ok1 = e1 < 1e-7 || e1h <= e1 / 2.8 + 5e-9;
    bool ok2 = e2 < 1e-6 || e2h <= e2 / 2.8 + 1e-7;
    double excess = std::max({0.0, ok1 ? 0.0 : e1h - e1 / 2.8, ok2 ? 0.0 : e2h - e2 / 2.8});
    s.tally(ok1 && ok2, excess);
    ++done;
  }
  return s.out;
}

PropertyOutcome property_first_integral(std::uint64_t seed, int cases) {
  Suite s("conserved quantity drift along the flow");
  std::mt19937_64 rng(seed ^ 0xA7ULL);
  std::uniform_real_distribution<double> tend(0.05, 0.25);
  for (int n = 0; n < cases; ++n) {
    FlowDraw fd = rnd_flow_family(rng);
    ScalarODE ode = build_hypo_ode(fd.id, fd.pt);
    Trajectory tr = integrate(ode, tend(rng), 1e-10);
    double drift = first_integral_drift(ode, tr);
    s.tally(drift < 1e-9, drift);
  }
  return s.out;
}

std::vector<PropertyOutcome> run_property_suites(std::uint64_t seed, int cases) {
  return {property_ring_laws(seed, cases),
          property_d_squared(seed, cases),
          property_antiderivation(seed, cases),
          property_levi_civita_axioms(seed, cases),
          property_bianchi(seed, cases),
          property_jet_finite_difference(seed, cases),
          property_first_integral(seed, cases)};
}

} // namespace hlab
