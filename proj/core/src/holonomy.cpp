#include "hlab/holonomy.hpp"

#include "hlab/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

namespace hlab {

namespace {

Rational need(const std::map<std::string, Rational>& params, const char* key,
              const std::string& who) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(who + " needs a numeric value for '" + key + "'");
  return it->second;
}

bool is_g2_kind(const std::string& id) { return id == "K" || id == "Ktilde"; }

// Parameter point on the rho-circle of F4. A bare "rho" key picks (a, b) =
// (sqrt(rho), 0); every point of the circle generates an isomorphic frame,
// so the choice is free. When sqrt(rho) is irrational the closest double is
// bound exactly as a rational, which lands on a true family member at
// rho - O(1e-16); `exact` reports whether the point is the requested one.
std::map<std::string, Rational> f4_point(const std::map<std::string, Rational>& params,
                                         const std::string& who, bool* exact = nullptr) {
  if (exact) *exact = true;
  auto it = params.find("rho");
  if (it == params.end())
    return {{"a", need(params, "a", who)}, {"b", need(params, "b", who)}};
  Rational rho = it->second;
  if (rho < 0) throw std::invalid_argument(who + ": rho must be nonnegative");
  if (auto s = rational_root(rho, 2)) return {{"a", *s}, {"b", Rational(0)}};
  if (exact) *exact = false;
  return {{"a", Rational(std::sqrt(to_double(rho)))}, {"b", Rational(0)}};
}

// numerically bound base algebra of the frame: dim 5 for the solvable
// families, dim 6 for the extensions (r = 0 admitted through the limits)
LieAlgebra frame_base(const std::string& id, const std::map<std::string, Rational>& params,
                      bool* exact = nullptr) {
  if (exact) *exact = true;
  if (id == "abelian") return abelian(5);
  if (id == "K") {
    Form de6 = Poly(need(params, "a1", id)) * Form::basis(5, {1, 2});
    return extend(family("F4", f4_point(params, id, exact)), de6);
  }
  if (id == "Ktilde") {
    std::map<std::string, Rational> base{{"r", need(params, "r", id)}};
    Form de6 = Poly(need(params, "a2", id)) * Form::basis(5, {1, 3});
    return extend(family_limit("F5", base), de6);
  }
  if (id == "F1" || id == "F2" || id == "F5") {
    return family_limit(id, {{"r", need(params, "r", id)}});
  }
  if (id == "F4") {
    return family(id, f4_point(params, id, exact));
  }
  throw std::invalid_argument("no frame construction for '" + id + "'");
}

// all 2-index masks of an N-dim coframe, ascending
std::vector<uint16_t> two_form_masks(int N) {
  std::vector<uint16_t> cols;
  for (unsigned m = 0; m < (1u << N); ++m)
    if (std::popcount(m) == 2) cols.push_back(static_cast<uint16_t>(m));
  return cols;
}

// stack the value slots of all Omega^a_b (a < b) as rank rows
std::vector<std::vector<double>> curvature_rows(const FrameForms<double>& ff, int N) {
  std::vector<uint16_t> cols = two_form_masks(N);
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(N * (N - 1) / 2));
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      std::vector<double> row;
      row.reserve(cols.size());
      for (uint16_t m : cols)
        row.push_back(ff.curv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)].coeff(m).v);
      rows.push_back(std::move(row));
    }
  return rows;
}

std::vector<std::vector<Rational>> curvature_rows_exact(const FrameForms<Rational>& ff, int N) {
  std::vector<uint16_t> cols = two_form_masks(N);
  std::vector<std::vector<Rational>> rows;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      std::vector<Rational> row;
      row.reserve(cols.size());
      for (uint16_t m : cols)
        row.push_back(ff.curv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)].coeff(m).v);
      rows.push_back(std::move(row));
    }
  return rows;
}

double max_abs_value(const JetForm& f) {
  double m = 0;
  for (auto& [k, c] : f.terms()) m = std::max(m, std::abs(c.v));
  return m;
}

double max_abs_all(const JetForm& f) {
  double m = 0;
  for (auto& [k, c] : f.terms()) m = std::max({m, std::abs(c.v), std::abs(c.d1), std::abs(c.d2)});
  return m;
}

// residual sample times: always t = 0 plus four interior points of the
// reached interval
std::vector<double> sample_times_for(const Trajectory& traj) {
  std::vector<double> ts{0.0};
  double T = traj.t_reached;
  // next to a singular endpoint the profile derivatives blow up and the
  // evolution identities only cancel to relative precision, so sample the
  // closed interval for completed runs but stay strictly inside otherwise
  if (traj.status != "completed") T *= 0.8;
  if (T != 0.0)
    for (int i = 1; i <= 4; ++i) ts.push_back(T * static_cast<double>(i) / 4.0);
  return ts;
}

JetForm jet_basis(int dim, std::initializer_list<int> idx) {
  return JetForm::basis(dim, idx);
}

} // namespace

int thread_budget() {
  if (const char* env = std::getenv("HOLONOMY_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

CohomFrame frame_at(const std::string& id, const std::map<std::string, Rational>& params,
                    const Trajectory& traj, double t0) {
  CohomFrame fr;
  fr.base = frame_base(id, params);
  fr.t0 = t0;
  if (id == "abelian") {
    fr.scalings.assign(5, Jet2(1.0));
    return fr;
  }
  std::vector<Jet2> prof = is_g2_kind(id) ? state_at(build_hitchin_system(id, params), traj, t0)
                                          : state_at(build_hypo_ode(id, params), traj, t0);
  fr.scalings = frame_scalings<double>(id, prof);
  return fr;
}

ExactCohomFrame frame_at_origin(const std::string& id,
                                const std::map<std::string, Rational>& params) {
  ExactCohomFrame fr;
  bool exact = true;
  fr.base = frame_base(id, params, &exact);
  if (!exact)
    throw std::domain_error(id + ": sqrt(rho) is irrational, no exact parameter point; "
                            "pass rational (a, b) or use the floating frame");
  if (id == "abelian") {
    fr.scalings.assign(5, QJet(Rational(1)));
    return fr;
  }
  std::vector<QJet> prof;
  if (is_g2_kind(id)) {
    auto jets = hitchin_initial_jets(id, params);
    prof.assign(jets.begin(), jets.end());
  } else {
    auto j = initial_profile_jets(id, params);
    prof = {QJet(j[0], j[1], j[2]), QJet(j[1], j[2], j[3])};
  }
  fr.scalings = frame_scalings<Rational>(id, prof);
  return fr;
}

std::vector<std::vector<JetForm>> connection_forms(const CohomFrame& frame) {
  auto diffs = jet_differentials(frame.base, {});
  return frame_curvature<double>(diffs, frame.scalings).omega;
}

CurvatureReport curvature_forms(const CohomFrame& frame) {
  auto diffs = jet_differentials(frame.base, {});
  FrameForms<double> ff = frame_curvature<double>(diffs, frame.scalings);
  int N = frame.base.dim + 1;

  CurvatureReport rep;
  rep.dim = N;
  rep.connection = ff.omega;
  rep.curvature = ff.curv;

  RankResult rr = rank_float(curvature_rows(ff, N));
  rep.rank = rr.rank;

  // d eta^a + omega^a_b ^ eta^b, exactly zero slotwise by construction
  std::vector<JetForm> D = frame_differentials<double>(diffs, frame.scalings);
  double structure_res = 0, bianchi_res = 0;
  for (int a = 1; a <= N; ++a) {
    JetForm res = D[static_cast<size_t>(a - 1)];
    JetForm bianchi(N);
    for (int b = 1; b <= N; ++b) {
      if (b == a) continue;
      JetForm etab = jet_basis(N, {b});
      res += wedge(ff.omega[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)], etab);
      bianchi += wedge(ff.curv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)], etab);
    }
    structure_res = std::max(structure_res, max_abs_all(res));
    bianchi_res = std::max(bianchi_res, max_abs_value(bianchi));
  }
  rep.residuals["first structure equation"] = structure_res;
  rep.residuals["bianchi"] = bianchi_res;
  return rep;
}

ExactCurvature exact_curvature_at_origin(const std::string& id,
                                         const std::map<std::string, Rational>& params) {
  ExactCohomFrame fr = frame_at_origin(id, params);
  auto diffs = exact_jet_differentials(fr.base, {});
  FrameForms<Rational> ff = frame_curvature<Rational>(diffs, fr.scalings);
  ExactCurvature out;
  out.connection = ff.omega;
  out.curvature = ff.curv;
  out.rank = rank_exact(curvature_rows_exact(ff, fr.base.dim + 1));
  return out;
}

RankReport holonomy_rank(const std::string& id, const std::map<std::string, Rational>& params,
                         const Trajectory& traj, const std::vector<double>& sample_times) {
  RankReport rep;
  LieAlgebra base = frame_base(id, params);
  const int N = base.dim + 1;
  auto diffs = jet_differentials(base, {});

  if (id == "abelian") {
    // static frame, zero curvature at every requested time
    rep.times_used = sample_times;
    FrameForms<double> ff = frame_curvature<double>(diffs, std::vector<Jet2>(5, Jet2(1.0)));
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < sample_times.size(); ++i)
      for (auto& r : curvature_rows(ff, N)) rows.push_back(r);
    RankResult rr = rank_float(rows);
    rep.rank = rr.rank;
    rep.pivots = rr.pivots;
    return rep;
  }

  ScalarODE ode;
  HitchinSystem sys;
  const bool g2 = is_g2_kind(id);
  if (g2) sys = build_hitchin_system(id, params);
  else ode = build_hypo_ode(id, params);

  const size_t n = sample_times.size();
  std::vector<std::optional<std::vector<std::vector<double>>>> per_time(n);
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (size_t i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) {
      try {
        std::vector<Jet2> prof = g2 ? state_at(sys, traj, sample_times[i])
                                    : state_at(ode, traj, sample_times[i]);
        FrameForms<double> ff = frame_curvature<double>(diffs, frame_scalings<double>(id, prof));
        per_time[i] = curvature_rows(ff, N);
      } catch (const std::out_of_range&) {
        per_time[i] = std::nullopt;
      }
    }
  };
  int workers = std::min<int>(thread_budget(), static_cast<int>(n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < n; ++i) {
    if (!per_time[i]) {
      rep.times_skipped.push_back(sample_times[i]);
      continue;
    }
    rep.times_used.push_back(sample_times[i]);
    for (auto& r : *per_time[i]) rows.push_back(std::move(r));
  }
  RankResult rr = rank_float(rows);
  rep.rank = rr.rank;
  rep.pivots = rr.pivots;
  return rep;
}

Su3Report certify_su3(const std::string& family_id, const std::map<std::string, Rational>& params,
                      const Trajectory& traj, double tol) {
  Su3Report rep;
  rep.tol = tol;

  if (family_id == "abelian") {
    // static control: every derivative vanishes, so only the contact
    // condition at t = 0 can fail, and it does, by |2 om3| = 2
    rep.times = {0.0};
    LieAlgebra base = abelian(5);
    auto diffs = jet_differentials(base, {});
    EvolvedStructure<double> ev = evolved_structure<double>("F2", Jet2(1.0), Jet2(2.0));
    rep.dF_residual = std::max(max_abs_order1(time_derivative(ev.om3) + d_form_basis(diffs, ev.eta)),
                               max_abs_order1(d_form_basis(diffs, ev.om3)));
    JetForm o1e = wedge(ev.om1, ev.eta), o2e = wedge(ev.om2, ev.eta);
    rep.dPsi_residuals["d(om1 ^ eta)"] = max_abs_order1(d_form_basis(diffs, o1e));
    rep.dPsi_residuals["d(om2 ^ eta)"] = max_abs_order1(d_form_basis(diffs, o2e));
    rep.dPsi_residuals["dt(om1 ^ eta) + d om2"] =
        max_abs_order1(time_derivative(o1e) + d_form_basis(diffs, ev.om2));
    rep.dPsi_residuals["dt(om2 ^ eta) - d om1"] =
        max_abs_order1(time_derivative(o2e) - d_form_basis(diffs, ev.om1));
    JetForm contact = d_form_basis(diffs, ev.eta) + Jet2(2.0) * ev.om3;
    rep.dPsi_residuals["d eta(0) + 2 om3(0)"] = max_abs_value(contact);
    rep.rank = holonomy_rank(family_id, params, traj, rep.times).rank;
    rep.rank_at_origin = exact_curvature_at_origin(family_id, params).rank;
    rep.rank_exact = true;
    rep.verdict = "inconclusive";
    return rep;
  }

  LieAlgebra base = frame_base(family_id, params);
  auto diffs = jet_differentials(base, {});
  ScalarODE ode = build_hypo_ode(family_id, params);
  rep.times = sample_times_for(traj);

  double dF = 0, h1 = 0, h2 = 0, e1 = 0, e2 = 0;
  for (double t : rep.times) {
    std::vector<Jet2> prof = state_at(ode, traj, t);
    EvolvedStructure<double> ev = evolved_structure<double>(family_id, prof[0], prof[1]);
    dF = std::max(dF, max_abs_order1(time_derivative(ev.om3) + d_form_basis(diffs, ev.eta)));
    dF = std::max(dF, max_abs_order1(d_form_basis(diffs, ev.om3)));
    JetForm o1e = wedge(ev.om1, ev.eta), o2e = wedge(ev.om2, ev.eta);
    h1 = std::max(h1, max_abs_order1(d_form_basis(diffs, o1e)));
    h2 = std::max(h2, max_abs_order1(d_form_basis(diffs, o2e)));
    e1 = std::max(e1, max_abs_order1(time_derivative(o1e) + d_form_basis(diffs, ev.om2)));
    e2 = std::max(e2, max_abs_order1(time_derivative(o2e) - d_form_basis(diffs, ev.om1)));
    if (t == 0.0) {
      JetForm contact = d_form_basis(diffs, ev.eta) + Jet2(2.0) * ev.om3;
      rep.dPsi_residuals["d eta(0) + 2 om3(0)"] = max_abs_value(contact);
    }
  }
  rep.dF_residual = dF;
  rep.dPsi_residuals["d(om1 ^ eta)"] = h1;
  rep.dPsi_residuals["d(om2 ^ eta)"] = h2;
  rep.dPsi_residuals["dt(om1 ^ eta) + d om2"] = e1;
  rep.dPsi_residuals["dt(om2 ^ eta) - d om1"] = e2;

  rep.rank = holonomy_rank(family_id, params, traj, rep.times).rank;
  try {
    rep.rank_at_origin = exact_curvature_at_origin(family_id, params).rank;
    rep.rank_exact = true;
  } catch (const std::domain_error&) {
    rep.rank_at_origin = holonomy_rank(family_id, params, traj, {0.0}).rank;
    rep.rank_exact = false;
  }

  double worst = rep.dF_residual;
  for (auto& [k, v] : rep.dPsi_residuals) worst = std::max(worst, v);
  rep.verdict = (worst < tol && rep.rank == 8) ? "holonomy = SU(3)" : "inconclusive";
  return rep;
}

G2Report certify_g2(const std::string& kind, const std::map<std::string, Rational>& params,
                    const Trajectory& traj, double tol) {
  if (!is_g2_kind(kind)) throw std::invalid_argument("unknown extension kind '" + kind + "'");
  G2Report rep;
  rep.tol = tol;
  LieAlgebra base = frame_base(kind, params);
  auto diffs = jet_differentials(base, {});
  HitchinSystem sys = build_hitchin_system(kind, params);
  rep.times = sample_times_for(traj);

  double dphi = 0, dstar = 0;
  for (double t : rep.times) {
    std::vector<Jet2> prof = state_at(sys, traj, t);
    EvolvedG2Forms<double> ev = evolved_g2_forms<double>(kind, prof[0], prof[1], prof[2]);
    // d phi   = dhat Psi+  +  dt ^ (dt Psi+ - dhat F)
    dphi = std::max(dphi, max_abs_order1(d_form_basis(diffs, ev.psip)));
    dphi = std::max(dphi, max_abs_order1(time_derivative(ev.psip) - d_form_basis(diffs, ev.F)));
    // d *phi  = (1/2) dhat(F ^ F)  +  dt ^ (F ^ dt F + dhat Psi-)
    JetForm FF = wedge(ev.F, ev.F);
    dstar = std::max(dstar, 0.5 * max_abs_order1(d_form_basis(diffs, FF)));
    dstar = std::max(dstar,
                     max_abs_order1(wedge(ev.F, time_derivative(ev.F)) + d_form_basis(diffs, ev.psim)));
  }
  rep.dphi_residual = dphi;
  rep.dstarphi_residual = dstar;

  rep.rank = holonomy_rank(kind, params, traj, rep.times).rank;
  try {
    rep.rank_at_origin = exact_curvature_at_origin(kind, params).rank;
    rep.rank_exact = true;
  } catch (const std::domain_error&) {
    rep.rank_at_origin = holonomy_rank(kind, params, traj, {0.0}).rank;
    rep.rank_exact = false;
  }

  rep.verdict = (dphi < tol && dstar < tol && rep.rank == 14) ? "holonomy = G2" : "inconclusive";
  return rep;
}

LiftResiduals verify_hitchin_lift(const std::string& family_id,
                                  const std::map<std::string, Rational>& params,
                                  const Trajectory& traj, const Rational& lambda,
                                  const Rational& mu) {
  if (lambda * lambda + mu * mu != 1)
    throw std::invalid_argument("the rotation pair must satisfy lambda^2 + mu^2 = 1 exactly");

  // trivial circle lift: de6 = 0 on the evolving family
  LieAlgebra g6 = extend(frame_base(family_id, params), Form(5));
  auto diffs = jet_differentials(g6, {});
  double lam = to_double(lambda), muu = to_double(mu);

  LiftResiduals out;
  out.times = traj.times;
  JetForm e6 = jet_basis(6, {6});
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const Jet2& f = traj.at(i, 0);
    const Jet2& g = traj.at(i, 1);
    EvolvedStructure<double> ev5 = evolved_structure<double>(family_id, f, g);
    JetForm eta = embed_form(ev5.eta, 6), om1 = embed_form(ev5.om1, 6),
            om2 = embed_form(ev5.om2, 6), om3 = embed_form(ev5.om3, 6);
    JetForm F = Jet2(lam) * om1 + Jet2(muu) * om2 + wedge(eta, e6);
    JetForm rot = Jet2(-muu) * om1 + Jet2(lam) * om2;
    JetForm psip = wedge(rot, eta) - wedge(om3, e6);
    JetForm psim = wedge(rot, e6) + wedge(om3, eta);

    double r1 = max_abs_order1(time_derivative(psip) - d_form_basis(diffs, F));
    double r2 = max_abs_order1(wedge(F, time_derivative(F)) + d_form_basis(diffs, psim));
    out.flow_psip = std::max(out.flow_psip, r1);
    out.flow_f = std::max(out.flow_f, r2);
  }
  return out;
}

} // namespace hlab
