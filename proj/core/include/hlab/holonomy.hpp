#pragma once

#include "hlab/flow.hpp"
#include "hlab/form.hpp"
#include "hlab/liealg.hpp"
#include "hlab/span.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlab {

// Orthonormal coframe eta^a = s_a(t) e^a on (group) x I, plus the implicit
// slot eta^{n+1} = dt. Scalings carry full 2-jets at t0.
struct CohomFrame {
  LieAlgebra base; // dim 5 or 6, parameters already bound
  std::vector<Jet2> scalings;
  double t0 = 0.0;
};

// rational twin of CohomFrame at t = 0, for exact curvature ranks
struct ExactCohomFrame {
  LieAlgebra base;
  std::vector<QJet> scalings;
};

// diagonal scaling pattern of the metric for a family id (profile = {f, fp}
// jets) or an extension kind (profile = {f, h, k} jets)
template <class T>
std::vector<JetT<T>> frame_scalings(const std::string& id, const std::vector<JetT<T>>& profile) {
  JetT<T> half(T(1) / T(2)), two(T(2));
  if (profile.size() == 3 && (id == "K" || id == "Ktilde")) {
    const JetT<T>&f = profile[0], &h = profile[1], &k = profile[2];
    JetT<T> sk = jet_sqrt(k), fsk = f * sk, isk = reciprocal(sk);
    if (id == "K") return {fsk, fsk, isk, isk, k, h};
    return {fsk, isk, fsk, isk, k, h};
  }
  if (profile.size() != 2) throw std::invalid_argument("frame_scalings: bad profile size");
  const JetT<T>&f = profile[0], &g = profile[1];
  if (id == "F2") {
    JetT<T> sf = jet_sqrt(f);
    return {sf, sf, sf, sf, half * g};
  }
  if (id == "F1") {
    JetT<T> sf = jet_sqrt(f);
    return {half * f * sf * g, sf, sf, two * reciprocal(sf * g), half * g};
  }
  if (id == "F4" || id == "F5") {
    JetT<T> w = half * g;
    JetT<T> fsw = f * jet_sqrt(w), isw = reciprocal(jet_sqrt(w));
    if (id == "F4") return {fsw, fsw, isw, isw, w};
    return {fsw, isw, fsw, isw, w};
  }
  throw std::invalid_argument("no frame pattern for '" + id + "'");
}

// frame at a trajectory time; id is a family (F1/F2/F4/F5) or a kind (K/Ktilde)
CohomFrame frame_at(const std::string& id, const std::map<std::string, Rational>& params,
                    const Trajectory& traj, double t0);

// exact frame at t = 0 from the closed-form initial jets
ExactCohomFrame frame_at_origin(const std::string& id,
                                const std::map<std::string, Rational>& params);

// Connection and curvature of the coframe from the first structure
// equation. Base differentials enter through constant-coefficient 2-forms;
// d of the t-dependent scalings runs through the jet derivative slots, so
// Omega values are trustworthy at order 0 and omega at order 1.
template <class T>
struct FrameForms {
  std::vector<std::vector<FormT<JetT<T>>>> omega; // omega[a-1][b-1], 1-forms
  std::vector<std::vector<FormT<JetT<T>>>> curv;  // Omega[a-1][b-1], 2-forms
};

// d eta^a expanded over the frame basis eta^1..eta^n, eta^{n+1} = dt:
// d(s_a e^a) = (s_a'/s_a) dt ^ eta^a + sum s_a K^a_{ij}/(s_i s_j) eta^{ij}
template <class T>
std::vector<FormT<JetT<T>>> frame_differentials(const std::vector<FormT<JetT<T>>>& base_diffs,
                                                const std::vector<JetT<T>>& scalings) {
  using Jet = JetT<T>;
  using JF = FormT<Jet>;
  using mask_t = typename JF::mask_t;
  const int n = static_cast<int>(base_diffs.size());
  const int N = n + 1;
  if (static_cast<int>(scalings.size()) != n)
    throw std::invalid_argument("frame scalings do not match the base dimension");

  std::vector<Jet> s(scalings);
  s.push_back(Jet(T(1))); // the dt slot

  std::vector<JF> D(static_cast<size_t>(N), JF(N));
  for (int a = 1; a <= n; ++a) {
    const Jet& sa = s[static_cast<size_t>(a - 1)];
    D[static_cast<size_t>(a - 1)].add(JF::mask_of({a, N}), -(shift(sa) / sa));
    for (auto& [m, kc] : base_diffs[static_cast<size_t>(a - 1)].terms()) {
      int i = std::countr_zero(static_cast<unsigned>(m)) + 1;
      int j = 16 - std::countl_zero(static_cast<uint16_t>(m));
      D[static_cast<size_t>(a - 1)].add(static_cast<mask_t>(m),
                                        sa * kc / (s[static_cast<size_t>(i - 1)] * s[static_cast<size_t>(j - 1)]));
    }
  }
  return D;
}

template <class T>
FrameForms<T> frame_curvature(const std::vector<FormT<JetT<T>>>& base_diffs,
                              const std::vector<JetT<T>>& scalings) {
  using Jet = JetT<T>;
  using JF = FormT<Jet>;
  using mask_t = typename JF::mask_t;
  const int n = static_cast<int>(base_diffs.size());
  const int N = n + 1;

  std::vector<JF> D = frame_differentials(base_diffs, scalings);

  // c^a_{bc}, antisymmetric in the lower pair; d eta^a = sum_{b<c} D^a_{bc} eta^{bc}
  auto csym = [&](int a, int b, int c) -> Jet {
    if (b == c) return Jet();
    if (b < c) return -D[static_cast<size_t>(a - 1)].coeff(JF::mask_of({b, c}));
    return D[static_cast<size_t>(a - 1)].coeff(JF::mask_of({c, b}));
  };

  Jet half(T(1) / T(2));
  // W[a][b][c] = omega^a_b(E_c)
  std::vector<std::vector<std::vector<Jet>>> W(
      static_cast<size_t>(N), std::vector<std::vector<Jet>>(static_cast<size_t>(N),
                                                            std::vector<Jet>(static_cast<size_t>(N))));
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      if (a == b) continue;
      for (int c = 1; c <= N; ++c)
        W[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)][static_cast<size_t>(c - 1)] =
            half * (csym(a, c, b) - csym(c, b, a) + csym(b, a, c));
    }

  FrameForms<T> out;
  out.omega.assign(static_cast<size_t>(N), std::vector<JF>(static_cast<size_t>(N), JF(N)));
  out.curv.assign(static_cast<size_t>(N), std::vector<JF>(static_cast<size_t>(N), JF(N)));
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      if (a == b) continue;
      JF om(N);
      for (int c = 1; c <= N; ++c) {
        const Jet& w = W[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)][static_cast<size_t>(c - 1)];
        if (!ring::is_zero(w)) om.add(static_cast<mask_t>(1u << (c - 1)), w);
      }
      out.omega[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] = om;
    }

  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      JF om(N);
      for (int c = 1; c <= N; ++c) {
        const Jet& w = W[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)][static_cast<size_t>(c - 1)];
        if (ring::is_zero(w)) continue;
        if (c != N) om.add(JF::mask_of({c, N}), -shift(w)); // dt ^ eta^c = -eta^{cN}
        om += w * D[static_cast<size_t>(c - 1)];
      }
      for (int c = 1; c <= N; ++c) {
        if (c == a || c == b) continue;
        om += wedge(out.omega[static_cast<size_t>(a - 1)][static_cast<size_t>(c - 1)],
                    out.omega[static_cast<size_t>(c - 1)][static_cast<size_t>(b - 1)]);
      }
      out.curv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] = om;
      out.curv[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)] = -om;
    }
  return out;
}

struct CurvatureReport {
  int dim = 0;                                  // frame dimension n+1
  std::vector<std::vector<JetForm>> connection; // omega^a_b
  std::vector<std::vector<JetForm>> curvature;  // Omega^a_b
  int rank = 0;                                 // curvature span at this single time
  std::map<std::string, double> residuals;      // structure equation, Bianchi
};

std::vector<std::vector<JetForm>> connection_forms(const CohomFrame& frame);
CurvatureReport curvature_forms(const CohomFrame& frame);

struct ExactCurvature {
  std::vector<std::vector<QJetForm>> connection;
  std::vector<std::vector<QJetForm>> curvature;
  int rank = 0;
};
ExactCurvature exact_curvature_at_origin(const std::string& id,
                                         const std::map<std::string, Rational>& params);

// rank of the span of all Omega^a_b (a < b) across the sample times, as
// vectors over the frame 2-form basis; sampling several times substitutes
// for covariant derivatives of the curvature at degenerate parameters
struct RankReport {
  int rank = 0;
  std::vector<double> times_used;
  std::vector<double> times_skipped; // outside the reached interval
  PivotDiagnostics pivots;
};
RankReport holonomy_rank(const std::string& id, const std::map<std::string, Rational>& params,
                         const Trajectory& traj, const std::vector<double>& sample_times);

// time-dependent structure forms of the evolving solutions
template <class T>
struct EvolvedStructure {
  FormT<JetT<T>> eta, om1, om2, om3; // on the five-dimensional base
};

template <class T>
EvolvedStructure<T> evolved_structure(const std::string& family_id, const JetT<T>& f,
                                      const JetT<T>& g) {
  using JF = FormT<JetT<T>>;
  auto B = [](std::initializer_list<int> idx) { return JF::basis(5, idx); };
  JetT<T> half(T(1) / T(2)), two(T(2));
  EvolvedStructure<T> ev;
  ev.eta = (half * g) * B({5});
  ev.om3 = f * (B({1, 4}) + B({2, 3}));
  if (family_id == "F2") {
    ev.om1 = f * (B({1, 2}) + B({3, 4}));
    ev.om2 = f * (B({1, 3}) - B({2, 4}));
    return ev;
  }
  JetT<T> big = half * f * f * g, small = two * reciprocal(g);
  if (family_id == "F4") {
    ev.om1 = big * B({1, 2}) + small * B({3, 4});
    ev.om2 = f * (B({1, 3}) - B({2, 4}));
    return ev;
  }
  if (family_id == "F5") {
    ev.om1 = f * (B({1, 2}) + B({3, 4}));
    ev.om2 = big * B({1, 3}) - small * B({2, 4});
    return ev;
  }
  if (family_id == "F1") {
    ev.om1 = big * B({1, 2}) + small * B({3, 4});
    ev.om2 = big * B({1, 3}) - small * B({2, 4});
    return ev;
  }
  throw std::invalid_argument("no evolving structure for '" + family_id + "'");
}

// the printed (F, Psi+, Psi-) of the six-dimensional extensions
template <class T>
struct EvolvedG2Forms {
  FormT<JetT<T>> F, psip, psim;
};

template <class T>
EvolvedG2Forms<T> evolved_g2_forms(const std::string& kind, const JetT<T>& f, const JetT<T>& h,
                                   const JetT<T>& k) {
  using JF = FormT<JetT<T>>;
  auto B = [](std::initializer_list<int> idx) { return JF::basis(6, idx); };
  EvolvedG2Forms<T> ev;
  if (kind == "K") {
    ev.F = f * (B({1, 3}) - B({2, 4})) + (k * h) * B({5, 6});
    ev.psip = -(f * f * k * k) * B({1, 2, 5}) - B({3, 4, 5}) - (f * h) * (B({1, 4, 6}) + B({2, 3, 6}));
    ev.psim = -(f * f * h * k) * B({1, 2, 6}) - (h / k) * B({3, 4, 6}) + (k * f) * (B({1, 4, 5}) + B({2, 3, 5}));
    return ev;
  }
  if (kind == "Ktilde") {
    ev.F = f * (B({1, 2}) + B({3, 4})) + (k * h) * B({5, 6});
    ev.psip = (f * f * k * k) * B({1, 3, 5}) - B({2, 4, 5}) - (f * h) * (B({1, 4, 6}) + B({2, 3, 6}));
    ev.psim = (f * f * h * k) * B({1, 3, 6}) - (h / k) * B({2, 4, 6}) + (f * k) * (B({1, 4, 5}) + B({2, 3, 5}));
    return ev;
  }
  throw std::invalid_argument("unknown extension kind '" + kind + "'");
}

// certification of the metric on N^5 x I built from an evolving structure:
// evolution-equation and per-time hypo residuals (jointly, closedness of F
// and Psi-+ on the product), the t = 0 contact condition, and the curvature
// span rank with the exact t = 0 computation carried separately
struct Su3Report {
  double dF_residual = 0;
  std::map<std::string, double> dPsi_residuals;
  int rank = 0;           // overall span rank (multi-time)
  int rank_at_origin = 0; // exact rational rank at t = 0
  bool rank_exact = false;
  std::string verdict; // "holonomy = SU(3)" or "inconclusive"
  std::vector<double> times;
  double tol = 0;
};
Su3Report certify_su3(const std::string& family_id, const std::map<std::string, Rational>& params,
                      const Trajectory& traj, double tol = 1e-8);

struct G2Report {
  double dphi_residual = 0;     // d(F ^ dt + Psi+) pieces
  double dstarphi_residual = 0; // d(Psi- ^ dt + F^2/2) pieces
  int rank = 0;
  int rank_at_origin = 0;
  bool rank_exact = false;
  std::string verdict; // "holonomy = G2" or "inconclusive"
  std::vector<double> times;
  double tol = 0;
};
G2Report certify_g2(const std::string& kind, const std::map<std::string, Rational>& params,
                    const Trajectory& traj, double tol = 1e-8);

// residuals of the two evolution equations for the de^6 = 0 circle lift of
// an evolving structure, rotated by an exactly-unit pair (lambda, mu)
struct LiftResiduals {
  double flow_psip = 0; // max |d/dt Psi+ - d F|
  double flow_f = 0;    // max |F ^ d/dt F + d Psi-|
  std::vector<double> times;
};
LiftResiduals verify_hitchin_lift(const std::string& family_id,
                                  const std::map<std::string, Rational>& params,
                                  const Trajectory& traj, const Rational& lambda,
                                  const Rational& mu);

// worker cap for the per-sample-time loops (HOLONOMY_LAB_THREADS)
int thread_budget();

} // namespace hlab
