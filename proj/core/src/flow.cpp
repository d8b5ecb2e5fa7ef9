#include "hlab/flow.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hlab {

namespace {

constexpr double kGuard = 1e-6;

double dval(const std::map<std::string, Rational>& p, const std::string& key,
            const std::string& who) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument(who + " needs parameter '" + key + "'");
  return to_double(it->second);
}

Rational rval(const std::map<std::string, Rational>& p, const std::string& key,
              const std::string& who) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument(who + " needs parameter '" + key + "'");
  return it->second;
}

// rho = a^2 + b^2, accepted directly under the key "rho" since values like
// rho = 6 are not sums of two rational squares
Rational rho_param(const std::map<std::string, Rational>& p, const std::string& who) {
  auto it = p.find("rho");
  if (it != p.end()) {
    if (it->second < 0) throw std::invalid_argument(who + ": rho must be nonnegative");
    return it->second;
  }
  return rational_pow(rval(p, "a", who), 2) + rational_pow(rval(p, "b", who), 2);
}

// shared integration loop over an N-dimensional first-order system
template <size_t N, class Sys, class Healthy, class Jets>
Trajectory run_integration(Sys sys, const std::array<double, N>& x0, double t_end, double tol,
                           std::vector<double> mandatory, Healthy healthy, Jets jets,
                           std::vector<std::string> unknowns) {
  namespace odeint = boost::numeric::odeint;
  using state_type = std::array<double, N>;

  if (tol <= 0) throw std::invalid_argument("integrate: tol must be positive");
  if (t_end == 0) throw std::invalid_argument("integrate: t_end must be nonzero");
  if (!healthy(x0)) throw std::runtime_error("immediate singularity at t=0");

  const double dir = t_end > 0 ? 1.0 : -1.0;
  const double tiny = 1e-13;

  std::sort(mandatory.begin(), mandatory.end(),
            [&](double a, double b) { return dir * a < dir * b; });
  mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());
  std::vector<double> mand;
  for (double m : mandatory)
    if (dir * m > tiny && dir * m <= dir * t_end + tiny) mand.push_back(m);

  Trajectory tr;
  tr.unknowns = std::move(unknowns);
  tr.status = "completed";
  auto record = [&](double t, const state_type& x) {
    tr.times.push_back(t);
    tr.states.push_back(jets(x));
    tr.t_reached = t;
  };
  record(0.0, x0);

  // the requested tol bounds the local error; the 1/100 safety factor keeps
  // the accumulated global error within the same budget on unit intervals
  auto stepper =
      odeint::make_dense_output(0.01 * tol, 0.01 * tol, odeint::runge_kutta_dopri5<state_type>());
  stepper.initialize(x0, 0.0, dir * 1e-4);

  size_t mi = 0;
  bool stopped = false;
  for (long step = 0;; ++step) {
    if (step > 5000000) throw std::runtime_error("integrate: step limit exceeded");
    double tcur = stepper.current_time();
    if (dir * (t_end - tcur) <= tiny) break;
    if (!healthy(stepper.current_state())) { stopped = true; break; }
    stepper.do_step(sys);
    double tnew = stepper.current_time();
    double tcap = (dir * tnew > dir * t_end) ? t_end : tnew;
    while (mi < mand.size() && dir * (mand[mi] - tcap) <= tiny) {
      state_type xs;
      stepper.calc_state(mand[mi], xs);
      if (!healthy(xs)) { stopped = true; break; }
      if (dir * (mand[mi] - tr.times.back()) > tiny) record(mand[mi], xs);
      ++mi;
    }
    if (stopped) break;
    if (dir * (tcap - tr.times.back()) > tiny) {
      state_type xs;
      if (tcap == tnew) xs = stepper.current_state();
      else stepper.calc_state(tcap, xs);
      if (!healthy(xs)) { stopped = true; break; }
      record(tcap, xs);
    }
  }
  if (stopped) tr.status = "stopped-near-singularity";
  return tr;
}

// quintic Hermite on [0, h] through values, first and second derivatives
double quintic(double y0, double d0, double c0, double y1, double d1, double c1,
               double h, double s) {
  double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  double H00 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
  double H10 = s - 6 * s3 + 8 * s4 - 3 * s5;
  double H20 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
  double H01 = 10 * s3 - 15 * s4 + 6 * s5;
  double H11 = -4 * s3 + 7 * s4 - 3 * s5;
  double H21 = 0.5 * (s3 - 2 * s4 + s5);
  return y0 * H00 + d0 * h * H10 + c0 * h * h * H20 +
         y1 * H01 + d1 * h * H11 + c1 * h * h * H21;
}

// bracketing node pair for t0, or the exact node if one matches
struct Bracket {
  bool exact = false;
  size_t lo = 0, hi = 0;
  double s = 0, h = 0;
};

Bracket locate(const Trajectory& tr, double t0) {
  if (tr.times.empty()) throw std::out_of_range("state_at: empty trajectory");
  double dir = tr.t_reached >= 0 ? 1.0 : -1.0;
  double tol = 1e-12 * std::max(1.0, std::abs(t0));
  if (dir * t0 < -tol || dir * t0 > dir * tr.t_reached + tol)
    throw std::out_of_range("state_at: time outside the integrated interval");
  Bracket b;
  for (size_t i = 0; i < tr.times.size(); ++i) {
    if (std::abs(tr.times[i] - t0) <= tol) {
      b.exact = true;
      b.lo = i;
      return b;
    }
  }
  for (size_t i = 0; i + 1 < tr.times.size(); ++i) {
    if (dir * tr.times[i] < dir * t0 && dir * t0 < dir * tr.times[i + 1]) {
      b.lo = i;
      b.hi = i + 1;
      b.h = tr.times[i + 1] - tr.times[i];
      b.s = (t0 - tr.times[i]) / b.h;
      return b;
    }
  }
  throw std::out_of_range("state_at: time not bracketed by trajectory nodes");
}

double interp_unknown(const Trajectory& tr, const Bracket& b, size_t u) {
  const Jet2& a = tr.states[b.lo][u];
  const Jet2& c = tr.states[b.hi][u];
  return quintic(a.v, a.d1, a.d2, c.v, c.d1, c.d2, b.h, b.s);
}

} // namespace

ScalarODE build_hypo_ode(const std::string& family_id,
                         const std::map<std::string, Rational>& params) {
  ScalarODE ode;
  ode.family = family_id;
  ode.params = params;

  if (family_id == "F2" || family_id == "F1") {
    double r = dval(params, "r", family_id);
    double r2 = r * r;
    ode.radicand = [r2](double f) { return 1 + r2 - r2 * f * f * f; };
    ode.first_integral_value = 1 + r2;
    if (family_id == "F2") {
      double lam = -3 * r2;
      ode.second_order_residual = [lam](double f, double fp, double fpp) {
        return f * fpp + fp * fp - 2 * lam * f;
      };
      ode.first_order_rhs = [r2](double f) {
        return (2 / f) * std::sqrt(std::max(1 + r2 - r2 * f * f * f, 0.0));
      };
      ode.first_integral = [r2](double f, double fp) {
        double q = f * fp / 2;
        return q * q + r2 * f * f * f;
      };
      ode.fpp_of = [lam](double f, double fp) { return (2 * lam * f - fp * fp) / f; };
      ode.fppp_of = [lam](double f, double fp, double fpp) { return fp * (2 * lam - 3 * fpp) / f; };
    } else {
      ode.second_order_residual = [r2](double f, double fp, double fpp) {
        return 12 * r2 + f * fp * fp * fp * fp + f * f * fp * fp * fpp;
      };
      ode.first_order_rhs = [r2](double f) {
        return (2 / f) * std::pow(std::max(1 + r2 - r2 * f * f * f, 0.0), 0.25);
      };
      ode.first_integral = [r2](double f, double fp) {
        double q = f * fp / 2;
        return q * q * q * q + r2 * f * f * f;
      };
      ode.fpp_of = [r2](double f, double fp) {
        return -(12 * r2 + f * fp * fp * fp * fp) / (f * f * fp * fp);
      };
      ode.fppp_of = [](double f, double fp, double fpp) {
        double fp3 = fp * fp * fp;
        return -(fp3 * fp * fp + 6 * f * fp3 * fpp + 2 * f * f * fp * fpp * fpp) / (f * f * fp * fp);
      };
    }
    return ode;
  }

  if (family_id == "F4" || family_id == "F5") {
    // the two equations differ only in the constant: 4*rho versus 2*r^2
    double cst;
    if (family_id == "F4") {
      cst = 4 * to_double(rho_param(params, family_id));
    } else {
      double r = dval(params, "r", family_id);
      cst = 2 * r * r;
    }
    ode.second_order_residual = [cst](double f, double fp, double fpp) {
      return cst + fp * fp * fp + f * fp * fpp;
    };
    ode.radicand = [cst](double f) { return 8 + cst - cst * f * f * f; };
    ode.first_order_rhs = [cst](double f) { return std::cbrt(8 + cst - cst * f * f * f) / f; };
    ode.first_integral = [cst](double f, double fp) {
      double q = f * fp;
      return q * q * q + cst * f * f * f;
    };
    ode.first_integral_value = 8 + cst;
    ode.fpp_of = [cst](double f, double fp) { return -(cst + fp * fp * fp) / (f * fp); };
    ode.fppp_of = [](double f, double fp, double fpp) {
      return -(4 * fp * fp * fpp + f * fpp * fpp) / (f * fp);
    };
    return ode;
  }

  if (family_id == "F3" || family_id == "F7")
    throw std::invalid_argument(family_id + " evolves through its rotation image in F4/F5");
  throw std::invalid_argument("unknown family id '" + family_id + "'");
}

std::array<Rational, 4> initial_profile_jets(const std::string& family_id,
                                             const std::map<std::string, Rational>& params) {
  Rational one(1), two(2);
  if (family_id == "F2") {
    Rational r2 = rational_pow(rval(params, "r", family_id), 2);
    return {one, two, -(6 * r2 + 4), 24 * r2 + 24};
  }
  if (family_id == "F1") {
    Rational r2 = rational_pow(rval(params, "r", family_id), 2);
    return {one, two, -(3 * r2 + 4), -9 * r2 * r2 + 12 * r2 + 24};
  }
  if (family_id == "F4") {
    Rational rho = rho_param(params, family_id);
    return {one, two, -(2 * rho + 4), -2 * rho * rho + 8 * rho + 24};
  }
  if (family_id == "F5") {
    Rational r2 = rational_pow(rval(params, "r", family_id), 2);
    return {one, two, -(r2 + 4), (-r2 * r2 + 8 * r2 + 48) / 2};
  }
  throw std::invalid_argument("no profile jets for family '" + family_id + "'");
}

HitchinSystem build_hitchin_system(const std::string& kind,
                                   const std::map<std::string, Rational>& params) {
  HitchinSystem sys;
  sys.kind = kind;
  sys.params = params;
  using A3 = std::array<double, 3>;

  if (kind == "K") {
    double a1 = dval(params, "a1", kind);
    double rho = to_double(rho_param(params, kind));
    sys.rhs = [a1, rho](const A3& x) -> A3 {
      double f = x[0], h = x[1], k = x[2];
      return {2 * k + a1 * h / (2 * k * f),
              -a1 * h * h / (2 * k * f * f),
              -(rho + 2 * k * k * k) / (k * f)};
    };
    sys.second = [a1, rho](const A3& x, const A3& xp) -> A3 {
      double f = x[0], h = x[1], k = x[2];
      double fp = xp[0], hp = xp[1], kp = xp[2];
      double fpp = 2 * kp + (a1 / 2) * (hp * k * f - h * (kp * f + k * fp)) / (k * k * f * f);
      double hpp = -(a1 / 2) * (2 * h * hp * k * f * f - h * h * (kp * f * f + 2 * k * f * fp)) /
                   (k * k * f * f * f * f);
      double kpp = -(6 * k * k * kp * k * f - (rho + 2 * k * k * k) * (kp * f + k * fp)) /
                   (k * k * f * f);
      return {fpp, hpp, kpp};
    };
    return sys;
  }

  if (kind == "Ktilde") {
    double r = dval(params, "r", kind);
    double a2 = dval(params, "a2", kind);
    double r2 = r * r;
    sys.rhs = [a2, r2](const A3& x) -> A3 {
      double f = x[0], h = x[1], k = x[2];
      return {2 * k - a2 * h / (2 * k * f),
              a2 * h * h / (2 * k * f * f),
              -(r2 + 4 * k * k * k) / (2 * k * f)};
    };
    sys.second = [a2, r2](const A3& x, const A3& xp) -> A3 {
      double f = x[0], h = x[1], k = x[2];
      double fp = xp[0], hp = xp[1], kp = xp[2];
      double fpp = 2 * kp - (a2 / 2) * (hp * k * f - h * (kp * f + k * fp)) / (k * k * f * f);
      double hpp = (a2 / 2) * (2 * h * hp * k * f * f - h * h * (kp * f * f + 2 * k * f * fp)) /
                   (k * k * f * f * f * f);
      double kpp = -(12 * k * k * kp * 2 * k * f - (r2 + 4 * k * k * k) * 2 * (kp * f + k * fp)) /
                   (4 * k * k * f * f);
      return {fpp, hpp, kpp};
    };
    return sys;
  }

  throw std::invalid_argument("unknown extension kind '" + kind + "'");
}

std::array<QJet, 3> hitchin_initial_jets(const std::string& kind,
                                         const std::map<std::string, Rational>& params) {
  Rational one(1), half(1, 2);
  if (kind == "K") {
    Rational a1 = rval(params, "a1", kind);
    Rational rho = rho_param(params, kind);
    Rational fp = 2 + a1 * half, hp = -a1 * half, kp = -(rho + 2);
    Rational fpp = 2 * kp + a1 * half * (hp - kp - fp);
    Rational hpp = -a1 * half * (2 * hp - kp - 2 * fp);
    Rational kpp = -6 * kp + (rho + 2) * (kp + fp);
    return {QJet{one, fp, fpp}, QJet{one, hp, hpp}, QJet{one, kp, kpp}};
  }
  if (kind == "Ktilde") {
    Rational a2 = rval(params, "a2", kind);
    Rational r2 = rational_pow(rval(params, "r", kind), 2);
    Rational fp = 2 - a2 * half, hp = a2 * half, kp = -(r2 + 4) * half;
    Rational fpp = 2 * kp - a2 * half * (hp - kp - fp);
    Rational hpp = a2 * half * (2 * hp - kp - 2 * fp);
    Rational kpp = -6 * kp + (r2 + 4) * (kp + fp) * half;
    return {QJet{one, fp, fpp}, QJet{one, hp, hpp}, QJet{one, kp, kpp}};
  }
  throw std::invalid_argument("unknown extension kind '" + kind + "'");
}

Trajectory integrate(const ScalarODE& ode, double t_end, double tol,
                     const std::vector<double>& mandatory_times) {
  if (!ode.first_order_rhs || !ode.fpp_of || !ode.fppp_of)
    throw std::invalid_argument("integrate: ScalarODE is missing callable data");
  auto healthy = [&ode](const std::array<double, 1>& x) {
    double f = x[0];
    if (!(std::abs(f) >= kGuard)) return false;
    if (ode.radicand && !(ode.radicand(f) >= kGuard)) return false;
    double fp = ode.first_order_rhs(f);
    return std::abs(fp) >= kGuard;
  };
  auto jets = [&ode](const std::array<double, 1>& x) {
    double f = x[0];
    double fp = ode.first_order_rhs(f);
    double fpp = ode.fpp_of(f, fp);
    double fppp = ode.fppp_of(f, fp, fpp);
    return std::vector<Jet2>{Jet2(f, fp, fpp), Jet2(fp, fpp, fppp)};
  };
  auto sys = [&ode](const std::array<double, 1>& x, std::array<double, 1>& dxdt, double) {
    dxdt[0] = ode.first_order_rhs(x[0]);
  };
  return run_integration<1>(sys, {ode.f0}, t_end, tol, mandatory_times, healthy, jets,
                            {"f", "fp"});
}

Trajectory integrate(const HitchinSystem& sys, double t_end, double tol,
                     const std::vector<double>& mandatory_times) {
  if (!sys.rhs || !sys.second)
    throw std::invalid_argument("integrate: HitchinSystem is missing callable data");
  auto healthy = [](const std::array<double, 3>& x) {
    return std::abs(x[0]) >= kGuard && std::abs(x[2]) >= kGuard &&
           std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
  };
  auto jets = [&sys](const std::array<double, 3>& x) {
    auto xp = sys.rhs(x);
    auto xpp = sys.second(x, xp);
    return std::vector<Jet2>{Jet2(x[0], xp[0], xpp[0]), Jet2(x[1], xp[1], xpp[1]),
                             Jet2(x[2], xp[2], xpp[2])};
  };
  auto rhs = [&sys](const std::array<double, 3>& x, std::array<double, 3>& dxdt, double) {
    dxdt = sys.rhs(x);
  };
  return run_integration<3>(rhs, sys.initial, t_end, tol, mandatory_times, healthy, jets,
                            {"f", "h", "k"});
}

std::vector<Jet2> state_at(const ScalarODE& ode, const Trajectory& tr, double t0) {
  Bracket b = locate(tr, t0);
  if (b.exact) return tr.states[b.lo];
  double f = interp_unknown(tr, b, 0);
  double fp = ode.first_order_rhs(f);
  double fpp = ode.fpp_of(f, fp);
  double fppp = ode.fppp_of(f, fp, fpp);
  return {Jet2(f, fp, fpp), Jet2(fp, fpp, fppp)};
}

std::vector<Jet2> state_at(const HitchinSystem& sys, const Trajectory& tr, double t0) {
  Bracket b = locate(tr, t0);
  if (b.exact) return tr.states[b.lo];
  std::array<double, 3> x{interp_unknown(tr, b, 0), interp_unknown(tr, b, 1),
                          interp_unknown(tr, b, 2)};
  auto xp = sys.rhs(x);
  auto xpp = sys.second(x, xp);
  return {Jet2(x[0], xp[0], xpp[0]), Jet2(x[1], xp[1], xpp[1]), Jet2(x[2], xp[2], xpp[2])};
}

double first_integral_drift(const ScalarODE& ode, const Trajectory& tr) {
  if (!ode.first_integral) throw std::invalid_argument("ScalarODE lacks a first integral");
  double drift = 0;
  for (const auto& st : tr.states) {
    double q = ode.first_integral(st[0].v, st[0].d1);
    drift = std::max(drift, std::abs(q - ode.first_integral_value));
  }
  return drift;
}

double max_equation_residual(const ScalarODE& ode, const Trajectory& tr) {
  if (!ode.second_order_residual) throw std::invalid_argument("ScalarODE lacks a residual");
  double worst = 0;
  for (const auto& st : tr.states)
    worst = std::max(worst, std::abs(ode.second_order_residual(st[0].v, st[0].d1, st[0].d2)));
  return worst;
}

std::string trajectory_table(const Trajectory& tr) {
  std::ostringstream os;
  os << "# t";
  for (const auto& u : tr.unknowns) os << ' ' << u << ' ' << u << "'" << ' ' << u << "''";
  os << '\n' << std::setprecision(17);
  for (size_t i = 0; i < tr.times.size(); ++i) {
    os << tr.times[i];
    for (const Jet2& j : tr.states[i]) os << ' ' << j.v << ' ' << j.d1 << ' ' << j.d2;
    os << '\n';
  }
  return os.str();
}

} // namespace hlab
