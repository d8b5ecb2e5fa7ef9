#pragma once

#include "hlab/jet.hpp"
#include "hlab/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hlab {

// Second-order profile equation of an evolving structure, carried in the
// first-order form f' = rhs(f) along the branch with f(0) = 1, f'(0) = 2.
// Both forms are stored: integration uses the first-order one, the
// second-order residual serves as an independent check.
struct ScalarODE {
  std::string family;
  std::map<std::string, Rational> params;
  double f0 = 1.0;
  double fp0 = 2.0;
  std::function<double(double, double, double)> second_order_residual; // (f, f', f'')
  std::function<double(double)> first_order_rhs;                       // f -> f'
  std::function<double(double, double)> first_integral;                // (f, f'), conserved
  double first_integral_value = 0.0;
  std::function<double(double)> radicand;                 // of the first-order form
  std::function<double(double, double)> fpp_of;           // (f, f') -> f''
  std::function<double(double, double, double)> fppp_of;  // (f, f', f'') -> f'''
};

// families F1, F2, F4, F5; degenerate parameter values are admitted here,
// so r = 0 gives the nilpotent limit of the F2/F1/F5 equations
ScalarODE build_hypo_ode(const std::string& family_id, const std::map<std::string, Rational>& params);

// exact jets (f, f', f'', f''') at t = 0
std::array<Rational, 4> initial_profile_jets(const std::string& family_id,
                                             const std::map<std::string, Rational>& params);

// Coupled system for the three profiles (f, h, k) of the six-dimensional
// extensions, initial data (1, 1, 1).
struct HitchinSystem {
  std::string kind; // "K" or "Ktilde"
  std::map<std::string, Rational> params;
  std::array<double, 3> initial{1.0, 1.0, 1.0};
  std::function<std::array<double, 3>(const std::array<double, 3>&)> rhs;
  // second derivatives by differentiating the rhs, not by differencing
  std::function<std::array<double, 3>(const std::array<double, 3>&,
                                      const std::array<double, 3>&)> second;
};

HitchinSystem build_hitchin_system(const std::string& kind, const std::map<std::string, Rational>& params);

// exact jets of (f, h, k) at t = 0
std::array<QJet, 3> hitchin_initial_jets(const std::string& kind,
                                         const std::map<std::string, Rational>& params);

// Integrated flow: nodes carrying jets of every unknown. A scalar equation
// is reported through the pair (f, fp) so that the d2 slot of fp holds the
// third derivative of f; derivative slots always come from the equation.
struct Trajectory {
  std::vector<std::string> unknowns;
  std::vector<double> times;
  std::vector<std::vector<Jet2>> states; // states[i][u] at times[i]
  std::string status;                    // "completed" or "stopped-near-singularity"
  double t_reached = 0.0;

  const Jet2& at(size_t i, size_t u) const { return states.at(i).at(u); }
};

// Adaptive dense-output Runge-Kutta (Dormand-Prince 5(4)). Nodes are the
// accepted steps plus the mandatory times, the latter interpolated by the
// stepper itself; mandatory times beyond the reached interval are dropped.
// Stops early when a denominator or the radicand falls under the guard.
Trajectory integrate(const ScalarODE& ode, double t_end, double tol,
                     const std::vector<double>& mandatory_times = {});
Trajectory integrate(const HitchinSystem& sys, double t_end, double tol,
                     const std::vector<double>& mandatory_times = {});

// jets of the unknowns at a time inside the trajectory interval; off-node
// times use quintic Hermite interpolation between the bracketing nodes for
// the values, with derivative slots recomputed from the equation
std::vector<Jet2> state_at(const ScalarODE& ode, const Trajectory& tr, double t0);
std::vector<Jet2> state_at(const HitchinSystem& sys, const Trajectory& tr, double t0);

// max over nodes of |Q(f, f') - Q(f0, fp0)|
double first_integral_drift(const ScalarODE& ode, const Trajectory& tr);

// largest second-order residual over the stored nodes
double max_equation_residual(const ScalarODE& ode, const Trajectory& tr);

// columnar text table: t, then value / first / second derivative per unknown
std::string trajectory_table(const Trajectory& tr);

} // namespace hlab
