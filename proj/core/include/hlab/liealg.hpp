#pragma once

#include "hlab/form.hpp"
#include "hlab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace hlab {

// A Lie algebra given through its Chevalley-Eilenberg differentials
// de^1..de^n, each a 2-form with Poly coefficients. The convention is
// d alpha(X, Y) = -alpha([X, Y]), so de^k(E_i, E_j) = -<[E_i, E_j], e^k>.
struct LieAlgebra {
  int dim = 0;
  std::vector<Form> d; // d[i] = de^{i+1}

  const Form& diff(int i) const { return d.at(i - 1); } // 1-based
};

// rows are the new coframe written in the old one: f^i = sum_j B[i][j] e^j
using BasisChange = Mat<Poly>;

LieAlgebra abelian(int dim);

// extend d to arbitrary degree by the Leibniz rule
Form d_form(const LieAlgebra& g, const Form& f);

// same Leibniz expansion over any coefficient ring, given the coframe
// differentials directly; coefficients are treated as constants
template <class K>
FormT<K> d_form_basis(const std::vector<FormT<K>>& diffs, const FormT<K>& f) {
  int n = static_cast<int>(diffs.size());
  FormT<K> out(n);
  for (const auto& [mask, c] : f.terms()) {
    if (mask == 0) continue;
    for (int j = 1; j <= n; ++j) {
      auto bj = static_cast<typename FormT<K>::mask_t>(1u << (j - 1));
      if (!(mask & bj)) continue;
      int pos = std::popcount(static_cast<unsigned>(mask & (bj - 1u)));
      FormT<K> rest(n);
      rest.set(static_cast<typename FormT<K>::mask_t>(mask ^ bj), ring::from_long<K>(1));
      FormT<K> piece = wedge(diffs[static_cast<size_t>(j - 1)], rest);
      K sc = (pos % 2 == 0) ? c : -c;
      out += sc * piece;
    }
  }
  return out;
}

// coframe differentials with parameters bound, coefficients lifted to jets
std::vector<JetForm> jet_differentials(const LieAlgebra& g, const std::map<std::string, double>& params);
std::vector<QJetForm> exact_jet_differentials(const LieAlgebra& g, const std::map<std::string, Rational>& params);

struct JacobiReport {
  bool pass = true;
  std::vector<std::pair<int, Form>> failures; // coframe index, d(d e^i)
};
JacobiReport jacobi_check(const LieAlgebra& g);

// brackets [E_i, E_j] = sum_k c[{i,j}][k] E_k, i < j
struct Brackets {
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<Poly>> c;
};
Brackets brackets_of(const LieAlgebra& g);
LieAlgebra from_brackets(const Brackets& b);

// independent Jacobi test straight from the brackets, no differentials
bool bracket_jacobi_holds(const Brackets& b);

// substitute parameter values into every differential
LieAlgebra evaluate_algebra(const LieAlgebra& g, const std::map<std::string, Poly>& bindings);

std::vector<std::string> algebra_parameters(const LieAlgebra& g);

struct SeriesAtPoint {
  std::map<std::string, Rational> point;
  std::vector<int> derived_dims;       // dims of g ⊇ [g,g] ⊇ ...
  std::vector<int> lower_central_dims; // dims of g ⊇ [g,g] ⊇ [g,[g,g]] ...
  bool solvable = false;
  bool nilpotent = false;
};
struct SolvabilityReport {
  std::vector<SeriesAtPoint> points;
  bool solvable = false;  // verdict agreed at every sampled point
  bool nilpotent = false;
  bool consistent = true; // false if sampled points disagree
};
// symbolic algebras are sampled at `npoints` random rational parameter
// values (nonzero, seeded); numeric algebras use the single obvious point
SolvabilityReport solvability_class(const LieAlgebra& g, int npoints = 3, uint64_t seed = 2024);

// dimension of the center; requires rational structure constants
int center(const LieAlgebra& g);

// exact change of coframe; B entries must be constants of the coefficient
// ring (rationals, possibly involving the q2/q3 generators)
LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& B);

// one-dimensional central-direction extension: adds e^{n+1} with the given
// differential (a 2-form on the larger space or on the base)
LieAlgebra extend(const LieAlgebra& g, const Form& de_new);

// reinterpret a form on a larger coframe (masks unchanged)
Form lift_form(const Form& f, int new_dim);

} // namespace hlab
