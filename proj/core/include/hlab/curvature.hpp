#pragma once

#include "hlab/liealg.hpp"

#include <optional>
#include <tuple>

namespace hlab {

// Levi-Civita coefficients of the left-invariant metric that makes the
// coframe orthonormal. gamma[k][i][j] = <nabla_{E_i} E_j, E_k>, Koszul:
//   2 <nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>
struct ConnectionCoeffs {
  int dim = 0;
  std::vector<std::vector<std::vector<Poly>>> gamma;

  const Poly& coeff(int k, int i, int j) const { // 1-based
    return gamma.at(k - 1).at(i - 1).at(j - 1);
  }
};
ConnectionCoeffs levi_civita(const LieAlgebra& g);

// <R(E_i, E_j) E_l, E_k> with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]
struct RiemannTensor {
  int dim = 0;
  std::vector<Poly> comp; // [k][l][i][j] flattened

  const Poly& at(int k, int l, int i, int j) const { // 1-based
    int n = dim;
    return comp.at(static_cast<size_t>((((k - 1) * n + (l - 1)) * n + (i - 1)) * n + (j - 1)));
  }
};
RiemannTensor riemann(const LieAlgebra& g, const ConnectionCoeffs& cc);

// Cartan route to the same data: omega^k_l = sum_i gamma[k][i][l] e^i and
// Omega^k_l = d omega^k_l + omega^k_m ^ omega^m_l
Mat<Form> connection_forms(const ConnectionCoeffs& cc);
Mat<Form> curvature_forms(const LieAlgebra& g, const ConnectionCoeffs& cc);

// Omega^k_l(E_i, E_j) == <R(E_i,E_j) E_l, E_k>, an independent cross-check
bool riemann_matches_curvature_forms(const LieAlgebra& g);

struct RicciReport {
  Mat<Poly> ricci; // Ric(E_j, E_k) = sum_i <R(E_i,E_j) E_k, E_i>
  Poly scalar;
  std::optional<std::pair<Poly, Poly>> fit; // Ric = tau g + nu e5 (x) e5
};
RicciReport ricci(const LieAlgebra& g);

// exact solve of Ric = tau g + nu eta (x) eta with eta = e^5
std::optional<std::pair<Poly, Poly>> eta_einstein_fit(const Mat<Poly>& ric);

// Killing test for the Reeb direction E_5:
//   de^j(E_i, E_5) + de^i(E_j, E_5) = 0 for all i <= j
struct KContactReport {
  bool pass = false;
  std::vector<std::tuple<int, int, Poly>> violations;
};
KContactReport k_contact(const LieAlgebra& g);

} // namespace hlab
