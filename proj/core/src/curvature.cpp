#include "hlab/curvature.hpp"

#include <stdexcept>

namespace hlab {

namespace {

// b[k][i][j] = <[E_i, E_j], E_k> = -de^k(E_i, E_j)
std::vector<std::vector<std::vector<Poly>>> structure_constants(const LieAlgebra& g) {
  int n = g.dim;
  std::vector<std::vector<std::vector<Poly>>> b(
      static_cast<size_t>(n),
      std::vector<std::vector<Poly>>(static_cast<size_t>(n),
                                     std::vector<Poly>(static_cast<size_t>(n), Poly())));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Poly v = -g.diff(k).coeff(Form::mask_of({i, j}));
        if (v.is_zero()) continue;
        b[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
        b[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = -v;
      }
  return b;
}

} // namespace

ConnectionCoeffs levi_civita(const LieAlgebra& g) {
  int n = g.dim;
  auto b = structure_constants(g);
  ConnectionCoeffs cc;
  cc.dim = n;
  cc.gamma.assign(static_cast<size_t>(n),
                  std::vector<std::vector<Poly>>(static_cast<size_t>(n),
                                                 std::vector<Poly>(static_cast<size_t>(n), Poly())));
  Rational half(1, 2);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // 2 <nabla_i E_j, E_k> = b[k][i][j] - b[i][j][k] + b[j][k][i]
        Poly v = b[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] -
                 b[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] +
                 b[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(i)];
        cc.gamma[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] = half * v;
      }
  return cc;
}

RiemannTensor riemann(const LieAlgebra& g, const ConnectionCoeffs& cc) {
  int n = g.dim;
  auto b = structure_constants(g);
  RiemannTensor R;
  R.dim = n;
  R.comp.assign(static_cast<size_t>(n * n * n * n), Poly());
  auto G = [&](int k, int i, int j) -> const Poly& {
    return cc.gamma[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)];
  };
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Poly v;
          for (int m = 0; m < n; ++m) {
            v += G(m, j, l) * G(k, i, m) - G(m, i, l) * G(k, j, m) -
                 b[static_cast<size_t>(m)][static_cast<size_t>(i)][static_cast<size_t>(j)] * G(k, m, l);
          }
          if (v.is_zero()) continue;
          R.comp[static_cast<size_t>(((k * n + l) * n + i) * n + j)] = v;
          R.comp[static_cast<size_t>(((k * n + l) * n + j) * n + i)] = -v;
        }
  return R;
}

Mat<Form> connection_forms(const ConnectionCoeffs& cc) {
  int n = cc.dim;
  Mat<Form> om(static_cast<size_t>(n), std::vector<Form>(static_cast<size_t>(n), Form(n)));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      Form f(n);
      for (int i = 1; i <= n; ++i) {
        const Poly& v = cc.coeff(k, i, l);
        if (!v.is_zero()) f += v * Form::basis(n, {i});
      }
      om[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)] = f;
    }
  return om;
}

Mat<Form> curvature_forms(const LieAlgebra& g, const ConnectionCoeffs& cc) {
  int n = g.dim;
  Mat<Form> om = connection_forms(cc);
  Mat<Form> Om(static_cast<size_t>(n), std::vector<Form>(static_cast<size_t>(n), Form(n)));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Form f = d_form(g, om[static_cast<size_t>(k)][static_cast<size_t>(l)]);
      for (int m = 0; m < n; ++m)
        f += wedge(om[static_cast<size_t>(k)][static_cast<size_t>(m)],
                   om[static_cast<size_t>(m)][static_cast<size_t>(l)]);
      Om[static_cast<size_t>(k)][static_cast<size_t>(l)] = f;
    }
  return Om;
}

bool riemann_matches_curvature_forms(const LieAlgebra& g) {
  ConnectionCoeffs cc = levi_civita(g);
  RiemannTensor R = riemann(g, cc);
  Mat<Form> Om = curvature_forms(g, cc);
  int n = g.dim;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Poly lhs = Om[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)].coeff(
              Form::mask_of({i, j}));
          if (!(lhs == R.at(k, l, i, j))) return false;
        }
  return true;
}

RicciReport ricci(const LieAlgebra& g) {
  int n = g.dim;
  ConnectionCoeffs cc = levi_civita(g);
  RiemannTensor R = riemann(g, cc);
  RicciReport rep;
  rep.ricci.assign(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n), Poly()));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      Poly v;
      for (int i = 1; i <= n; ++i) v += R.at(i, k, i, j);
      rep.ricci[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] = v;
    }
  for (int j = 0; j < n; ++j) rep.scalar += rep.ricci[static_cast<size_t>(j)][static_cast<size_t>(j)];
  if (n == 5) rep.fit = eta_einstein_fit(rep.ricci);
  return rep;
}

std::optional<std::pair<Poly, Poly>> eta_einstein_fit(const Mat<Poly>& ric) {
  if (ric.size() != 5) throw std::invalid_argument("eta-Einstein fit expects a 5x5 Ricci tensor");
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      if (i != j && !ric[i][j].is_zero()) return std::nullopt;
  const Poly& tau = ric[0][0];
  for (size_t i = 1; i < 4; ++i)
    if (!(ric[i][i] == tau)) return std::nullopt;
  return std::make_pair(tau, ric[4][4] - tau);
}

KContactReport k_contact(const LieAlgebra& g) {
  if (g.dim != 5) throw std::invalid_argument("the Reeb Killing test expects dimension 5");
  KContactReport rep;
  auto de_at = [&](int j, int i) -> Poly {
    // de^j(E_i, E_5)
    if (i == 5) return Poly();
    return g.diff(j).coeff(Form::mask_of({i, 5}));
  };
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) {
      Poly v = de_at(j, i) + de_at(i, j);
      if (!v.is_zero()) rep.violations.emplace_back(i, j, v);
    }
  rep.pass = rep.violations.empty();
  return rep;
}

} // namespace hlab
