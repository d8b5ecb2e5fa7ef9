#include "hlab/liealg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hlab {

LieAlgebra abelian(int dim) {
  LieAlgebra g;
  g.dim = dim;
  g.d.assign(static_cast<size_t>(dim), Form::zero(dim));
  return g;
}

Form d_form(const LieAlgebra& g, const Form& f) {
  Form out(g.dim);
  for (const auto& [mask, c] : f.terms()) {
    if (mask == 0) continue; // constants are closed here
    for (int j = 1; j <= g.dim; ++j) {
      Form::mask_t bj = Form::mask_t(1) << (j - 1);
      if (!(mask & bj)) continue;
      int pos = std::popcount(static_cast<unsigned>(mask & (bj - 1)));
      Form rest(g.dim);
      rest.set(static_cast<Form::mask_t>(mask ^ bj), Poly(1L));
      Form piece = wedge(g.diff(j), rest);
      Poly sign = (pos % 2 == 0) ? c : -c;
      out += sign * piece;
    }
  }
  return out;
}

std::vector<JetForm> jet_differentials(const LieAlgebra& g, const std::map<std::string, double>& params) {
  std::vector<JetForm> out;
  out.reserve(static_cast<size_t>(g.dim));
  for (const auto& de : g.d) out.push_back(constant_jet_form(eval_form(de, params)));
  return out;
}

std::vector<QJetForm> exact_jet_differentials(const LieAlgebra& g, const std::map<std::string, Rational>& params) {
  std::vector<QJetForm> out;
  out.reserve(static_cast<size_t>(g.dim));
  for (const auto& de : g.d) out.push_back(constant_jet_form(eval_form_rational(de, params)));
  return out;
}

JacobiReport jacobi_check(const LieAlgebra& g) {
  JacobiReport rep;
  for (int i = 1; i <= g.dim; ++i) {
    Form r = d_form(g, g.diff(i));
    if (!r.is_zero()) {
      rep.pass = false;
      rep.failures.emplace_back(i, r);
    }
  }
  return rep;
}

Brackets brackets_of(const LieAlgebra& g) {
  Brackets b;
  b.dim = g.dim;
  for (int i = 1; i <= g.dim; ++i)
    for (int j = i + 1; j <= g.dim; ++j) {
      Form::mask_t m = Form::mask_of({i, j});
      std::vector<Poly> row(static_cast<size_t>(g.dim), Poly());
      bool nonzero = false;
      for (int k = 1; k <= g.dim; ++k) {
        Poly c = -g.diff(k).coeff(m);
        if (!c.is_zero()) nonzero = true;
        row[static_cast<size_t>(k - 1)] = c;
      }
      if (nonzero) b.c[{i, j}] = row;
    }
  return b;
}

LieAlgebra from_brackets(const Brackets& b) {
  LieAlgebra g;
  g.dim = b.dim;
  g.d.assign(static_cast<size_t>(b.dim), Form::zero(b.dim));
  for (const auto& [ij, row] : b.c) {
    Form::mask_t m = Form::mask_of({ij.first, ij.second});
    for (int k = 1; k <= b.dim; ++k) {
      const Poly& c = row[static_cast<size_t>(k - 1)];
      if (!c.is_zero()) g.d[static_cast<size_t>(k - 1)].add(m, -c);
    }
  }
  return g;
}

namespace {

std::vector<Poly> bracket_vec(const Brackets& b, int i, int j) {
  std::vector<Poly> out(static_cast<size_t>(b.dim), Poly());
  if (i == j) return out;
  int s = 1;
  if (i > j) { std::swap(i, j); s = -1; }
  auto it = b.c.find({i, j});
  if (it == b.c.end()) return out;
  for (int k = 0; k < b.dim; ++k)
    out[static_cast<size_t>(k)] = (s > 0) ? it->second[static_cast<size_t>(k)]
                                          : -it->second[static_cast<size_t>(k)];
  return out;
}

} // namespace

bool bracket_jacobi_holds(const Brackets& b) {
  int n = b.dim;
  auto brk = [&](const std::vector<Poly>& u, int k) {
    // [u, E_k]
    std::vector<Poly> out(static_cast<size_t>(n), Poly());
    for (int m = 1; m <= n; ++m) {
      const Poly& um = u[static_cast<size_t>(m - 1)];
      if (um.is_zero()) continue;
      auto v = bracket_vec(b, m, k);
      for (int l = 0; l < n; ++l) out[static_cast<size_t>(l)] += um * v[static_cast<size_t>(l)];
    }
    return out;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto t1 = brk(bracket_vec(b, i, j), k);
        auto t2 = brk(bracket_vec(b, j, k), i);
        auto t3 = brk(bracket_vec(b, k, i), j);
        for (int l = 0; l < n; ++l) {
          Poly s = t1[static_cast<size_t>(l)] + t2[static_cast<size_t>(l)] + t3[static_cast<size_t>(l)];
          if (!s.is_zero()) return false;
        }
      }
  return true;
}

LieAlgebra evaluate_algebra(const LieAlgebra& g, const std::map<std::string, Poly>& bindings) {
  LieAlgebra out;
  out.dim = g.dim;
  out.d.reserve(g.d.size());
  for (const auto& f : g.d) {
    Form nf(g.dim);
    for (const auto& [mask, c] : f.terms()) {
      Poly e = c.subst(bindings);
      if (!e.is_zero()) nf.add(mask, e);
    }
    out.d.push_back(std::move(nf));
  }
  return out;
}

std::vector<std::string> algebra_parameters(const LieAlgebra& g) {
  std::set<std::string> names;
  for (const auto& f : g.d)
    for (const auto& [mask, c] : f.terms())
      for (const auto& v : c.variables())
        if (!Poly::is_sqrt_var(v)) names.insert(v);
  return {names.begin(), names.end()};
}

namespace {

// reduced row basis of a rational subspace, echelon by leftmost pivot
std::vector<std::vector<Rational>> reduce_rows(std::vector<std::vector<Rational>> rows) {
  std::vector<std::vector<Rational>> basis;
  for (auto& r : rows) {
    for (const auto& b : basis) {
      size_t p = 0;
      while (p < b.size() && b[p] == 0) ++p;
      if (p < b.size() && r[p] != 0) {
        Rational f = r[p] / b[p];
        for (size_t q = 0; q < r.size(); ++q) r[q] -= f * b[q];
      }
    }
    bool nz = false;
    for (const auto& x : r)
      if (x != 0) { nz = true; break; }
    if (nz) basis.push_back(std::move(r));
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& c) {
      size_t pa = 0, pc = 0;
      while (pa < a.size() && a[pa] == 0) ++pa;
      while (pc < c.size() && c[pc] == 0) ++pc;
      return pa < pc;
    });
  }
  return basis;
}

struct RationalBrackets {
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<Rational>> c;

  std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    std::vector<Rational> out(static_cast<size_t>(dim), Rational(0));
    for (const auto& [ij, row] : c) {
      auto [i, j] = ij;
      Rational w = u[static_cast<size_t>(i - 1)] * v[static_cast<size_t>(j - 1)] -
                   u[static_cast<size_t>(j - 1)] * v[static_cast<size_t>(i - 1)];
      if (w == 0) continue;
      for (int k = 0; k < dim; ++k) out[static_cast<size_t>(k)] += w * row[static_cast<size_t>(k)];
    }
    return out;
  }
};

RationalBrackets rational_brackets(const LieAlgebra& g) {
  RationalBrackets rb;
  rb.dim = g.dim;
  Brackets b = brackets_of(g);
  for (const auto& [ij, row] : b.c) {
    std::vector<Rational> qrow(row.size());
    for (size_t k = 0; k < row.size(); ++k) qrow[k] = row[k].constant_value();
    rb.c[ij] = std::move(qrow);
  }
  return rb;
}

using Subspace = std::vector<std::vector<Rational>>;

Subspace full_space(int n) {
  Subspace s;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> r(static_cast<size_t>(n), Rational(0));
    r[static_cast<size_t>(i)] = 1;
    s.push_back(std::move(r));
  }
  return s;
}

Subspace bracket_span(const RationalBrackets& rb, const Subspace& a, const Subspace& b) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& u : a)
    for (const auto& v : b) rows.push_back(rb.bracket(u, v));
  return reduce_rows(std::move(rows));
}

void series_dims(const RationalBrackets& rb, SeriesAtPoint& pt) {
  int n = rb.dim;
  Subspace g0 = full_space(n);

  Subspace cur = g0;
  pt.derived_dims = {n};
  while (true) {
    Subspace next = bracket_span(rb, cur, cur);
    int dn = static_cast<int>(next.size());
    pt.derived_dims.push_back(dn);
    if (dn == 0 || dn == static_cast<int>(cur.size())) break;
    cur = std::move(next);
  }
  pt.solvable = pt.derived_dims.back() == 0;

  cur = g0;
  pt.lower_central_dims = {n};
  while (true) {
    Subspace next = bracket_span(rb, g0, cur);
    int dn = static_cast<int>(next.size());
    pt.lower_central_dims.push_back(dn);
    if (dn == 0 || dn == static_cast<int>(cur.size())) break;
    cur = std::move(next);
  }
  pt.nilpotent = pt.lower_central_dims.back() == 0;
}

} // namespace

SolvabilityReport solvability_class(const LieAlgebra& g, int npoints, uint64_t seed) {
  SolvabilityReport rep;
  auto params = algebra_parameters(g);

  std::vector<std::map<std::string, Rational>> points;
  if (params.empty()) {
    points.push_back({});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 6), den(1, 3), flip(0, 1);
    for (int p = 0; p < npoints; ++p) {
      std::map<std::string, Rational> pt;
      for (const auto& name : params) {
        Rational v(num(rng), den(rng));
        if (flip(rng)) v = -v;
        pt[name] = v;
      }
      points.push_back(std::move(pt));
    }
  }

  for (const auto& point : points) {
    std::map<std::string, Poly> bindings;
    for (const auto& [k, v] : point) bindings[k] = Poly(v);
    LieAlgebra ge = evaluate_algebra(g, bindings);
    SeriesAtPoint pt;
    pt.point = point;
    series_dims(rational_brackets(ge), pt);
    rep.points.push_back(std::move(pt));
  }

  rep.solvable = rep.points.front().solvable;
  rep.nilpotent = rep.points.front().nilpotent;
  for (const auto& pt : rep.points) {
    if (pt.solvable != rep.solvable || pt.nilpotent != rep.nilpotent) rep.consistent = false;
  }
  return rep;
}

int center(const LieAlgebra& g) {
  RationalBrackets rb = rational_brackets(g);
  int n = g.dim;
  // x central iff for every j,k: sum_i x_i c_{ij}^k = 0
  std::vector<std::vector<Rational>> rows;
  for (int j = 1; j <= n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> row(static_cast<size_t>(n), Rational(0));
      bool nz = false;
      for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        int a = std::min(i, j), b = std::max(i, j);
        auto it = rb.c.find({a, b});
        if (it == rb.c.end()) continue;
        Rational c = it->second[static_cast<size_t>(k)];
        if (i > j) c = -c;
        if (c != 0) nz = true;
        row[static_cast<size_t>(i - 1)] = c;
      }
      if (nz) rows.push_back(std::move(row));
    }
  auto basis = reduce_rows(std::move(rows));
  return n - static_cast<int>(basis.size());
}

LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& B) {
  int n = g.dim;
  if (static_cast<int>(B.size()) != n)
    throw std::invalid_argument("basis change has wrong dimension");
  BasisChange Binv = mat_inverse(B);
  LieAlgebra out;
  out.dim = n;
  out.d.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Form df(n);
    for (int j = 0; j < n; ++j) {
      const Poly& bij = B[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (bij.is_zero()) continue;
      df += bij * g.d[static_cast<size_t>(j)];
    }
    out.d.push_back(substitute_coframe(df, Binv, n));
  }
  return out;
}

Form lift_form(const Form& f, int new_dim) {
  if (new_dim < f.dim()) throw std::invalid_argument("cannot lift a form to a smaller coframe");
  Form out(new_dim);
  for (const auto& [mask, c] : f.terms()) out.add(mask, c);
  return out;
}

LieAlgebra extend(const LieAlgebra& g, const Form& de_new) {
  int n = g.dim + 1;
  if (de_new.dim() > n) throw std::invalid_argument("extension differential lives on too large a coframe");
  LieAlgebra out;
  out.dim = n;
  out.d.reserve(static_cast<size_t>(n));
  for (const auto& f : g.d) out.d.push_back(lift_form(f, n));
  out.d.push_back(lift_form(de_new, n));
  return out;
}

} // namespace hlab
