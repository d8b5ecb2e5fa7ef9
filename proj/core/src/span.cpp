#include "hlab/span.hpp"

#include <algorithm>
#include <cmath>

namespace hlab {

int rank_exact(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[r][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

RankResult rank_float(std::vector<std::vector<double>> a, double rel_tol) {
  RankResult res;
  res.exact = false;
  if (a.empty() || a[0].empty()) return res;
  size_t nr = a.size(), nc = a[0].size();
  size_t steps = std::min(nr, nc);
  std::vector<double> pivots;

  size_t r = 0;
  // complete pivoting: the first pivot is the global max, so ratios are
  // monotone and the threshold is relative to it
  for (; r < steps; ++r) {
    size_t pi = r, pj = r;
    double best = 0.0;
    for (size_t i = r; i < nr; ++i)
      for (size_t j = r; j < nc; ++j)
        if (std::abs(a[i][j]) > best) { best = std::abs(a[i][j]); pi = i; pj = j; }
    if (best == 0.0) break;
    if (!pivots.empty() && best < rel_tol * pivots.front()) break;
    std::swap(a[r], a[pi]);
    for (size_t i = 0; i < nr; ++i) std::swap(a[i][r], a[i][pj]);
    pivots.push_back(best);
    for (size_t i = r + 1; i < nr; ++i) {
      double factor = a[i][r] / a[r][r];
      if (factor == 0.0) continue;
      for (size_t j = r; j < nc; ++j) a[i][j] -= factor * a[r][j];
    }
  }

  // residual magnitude after the last accepted pivot
  double rejected = 0.0;
  for (size_t i = r; i < nr; ++i)
    for (size_t j = r; j < nc; ++j) rejected = std::max(rejected, std::abs(a[i][j]));

  res.rank = static_cast<int>(pivots.size());
  if (!pivots.empty()) {
    res.pivots.largest_pivot = pivots.front();
    res.pivots.smallest_accepted_ratio = pivots.back() / pivots.front();
    res.pivots.largest_rejected_ratio = rejected / pivots.front();
  }
  return res;
}

namespace {
template <class K>
std::vector<uint16_t> coefficient_grid(const std::vector<FormT<K>>& forms) {
  std::vector<uint16_t> masks;
  for (auto& f : forms)
    for (auto& [m, c] : f.terms()) masks.push_back(m);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}
} // namespace

int span_rank(const std::vector<QForm>& forms) {
  if (forms.empty()) return 0;
  auto masks = coefficient_grid(forms);
  if (masks.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (auto& f : forms) {
    std::vector<Rational> row;
    row.reserve(masks.size());
    for (auto m : masks) row.push_back(f.coeff(m));
    rows.push_back(std::move(row));
  }
  return rank_exact(std::move(rows));
}

int span_rank(const std::vector<Form>& forms) {
  std::vector<QForm> qs;
  qs.reserve(forms.size());
  for (auto& f : forms) {
    QForm q(f.dim());
    for (auto& [m, c] : f.terms()) {
      if (!c.is_constant())
        throw std::domain_error("span_rank: non-constant coefficient; evaluate parameters first");
      q.add(m, c.constant_value());
    }
    qs.push_back(std::move(q));
  }
  return span_rank(qs);
}

RankResult span_rank_float(const std::vector<DForm>& forms, double rel_tol) {
  RankResult res;
  res.exact = false;
  if (forms.empty()) return res;
  auto masks = coefficient_grid(forms);
  if (masks.empty()) return res;
  std::vector<std::vector<double>> rows;
  for (auto& f : forms) {
    std::vector<double> row;
    row.reserve(masks.size());
    for (auto m : masks) row.push_back(f.coeff(m));
    rows.push_back(std::move(row));
  }
  return rank_float(std::move(rows), rel_tol);
}

} // namespace hlab
