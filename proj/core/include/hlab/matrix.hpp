#pragma once

#include "hlab/poly.hpp"

#include <vector>

namespace hlab {

inline Rational inverse(const Rational& r) {
  if (r == 0) throw std::domain_error("inverse: division by zero");
  return Rational(1) / r;
}
inline double inverse(double x) {
  if (x == 0.0) throw std::domain_error("inverse: division by zero");
  return 1.0 / x;
}

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> mat_identity(int n) {
  Mat<K> m(n, std::vector<K>(n, K(0)));
  for (int i = 0; i < n; ++i) m[i][i] = K(1);
  return m;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
  size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
  Mat<K> out(n, std::vector<K>(q, K(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != p) throw std::invalid_argument("mat_mul: shape mismatch");
    for (size_t k = 0; k < p; ++k)
      for (size_t j = 0; j < q; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

template <class K>
Mat<K> mat_transpose(const Mat<K>& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  Mat<K> out(m, std::vector<K>(n, K(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

namespace detail {
template <class K>
K det_expand(const Mat<K>& a, std::vector<int>& cols, int row) {
  int n = static_cast<int>(a.size());
  if (row == n) return K(1);
  K out(0);
  for (size_t pos = 0; pos < cols.size(); ++pos) {
    int col = cols[pos];
    if (col < 0) continue;
    cols[pos] = -1;
    // parity from the number of live columns skipped before this one
    int skipped = 0;
    for (size_t q = 0; q < pos; ++q)
      if (cols[q] >= 0) ++skipped;
    K sub = det_expand(a, cols, row + 1);
    K term = a[row][col] * sub;
    if (skipped % 2 == 0) out += term; else out -= term;
    cols[pos] = col;
  }
  return out;
}
} // namespace detail

template <class K>
K mat_det(const Mat<K>& a) {
  int n = static_cast<int>(a.size());
  for (auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("mat_det: not square");
  if (n == 0) return K(1);
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return detail::det_expand(a, cols, 0);
}

// adjugate inverse; requires inverse(det) to exist in the ring
template <class K>
Mat<K> mat_inverse(const Mat<K>& a) {
  int n = static_cast<int>(a.size());
  K det = mat_det(a);
  K det_inv = inverse(det);
  Mat<K> out(n, std::vector<K>(n, K(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<K> minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<K> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      K cof = mat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      out[j][i] = cof * det_inv; // adjugate transposes indices
    }
  return out;
}

} // namespace hlab
