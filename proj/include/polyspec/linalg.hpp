#ifndef POLYSPEC_LINALG_HPP
#define POLYSPEC_LINALG_HPP

// Exact rational linear algebra at desk scale: Gaussian elimination for rank,
// determinant, solving, inversion and nullspaces, plus affine-hull charts used
// by the recursive hull/triangulation code.  All operations are exact.

#include <optional>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec {

using QMat = std::vector<QVec>;

inline QMat qmat_from_columns(const std::vector<QVec>& cols) {
  if (cols.empty()) return {};
  QMat m(cols[0].size(), QVec(cols.size(), Rat(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
  return m;
}

inline QVec qvec_from_ivec(const IVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

// Row-reduce a copy of `a` in place; returns the pivot column of each pivot
// row (echelon form with unit pivots, eliminated above and below).
inline std::vector<int> rref(QMat& a) {
  std::vector<int> pivot_cols;
  if (a.empty()) return pivot_cols;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  return pivot_cols;
}

inline int rank(QMat a) { return static_cast<int>(rref(a).size()); }

inline Rat det(QMat a) {
  const std::size_t n = a.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const Rat inv = Rat(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

inline Int int_det(const std::vector<IVec>& columns) {
  QMat m = qmat_from_columns([&] {
    std::vector<QVec> cols;
    cols.reserve(columns.size());
    for (const IVec& c : columns) cols.push_back(qvec_from_ivec(c));
    return cols;
  }());
  const Rat d = det(std::move(m));
  if (!is_integer(d)) throw InternalError("integer matrix with non-integer determinant");
  return numerator(d);
}

// Unique solution of the square system a x = b, or nullopt if singular.
inline std::optional<QVec> solve(QMat a, QVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const std::vector<int> pivots = rref(a);
  if (pivots.size() != n) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

inline QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat aug(n, QVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const std::vector<int> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != static_cast<int>(n) - 1)
    throw InternalError("inverse of singular matrix requested");
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Basis of the right nullspace of `a` (one vector per free column).
inline std::vector<QVec> nullspace(QMat a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const std::vector<int> pivot_cols = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v(cols, Rat(0));
    v[free_c] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v[pivot_cols[r]] = -a[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact coordinates in the affine hull of a point set: a base point and an
// independent set of direction vectors, with a precomputed solve matrix so
// that membership coordinates come from a single matrix-vector product.
struct AffineChart {
  QVec base;                    // base point, ambient coordinates
  std::vector<QVec> basis;      // d independent directions, ambient coordinates
  std::vector<int> pivot_rows;  // ambient rows giving an invertible d x d block
  QMat solve_mat;               // inverse of that block
  int dim = 0;                  // d = affine dimension of the point set

  // Chart coordinates of p (p must lie in the affine hull; verified exactly).
  QVec to_chart(const QVec& p) const {
    QVec rhs(dim);
    for (int i = 0; i < dim; ++i) rhs[i] = p[pivot_rows[i]] - base[pivot_rows[i]];
    QVec lambda = mat_vec(solve_mat, rhs);
    // Verify the full ambient equation, not just the pivot rows.
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rat acc = base[i];
      for (int j = 0; j < dim; ++j) acc += lambda[j] * basis[j][i];
      if (acc != p[i]) throw InternalError("point outside affine hull in chart");
    }
    return lambda;
  }
};

inline AffineChart make_affine_chart(const std::vector<QVec>& pts) {
  if (pts.empty()) throw InternalError("affine chart of empty point set");
  AffineChart chart;
  chart.base = pts[0];
  const std::size_t ambient = pts[0].size();
  QMat accepted;  // rows = accepted direction vectors
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(ambient);
    for (std::size_t j = 0; j < ambient; ++j) d[j] = pts[i][j] - chart.base[j];
    QMat trial = accepted;
    trial.push_back(d);
    if (rank(trial) == static_cast<int>(trial.size())) {
      accepted = std::move(trial);
      chart.basis.push_back(std::move(d));
    }
  }
  chart.dim = static_cast<int>(chart.basis.size());
  // Pivot rows: columns of the transposed basis matrix with full rank.
  QMat by_rows(ambient, QVec(chart.dim, Rat(0)));
  for (int j = 0; j < chart.dim; ++j)
    for (std::size_t i = 0; i < ambient; ++i) by_rows[i][j] = chart.basis[j][i];
  // Greedily pick rows that grow the rank.
  QMat picked;
  for (std::size_t i = 0; i < ambient && static_cast<int>(picked.size()) < chart.dim; ++i) {
    QMat trial = picked;
    trial.push_back(by_rows[i]);
    if (rank(trial) == static_cast<int>(trial.size())) {
      picked = std::move(trial);
      chart.pivot_rows.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(chart.pivot_rows.size()) != chart.dim)
    throw InternalError("affine chart pivot selection failed");
  chart.solve_mat = chart.dim == 0 ? QMat{} : inverse(picked);
  return chart;
}

}  // namespace polyspec

#endif  // POLYSPEC_LINALG_HPP
