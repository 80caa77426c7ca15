#pragma once

#include <vector>

#include "compeig/complex_matrix.hpp"

namespace compeig {

/// Column-pivoted modified Gram-Schmidt with one reorthogonalization pass.
/// Picks the remaining column of largest norm each step; stops when the best
/// remaining norm falls below `threshold`.  Returns an orthonormal basis of
/// the numerically significant column span (the size is the numerical rank).
inline std::vector<Vector> pivoted_orthonormalize(std::vector<Vector> cols,
                                                  double threshold) {
  std::vector<Vector> basis;
  std::vector<bool> used(cols.size(), false);
  for (size_t step = 0; step < cols.size(); ++step) {
    int best = -1;
    double best_norm = threshold;
    for (size_t k = 0; k < cols.size(); ++k) {
      if (used[k]) continue;
      const double nk = vec_norm(cols[k]);
      if (nk > best_norm) {
        best_norm = nk;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) break;
    used[best] = true;
    Vector v = cols[best];
    for (const Vector& b : basis) axpy(-dot(b, v), b, v);  // reorthogonalize
    const double nv = vec_norm(v);
    if (nv <= threshold) continue;
    v = scale(v, 1.0 / nv);
    basis.push_back(v);
    for (size_t k = 0; k < cols.size(); ++k) {
      if (used[k]) continue;
      axpy(-dot(v, cols[k]), v, cols[k]);
    }
  }
  return basis;
}

/// Plain MGS on the columns of a square matrix; input must have full rank.
inline ComplexMatrix orthonormalize_columns(const ComplexMatrix& a) {
  const int n = a.n();
  std::vector<Vector> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = a.column(j);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) axpy(-dot(cols[k], cols[j]), cols[k], cols[j]);
    for (int k = 0; k < j; ++k) axpy(-dot(cols[k], cols[j]), cols[k], cols[j]);
    const double nv = vec_norm(cols[j]);
    if (nv == 0.0) throw RankMismatchError("rank-deficient input");
    cols[j] = scale(cols[j], 1.0 / nv);
  }
  ComplexMatrix q(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) q.at(i, j) = cols[j][i];
  return q;
}

}  // namespace compeig
