#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "compeig/errors.hpp"

namespace compeig {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

/// Dense complex matrix, row-major.  Entry (i, j) is row i, column j,
/// zero-based.  Most of the library works with square matrices; rectangular
/// shapes appear only in the Cauchy-Binet checks.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  }

  explicit ComplexMatrix(int n) : ComplexMatrix(n, n) {}

  ComplexMatrix(int rows, int cols, std::initializer_list<cplx> entries)
      : ComplexMatrix(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
      throw ShapeError("entry count does not match dimensions");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int n() const {
    if (rows_ != cols_) throw ShapeError("matrix is not square");
    return rows_;
  }

  cplx& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    check_same_shape(o);
    ComplexMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    check_same_shape(o);
    ComplexMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("inner dimensions do not match");
    ComplexMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const cplx aik = at(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  ComplexMatrix operator*(cplx z) const {
    ComplexMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * z;
    return r;
  }

  friend ComplexMatrix operator*(cplx z, const ComplexMatrix& m) {
    return m * z;
  }

  Vector operator*(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw ShapeError("vector length does not match matrix columns");
    Vector r(rows_);
    for (int i = 0; i < rows_; ++i) {
      cplx s{};
      for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
  }

  cplx trace() const {
    cplx t{};
    for (int i = 0; i < n(); ++i) t += at(i, i);
    return t;
  }

  double max_norm() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  double hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < n(); ++i)
      for (int j = i; j < n(); ++j)
        d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
    return d;
  }

  bool is_hermitian(double tol) const {
    return hermiticity_defect() <= tol * (1.0 + max_norm());
  }

  Vector column(int j) const {
    Vector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("matrix shapes do not match");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

inline cplx dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("vector lengths differ");
  cplx s{};
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline double vec_norm(const Vector& x) {
  double s = 0.0;
  for (const cplx& z : x) s += std::norm(z);
  return std::sqrt(s);
}

inline Vector scale(const Vector& x, cplx z) {
  Vector r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * z;
  return r;
}

inline void axpy(cplx a, const Vector& x, Vector& y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

/// Scales so the largest-magnitude component is real positive.  Canonical
/// representative for vectors defined only up to a phase.
inline Vector phase_fixed(Vector v) {
  size_t imax = 0;
  double best = -1.0;
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      imax = i;
    }
  if (best > 0.0) {
    const cplx phase = std::conj(v[imax]) / best;
    for (cplx& z : v) z *= phase;
  }
  return v;
}

}  // namespace compeig
