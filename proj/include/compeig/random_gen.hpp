#pragma once

#include <random>
#include <vector>

#include "compeig/complex_matrix.hpp"
#include "compeig/gram_schmidt.hpp"

namespace compeig {

inline constexpr std::uint64_t kDefaultSeed = 42;

using Rng = std::mt19937_64;

inline cplx random_complex(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

inline ComplexMatrix random_matrix(int rows, int cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_complex(rng);
  return m;
}

inline ComplexMatrix random_matrix(int n, Rng& rng) {
  return random_matrix(n, n, rng);
}

inline ComplexMatrix random_integer_matrix(int rows, int cols, Rng& rng,
                                           int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> u(lo, hi);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<double>(u(rng));
  return m;
}

inline ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix m = random_matrix(n, rng);
  return (m + m.adjoint()) * cplx{0.5, 0.0};
}

inline ComplexMatrix random_unitary(int n, Rng& rng) {
  return orthonormalize_columns(random_matrix(n, rng));
}

/// Ground-truth test matrix H = U diag(eigs) U^dagger with known spectrum
/// and eigenspaces.
struct PlantedHermitian {
  ComplexMatrix h;
  ComplexMatrix u;
  std::vector<double> eigenvalues;
};

inline PlantedHermitian planted_hermitian(const std::vector<double>& eigs,
                                          Rng& rng) {
  const int n = static_cast<int>(eigs.size());
  PlantedHermitian p;
  p.u = random_unitary(n, rng);
  std::vector<cplx> d(eigs.begin(), eigs.end());
  p.h = p.u * ComplexMatrix::diagonal(d) * p.u.adjoint();
  // symmetrize away the last-bit drift from the triple product
  p.h = (p.h + p.h.adjoint()) * cplx{0.5, 0.0};
  p.eigenvalues = eigs;
  return p;
}

}  // namespace compeig
