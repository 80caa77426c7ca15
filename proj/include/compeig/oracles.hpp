#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"
#include "compeig/kronecker.hpp"
#include "compeig/multi_index.hpp"

// Independent brute-force reference implementations.  Deliberately naive:
// these back the test suite and the CLI verify command, never the main code
// path.

namespace compeig::oracle {

struct OracleConfig {
  int max_n = 8;  // guard for factorial-cost paths
  std::uint64_t rng_seed = 42;
  int trials = 20;
};

/// Leibniz sum over all n! permutations.
inline cplx det_by_permutations(const ComplexMatrix& a, int max_n = 8) {
  const int n = a.n();
  if (n > max_n) throw GuardError("dimension above factorial-path guard");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  cplx sum{};
  do {
    cplx prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a.at(i, perm[i] - 1);
    sum += static_cast<double>(perm_sign(perm)) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

namespace detail {

/// Literal complement of order s at arbitrary index lists of size s:
/// (1/(n-s)!) sum over all independent trailing assignments weighted by the
/// generalized Kronecker symbol.
inline cplx complement_literal(const ComplexMatrix& a,
                               const std::vector<int>& upper,
                               const std::vector<int>& lower) {
  const int n = a.n();
  const int s = static_cast<int>(upper.size());
  const int f = n - s;
  std::vector<int> jp(f, 1), ip(f, 1);
  cplx sum{};
  while (true) {
    std::vector<int> du = upper;
    du.insert(du.end(), jp.begin(), jp.end());
    std::vector<int> dl = lower;
    dl.insert(dl.end(), ip.begin(), ip.end());
    const int w = kronecker(du, dl, n);
    if (w != 0) {
      cplx prod = 1.0;
      for (int k = 0; k < f; ++k) prod *= a.at(ip[k] - 1, jp[k] - 1);
      sum += static_cast<double>(w) * prod;
    }
    int k = 0;
    for (; k < 2 * f; ++k) {
      int& v = (k < f) ? jp[k] : ip[k - f];
      if (v < n) {
        ++v;
        break;
      }
      v = 1;
    }
    if (k == 2 * f) break;
  }
  double fact = 1.0;
  for (int k = 2; k <= f; ++k) fact *= k;
  return sum / fact;
}

}  // namespace detail

/// Reduced complement of order r,s evaluated bit-faithfully from its
/// defining Kronecker sums (plus the literal contraction for r < s).
/// Factorial cost; guarded.
inline cplx complement_by_kronecker_sum(const ComplexMatrix& a, int s,
                                        const MultiIndex& j,
                                        const MultiIndex& i, int max_n = 8) {
  const int n = a.n();
  if (n > max_n) throw GuardError("dimension above factorial-path guard");
  const int r = j.size();
  if (r != i.size()) throw ShapeError("index sets must have equal size");
  if (r > s || s > n) throw OrderError("need r <= s <= n");

  if (r == s) return detail::complement_literal(a, j.indices(), i.indices());

  const int f = s - r;
  std::vector<int> t(f, 1);
  cplx sum{};
  while (true) {
    std::vector<int> upper = j.indices();
    upper.insert(upper.end(), t.begin(), t.end());
    std::vector<int> lower = i.indices();
    lower.insert(lower.end(), t.begin(), t.end());
    sum += detail::complement_literal(a, upper, lower);
    int k = 0;
    for (; k < f; ++k) {
      if (t[k] < n) {
        ++t[k];
        break;
      }
      t[k] = 1;
    }
    if (k == f) break;
  }
  double fact = 1.0;
  for (int k = 2; k <= f; ++k) fact *= k;
  return sum / fact;
}

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // columns, matching order
};

/// Cyclic Jacobi rotations for a complex Hermitian matrix.  Reference
/// spectrum for the acceptance tests; machine-precision at desk scale.
inline EigResult eig_oracle(ComplexMatrix h, int max_n = 12) {
  const int n = h.n();
  if (n > max_n) throw GuardError("dimension above Jacobi guard");
  if (!h.is_hermitian(1e-10)) throw HermiticityError("input is not Hermitian");

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(h.frobenius_norm(), 1.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(h.at(p, q));
    if (std::sqrt(off) < 1e-15 * scale) break;
    if (sweep == 99)
      throw ConvergenceError("Jacobi sweeps exhausted without convergence");

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = h.at(p, q);
        const double rho = std::abs(apq);
        if (rho < 1e-300) continue;
        const double phi = std::arg(apq);
        const double app = h.at(p, p).real();
        const double aqq = h.at(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * rho, app - aqq);
        const double c = std::cos(theta);
        const cplx s = std::sin(theta) * std::exp(cplx{0.0, -phi});
        // J differs from identity on the (p,q) block: [[c, -conj(s)],[s, c]]
        ComplexMatrix j = ComplexMatrix::identity(n);
        j.at(p, p) = c;
        j.at(p, q) = -std::conj(s);
        j.at(q, p) = s;
        j.at(q, q) = c;
        h = j.adjoint() * h * j;
        v = v * j;
      }
  }

  EigResult r;
  r.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) r.eigenvalues[i] = h.at(i, i).real();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return r.eigenvalues[a] < r.eigenvalues[b];
  });
  std::vector<double> sorted(n);
  ComplexMatrix vs(n);
  for (int k = 0; k < n; ++k) {
    sorted[k] = r.eigenvalues[order[k]];
    for (int i = 0; i < n; ++i) vs.at(i, k) = v.at(i, order[k]);
  }
  r.eigenvalues = std::move(sorted);
  r.vectors = std::move(vs);
  return r;
}

/// Principal angles between the spans of two orthonormal vector sets, via
/// the sine route: singular values of U2 - U1 (U1^dagger U2).  Accurate for
/// small angles where the cosine route loses half the digits.
inline std::vector<double> subspace_angles(const std::vector<Vector>& u1,
                                           const std::vector<Vector>& u2) {
  if (u1.empty() || u2.empty())
    throw DegenerateInputError("empty vector set");
  const size_t dim = u1[0].size();
  auto check_orthonormal = [&](const std::vector<Vector>& u) {
    for (size_t a = 0; a < u.size(); ++a) {
      if (u[a].size() != dim)
        throw ShapeError("ambient dimensions do not match");
      for (size_t b = 0; b <= a; ++b) {
        const cplx g = dot(u[a], u[b]);
        const double want = (a == b) ? 1.0 : 0.0;
        if (std::abs(g - want) > 1e-8)
          throw DegenerateInputError("vector set is not orthonormal");
      }
    }
  };
  check_orthonormal(u1);
  check_orthonormal(u2);

  // residual columns N_k = u2_k - proj_{span u1}(u2_k)
  std::vector<Vector> res = u2;
  for (Vector& w : res)
    for (const Vector& b : u1) axpy(-dot(b, w), b, w);

  const int s2 = static_cast<int>(u2.size());
  ComplexMatrix gram(s2);
  for (int a = 0; a < s2; ++a)
    for (int b = 0; b < s2; ++b) gram.at(a, b) = dot(res[a], res[b]);
  const EigResult e = eig_oracle(gram);

  std::vector<double> angles;
  for (double lam : e.eigenvalues) {
    const double sv = std::sqrt(std::max(lam, 0.0));
    angles.push_back(std::asin(std::min(sv, 1.0)));
  }
  std::sort(angles.begin(), angles.end());
  angles.resize(std::min(u1.size(), u2.size()));
  return angles;
}

}  // namespace compeig::oracle
