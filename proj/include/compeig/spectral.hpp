#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"
#include "compeig/gram_schmidt.hpp"
#include "compeig/identity_check.hpp"
#include "compeig/tensor_core.hpp"
#include "compeig/trace_identities.hpp"

namespace compeig {

struct SpectralConfig {
  double tol = 1e-10;         // relative tolerance for identities/residuals
  double cluster_tol = 1e-7;  // base eigenvalue clustering tolerance
  double vanish_tol = 1e-8;   // vanishing-complement threshold
  bool hermitian_check = true;
};

struct CharacteristicMatrix {
  ComplexMatrix h;
  cplx lambda;
  ComplexMatrix c;  // lambda I - h
};

inline CharacteristicMatrix characteristic_matrix(const ComplexMatrix& h,
                                                  cplx lambda) {
  CharacteristicMatrix cm;
  cm.h = h;
  cm.lambda = lambda;
  cm.c = ComplexMatrix::identity(h.n()) * lambda - h;
  return cm;
}

struct EigenGroup {
  double lambda = 0.0;          // cluster representative
  int multiplicity = 0;         // cluster size
  std::vector<double> members;  // raw roots merged into the cluster
};

struct Eigenpair {
  double lambda = 0.0;
  std::vector<Vector> vectors;  // s orthonormal eigenvectors
  double residual = 0.0;        // max ||Hv - lambda v||
};

struct SpectrumReport {
  std::vector<EigenGroup> groups;
  std::vector<Eigenpair> pairs;
  std::vector<IdentityCheckResult> checks;
  SpectralConfig config;
  bool pass = false;
};

// ---------------------------------------------------------------------------
// Polynomial roots (Durand-Kerner with derivative-based cluster refinement)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * double(k));
  return d;
}

/// Simultaneous Weierstrass/Durand-Kerner iteration for a monic polynomial
/// given by coefficients c[0..n], c[n] = 1.
inline std::vector<cplx> durand_kerner(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return {};
  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1.0 + radius;

  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * M_PI * k / n + 0.4;
    z[k] = radius * cplx{std::cos(ang), std::sin(ang)};
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      cplx denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (denom == cplx{}) denom = 1e-300;
      const cplx step = eval_poly(c, z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-15 * radius) break;
  }
  return z;
}

/// Newton on the (s-1)-th derivative: an s-fold root of p is a simple root
/// of p^{(s-1)}, so it is recoverable to near machine precision even though
/// the raw roots scatter like eps^(1/s).
inline double refine_multiple_root(const std::vector<cplx>& coeffs, double x0,
                                   int s) {
  std::vector<cplx> p = coeffs;
  for (int k = 1; k < s; ++k) p = poly_derivative(p);
  const std::vector<cplx> dp = poly_derivative(p);
  double x = x0;
  for (int iter = 0; iter < 60; ++iter) {
    const cplx f = eval_poly(p, x);
    const cplx df = eval_poly(dp, x);
    if (std::abs(df) < 1e-300) break;
    const double step = (f / df).real();
    x -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace detail

/// Eigenvalues as clustered roots of the characteristic polynomial, with
/// coefficients from the diagonal minor-sum expansion.  Raw roots of an
/// s-fold eigenvalue scatter like eps^(1/s), so clusters are merged with a
/// multiplicity-aware tolerance and the representative is re-polished on the
/// (s-1)-th derivative; the vanishing-complement test downstream confirms
/// the multiplicity independently.
inline std::vector<EigenGroup> eigenvalues(
    const ComplexMatrix& h, const SpectralConfig& cfg = SpectralConfig{}) {
  const int n = h.n();
  if (cfg.hermitian_check && !h.is_hermitian(cfg.tol * 100))
    throw HermiticityError("matrix is not Hermitian within tolerance");

  const std::vector<cplx> coeffs = char_poly_coeffs(h);
  const std::vector<cplx> roots_c = detail::durand_kerner(coeffs);
  const double scale = 1.0 + h.max_norm() * n;

  // Hermitian input forces real eigenvalues; imaginary parts here are root
  // scatter, bounded by eps^(1/s).
  std::vector<double> roots;
  for (const cplx& z : roots_c) {
    if (std::abs(z.imag()) > 1e-3 * scale)
      throw ConvergenceError("complex root from a Hermitian matrix");
    roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());

  // Roots of an s-fold eigenvalue scatter like eps^(1/s), so the first pass
  // merges with a tolerance generous enough for s up to n.
  const double loose =
      std::max(cfg.cluster_tol, std::pow(1e-12, 1.0 / n)) * scale;
  std::vector<std::vector<double>> provisional;
  for (double r : roots) {
    if (!provisional.empty() && r - provisional.back().back() < loose)
      provisional.back().push_back(r);
    else
      provisional.push_back({r});
  }

  // A genuine s-fold root leaves a polynomial residual of rounding size at
  // the refined representative; a cluster that mixes distinct eigenvalues
  // does not, and is split at its widest internal gap.
  auto poly_norm = [&](double x) {
    double sum = 0.0, pw = 1.0;
    const double ax = std::max(1.0, std::abs(x));
    for (const cplx& c : coeffs) {
      sum += std::abs(c) * pw;
      pw *= ax;
    }
    return sum;
  };

  std::vector<EigenGroup> groups;
  auto emit = [&](auto&& self, const std::vector<double>& members) -> void {
    const int k = static_cast<int>(members.size());
    const double mean =
        std::accumulate(members.begin(), members.end(), 0.0) / k;
    double refined = detail::refine_multiple_root(coeffs, mean, k);
    if (std::abs(refined - mean) > loose) refined = mean;
    const double residual =
        std::abs(eval_poly(coeffs, cplx{refined, 0.0}));
    if (k == 1 || residual < 1e-10 * poly_norm(refined)) {
      groups.push_back(EigenGroup{refined, k, members});
      return;
    }
    int cut = 1;
    double widest = -1.0;
    for (int t = 1; t < k; ++t)
      if (members[t] - members[t - 1] > widest) {
        widest = members[t] - members[t - 1];
        cut = t;
      }
    self(self, {members.begin(), members.begin() + cut});
    self(self, {members.begin() + cut, members.end()});
  };
  for (const auto& cluster : provisional) emit(emit, cluster);
  return groups;
}

/// Smallest s such that the reduced order-one complement of C(lambda) is
/// numerically non-zero; complements of all lower orders vanish, which is
/// the defining chain for an s-fold eigenvalue.
inline int multiplicity_by_vanishing(
    const ComplexMatrix& h, cplx lambda,
    const SpectralConfig& cfg = SpectralConfig{}) {
  const int n = h.n();
  const ComplexMatrix c = characteristic_matrix(h, lambda).c;
  const double m = c.max_norm();
  double binom = 1.0;  // C(n, s) running value, s = 1 first
  for (int s = 1; s <= n; ++s) {
    binom = binom * (n - s + 1) / s;
    const double bound =
        1.0 + binom * factorial(n - s) * std::pow(m, double(n - s));
    const ComplexMatrix psi = reduced_complement_via_traces(c, s);
    if (psi.max_norm() > cfg.vanish_tol * bound) return s;
  }
  throw DegenerateInputError(
      "no non-vanishing reduced complement up to order n");
}

/// Eigenvector of a non-degenerate eigenvalue: the max-norm column of the
/// adjugate of the characteristic matrix (all columns are parallel).
inline Vector eigenvector_nondegenerate(
    const ComplexMatrix& h, cplx lambda,
    const SpectralConfig& cfg = SpectralConfig{}) {
  const int n = h.n();
  const ComplexMatrix c = characteristic_matrix(h, lambda).c;
  const ComplexMatrix adj = adjugate(c);

  int best = -1;
  double best_norm = 0.0;
  for (int j = 0; j < n; ++j) {
    const double nj = vec_norm(adj.column(j));
    if (nj > best_norm) {
      best_norm = nj;
      best = j;
    }
  }
  const double floor =
      cfg.vanish_tol * (1.0 + std::pow(c.max_norm(), double(n - 1)) *
                                  factorial(n - 1) * n);
  if (best < 0 || best_norm <= floor)
    throw MultiplicityMismatchError(
        "adjugate columns vanish; eigenvalue is degenerate");
  return phase_fixed(scale(adj.column(best), 1.0 / best_norm));
}

/// Eigenvectors of an s-fold degenerate eigenvalue: s independent columns of
/// the reduced order-one complement matrix, extracted by column-pivoted
/// Gram-Schmidt.
inline std::vector<Vector> eigenvectors_degenerate(
    const ComplexMatrix& h, cplx lambda, int s,
    const SpectralConfig& cfg = SpectralConfig{}) {
  const int n = h.n();
  const ComplexMatrix psi =
      reduced_complement_via_traces(characteristic_matrix(h, lambda).c, s);

  std::vector<Vector> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = psi.column(j);
  const double threshold =
      std::max(cfg.tol * 10.0, 1e-9) * (1.0 + psi.frobenius_norm());
  std::vector<Vector> basis = pivoted_orthonormalize(cols, threshold);
  if (static_cast<int>(basis.size()) != s)
    throw RankMismatchError("numerical rank of the complement matrix is " +
                            std::to_string(basis.size()) + ", expected " +
                            std::to_string(s));
  for (Vector& v : basis) v = phase_fixed(std::move(v));
  return basis;
}

/// Full pipeline: cluster eigenvalues, confirm multiplicities through the
/// vanishing test, extract eigenvectors along the appropriate path, and
/// verify that the assembled V is unitary and diagonalizes H.
inline SpectrumReport full_spectrum(
    const ComplexMatrix& h, const SpectralConfig& cfg = SpectralConfig{}) {
  const int n = h.n();
  SpectrumReport report;
  report.config = cfg;
  report.groups = eigenvalues(h, cfg);

  const double hnorm = h.max_norm();
  int disagreements = 0;
  double max_residual = 0.0;
  ComplexMatrix v(n);
  int col = 0;
  for (const EigenGroup& g : report.groups) {
    const int s_vanish = multiplicity_by_vanishing(h, g.lambda, cfg);
    if (s_vanish != g.multiplicity) ++disagreements;

    Eigenpair pair;
    pair.lambda = g.lambda;
    if (g.multiplicity == 1) {
      pair.vectors.push_back(eigenvector_nondegenerate(h, g.lambda, cfg));
    } else {
      pair.vectors = eigenvectors_degenerate(h, g.lambda, g.multiplicity, cfg);
    }
    for (const Vector& vec : pair.vectors) {
      Vector r = h * vec;
      axpy(-cplx{g.lambda, 0.0}, vec, r);
      pair.residual = std::max(pair.residual, vec_norm(r));
      for (int i = 0; i < n; ++i) v.at(i, col) = vec[i];
      ++col;
    }
    max_residual = std::max(max_residual, pair.residual);
    report.pairs.push_back(std::move(pair));
  }
  if (col != n)
    throw RankMismatchError("extracted vector count does not equal n");

  const ComplexMatrix gram = v.adjoint() * v;
  const double unitarity = (gram - ComplexMatrix::identity(n)).max_norm();
  const ComplexMatrix d = v.adjoint() * h * v;
  double offdiag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(d.at(i, j)));

  const double rtol = 1e-8;
  report.checks.push_back(
      make_check("residual", max_residual, 1.0 + hnorm, rtol));
  report.checks.push_back(make_check("unitarity", unitarity, 1.0, rtol));
  report.checks.push_back(
      make_check("diagonalization", offdiag, 1.0 + hnorm, rtol));
  report.checks.push_back(make_check("multiplicity_agreement",
                                     double(disagreements), 1.0, 0.5));
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const IdentityCheckResult& c) { return c.pass; });
  return report;
}

}  // namespace compeig
