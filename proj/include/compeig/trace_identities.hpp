#pragma once

#include <vector>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"
#include "compeig/multi_index.hpp"
#include "compeig/tensor_core.hpp"

namespace compeig {

/// All non-negative integer solutions (k_1, ..., k_target) of
/// sum_l l * k_l = target; one entry per integer partition of `target`
/// encoded by part multiplicities.
inline std::vector<std::vector<int>> partitions(int target) {
  if (target < 0) throw OrderError("partition target must be non-negative");
  std::vector<std::vector<int>> out;
  std::vector<int> k(target, 0);
  // recursive descent on the largest allowed part
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(k);
      return;
    }
    for (int l = std::min(max_part, remaining); l >= 1; --l) {
      ++k[l - 1];
      self(self, remaining - l, l);
      --k[l - 1];
    }
  };
  rec(rec, target, target);
  return out;
}

/// Complete exponential Bell polynomial B_m(x_1, ..., x_m) via the standard
/// recurrence B_{m+1} = sum_i C(m, i) B_{m-i} x_{i+1}, B_0 = 1.
inline cplx bell_polynomial(int m, std::span<const cplx> x) {
  if (m < 0) throw OrderError("Bell polynomial order must be non-negative");
  if (static_cast<int>(x.size()) < m)
    throw ShapeError("need at least m arguments");
  std::vector<cplx> b(m + 1);
  b[0] = 1.0;
  for (int t = 0; t < m; ++t) {
    // b[t + 1] = sum_{i=0}^{t} C(t, i) b[t - i] x[i]
    cplx sum{};
    double binom = 1.0;
    for (int i = 0; i <= t; ++i) {
      sum += binom * b[t - i] * x[i];
      binom = binom * (t - i) / (i + 1);
    }
    b[t + 1] = sum;
  }
  return b[m];
}

inline cplx bell_polynomial(int m, const std::vector<cplx>& x) {
  return bell_polynomial(m, std::span<const cplx>(x));
}

/// Incremental powers A^0..A^k and their traces.
struct TracePowerCache {
  explicit TracePowerCache(const ComplexMatrix& a, int max_power) {
    powers.reserve(max_power + 1);
    powers.push_back(ComplexMatrix::identity(a.n()));
    traces.resize(max_power + 1);
    traces[0] = static_cast<double>(a.n());
    for (int l = 1; l <= max_power; ++l) {
      powers.push_back(powers.back() * a);
      traces[l] = powers[l].trace();
    }
  }

  std::vector<ComplexMatrix> powers;
  std::vector<cplx> traces;  // traces[l] = Tr[A^l]
};

/// Reduced order-one complement (det_s A)^j_i from the closed-form trace
/// expansion over partition terms.
inline ComplexMatrix reduced_complement_via_traces(const ComplexMatrix& a,
                                                   int s) {
  const int n = a.n();
  if (s < 1 || s > n) throw OrderError("order s must be in 1..n");
  const int t = n - s;
  const TracePowerCache cache(a, t);
  const double global_sign = (t % 2 == 0) ? 1.0 : -1.0;

  ComplexMatrix result(n);
  for (int r = 0; r <= t; ++r) {
    cplx coeff{};
    for (const std::vector<int>& k : partitions(t - r)) {
      cplx term = 1.0;
      for (int l = 1; l <= t - r; ++l) {
        const int kl = k[l - 1];
        if (kl == 0) continue;
        cplx tr_pow = 1.0;
        for (int q = 0; q < kl; ++q) tr_pow *= cache.traces[l];
        const double sign = (kl % 2 == 0) ? 1.0 : -1.0;
        term *= sign / (factorial(kl) * std::pow(double(l), kl)) * tr_pow;
      }
      coeff += term;
    }
    result = result + cache.powers[r] * (global_sign * coeff);
  }
  return result;
}

/// Same quantity through the Bell-polynomial form with
/// x_l = -(l-1)! Tr[A^l]; agrees with the trace route to machine precision.
inline ComplexMatrix reduced_complement_via_bell(const ComplexMatrix& a,
                                                 int s) {
  const int n = a.n();
  if (s < 1 || s > n) throw OrderError("order s must be in 1..n");
  const int t = n - s;
  const TracePowerCache cache(a, t);
  std::vector<cplx> x(t);
  for (int l = 1; l <= t; ++l) x[l - 1] = -factorial(l - 1) * cache.traces[l];
  const double global_sign = (t % 2 == 0) ? 1.0 : -1.0;

  ComplexMatrix result(n);
  for (int r = 0; r <= t; ++r) {
    const cplx b = bell_polynomial(t - r, x);
    result = result + cache.powers[r] * (global_sign / factorial(t - r) * b);
  }
  return result;
}

/// Diagonal sum of order-(n-s) minors from the trace-partition expansion.
inline cplx minor_trace_sum_via_traces(const ComplexMatrix& a, int s) {
  const int n = a.n();
  if (s < 0 || s > n) throw OrderError("order s must be in 0..n");
  const int t = n - s;
  const TracePowerCache cache(a, t);
  const double global_sign = (t % 2 == 0) ? 1.0 : -1.0;
  cplx sum{};
  for (const std::vector<int>& k : partitions(t)) {
    cplx term = 1.0;
    for (int l = 1; l <= t; ++l) {
      const int kl = k[l - 1];
      if (kl == 0) continue;
      cplx tr_pow = 1.0;
      for (int q = 0; q < kl; ++q) tr_pow *= cache.traces[l];
      const double sign = (kl % 2 == 0) ? 1.0 : -1.0;
      term *= sign / (factorial(kl) * std::pow(double(l), kl)) * tr_pow;
    }
    sum += term;
  }
  return global_sign * sum;
}

/// Same diagonal sum through the Bell-polynomial form.
inline cplx minor_trace_sum_via_bell(const ComplexMatrix& a, int s) {
  const int n = a.n();
  if (s < 0 || s > n) throw OrderError("order s must be in 0..n");
  const int t = n - s;
  const TracePowerCache cache(a, t);
  std::vector<cplx> x(t);
  for (int l = 1; l <= t; ++l) x[l - 1] = -factorial(l - 1) * cache.traces[l];
  const double global_sign = (t % 2 == 0) ? 1.0 : -1.0;
  return global_sign / factorial(t) * bell_polynomial(t, x);
}

inline cplx minor_trace_sum(const ComplexMatrix& a, int s) {
  return minor_trace_sum_via_traces(a, s);
}

/// Direct enumeration of diagonal minors of order n-s; reference route for
/// the two expansions above.
inline cplx minor_trace_sum_direct(const ComplexMatrix& a, int s) {
  const int n = a.n();
  if (s < 0 || s > n) throw OrderError("order s must be in 0..n");
  cplx sum{};
  for (const MultiIndex& j : MultiIndex::subsets(n, n - s))
    sum += minor_det(a, j, j);
  return sum;
}

/// Coefficients c_0..c_n of det(lambda I - A) = sum_k c_k lambda^k, with
/// c_n = 1; the elementary symmetric functions come from the diagonal minor
/// sums.
inline std::vector<cplx> char_poly_coeffs(const ComplexMatrix& a) {
  const int n = a.n();
  std::vector<cplx> c(n + 1);
  for (int s = 0; s <= n; ++s) {
    const double sign = ((n - s) % 2 == 0) ? 1.0 : -1.0;
    c[s] = sign * minor_trace_sum(a, s);
  }
  return c;
}

inline cplx eval_poly(const std::vector<cplx>& coeffs, cplx z) {
  cplx v{};
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    v = v * z + coeffs[k];
  return v;
}

}  // namespace compeig
