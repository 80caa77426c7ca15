// End-to-end acceptance gate.  Each criterion prints exactly one PASS/FAIL
// line; the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "compeig/oracles.hpp"
#include "compeig/random_gen.hpp"
#include "compeig/showcase.hpp"
#include "compeig/spectral.hpp"
#include "compeig/tensor_core.hpp"
#include "compeig/trace_identities.hpp"

using namespace compeig;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, double worst) {
  std::printf("%s  criterion %d: %s (worst deviation %.3e)\n",
              ok ? "PASS" : "FAIL", id, what.c_str(), worst);
  if (!ok) ++failures;
}

double rel(double dev, double scale) { return dev / (scale > 0 ? scale : 1); }

// --------------------------------------------------------------------------
// 1. trace/Bell expansions vs direct enumeration, n = 3 (s = 1, 2) and
//    n = 4 (s = 1, 2, 3), 20 random complex matrices each, < 1e-10 relative
// --------------------------------------------------------------------------
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  for (const auto& [n, s_max] : {std::pair{3, 2}, std::pair{4, 3}})
    for (int s = 1; s <= s_max; ++s)
      for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(n, rng);
        ComplexMatrix direct(n);
        for (int j = 1; j <= n; ++j)
          for (int i = 1; i <= n; ++i)
            direct.at(j - 1, i - 1) =
                complement(a, s, MultiIndex({j}, n), MultiIndex({i}, n));
        const double mscale = 1.0 + direct.max_norm();
        worst = std::max(
            worst,
            rel((reduced_complement_via_traces(a, s) - direct).max_norm(),
                mscale));
        worst = std::max(
            worst,
            rel((reduced_complement_via_bell(a, s) - direct).max_norm(),
                mscale));
        const cplx sum_direct = minor_trace_sum_direct(a, s);
        const double sscale = 1.0 + std::abs(sum_direct);
        worst = std::max(
            worst,
            rel(std::abs(minor_trace_sum_via_traces(a, s) - sum_direct),
                sscale));
        worst = std::max(
            worst, rel(std::abs(minor_trace_sum_via_bell(a, s) - sum_direct),
                       sscale));
      }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(1, "expansion vs direct enumeration, n=3,4", worst < 1e-10 && secs < 5.0,
         worst);
}

// --------------------------------------------------------------------------
// 2. closed-form tables on 20 random 6x6 matrices, < 1e-11 relative
// --------------------------------------------------------------------------
void criterion2() {
  Rng rng(1);
  const int n = 6;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(n, rng);
    const TracePowerCache cache(a, 4);
    const cplx t1 = cache.traces[1], t2 = cache.traces[2],
               t3 = cache.traces[3], t4 = cache.traces[4];
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix table[] = {
        id * t1 - a,
        id * (0.5 * (t1 * t1 - t2)) - a * t1 + cache.powers[2],
        id * ((t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0) -
            a * (0.5 * (t1 * t1 - t2)) + cache.powers[2] * t1 -
            cache.powers[3]};
    for (int d = 1; d <= 3; ++d) {
      const ComplexMatrix& want = table[d - 1];
      worst = std::max(
          worst, rel((reduced_complement_via_traces(a, n - d) - want)
                         .max_norm(),
                     1.0 + want.max_norm()));
    }
    const cplx sums[] = {
        t1, (t1 * t1 - t2) / 2.0,
        (t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0,
        (t1 * t1 * t1 * t1 - 6.0 * t2 * t1 * t1 + 3.0 * t2 * t2 +
         8.0 * t3 * t1 - 6.0 * t4) /
            24.0};
    for (int d = 1; d <= 4; ++d)
      worst = std::max(worst,
                       rel(std::abs(minor_trace_sum(a, n - d) - sums[d - 1]),
                           1.0 + std::abs(sums[d - 1])));
  }
  report(2, "closed-form tables on 6x6", worst < 1e-11, worst);
}

// --------------------------------------------------------------------------
// 3. non-degenerate path: adjugate-column eigenvectors on 50 random
//    Hermitian matrices, residual / oracle overlap / column parallelism
// --------------------------------------------------------------------------
void criterion3() {
  Rng rng(2);
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto oracle_eig = oracle::eig_oracle(h);
    // random Hermitian draws have distinct eigenvalues with probability one
    const auto groups = eigenvalues(h);
    if (static_cast<int>(groups.size()) != n) {
      ok = false;
      continue;
    }
    const double hscale = 1.0 + h.max_norm();
    for (int k = 0; k < n; ++k) {
      const Vector v = eigenvector_nondegenerate(h, groups[k].lambda);
      Vector r = h * v;
      axpy(-cplx{groups[k].lambda, 0.0}, v, r);
      ok = ok && vec_norm(r) < 1e-8 * hscale;
      worst = std::max(worst, vec_norm(r) / hscale);
      const double overlap = std::abs(dot(oracle_eig.vectors.column(k), v));
      ok = ok && overlap > 1.0 - 1e-9;
      worst = std::max(worst, 1.0 - overlap);
      // all adjugate columns are parallel: 2x2 cross-determinants vanish
      const ComplexMatrix adj =
          adjugate(characteristic_matrix(h, groups[k].lambda).c);
      const double cscale = 1.0 + adj.max_norm() * adj.max_norm();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              const double cross = std::abs(adj.at(i, a) * adj.at(j, b) -
                                            adj.at(j, a) * adj.at(i, b));
              ok = ok && cross < 1e-9 * cscale;
              worst = std::max(worst, cross / cscale);
            }
    }
  }
  report(3, "adjugate-column eigenvectors on 50 Hermitian draws", ok, worst);
}

// --------------------------------------------------------------------------
// 4. degenerate path: 30 planted matrices with repeated eigenvalues
// --------------------------------------------------------------------------
void criterion4() {
  Rng rng(3);
  const std::vector<std::vector<double>> patterns = {
      {1.0, 1.0, -0.5},
      {1.0, 1.0, -0.5, 2.0},
      {1.0, 1.0, 1.0, -2.0},
      {1.0, 1.0, 1.0, -2.0, 0.5},
      {2.0, 2.0, -1.0, -1.0},
      {2.0, 2.0, -1.0, -1.0, 0.25, 3.0}};
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 30; ++trial) {
    const auto& eigs = patterns[trial % patterns.size()];
    const int n = static_cast<int>(eigs.size());
    const PlantedHermitian p = planted_hermitian(eigs, rng);
    const SpectrumReport full = full_spectrum(p.h);
    ok = ok && full.pass;

    for (const EigenGroup& g : full.groups) {
      const int s = g.multiplicity;
      const ComplexMatrix c = characteristic_matrix(p.h, g.lambda).c;
      // vanishing chain: lower-order reduced complements are numerically zero
      for (int r = 1; r < s; ++r) {
        const double bound =
            1.0 + std::pow(c.max_norm(), double(n - r)) * factorial(n - r) * n;
        const double norm = reduced_complement_via_traces(c, r).max_norm();
        ok = ok && norm < 1e-8 * bound;
        worst = std::max(worst, norm / bound);
      }
      if (s == 1) continue;
      const std::vector<Vector> basis =
          eigenvectors_degenerate(p.h, g.lambda, s);
      ok = ok && static_cast<int>(basis.size()) == s;
      std::vector<Vector> planted;
      for (int k = 0; k < n; ++k)
        if (std::abs(eigs[k] - g.lambda) < 1e-6) planted.push_back(p.u.column(k));
      const auto angles = oracle::subspace_angles(planted, basis);
      ok = ok && angles.back() < 1e-8;
      worst = std::max(worst, angles.back());
    }
    // cross-group orthogonality
    for (size_t a = 0; a < full.pairs.size(); ++a)
      for (size_t b = a + 1; b < full.pairs.size(); ++b)
        for (const Vector& va : full.pairs[a].vectors)
          for (const Vector& vb : full.pairs[b].vectors) {
            const double g = std::abs(dot(va, vb));
            ok = ok && g < 1e-8;
            worst = std::max(worst, g);
          }
  }
  report(4, "degenerate eigenspaces on 30 planted matrices", ok, worst);
}

// --------------------------------------------------------------------------
// 5. Dirac fixture on 10 random (m, p)
// --------------------------------------------------------------------------
void criterion5() {
  Rng rng(4);
  std::uniform_real_distribution<double> um(0.5, 2.0), up(-1.0, 1.0);
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    showcase::DiracParams d;
    d.m = um(rng);
    for (int k = 0; k < 3; ++k) d.p[k] = up(rng);
    const ComplexMatrix h = showcase::dirac_hamiltonian(d);
    const showcase::DiracReference ref = showcase::dirac_reference(d);
    const double e = ref.energy;
    const ComplexMatrix c = characteristic_matrix(h, e).c;

    const double ddev = std::abs(det(c)) / std::pow(e, 4.0);
    const double adev = adjugate(c).max_norm() / std::pow(e, 3.0);
    ok = ok && ddev < 1e-9 && adev < 1e-9;
    worst = std::max({worst, ddev, adev});

    const ComplexMatrix psi = reduced_complement_via_traces(c, 2);
    const double pdev =
        (psi - ref.psi).max_norm() / (1.0 + ref.psi.max_norm());
    const double cdev =
        (c * psi).max_norm() / (1.0 + c.max_norm() * psi.max_norm());
    ok = ok && pdev < 1e-10 && cdev < 1e-10;
    worst = std::max({worst, pdev, cdev});

    const std::vector<Vector> basis = eigenvectors_degenerate(h, e, 2);
    const std::vector<Vector> ref_basis =
        pivoted_orthonormalize({ref.u_plus, ref.u_minus}, 1e-12);
    const auto angles = oracle::subspace_angles(ref_basis, basis);
    ok = ok && angles.back() < 1e-8;
    worst = std::max(worst, angles.back());
  }
  report(5, "Dirac doublet on 10 random (m, p)", ok, worst);
}

// --------------------------------------------------------------------------
// 6. two-level fixture
// --------------------------------------------------------------------------
void criterion6() {
  Rng rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const showcase::TwoLevelParams p{u(rng), u(rng), cplx{u(rng), u(rng)}};
    const ComplexMatrix h = showcase::two_level_hamiltonian(p);
    showcase::TwoLevelReference ref;
    try {
      ref = showcase::two_level_reference(p);
    } catch (const DegenerateInputError&) {
      continue;  // measure-zero draw
    }
    const auto groups = eigenvalues(h);
    const double edev =
        std::max(std::abs(groups.front().lambda - ref.lambda_minus),
                 std::abs(groups.back().lambda - ref.lambda_plus));
    ok = ok && edev < 1e-12 * (1.0 + std::abs(ref.omega));
    worst = std::max(worst, edev);

    const ComplexMatrix adj_p =
        adjugate(characteristic_matrix(h, ref.lambda_plus).c);
    const ComplexMatrix adj_m =
        adjugate(characteristic_matrix(h, ref.lambda_minus).c);
    const double adev = std::max((adj_p - ref.adj_c_plus).max_norm(),
                                 (adj_m - ref.adj_c_minus).max_norm());
    ok = ok && adev < 1e-12 * (1.0 + ref.adj_c_plus.max_norm());
    worst = std::max(worst, adev);

    for (const auto& [lambda, chi] :
         {std::pair{ref.lambda_plus, ref.chi_plus},
          std::pair{ref.lambda_minus, ref.chi_minus}}) {
      const Vector v = eigenvector_nondegenerate(h, lambda);
      const double cross = std::abs(v[0] * chi[1] - v[1] * chi[0]);
      ok = ok && cross < 1e-12;
      worst = std::max(worst, cross);
    }
  }
  report(6, "two-level closed forms", ok, worst);
}

// --------------------------------------------------------------------------
// 7. exact combinatorial suite
// --------------------------------------------------------------------------
bool kronecker_contractions_exact() {
  // contraction of p - s trailing pairs scales by (n-s)!/(n-p)!
  for (int n = 1; n <= 5; ++n)
    for (int s = 0; s <= n; ++s)
      for (int p = s; p <= n; ++p) {
        std::vector<int> fixed(2 * s, 1);
        while (true) {
          std::vector<int> upper(fixed.begin(), fixed.begin() + s);
          std::vector<int> lower(fixed.begin() + s, fixed.end());
          long long lhs = 0;
          std::vector<int> t(p - s, 1);
          while (true) {
            std::vector<int> u = upper, l = lower;
            u.insert(u.end(), t.begin(), t.end());
            l.insert(l.end(), t.begin(), t.end());
            lhs += kronecker(u, l, n);
            int k = 0;
            for (; k < p - s; ++k) {
              if (t[k] < n) {
                ++t[k];
                break;
              }
              t[k] = 1;
            }
            if (k == p - s) break;
          }
          long long fact = 1;
          for (int q = n - p + 1; q <= n - s; ++q) fact *= q;
          if (lhs != fact * kronecker(upper, lower, n)) return false;
          int k = 0;
          for (; k < 2 * s; ++k) {
            if (fixed[k] < n) {
              ++fixed[k];
              break;
            }
            fixed[k] = 1;
          }
          if (k == 2 * s) break;
        }
      }
  return true;
}

bool kronecker_products_exact() {
  // contracting the order-s symbol against the order-p symbol leaves the
  // order-(p-s) symbol times s! (n-p+s)!/(n-p)!
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int s = 0; s <= p; ++s) {
        std::vector<int> free_idx(2 * (p - s), 1);
        while (true) {
          std::vector<int> iu(free_idx.begin(), free_idx.begin() + (p - s));
          std::vector<int> il(free_idx.begin() + (p - s), free_idx.end());
          long long lhs = 0;
          std::vector<int> sum_idx(2 * s, 1);
          while (true) {
            std::vector<int> j(sum_idx.begin(), sum_idx.begin() + s);
            std::vector<int> i(sum_idx.begin() + s, sum_idx.end());
            const int d1 = kronecker(j, i, n);
            if (d1 != 0) {
              std::vector<int> u2 = i;
              u2.insert(u2.end(), iu.begin(), iu.end());
              std::vector<int> l2 = j;
              l2.insert(l2.end(), il.begin(), il.end());
              lhs += d1 * kronecker(u2, l2, n);
            }
            int k = 0;
            for (; k < 2 * s; ++k) {
              if (sum_idx[k] < n) {
                ++sum_idx[k];
                break;
              }
              sum_idx[k] = 1;
            }
            if (k == 2 * s) break;
          }
          long long fact = 1;
          for (int q = 2; q <= s; ++q) fact *= q;
          long long ratio = 1;
          for (int q = n - p + 1; q <= n - p + s; ++q) ratio *= q;
          if (lhs != fact * ratio * kronecker(iu, il, n)) return false;
          int k = 0;
          for (; k < 2 * (p - s); ++k) {
            if (free_idx[k] < n) {
              ++free_idx[k];
              break;
            }
            free_idx[k] = 1;
          }
          if (k == 2 * (p - s)) break;
        }
      }
  return true;
}

void criterion7() {
  bool ok = kronecker_contractions_exact() && kronecker_products_exact();
  double worst = 0.0;

  Rng rng(6);
  // product minors on integer rectangular matrices: exact up to rounding
  const ComplexMatrix a = random_integer_matrix(4, 6, rng);
  const ComplexMatrix b = random_integer_matrix(6, 4, rng);
  for (int s = 1; s <= 4; ++s)
    for (const MultiIndex& j : MultiIndex::subsets(4, s))
      for (const MultiIndex& i : MultiIndex::subsets(4, s)) {
        const IdentityCheckResult c = cauchy_binet(a, b, j, i, 1e-12);
        ok = ok && c.max_abs_dev < 1e-8;
        worst = std::max(worst, c.max_abs_dev);
      }

  // contraction identity, both alternating-sum forms, on 4x4 (all free-index
  // tuples) and 5x5 (sampled tuples)
  const ComplexMatrix m4 = random_matrix(4, rng);
  for (int s = 1; s <= 3; ++s)
    for (int r = 1; r <= s; ++r) {
      const IdentityCheckResult c = check_lemma1(m4, r, s, 1e-10);
      ok = ok && c.pass;
      worst = std::max(worst, c.max_rel_dev);
    }
  const ComplexMatrix m5 = random_matrix(5, rng);
  std::uniform_int_distribution<int> pick(1, 5);
  for (int s = 1; s <= 3; ++s)
    for (int r = 1; r <= s; ++r)
      for (int sample = 0; sample < 4; ++sample) {
        Lemma1Indices t;
        t.j = pick(rng);
        t.i = pick(rng);
        for (int k = 0; k < r - 1; ++k) {
          t.upper_rest.push_back(pick(rng));
          t.lower_rest.push_back(pick(rng));
        }
        const IdentityCheckResult c = check_lemma1(m5, r, s, t, 1e-10);
        ok = ok && c.pass;
        worst = std::max(worst, c.max_rel_dev);
      }
  for (const ComplexMatrix* m : {&m4, &m5})
    for (int s = 1; s <= m->n(); ++s) {
      const IdentityCheckResult c = check_corollary1(*m, s, 1e-10);
      ok = ok && c.pass;
      worst = std::max(worst, c.max_rel_dev);
    }
  report(7, "exact combinatorial suite", ok, worst);
}

// --------------------------------------------------------------------------
// 8. characteristic polynomial cross-check
// --------------------------------------------------------------------------
void criterion8() {
  Rng rng(7);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const ComplexMatrix a = random_matrix(n, rng);
    const std::vector<cplx> c = char_poly_coeffs(a);
    for (int trial = 0; trial < 20; ++trial) {
      const cplx lambda = 3.0 * random_complex(rng);
      const cplx direct = det(ComplexMatrix::identity(n) * lambda - a);
      worst = std::max(worst, rel(std::abs(eval_poly(c, lambda) - direct),
                                  1.0 + std::abs(direct)));
    }
  }
  report(8, "characteristic polynomial vs direct determinant", worst < 1e-9,
         worst);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - failures, secs);
  return failures == 0 ? 0 : 1;
}
