#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"
#include "compeig/identity_check.hpp"
#include "compeig/kronecker.hpp"
#include "compeig/multi_index.hpp"

namespace compeig {

/// Library guard for full tensor operations.
inline constexpr int kMaxTensorDim = 12;

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

namespace detail {

inline cplx det_cofactor(const ComplexMatrix& m) {
  switch (m.n()) {
    case 0:
      return 1.0;
    case 1:
      return m.at(0, 0);
    case 2:
      return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    case 3:
      return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
             m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
             m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    default: {
      // expansion along the first row, 3x3 base case
      cplx det{};
      const int n = m.n();
      for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == cplx{}) continue;
        ComplexMatrix sub(n - 1);
        for (int r = 1; r < n; ++r) {
          int cc = 0;
          for (int c = 0; c < n; ++c) {
            if (c == j) continue;
            sub.at(r - 1, cc++) = m.at(r, c);
          }
        }
        const cplx cof = det_cofactor(sub);
        det += ((j % 2 == 0) ? 1.0 : -1.0) * m.at(0, j) * cof;
      }
      return det;
    }
  }
}

inline cplx det_lu(ComplexMatrix m) {
  const int n = m.n();
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m.at(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m.at(i, k)) > best) {
        best = std::abs(m.at(i, k));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      det = -det;
    }
    det *= m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = m.at(i, k) / m.at(k, k);
      for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of the s x s submatrix with rows J and columns I: the minor
/// determinant tensor (det A)^J_I at canonical (sorted) indices.  Cofactor
/// expansion for s <= 4, LU with partial pivoting above.
inline cplx minor_det(const ComplexMatrix& a, const MultiIndex& rows,
                      const MultiIndex& cols) {
  if (rows.size() != cols.size())
    throw ShapeError("row and column sets must have equal size");
  if (rows.ambient() != a.rows() || cols.ambient() != a.cols())
    throw ShapeError("multi-index ambient does not match matrix shape");
  const int s = rows.size();
  ComplexMatrix sub(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      sub.at(i, j) = a.at(rows[i] - 1, cols[j] - 1);
  return (s <= 4) ? detail::det_cofactor(sub) : detail::det_lu(sub);
}

inline cplx det(const ComplexMatrix& a) {
  const int n = a.n();
  return minor_det(a, MultiIndex::full(n), MultiIndex::full(n));
}

/// Order-(r,r) antisymmetric tensor on ordered index-set pairs.  Values are
/// stored on canonical (sorted) pairs only; evaluation at permuted or
/// repeated indices applies the permutation signs on the fly.
class AntisymTensor {
 public:
  AntisymTensor(int n, int r) : n_(n), r_(r) {}

  int ambient() const { return n_; }
  int order() const { return r_; }

  void set(const MultiIndex& upper, const MultiIndex& lower, cplx value) {
    v_[{upper.indices(), lower.indices()}] = value;
  }

  cplx at(const MultiIndex& upper, const MultiIndex& lower) const {
    auto it = v_.find({upper.indices(), lower.indices()});
    return it == v_.end() ? cplx{} : it->second;
  }

  cplx evaluate(std::span<const int> upper, std::span<const int> lower) const {
    if (static_cast<int>(upper.size()) != r_ ||
        static_cast<int>(lower.size()) != r_)
      throw ShapeError("index list length does not match tensor order");
    const int su = detail::sort_sign(upper);
    if (su == 0) return {};
    const int sl = detail::sort_sign(lower);
    if (sl == 0) return {};
    std::vector<int> u(upper.begin(), upper.end());
    std::vector<int> l(lower.begin(), lower.end());
    std::sort(u.begin(), u.end());
    std::sort(l.begin(), l.end());
    auto it = v_.find({u, l});
    if (it == v_.end()) return {};
    return static_cast<double>(su * sl) * it->second;
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto& [k, z] : v_) m = std::max(m, std::abs(z));
    return m;
  }

 private:
  int n_;
  int r_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, cplx> v_;
};

/// All order-s minor determinants of A as an antisymmetric tensor.
inline AntisymTensor minor_tensor(const ComplexMatrix& a, int s) {
  const int n = a.n();
  if (s < 0 || s > n) throw OrderError("minor order out of range");
  AntisymTensor t(n, s);
  for (const MultiIndex& rows : MultiIndex::subsets(n, s))
    for (const MultiIndex& cols : MultiIndex::subsets(n, s))
      t.set(rows, cols, minor_det(a, rows, cols));
  return t;
}

namespace detail {

/// Complement of order s at canonical index sets: the signed minor over the
/// complementary rows/columns.  Note the row/column transposition in the
/// defining sum: the matrix product carries A^{i'}_{j'}, so the minor is
/// taken with rows from the complement of I and columns from the complement
/// of J.
inline cplx complement_canonical(const ComplexMatrix& a, const MultiIndex& j,
                                 const MultiIndex& i) {
  const MultiIndex jc = j.complement();
  const MultiIndex ic = i.complement();
  const double sign = merge_sign(j, jc) * merge_sign(i, ic);
  return sign * minor_det(a, ic, jc);
}

inline cplx complement_at(const ComplexMatrix& a, std::span<const int> upper,
                          std::span<const int> lower) {
  const int su = sort_sign(upper);
  if (su == 0) return {};
  const int sl = sort_sign(lower);
  if (sl == 0) return {};
  std::vector<int> u(upper.begin(), upper.end());
  std::vector<int> l(lower.begin(), lower.end());
  std::sort(u.begin(), u.end());
  std::sort(l.begin(), l.end());
  const int n = a.n();
  return static_cast<double>(su * sl) *
         complement_canonical(a, MultiIndex(std::move(u), n),
                              MultiIndex(std::move(l), n));
}

}  // namespace detail

/// Reduced complement of order r,s of the minor determinants of order n-s:
/// (det_s A)^J_I with |J| = |I| = r <= s.  For r = s this is the complement
/// proper, evaluated through the complementary minor with merged-permutation
/// signs; for r < s the order-s complement is contracted over s-r trailing
/// index pairs.
inline cplx complement(const ComplexMatrix& a, int s, const MultiIndex& j,
                       const MultiIndex& i) {
  const int n = a.n();
  if (n > kMaxTensorDim) throw GuardError("ambient dimension above guard");
  if (j.size() != i.size())
    throw ShapeError("upper and lower index sets must have equal size");
  const int r = j.size();
  if (r > s || s > n) throw OrderError("need r <= s <= n");

  if (r == s) return detail::complement_canonical(a, j, i);

  cplx sum{};
  for (const MultiIndex& t : MultiIndex::subsets(n, s - r)) {
    std::vector<int> upper = j.indices();
    upper.insert(upper.end(), t.indices().begin(), t.indices().end());
    std::vector<int> lower = i.indices();
    lower.insert(lower.end(), t.indices().begin(), t.indices().end());
    sum += detail::complement_at(a, upper, lower);
  }
  return sum;
}

/// All complements of order s as an antisymmetric tensor.
inline AntisymTensor complement_tensor(const ComplexMatrix& a, int s) {
  const int n = a.n();
  AntisymTensor t(n, s);
  for (const MultiIndex& j : MultiIndex::subsets(n, s))
    for (const MultiIndex& i : MultiIndex::subsets(n, s))
      t.set(j, i, detail::complement_canonical(a, j, i));
  return t;
}

/// All reduced complements of order r,s as an antisymmetric tensor.
inline AntisymTensor reduced_complement_tensor(const ComplexMatrix& a, int r,
                                               int s) {
  const int n = a.n();
  AntisymTensor t(n, r);
  for (const MultiIndex& j : MultiIndex::subsets(n, r))
    for (const MultiIndex& i : MultiIndex::subsets(n, r))
      t.set(j, i, complement(a, s, j, i));
  return t;
}

/// Adjugate, i.e. the order-one complement: (adj A)^j_i = (det_1 A)^j_i,
/// satisfying A adj(A) = det(A) I.
inline ComplexMatrix adjugate(const ComplexMatrix& a) {
  const int n = a.n();
  ComplexMatrix r(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      r.at(j - 1, i - 1) =
          complement(a, 1, MultiIndex({j}, n), MultiIndex({i}, n));
  return r;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

/// Free indices of the two equivalent contraction forms: the contraction
/// A^j_{j_r} (det_s A)^{j_1..j_{r-1} j_r}_{i_1..i_{r-1} i}.
struct Lemma1Indices {
  int j = 1;
  std::vector<int> upper_rest;  // j_1 .. j_{r-1}
  std::vector<int> lower_rest;  // i_1 .. i_{r-1}
  int i = 1;
};

namespace detail {

inline cplx lemma1_lhs(const ComplexMatrix& a, const AntisymTensor& rc,
                       const Lemma1Indices& t) {
  const int n = a.n();
  cplx sum{};
  std::vector<int> upper = t.upper_rest;
  upper.push_back(0);
  std::vector<int> lower = t.lower_rest;
  lower.push_back(t.i);
  for (int jr = 1; jr <= n; ++jr) {
    upper.back() = jr;
    sum += a.at(t.j - 1, jr - 1) * rc.evaluate(upper, lower);
  }
  return sum;
}

/// Alternating sum of order-(n-s+1) minor determinants.
inline cplx lemma1_rhs_minors(const ComplexMatrix& a, const AntisymTensor& mi,
                              int s, const Lemma1Indices& t) {
  const int n = a.n();
  const int f = n - s;  // number of summed trailing pairs
  std::vector<int> jprime(f, 1), iprime(f, 1);
  cplx sum{};
  // Independent summation over j_s, j_{s+1}..j_n, i_{s+1}..i_n.
  while (true) {
    for (int js = 1; js <= n; ++js) {
      std::vector<int> du = t.upper_rest;
      du.push_back(js);
      du.insert(du.end(), jprime.begin(), jprime.end());
      std::vector<int> dl = t.lower_rest;
      dl.push_back(t.i);
      dl.insert(dl.end(), iprime.begin(), iprime.end());
      const int w = kronecker(du, dl, n);
      if (w == 0) continue;
      std::vector<int> mu{t.j};
      mu.insert(mu.end(), iprime.begin(), iprime.end());
      std::vector<int> ml{js};
      ml.insert(ml.end(), jprime.begin(), jprime.end());
      sum += static_cast<double>(w) * mi.evaluate(mu, ml);
    }
    // advance the (jprime, iprime) odometer
    int k = 0;
    for (; k < 2 * f; ++k) {
      int& v = (k < f) ? jprime[k] : iprime[k - f];
      if (v < n) {
        ++v;
        break;
      }
      v = 1;
    }
    if (k == 2 * f) break;
  }
  return sum / (factorial(n - s) * factorial(n - s + 1));
}

/// Alternating sum of order-(s-1) complements.
inline cplx lemma1_rhs_complements(const ComplexMatrix& a,
                                   const AntisymTensor& comp, int r, int s,
                                   const Lemma1Indices& t) {
  const int n = a.n();
  const int nk = s - 1;
  const int nj = s - r;
  std::vector<int> k(nk, 1), jmid(nj, 1);
  cplx sum{};
  while (true) {
    std::vector<int> du = k;
    du.push_back(t.j);
    std::vector<int> dl = t.lower_rest;
    dl.insert(dl.end(), jmid.begin(), jmid.end());
    dl.push_back(t.i);
    const int w = kronecker(du, dl, n);
    if (w != 0) {
      std::vector<int> cu = t.upper_rest;
      cu.insert(cu.end(), jmid.begin(), jmid.end());
      sum += static_cast<double>(w) * comp.evaluate(cu, k);
    }
    int idx = 0;
    for (; idx < nk + nj; ++idx) {
      int& v = (idx < nk) ? k[idx] : jmid[idx - nk];
      if (v < n) {
        ++v;
        break;
      }
      v = 1;
    }
    if (idx == nk + nj) break;
  }
  return sum / (factorial(s - 1) * factorial(s - r));
}

}  // namespace detail

/// Evaluates the contraction of A with a reduced complement of order r,s in
/// its three equivalent forms (direct, minor-sum, complement-sum) at one
/// free-index tuple and reports the maximum cross deviation.
inline IdentityCheckResult check_lemma1(const ComplexMatrix& a, int r, int s,
                                        const Lemma1Indices& t,
                                        double tol = 1e-10) {
  const int n = a.n();
  if (r < 1 || r > s || s > n) throw OrderError("need 1 <= r <= s <= n");
  const AntisymTensor rc = reduced_complement_tensor(a, r, s);
  const AntisymTensor mi = minor_tensor(a, n - s + 1);
  const AntisymTensor comp = complement_tensor(a, s - 1);
  const cplx lhs = detail::lemma1_lhs(a, rc, t);
  const cplx rhs1 = detail::lemma1_rhs_minors(a, mi, s, t);
  const cplx rhs2 = detail::lemma1_rhs_complements(a, comp, r, s, t);
  const double dev = std::max(std::abs(lhs - rhs1), std::abs(lhs - rhs2));
  const double scale =
      1.0 + std::pow(a.max_norm(), n - s + 1) * factorial(n - s + 1);
  return make_check("lemma1", dev, scale, tol);
}

/// Same check over every free-index tuple.  Cost grows quickly with n; keep
/// to n <= 4 and use the per-tuple overload with sampled tuples above that.
inline IdentityCheckResult check_lemma1(const ComplexMatrix& a, int r, int s,
                                        double tol = 1e-10) {
  const int n = a.n();
  if (r < 1 || r > s || s > n) throw OrderError("need 1 <= r <= s <= n");
  const AntisymTensor rc = reduced_complement_tensor(a, r, s);
  const AntisymTensor mi = minor_tensor(a, n - s + 1);
  const AntisymTensor comp = complement_tensor(a, s - 1);

  double dev = 0.0;
  std::vector<int> rest(2 * (r - 1), 1);
  while (true) {
    Lemma1Indices t;
    t.upper_rest.assign(rest.begin(), rest.begin() + (r - 1));
    t.lower_rest.assign(rest.begin() + (r - 1), rest.end());
    for (t.j = 1; t.j <= n; ++t.j)
      for (t.i = 1; t.i <= n; ++t.i) {
        const cplx lhs = detail::lemma1_lhs(a, rc, t);
        const cplx rhs1 = detail::lemma1_rhs_minors(a, mi, s, t);
        const cplx rhs2 = detail::lemma1_rhs_complements(a, comp, r, s, t);
        dev = std::max(dev, std::abs(lhs - rhs1));
        dev = std::max(dev, std::abs(lhs - rhs2));
      }
    int k = 0;
    for (; k < static_cast<int>(rest.size()); ++k) {
      if (rest[k] < n) {
        ++rest[k];
        break;
      }
      rest[k] = 1;
    }
    if (k == static_cast<int>(rest.size())) break;
  }
  const double scale =
      1.0 + std::pow(a.max_norm(), n - s + 1) * factorial(n - s + 1);
  return make_check("lemma1", dev, scale, tol);
}

/// Contracting s copies of A against the order-s complement yields
/// delta^J_I det A.
inline IdentityCheckResult check_corollary1(const ComplexMatrix& a, int s,
                                            double tol = 1e-10) {
  const int n = a.n();
  if (s < 0 || s > n) throw OrderError("order out of range");
  const cplx d = det(a);
  double dev = 0.0;
  for (const MultiIndex& j : MultiIndex::subsets(n, s))
    for (const MultiIndex& i : MultiIndex::subsets(n, s)) {
      cplx lhs{};
      for (const MultiIndex& k : MultiIndex::subsets(n, s))
        lhs += minor_det(a, j, k) * complement(a, s, k, i);
      const cplx rhs =
          static_cast<double>(kronecker(j.indices(), i.indices(), n)) * d;
      dev = std::max(dev, std::abs(lhs - rhs));
    }
  const double scale = 1.0 + std::pow(a.max_norm(), n) * factorial(n);
  return make_check("corollary1", dev, scale, tol);
}

/// Generalized Cauchy-Binet: the minor of a product equals the sum over
/// intermediate index sets of products of minors.
inline IdentityCheckResult cauchy_binet(const ComplexMatrix& a,
                                        const ComplexMatrix& b,
                                        const MultiIndex& j,
                                        const MultiIndex& i,
                                        double tol = 1e-10) {
  if (a.cols() != b.rows()) throw ShapeError("inner dimensions do not match");
  const int m = a.cols();
  const int s = j.size();
  if (i.size() != s) throw ShapeError("index sets must have equal size");
  if (s > std::min({a.rows(), b.cols(), m}))
    throw ShapeError("minor order exceeds matrix dimensions");

  const ComplexMatrix ab = a * b;
  const cplx lhs = minor_det(ab, j, i);
  cplx rhs{};
  for (const MultiIndex& k : MultiIndex::subsets(m, s)) {
    const MultiIndex ka(k.indices(), m);
    rhs += minor_det(a, j, ka) * minor_det(b, ka, i);
  }
  const double scale =
      1.0 + std::pow(a.max_norm() * b.max_norm() * m, s) * factorial(s);
  return make_check("cauchy_binet", std::abs(lhs - rhs), scale, tol);
}

}  // namespace compeig
