#pragma once

#include <span>
#include <vector>

#include "compeig/errors.hpp"

namespace compeig {

/// Sign of a permutation of 1..s given as the value list, (-1)^inversions.
/// Exact integer arithmetic throughout.
inline int perm_sign(std::span<const int> p) {
  const int s = static_cast<int>(p.size());
  std::vector<char> seen(s + 1, 0);
  for (int v : p) {
    if (v < 1 || v > s || seen[v])
      throw InvalidPermutationError("input is not a bijection on 1..s");
    seen[v] = 1;
  }
  int inversions = 0;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      if (p[a] > p[b]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

inline int perm_sign(const std::vector<int>& p) {
  return perm_sign(std::span<const int>(p));
}

namespace detail {

/// Sign of the permutation sorting `v` (all entries distinct), or 0 on a
/// repeat.  Used for both index lists of the generalized Kronecker symbol.
inline int sort_sign(std::span<const int> v) {
  const int s = static_cast<int>(v.size());
  int inversions = 0;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) ++inversions;
    }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// Generalized Kronecker symbol delta^{upper}_{lower} of order s in
/// dimension n.  Zero if either list repeats an index or the two lists
/// differ as sets; otherwise the sign of the permutation relating them.
inline int kronecker(std::span<const int> upper, std::span<const int> lower,
                     int n) {
  if (upper.size() != lower.size())
    throw InvalidIndexError("index lists must have equal length");
  const int s = static_cast<int>(upper.size());
  if (s > n) throw InvalidIndexError("order exceeds ambient dimension");
  for (int v : upper)
    if (v < 1 || v > n) throw InvalidIndexError("upper index out of range");
  for (int v : lower)
    if (v < 1 || v > n) throw InvalidIndexError("lower index out of range");

  const int su = detail::sort_sign(upper);
  if (su == 0) return 0;
  const int sl = detail::sort_sign(lower);
  if (sl == 0) return 0;

  std::vector<int> a(upper.begin(), upper.end());
  std::vector<int> b(lower.begin(), lower.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return 0;
  return su * sl;
}

inline int kronecker(const std::vector<int>& upper,
                     const std::vector<int>& lower, int n) {
  return kronecker(std::span<const int>(upper), std::span<const int>(lower),
                   n);
}

/// Levi-Civita symbol epsilon_{i1...in} in dimension n: parity of the index
/// list as a permutation of 1..n, zero on repeats.
inline int levi_civita(std::span<const int> idx, int n) {
  if (static_cast<int>(idx.size()) != n)
    throw InvalidIndexError("Levi-Civita symbol needs exactly n indices");
  for (int v : idx)
    if (v < 1 || v > n) throw InvalidIndexError("index out of range");
  return detail::sort_sign(idx);
}

inline int levi_civita(const std::vector<int>& idx, int n) {
  return levi_civita(std::span<const int>(idx), n);
}

}  // namespace compeig
