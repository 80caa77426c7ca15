#pragma once

#include <algorithm>
#include <vector>

#include "compeig/errors.hpp"

namespace compeig {

/// Strictly increasing set of distinct indices in 1..n, labelling rows or
/// columns of a minor.  One-based to match the usual tensor-index
/// conventions; conversion to storage offsets happens at the matrix access
/// sites only.
class MultiIndex {
 public:
  MultiIndex(std::vector<int> indices, int n)
      : idx_(std::move(indices)), n_(n) {
    if (!std::is_sorted(idx_.begin(), idx_.end()))
      throw InvalidIndexError("indices must be strictly increasing");
    for (size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] < 1 || idx_[k] > n_)
        throw InvalidIndexError("index out of range 1..n");
      if (k > 0 && idx_[k] == idx_[k - 1])
        throw InvalidIndexError("indices must be distinct");
    }
  }

  static MultiIndex full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return MultiIndex(std::move(v), n);
  }

  static MultiIndex empty(int n) { return MultiIndex({}, n); }

  int size() const { return static_cast<int>(idx_.size()); }
  int ambient() const { return n_; }
  int operator[](int k) const { return idx_[k]; }
  const std::vector<int>& indices() const { return idx_; }

  bool contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }

  MultiIndex complement() const {
    std::vector<int> c;
    c.reserve(n_ - size());
    for (int i = 1; i <= n_; ++i)
      if (!contains(i)) c.push_back(i);
    return MultiIndex(std::move(c), n_);
  }

  bool operator==(const MultiIndex& o) const {
    return n_ == o.n_ && idx_ == o.idx_;
  }

  bool operator<(const MultiIndex& o) const { return idx_ < o.idx_; }

  /// All size-r subsets of 1..n in lexicographic order.
  static std::vector<MultiIndex> subsets(int n, int r) {
    std::vector<MultiIndex> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
      out.emplace_back(cur, n);
      int k = r - 1;
      while (k >= 0 && cur[k] == n - (r - 1 - k)) --k;
      if (k < 0) break;
      ++cur[k];
      for (int j = k + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  }

 private:
  std::vector<int> idx_;
  int n_ = 0;
};

/// Sign of the permutation that sorts the concatenation (J, K) of two
/// disjoint sorted index sets, i.e. (-1)^inversions.
inline int merge_sign(const MultiIndex& j, const MultiIndex& k) {
  int inversions = 0;
  for (int a = 0; a < j.size(); ++a)
    for (int b = 0; b < k.size(); ++b)
      if (j[a] > k[b]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace compeig
