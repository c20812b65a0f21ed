#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spinlab/scalar.hpp"

namespace spinlab {

using IndexSet = std::vector<int>;  // strictly increasing indices in [0, n)

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// All strictly increasing p-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> subsets(int n, int p) {
  std::vector<IndexSet> out;
  if (p < 0 || p > n) return out;
  IndexSet cur(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < p; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// Lexicographic rank of a sorted subset among all p-subsets of {0..n-1}.
inline long subset_rank(int n, const IndexSet& s) {
  long r = 0;
  int prev = -1;
  int p = static_cast<int>(s.size());
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < s[static_cast<size_t>(i)]; ++v) r += binom(n - 1 - v, p - 1 - i);
    prev = s[static_cast<size_t>(i)];
  }
  return r;
}

/// Sort an index tuple; returns +1/-1 for the sorting permutation, 0 on repeats.
inline int sort_with_sign(IndexSet& idx) {
  int sign = 1;
  const int m = static_cast<int>(idx.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m - 1 - i; ++j)
      if (idx[static_cast<size_t>(j)] > idx[static_cast<size_t>(j + 1)]) {
        std::swap(idx[static_cast<size_t>(j)], idx[static_cast<size_t>(j + 1)]);
        sign = -sign;
      }
  for (int i = 0; i + 1 < m; ++i)
    if (idx[static_cast<size_t>(i)] == idx[static_cast<size_t>(i + 1)]) return 0;
  return sign;
}

/// Sign of the shuffle merging two disjoint sorted sets (a, b) into sorted a∪b:
/// parity of the inversion count of the concatenation.
inline int merge_sign(const IndexSet& a, const IndexSet& b) {
  long inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

inline IndexSet merge_sorted(const IndexSet& a, const IndexSet& b) {
  IndexSet u;
  u.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

inline bool disjoint(const IndexSet& a, const IndexSet& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

inline IndexSet complement(int n, const IndexSet& s) {
  IndexSet c;
  c.reserve(static_cast<size_t>(n) - s.size());
  size_t k = 0;
  for (int v = 0; v < n; ++v) {
    if (k < s.size() && s[k] == v) {
      ++k;
      continue;
    }
    c.push_back(v);
  }
  return c;
}

/// Position of v inside sorted set s, or -1.
inline int position_in(const IndexSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) return -1;
  return static_cast<int>(it - s.begin());
}

/// Remove element at position pos.
inline IndexSet erase_at(IndexSet s, int pos) {
  s.erase(s.begin() + pos);
  return s;
}

/// Insert v into sorted s; returns the insertion position via out-param.
inline IndexSet insert_sorted(IndexSet s, int v, int* pos) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  *pos = static_cast<int>(it - s.begin());
  s.insert(it, v);
  return s;
}

/// All permutations of {0..m-1} with signs, for small m.
inline const std::vector<std::pair<std::vector<int>, int>>& permutations_with_sign(int m) {
  static std::vector<std::vector<std::pair<std::vector<int>, int>>> cache(9);
  auto& slot = cache[static_cast<size_t>(m)];
  if (!slot.empty() || m == 0) {
    if (slot.empty() && m == 0) slot.push_back({{}, 1});
    return slot;
  }
  std::vector<int> perm(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    std::vector<int> p = perm;
    int sign = 1;
    // count inversions
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) sign = -sign;
    slot.push_back({p, sign});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return slot;
}

}  // namespace spinlab
