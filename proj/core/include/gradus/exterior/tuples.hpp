#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace gradus::tuples {

// Strictly increasing index tuples and wedge-sign combinatorics.

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Sorts v in place; returns the sign of the sorting permutation, or 0 when
// v contains a repeated index.
inline int sign_sort(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

// Sign of e_a ^ e_b relative to the sorted concatenation; 0 on overlap.
inline int concat_sign(const std::vector<int>& a, const std::vector<int>& b,
                       std::vector<int>* sorted_out = nullptr) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  v.insert(v.end(), a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  int s = sign_sort(v);
  if (sorted_out) *sorted_out = std::move(v);
  return s;
}

inline std::vector<int> complement(const std::vector<int>& s, int n) {
  std::vector<int> out;
  size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < s.size() && s[p] == i) {
      ++p;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

// Replace index `from` by `to` in sorted tuple s; returns the resorting sign
// (0 when `to` already present) and writes the sorted result.
inline int replace_index(const std::vector<int>& s, int from, int to, std::vector<int>& out) {
  out.clear();
  for (int x : s) out.push_back(x == from ? to : x);
  return sign_sort(out);
}

class TupleIndex {
public:
  TupleIndex() = default;
  TupleIndex(int n, int k) : list_(subsets(n, k)) {
    for (size_t i = 0; i < list_.size(); ++i) pos_[list_[i]] = int(i);
  }
  int size() const { return int(list_.size()); }
  const std::vector<int>& tuple(int i) const { return list_[i]; }
  int index(const std::vector<int>& t) const {
    auto it = pos_.find(t);
    return it == pos_.end() ? -1 : it->second;
  }

private:
  std::vector<std::vector<int>> list_;
  std::map<std::vector<int>, int> pos_;
};

}  // namespace gradus::tuples
