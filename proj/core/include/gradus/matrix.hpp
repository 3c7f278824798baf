#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "gradus/rational.hpp"

namespace gradus {

template <class K>
using Vec = std::vector<K>;

// Dense exact matrix. Fine below ~dimension 32 and for slice-sized systems;
// ad-operators of the big catalog algebras go through SparseMat instead.
template <class K>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const K& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const K& x = at(r, k);
        if (is_zero(x)) continue;
        for (int c = 0; c < o.cols_; ++c) {
          if (is_zero(o.at(k, c))) continue;
          p.at(r, c) += x * o.at(k, c);
        }
      }
    return p;
  }

  Vec<K> operator*(const Vec<K>& v) const {
    assert(int(v.size()) == cols_);
    Vec<K> out(rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!is_zero(at(r, c)) && !is_zero(v[c])) out[r] += at(r, c) * v[c];
    return out;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }

  Mat operator*(const K& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<K> row(int r) const {
    Vec<K> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
  }

  Vec<K> col(int c) const {
    Vec<K> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }

  void set_row(int r, const Vec<K>& v) {
    assert(int(v.size()) == cols_);
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

private:
  int rows_, cols_;
  std::vector<K> a_;
};

// Sparse matrix, rows of (col, value) sorted by col. Entries are nonzero.
template <class K>
class SparseMat {
public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const K& v) {
    if (is_zero(v)) return;
    auto& row = row_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (is_zero(it->second)) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  const std::vector<std::pair<int, K>>& row(int r) const { return row_[r]; }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& r : row_) n += r.size();
    return n;
  }

  K get(int r, int c) const {
    const auto& row = row_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return K(0);
  }

  Vec<K> operator*(const Vec<K>& v) const {
    assert(int(v.size()) == cols_);
    Vec<K> out(rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, x] : row_[r])
        if (!is_zero(v[c])) out[r] += x * v[c];
    return out;
  }

  SparseMat operator*(const SparseMat& o) const {
    assert(cols_ == o.rows_);
    SparseMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
      for (const auto& [k, x] : row_[r])
        for (const auto& [c, y] : o.row_[k]) p.add(r, c, x * y);
    }
    return p;
  }

  SparseMat operator-(const SparseMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SparseMat d = *this;
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, y] : o.row_[r]) d.add(r, c, K(0) - y);
    return d;
  }

  SparseMat operator+(const SparseMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SparseMat s = *this;
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, y] : o.row_[r]) s.add(r, c, y);
    return s;
  }

  void scale(const K& s) {
    if (is_zero(s)) {
      for (auto& r : row_) r.clear();
      return;
    }
    for (auto& r : row_)
      for (auto& [c, v] : r) v = v * s;
  }

  bool empty() const {
    for (const auto& r : row_)
      if (!r.empty()) return false;
    return true;
  }

  // Trace of (*this) * o computed from sparsity: sum_{r,c} a[r,c] * o[c,r].
  K trace_product(const SparseMat& o) const {
    assert(cols_ == o.rows_ && rows_ == o.cols_);
    K t(0);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, x] : row_[r]) {
        K y = o.get(c, r);
        if (!is_zero(y)) t += x * y;
      }
    return t;
  }

  Mat<K> dense() const {
    Mat<K> m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, x] : row_[r]) m.at(r, c) = x;
    return m;
  }

  static SparseMat from_dense(const Mat<K>& m) {
    SparseMat s(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!is_zero(m.at(r, c))) s.row_[r].push_back({c, m.at(r, c)});
    return s;
  }

private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, K>>> row_;
};

}  // namespace gradus
