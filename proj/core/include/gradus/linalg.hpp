#pragma once

#include <optional>
#include <vector>

#include "gradus/matrix.hpp"

namespace gradus {

// Reduced row echelon form, in place. Returns pivot column per pivot row.
// Deterministic: pivots are the leftmost nonzero columns, scanned top-down,
// every pivot normalized to 1 and its column cleared. Tie-breaking for all
// solvers below follows from this convention (least-lexicographic echelon).
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    K inv = K(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j)
      if (!is_zero(m.at(r, j))) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m.at(r, j))) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return int(rref(m).size());
}

struct SolveStats {
  int rank = 0;
};

template <class K>
struct LinearSystemResult {
  int rank = 0;
  Mat<K> kernel;  // rows form a canonical (echelonized) kernel basis
  std::optional<Vec<K>> solution;  // present iff b given and consistent
};

// Exact elimination on [M | b]: rank, echelonized kernel basis of M, and the
// canonical particular solution (free variables zero) when b is consistent.
template <class K>
LinearSystemResult<K> rank_kernel_solve(const Mat<K>& M, const Vec<K>* b = nullptr) {
  const int n = M.cols();
  const bool aug = b != nullptr;
  Mat<K> W(M.rows(), n + (aug ? 1 : 0));
  for (int r = 0; r < M.rows(); ++r) {
    for (int c = 0; c < n; ++c) W.at(r, c) = M.at(r, c);
    if (aug) W.at(r, n) = (*b)[r];
  }
  Mat<K> Wc = W;
  std::vector<int> piv = rref(Wc);

  LinearSystemResult<K> out;
  bool inconsistent = aug && !piv.empty() && piv.back() == n;
  if (inconsistent) piv.pop_back();
  out.rank = int(piv.size());

  std::vector<bool> is_pivot(n, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  out.kernel = Mat<K>(int(free_cols.size()), n);
  for (int k = 0; k < int(free_cols.size()); ++k) {
    int f = free_cols[k];
    out.kernel.at(k, f) = K(1);
    for (int r = 0; r < out.rank; ++r) out.kernel.at(k, piv[r]) = K(0) - Wc.at(r, f);
  }
  rref(out.kernel);  // canonical form

  if (aug && !inconsistent) {
    Vec<K> x(n, K(0));
    for (int r = 0; r < out.rank; ++r) x[piv[r]] = Wc.at(r, n);
    out.solution = std::move(x);
  }
  return out;
}

template <class K>
Mat<K> kernel_basis(const Mat<K>& M) {
  return rank_kernel_solve<K>(M, nullptr).kernel;
}

template <class K>
std::optional<Vec<K>> solve(const Mat<K>& M, const Vec<K>& b) {
  return rank_kernel_solve(M, &b).solution;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& M) {
  const int n = M.rows();
  if (n != M.cols()) return std::nullopt;
  Mat<K> W(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) W.at(r, c) = M.at(r, c);
    W.at(r, n + r) = K(1);
  }
  auto piv = rref(W);
  if (int(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<K> I(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) I.at(r, c) = W.at(r, n + c);
  return I;
}

// Determinant by exact Gaussian elimination.
template <class K>
K det(Mat<K> m) {
  const int n = m.rows();
  assert(n == m.cols());
  K d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!is_zero(m.at(r, c))) {
        p = r;
        break;
      }
    if (p < 0) return K(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = K(0) - d;
    }
    d = d * m.at(c, c);
    K inv = K(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(m.at(r, c))) continue;
      K f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j)
        if (!is_zero(m.at(c, j))) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
    }
  }
  return d;
}

// Incremental exact solver: feeds rows of [A | b] one at a time, maintaining
// a reduced echelon. Rank stops growing at #columns; inconsistency is flagged
// as soon as a row reduces to (0,...,0 | nonzero).
template <class K>
class IncrementalSolver {
public:
  explicit IncrementalSolver(int cols) : cols_(cols) {}

  // Returns false when the row is inconsistent with the current system.
  bool add_row(Vec<K> row, K rhs) {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const int pc = pivot_col_[k];
      if (is_zero(row[pc])) continue;
      K f = row[pc];
      const auto& er = rows_[k];
      for (int c = 0; c < cols_; ++c)
        if (!is_zero(er[c])) row[c] = row[c] - f * er[c];
      rhs = rhs - f * rhs_[k];
    }
    int pc = -1;
    for (int c = 0; c < cols_; ++c)
      if (!is_zero(row[c])) {
        pc = c;
        break;
      }
    if (pc < 0) {
      if (!is_zero(rhs)) {
        consistent_ = false;
        return false;
      }
      return true;
    }
    K inv = K(1) / row[pc];
    for (int c = pc; c < cols_; ++c)
      if (!is_zero(row[c])) row[c] = row[c] * inv;
    rhs = rhs * inv;
    // back-substitute into earlier rows to keep the echelon reduced
    for (size_t k = 0; k < rows_.size(); ++k) {
      K f = rows_[k][pc];
      if (is_zero(f)) continue;
      for (int c = 0; c < cols_; ++c)
        if (!is_zero(row[c])) rows_[k][c] = rows_[k][c] - f * row[c];
      rhs_[k] = rhs_[k] - f * rhs;
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    pivot_col_.push_back(pc);
    return true;
  }

  int rank() const { return int(rows_.size()); }
  bool consistent() const { return consistent_; }
  bool full_rank() const { return rank() == cols_; }

  // Canonical solution with free variables set to zero.
  std::optional<Vec<K>> solution() const {
    if (!consistent_) return std::nullopt;
    Vec<K> x(cols_, K(0));
    for (size_t k = 0; k < rows_.size(); ++k) x[pivot_col_[k]] = rhs_[k];
    return x;
  }

private:
  int cols_;
  bool consistent_ = true;
  std::vector<Vec<K>> rows_;
  std::vector<K> rhs_;
  std::vector<int> pivot_col_;
};

}  // namespace gradus
