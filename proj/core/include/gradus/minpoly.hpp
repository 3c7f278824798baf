#pragma once

#include <functional>
#include <vector>

#include "gradus/linalg.hpp"
#include "gradus/poly.hpp"

namespace gradus {

// Minimal polynomial by Krylov iteration: for each basis start vector,
// find the least linear relation among v, Mv, M^2 v, ..., take the lcm of
// the relation polynomials, and verify annihilation on every basis vector.
// Works through a matvec callback so sparse operators never densify.
template <class K>
PolyT<K> minimal_polynomial_op(const std::function<Vec<K>(const Vec<K>&)>& matvec, int dim) {
  PolyT<K> mu = PolyT<K>::constant(K(1));

  auto apply_poly = [&](const PolyT<K>& p, Vec<K> v) {
    // p(M) v by Horner with matvecs
    Vec<K> acc(dim, K(0));
    for (int i = p.degree(); i >= 0; --i) {
      acc = matvec(acc);
      if (!is_zero(p.coeff(i)))
        for (int r = 0; r < dim; ++r) acc[r] += p.coeff(i) * v[r];
    }
    return acc;
  };

  for (int start = 0; start < dim; ++start) {
    Vec<K> e(dim, K(0));
    e[start] = K(1);
    // quick filter: mu may already annihilate this start vector
    {
      Vec<K> w = apply_poly(mu, e);
      bool zero = true;
      for (const auto& x : w)
        if (!is_zero(x)) {
          zero = false;
          break;
        }
      if (zero) continue;
    }
    // Krylov relation for e: echelonize iterates with coefficient tracking
    std::vector<Vec<K>> basis_rows;     // reduced iterates
    std::vector<int> pivot_cols;
    std::vector<PolyT<K>> row_poly;     // polynomial producing each reduced iterate
    Vec<K> v = e;
    PolyT<K> vp = PolyT<K>::constant(K(1));
    PolyT<K> relation;
    for (int step = 0; step <= dim; ++step) {
      Vec<K> w = v;
      PolyT<K> wp = vp;
      for (size_t k = 0; k < basis_rows.size(); ++k) {
        const K& c = w[pivot_cols[k]];
        if (is_zero(c)) continue;
        K f = c;
        for (int j = 0; j < dim; ++j)
          if (!is_zero(basis_rows[k][j])) w[j] = w[j] - f * basis_rows[k][j];
        wp = wp - row_poly[k] * f;
      }
      int pc = -1;
      for (int j = 0; j < dim; ++j)
        if (!is_zero(w[j])) {
          pc = j;
          break;
        }
      if (pc < 0) {
        relation = wp.monic();
        break;
      }
      K inv = K(1) / w[pc];
      for (int j = 0; j < dim; ++j)
        if (!is_zero(w[j])) w[j] = w[j] * inv;
      wp = wp * inv;
      basis_rows.push_back(std::move(w));
      pivot_cols.push_back(pc);
      row_poly.push_back(std::move(wp));
      v = matvec(v);
      vp = vp * PolyT<K>::x();
    }
    if (relation.is_zero()) throw std::logic_error("minimal_polynomial: no relation found");
    // lcm(mu, relation)
    auto g = gcd(mu, relation);
    mu = (mu * relation) / g;
  }
  return mu.monic();
}

template <class K>
PolyT<K> minimal_polynomial(const Mat<K>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("minimal_polynomial: square matrix required");
  return minimal_polynomial_op<K>([&](const Vec<K>& v) { return M * v; }, M.rows());
}

template <class K>
PolyT<K> minimal_polynomial(const SparseMat<K>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("minimal_polynomial: square matrix required");
  return minimal_polynomial_op<K>([&](const Vec<K>& v) { return M * v; }, M.rows());
}

}  // namespace gradus
