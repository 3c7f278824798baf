#pragma once

#include <stdexcept>

#include "gradus/minpoly.hpp"

namespace gradus {

// Jordan-Chevalley decomposition M = S + N with S semisimple (squarefree
// minimal polynomial), N nilpotent, SN = NS, and S a polynomial in M.
// The polynomial is found by Newton iteration on the squarefree part of the
// minimal polynomial inside K[t]/(mu), then evaluated column-wise.
template <class K>
struct JordanChevalley {
  Mat<K> S, N;
  PolyT<K> witness;  // S = witness(M)
};

template <class K>
PolyT<K> semisimple_projection_poly(const PolyT<K>& mu) {
  PolyT<K> q = squarefree_part(mu);
  PolyT<K> s = PolyT<K>::x();
  if ((q % mu).is_zero() || q == mu) return s;  // already semisimple
  // Newton: s <- s - q(s)/q'(s) (mod mu); q' (s) is invertible mod mu.
  const PolyT<K> qp = q.derivative();
  for (int iter = 0; iter < 64; ++iter) {
    PolyT<K> qs = compose(q, s) % mu;
    if (qs.is_zero()) return s;
    PolyT<K> qps = compose(qp, s) % mu;
    PolyT<K> inv = inverse_mod(qps, mu);
    s = (s - qs * inv) % mu;
  }
  throw std::logic_error("semisimple_projection_poly: Newton iteration did not converge");
}

template <class K>
JordanChevalley<K> matrix_jordan_chevalley(const Mat<K>& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("matrix_jordan_chevalley: square matrix required");
  const int n = M.rows();
  PolyT<K> mu = minimal_polynomial(M);
  PolyT<K> s = semisimple_projection_poly(mu);

  JordanChevalley<K> out;
  out.witness = s;
  out.S = Mat<K>(n, n);
  // evaluate s(M) column-wise with Horner
  for (int j = 0; j < n; ++j) {
    Vec<K> acc(n, K(0));
    for (int d = s.degree(); d >= 0; --d) {
      acc = M * acc;
      if (!is_zero(s.coeff(d))) acc[j] += s.coeff(d);
    }
    for (int r = 0; r < n; ++r) out.S.at(r, j) = acc[r];
  }
  out.N = M - out.S;
  return out;
}

// Exact exponential of a nilpotent matrix via the finite series, computed
// column-wise. Errors out when the argument is not nilpotent.
template <class K>
Mat<K> nilpotent_exp(const Mat<K>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("nilpotent_exp: square matrix required");
  const int n = M.rows();
  Mat<K> E(n, n);
  for (int j = 0; j < n; ++j) {
    Vec<K> term(n, K(0));
    term[j] = K(1);
    Vec<K> acc = term;
    for (int k = 1; k <= n; ++k) {
      term = M * term;
      bool zero = true;
      for (const auto& x : term)
        if (!is_zero(x)) {
          zero = false;
          break;
        }
      if (zero) break;
      if (k == n) throw std::domain_error("exp requires nilpotent argument");
      K inv_k = K(1) / K(k);
      for (int r = 0; r < n; ++r)
        if (!is_zero(term[r])) {
          term[r] = term[r] * inv_k;
          acc[r] += term[r];
        }
    }
    for (int r = 0; r < n; ++r) E.at(r, j) = acc[r];
  }
  return E;
}

}  // namespace gradus
