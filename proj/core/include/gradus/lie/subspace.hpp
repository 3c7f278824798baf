#pragma once

#include <stdexcept>

#include "gradus/lie/algebra.hpp"

namespace gradus {

// Subspace of a graded algebra, held as a canonical reduced echelon basis
// (rows). Canonical form makes subspace equality plain matrix equality.
template <class K>
struct SubspaceT {
  AlgebraPtr<K> alg;
  Mat<K> basis;  // rows, RREF

  SubspaceT() = default;
  SubspaceT(AlgebraPtr<K> a, Mat<K> b) : alg(std::move(a)), basis(std::move(b)) {}

  static SubspaceT zero(AlgebraPtr<K> a) {
    int d = a->dim;
    return SubspaceT(std::move(a), Mat<K>(0, d));
  }

  static SubspaceT full(AlgebraPtr<K> a) {
    int d = a->dim;
    return SubspaceT(std::move(a), Mat<K>::identity(d));
  }

  static SubspaceT from_span(AlgebraPtr<K> a, const std::vector<Vec<K>>& vectors) {
    Mat<K> m(int(vectors.size()), a->dim);
    for (size_t r = 0; r < vectors.size(); ++r) m.set_row(int(r), vectors[r]);
    auto piv = rref(m);
    Mat<K> out(int(piv.size()), a->dim);
    for (size_t r = 0; r < piv.size(); ++r) out.set_row(int(r), m.row(int(r)));
    return SubspaceT(std::move(a), std::move(out));
  }

  static SubspaceT from_elements(AlgebraPtr<K> a, const std::vector<ElementT<K>>& els) {
    std::vector<Vec<K>> vs;
    vs.reserve(els.size());
    for (const auto& e : els) vs.push_back(e.coords);
    return from_span(std::move(a), vs);
  }

  int dimension() const { return basis.rows(); }

  ElementT<K> element(int r) const { return ElementT<K>(alg, basis.row(r)); }

  std::vector<ElementT<K>> elements() const {
    std::vector<ElementT<K>> out;
    for (int r = 0; r < dimension(); ++r) out.push_back(element(r));
    return out;
  }

  bool contains(const Vec<K>& v) const {
    Vec<K> w = v;
    for (int r = 0; r < basis.rows(); ++r) {
      int pc = -1;
      for (int c = 0; c < basis.cols(); ++c)
        if (!is_zero(basis.at(r, c))) {
          pc = c;
          break;
        }
      if (pc < 0) continue;
      if (is_zero(w[pc])) continue;
      K f = w[pc];
      for (int c = 0; c < basis.cols(); ++c)
        if (!is_zero(basis.at(r, c))) w[c] = w[c] - f * basis.at(r, c);
    }
    for (const auto& x : w)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const ElementT<K>& e) const { return contains(e.coords); }

  // Coordinates of v in this basis, when v lies in the subspace.
  std::optional<Vec<K>> coordinates_of(const Vec<K>& v) const {
    Vec<K> w = v;
    Vec<K> coeff(dimension(), K(0));
    for (int r = 0; r < basis.rows(); ++r) {
      int pc = -1;
      for (int c = 0; c < basis.cols(); ++c)
        if (!is_zero(basis.at(r, c))) {
          pc = c;
          break;
        }
      if (pc < 0) continue;
      if (is_zero(w[pc])) continue;
      coeff[r] = w[pc];
      K f = w[pc];
      for (int c = 0; c < basis.cols(); ++c)
        if (!is_zero(basis.at(r, c))) w[c] = w[c] - f * basis.at(r, c);
    }
    for (const auto& x : w)
      if (!is_zero(x)) return std::nullopt;
    return coeff;
  }

  SubspaceT sum(const SubspaceT& o) const {
    Mat<K> m(basis.rows() + o.basis.rows(), basis.cols());
    for (int r = 0; r < basis.rows(); ++r) m.set_row(r, basis.row(r));
    for (int r = 0; r < o.basis.rows(); ++r) m.set_row(basis.rows() + r, o.basis.row(r));
    auto piv = rref(m);
    Mat<K> out(int(piv.size()), basis.cols());
    for (size_t r = 0; r < piv.size(); ++r) out.set_row(int(r), m.row(int(r)));
    return SubspaceT(alg, std::move(out));
  }

  SubspaceT intersect(const SubspaceT& o) const {
    // Zassenhaus-flavored: kernel combos of stacked bases.
    const int du = dimension(), dv = o.dimension(), n = basis.cols();
    Mat<K> m(n, du + dv);
    for (int c = 0; c < du; ++c)
      for (int r = 0; r < n; ++r) m.at(r, c) = basis.at(c, r);
    for (int c = 0; c < dv; ++c)
      for (int r = 0; r < n; ++r) m.at(r, du + c) = K(0) - o.basis.at(c, r);
    Mat<K> ker = kernel_basis(m);
    std::vector<Vec<K>> vs;
    for (int r = 0; r < ker.rows(); ++r) {
      Vec<K> v(n, K(0));
      for (int c = 0; c < du; ++c) {
        if (is_zero(ker.at(r, c))) continue;
        for (int j = 0; j < n; ++j) v[j] += ker.at(r, c) * basis.at(c, j);
      }
      vs.push_back(std::move(v));
    }
    return from_span(alg, vs);
  }

  bool operator==(const SubspaceT& o) const { return basis == o.basis; }
  bool operator!=(const SubspaceT& o) const { return !(*this == o); }
};

using Subspace = SubspaceT<Rational>;

// Kernel of ad(x) intersected with `within`.
template <class K>
SubspaceT<K> centralizer(const ElementT<K>& x, const SubspaceT<K>& within) {
  const auto& alg = *within.alg;
  const int w = within.dimension();
  Mat<K> C(alg.dim, w);
  for (int r = 0; r < w; ++r) {
    auto br = alg.bracket(x, within.element(r));
    for (int i = 0; i < alg.dim; ++i) C.at(i, r) = br.coords[i];
  }
  Mat<K> ker = kernel_basis(C);
  std::vector<Vec<K>> vs;
  for (int r = 0; r < ker.rows(); ++r) {
    Vec<K> v(alg.dim, K(0));
    for (int c = 0; c < w; ++c) {
      if (is_zero(ker.at(r, c))) continue;
      for (int j = 0; j < alg.dim; ++j) v[j] += ker.at(r, c) * within.basis.at(c, j);
    }
    vs.push_back(std::move(v));
  }
  return SubspaceT<K>::from_span(within.alg, vs);
}

template <class K>
SubspaceT<K> centralizer(const ElementT<K>& x) {
  return centralizer(x, SubspaceT<K>::full(x.alg));
}

// {x in within : [x, e] in span(e)} via a bordered kernel.
template <class K>
SubspaceT<K> normalizer_of_line(const ElementT<K>& e, const SubspaceT<K>& within) {
  if (e.is_zero()) throw std::invalid_argument("normalizer_of_line: e must be nonzero");
  const auto& alg = *within.alg;
  const int w = within.dimension();
  Mat<K> C(alg.dim, w + 1);
  for (int r = 0; r < w; ++r) {
    auto br = alg.bracket(within.element(r), e);
    for (int i = 0; i < alg.dim; ++i) C.at(i, r) = br.coords[i];
  }
  for (int i = 0; i < alg.dim; ++i) C.at(i, w) = e.coords[i];
  Mat<K> ker = kernel_basis(C);
  std::vector<Vec<K>> vs;
  for (int r = 0; r < ker.rows(); ++r) {
    Vec<K> v(alg.dim, K(0));
    bool nonzero = false;
    for (int c = 0; c < w; ++c) {
      if (is_zero(ker.at(r, c))) continue;
      nonzero = true;
      for (int j = 0; j < alg.dim; ++j) v[j] += ker.at(r, c) * within.basis.at(c, j);
    }
    if (nonzero) vs.push_back(std::move(v));
  }
  return SubspaceT<K>::from_span(within.alg, vs);
}

// Verifies S is closed under the bracket.
template <class K>
bool is_subalgebra(const SubspaceT<K>& S) {
  const auto& alg = *S.alg;
  for (int i = 0; i < S.dimension(); ++i)
    for (int j = i + 1; j < S.dimension(); ++j)
      if (!S.contains(alg.bracket(S.element(i), S.element(j)))) return false;
  return true;
}

// Span of all pairwise brackets of S (the derived subalgebra of S).
template <class K>
SubspaceT<K> commutant(const SubspaceT<K>& S) {
  if (!is_subalgebra(S)) throw std::invalid_argument("commutant: input is not a subalgebra");
  const auto& alg = *S.alg;
  std::vector<Vec<K>> vs;
  for (int i = 0; i < S.dimension(); ++i)
    for (int j = i + 1; j < S.dimension(); ++j)
      vs.push_back(alg.bracket(S.element(i), S.element(j)).coords);
  return SubspaceT<K>::from_span(S.alg, vs);
}

// Elements of S commuting with all of S.
template <class K>
SubspaceT<K> center_of(const SubspaceT<K>& S) {
  if (!is_subalgebra(S)) throw std::invalid_argument("center_of: input is not a subalgebra");
  const auto& alg = *S.alg;
  const int w = S.dimension();
  Mat<K> C(alg.dim * w, w);
  for (int a = 0; a < w; ++a) {
    for (int b = 0; b < w; ++b) {
      auto br = alg.bracket(S.element(b), S.element(a));
      for (int i = 0; i < alg.dim; ++i) C.at(a * alg.dim + i, b) = br.coords[i];
    }
  }
  Mat<K> ker = kernel_basis(C);
  std::vector<Vec<K>> vs;
  for (int r = 0; r < ker.rows(); ++r) {
    Vec<K> v(alg.dim, K(0));
    for (int c = 0; c < w; ++c) {
      if (is_zero(ker.at(r, c))) continue;
      for (int j = 0; j < alg.dim; ++j) v[j] += ker.at(r, c) * S.basis.at(c, j);
    }
    vs.push_back(std::move(v));
  }
  return SubspaceT<K>::from_span(S.alg, vs);
}

// Builds a standalone graded algebra on a bracket-closed graded subspace.
// Rows of the new basis are the per-degree echelon bases of S.
template <class K>
AlgebraPtr<K> graded_subalgebra(const SubspaceT<K>& S, const std::string& name) {
  const auto& amb = *S.alg;
  if (!is_subalgebra(S)) throw std::invalid_argument("graded_subalgebra: not closed under bracket");
  // split S into homogeneous parts
  std::vector<Vec<K>> rows;
  std::vector<int> degs;
  for (int k = 0; k < amb.modulus; ++k) {
    std::vector<Vec<K>> part;
    for (int r = 0; r < S.dimension(); ++r) {
      auto e = S.element(r).graded_component(k);
      if (!e.is_zero()) part.push_back(e.coords);
    }
    auto sub = SubspaceT<K>::from_span(S.alg, part);
    auto inter = sub.intersect(S);
    for (int r = 0; r < inter.dimension(); ++r) {
      rows.push_back(inter.basis.row(r));
      degs.push_back(k);
    }
  }
  if (int(rows.size()) != S.dimension())
    throw std::invalid_argument("graded_subalgebra: subspace is not graded");

  auto out = std::make_shared<GradedAlgebraT<K>>(name, int(rows.size()), amb.modulus);
  out->degree = degs;
  Mat<K> B(int(rows.size()), amb.dim);
  for (size_t r = 0; r < rows.size(); ++r) B.set_row(int(r), rows[r]);
  SubspaceT<K> full(S.alg, B);  // rows independent; used for coordinates
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      auto br = amb.bracket(ElementT<K>(S.alg, rows[i]), ElementT<K>(S.alg, rows[j]));
      auto coords = full.coordinates_of(br.coords);
      if (!coords) throw std::logic_error("graded_subalgebra: bracket escaped the subspace");
      std::vector<std::pair<int, K>> terms;
      for (int k = 0; k < int(coords->size()); ++k)
        if (!is_zero((*coords)[k])) terms.push_back({k, (*coords)[k]});
      out->set_bracket(int(i), int(j), std::move(terms));
    }
  return out;
}

// Embedding matrix rows for a graded_subalgebra result: the i-th row of the
// returned matrix is the ambient coordinate vector of the subalgebra basis
// vector e_i. Kept separate so the subalgebra stays self-contained.
template <class K>
Mat<K> graded_subalgebra_embedding(const SubspaceT<K>& S) {
  const auto& amb = *S.alg;
  std::vector<Vec<K>> rows;
  for (int k = 0; k < amb.modulus; ++k) {
    std::vector<Vec<K>> part;
    for (int r = 0; r < S.dimension(); ++r) {
      auto e = S.element(r).graded_component(k);
      if (!e.is_zero()) part.push_back(e.coords);
    }
    auto sub = SubspaceT<K>::from_span(S.alg, part);
    auto inter = sub.intersect(S);
    for (int r = 0; r < inter.dimension(); ++r) rows.push_back(inter.basis.row(r));
  }
  Mat<K> B(int(rows.size()), amb.dim);
  for (size_t r = 0; r < rows.size(); ++r) B.set_row(int(r), rows[r]);
  return B;
}

}  // namespace gradus
