#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradus/linalg.hpp"
#include "gradus/matrix.hpp"

namespace gradus {

template <class K>
struct GradedAlgebraT;

template <class K>
using AlgebraPtr = std::shared_ptr<const GradedAlgebraT<K>>;

template <class K>
struct ElementT {
  AlgebraPtr<K> alg;
  Vec<K> coords;

  ElementT() = default;
  ElementT(AlgebraPtr<K> a, Vec<K> c) : alg(std::move(a)), coords(std::move(c)) {}

  static ElementT zero(AlgebraPtr<K> a) {
    Vec<K> c(a->dim, K(0));
    return ElementT(std::move(a), std::move(c));
  }
  static ElementT basis_vector(AlgebraPtr<K> a, int i) {
    Vec<K> c(a->dim, K(0));
    c[i] = K(1);
    return ElementT(std::move(a), std::move(c));
  }

  bool is_zero() const {
    for (const auto& x : coords)
      if (!gradus::is_zero(x)) return false;
    return true;
  }

  ElementT operator+(const ElementT& o) const {
    Vec<K> c(coords);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords[i];
    return ElementT(alg, std::move(c));
  }
  ElementT operator-(const ElementT& o) const {
    Vec<K> c(coords);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords[i];
    return ElementT(alg, std::move(c));
  }
  ElementT operator-() const {
    Vec<K> c(coords);
    for (auto& x : c) x = K(0) - x;
    return ElementT(alg, std::move(c));
  }
  ElementT operator*(const K& s) const {
    Vec<K> c(coords);
    for (auto& x : c) x = x * s;
    return ElementT(alg, std::move(c));
  }
  bool operator==(const ElementT& o) const { return coords == o.coords; }

  // Projection onto the degree-k graded component.
  ElementT graded_component(int k) const;

  // True when every nonzero coordinate sits in degree k.
  bool homogeneous_of_degree(int k) const;

  // Degree when homogeneous and nonzero.
  std::optional<int> degree() const;
};

using Element = ElementT<Rational>;

struct AxiomReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  bool degree_ok = true;
  bool killing_nondegenerate = true;
  std::string first_violation;
  // (positives, negatives) of the Killing form when computed (small algebras)
  std::optional<std::pair<int, int>> killing_signature;

  bool ok() const { return antisymmetry_ok && jacobi_ok && degree_ok && killing_nondegenerate; }
};

// Structure-constant Z_m-graded Lie algebra over an exact field. The bracket
// table stores [e_i, e_j] for i < j only; antisymmetry is by construction.
template <class K>
struct GradedAlgebraT : std::enable_shared_from_this<GradedAlgebraT<K>> {
  std::string name;
  int dim = 0;
  int modulus = 1;  // m >= 1; m = 1 means trivially graded
  std::vector<int> degree;            // size dim, values in [0, m)
  std::vector<std::string> labels;    // size dim
  std::vector<Mat<Rational>> center_generators;  // automorphism matrices

  GradedAlgebraT() = default;
  GradedAlgebraT(std::string nm, int d, int m)
      : name(std::move(nm)), dim(d), modulus(m), degree(d, 0), labels(d) {
    for (int i = 0; i < d; ++i) labels[i] = "x" + std::to_string(i);
  }

  int residue(long k) const {
    long r = k % modulus;
    if (r < 0) r += modulus;
    return int(r);
  }

  void set_bracket(int i, int j, std::vector<std::pair<int, K>> terms) {
    if (i == j) return;
    std::erase_if(terms, [](const auto& t) { return is_zero(t.second); });
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (i > j) {
      for (auto& [k, c] : terms) c = K(0) - c;
      std::swap(i, j);
    }
    if (terms.empty())
      table_.erase(key(i, j));
    else
      table_[key(i, j)] = std::move(terms);
  }

  // [e_i, e_j] as (index, coefficient) terms, any i, j.
  std::vector<std::pair<int, K>> bracket_basis(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find(key(i, j));
    if (it == table_.end()) return {};
    auto terms = it->second;
    if (flip)
      for (auto& [k, c] : terms) c = K(0) - c;
    return terms;
  }

  ElementT<K> bracket(const ElementT<K>& x, const ElementT<K>& y) const {
    if (x.alg.get() != this || y.alg.get() != this)
      throw std::invalid_argument("bracket: elements of different algebras");
    ElementT<K> out = ElementT<K>::zero(this->shared_from_this());
    std::vector<int> xi, yi;
    for (int i = 0; i < dim; ++i)
      if (!is_zero(x.coords[i])) xi.push_back(i);
    for (int j = 0; j < dim; ++j)
      if (!is_zero(y.coords[j])) yi.push_back(j);
    for (int i : xi)
      for (int j : yi) {
        if (i == j) continue;
        K f = x.coords[i] * y.coords[j];
        for (const auto& [k, c] : bracket_basis(i, j)) out.coords[k] += f * c;
      }
    return out;
  }

  // ad(e_i) as a sparse matrix, cached. Column j holds [e_i, e_j].
  const SparseMat<K>& basis_ad(int i) const {
    ensure_ad_cache();
    return ad_cache_[i];
  }

  SparseMat<K> ad_sparse(const ElementT<K>& x) const {
    SparseMat<K> m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x.coords[i])) continue;
      const auto& adi = basis_ad(i);
      for (int r = 0; r < dim; ++r)
        for (const auto& [c, v] : adi.row(r)) m.add(r, c, x.coords[i] * v);
    }
    return m;
  }

  Mat<K> ad_dense(const ElementT<K>& x) const { return ad_sparse(x).dense(); }

  K killing(const ElementT<K>& x, const ElementT<K>& y) const {
    ensure_killing_cache();
    K out(0);
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x.coords[i])) continue;
      for (int j = 0; j < dim; ++j) {
        if (is_zero(y.coords[j])) continue;
        const K& b = killing_cache_->at(i, j);
        if (!is_zero(b)) out += x.coords[i] * y.coords[j] * b;
      }
    }
    return out;
  }

  const Mat<K>& killing_gram() const {
    ensure_killing_cache();
    return *killing_cache_;
  }

  std::vector<int> degree_block(int k) const {
    std::vector<int> idx;
    for (int i = 0; i < dim; ++i)
      if (degree[i] == residue(k)) idx.push_back(i);
    return idx;
  }

  // Full axiom scan: degree additivity of the table, the Jacobi identity by
  // the derivation form ad([x,y]) = [ad x, ad y] over all basis pairs (which
  // covers every basis triple at once), and per-block nondegeneracy of the
  // Killing form. Sparsity keeps this feasible at dimension 248.
  AxiomReport verify_axioms(bool with_signature = true) const {
    AxiomReport rep;
    // degree additivity
    for (const auto& [kij, terms] : table_) {
      int i = int(kij >> 32), j = int(kij & 0xffffffffu);
      for (const auto& [k, c] : terms) {
        if (residue(degree[i] + degree[j]) != degree[k]) {
          rep.degree_ok = false;
          rep.first_violation = "degree additivity fails at [" + labels[i] + "," + labels[j] +
                                "] -> " + labels[k];
          return rep;
        }
      }
    }
    // Jacobi via the derivation identity
    for (int i = 0; i < dim && rep.jacobi_ok; ++i) {
      const auto& adi = basis_ad(i);
      for (int j = i + 1; j < dim && rep.jacobi_ok; ++j) {
        const auto& adj = basis_ad(j);
        SparseMat<K> lhs(dim, dim);
        for (const auto& [k, c] : bracket_basis(i, j)) {
          const auto& adk = basis_ad(k);
          for (int r = 0; r < dim; ++r)
            for (const auto& [col, v] : adk.row(r)) lhs.add(r, col, c * v);
        }
        SparseMat<K> rhs = adi * adj - adj * adi;
        SparseMat<K> diff = lhs - rhs;
        if (!diff.empty()) {
          int col = -1;
          for (int r = 0; r < dim && col < 0; ++r)
            if (!diff.row(r).empty()) col = diff.row(r).front().first;
          rep.jacobi_ok = false;
          rep.first_violation = "Jacobi fails on triple (" + labels[i] + "," + labels[j] + "," +
                                labels[col] + ")";
        }
      }
    }
    if (!rep.jacobi_ok) return rep;
    // Killing nondegeneracy per graded pairing block g_a x g_{-a}
    ensure_killing_cache();
    for (int a = 0; a < modulus; ++a) {
      auto rows_idx = degree_block(a);
      auto cols_idx = degree_block(-a);
      if (rows_idx.empty() && cols_idx.empty()) continue;
      if (rows_idx.size() != cols_idx.size()) {
        rep.killing_nondegenerate = false;
        rep.first_violation = "graded blocks g_" + std::to_string(a) + " and g_-" +
                              std::to_string(a) + " have different dimensions";
        return rep;
      }
      Mat<K> block(int(rows_idx.size()), int(cols_idx.size()));
      for (size_t r = 0; r < rows_idx.size(); ++r)
        for (size_t c = 0; c < cols_idx.size(); ++c)
          block.at(int(r), int(c)) = killing_cache_->at(rows_idx[r], cols_idx[c]);
      if (rank(block) != block.rows()) {
        rep.killing_nondegenerate = false;
        rep.first_violation = "Killing form degenerate on block g_" + std::to_string(a);
        return rep;
      }
    }
    if constexpr (std::is_same_v<K, Rational>) {
      if (with_signature && dim <= 64) rep.killing_signature = killing_signature();
    }
    return rep;
  }

  // Signature of the Killing form by symmetric elimination pivot signs.
  std::pair<int, int> killing_signature() const {
    ensure_killing_cache();
    Mat<K> g = *killing_cache_;
    const int n = dim;
    int pos = 0, neg = 0;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
      int p = -1;
      for (int i = 0; i < n; ++i)
        if (!used[i] && !is_zero(g.at(i, i))) {
          p = i;
          break;
        }
      if (p < 0) {
        // zero diagonal everywhere: replace basis vector a by a+b where
        // g(a,b) != 0, making g(a,a) = 2 g(a,b) nonzero
        int a = -1, b = -1;
        for (int i = 0; i < n && a < 0; ++i)
          if (!used[i])
            for (int j = i + 1; j < n; ++j)
              if (!used[j] && !is_zero(g.at(i, j))) {
                a = i;
                b = j;
                break;
              }
        if (a < 0) break;  // remaining block is identically zero
        for (int j = 0; j < n; ++j)
          if (!used[j]) g.at(a, j) = g.at(a, j) + g.at(b, j);
        for (int i = 0; i < n; ++i)
          if (!used[i]) g.at(i, a) = g.at(i, a) + g.at(i, b);
        p = a;
      }
      used[p] = true;
      if (sign_of(g.at(p, p)) > 0)
        ++pos;
      else
        ++neg;
      K inv = K(1) / g.at(p, p);
      for (int i = 0; i < n; ++i) {
        if (used[i] || is_zero(g.at(i, p))) continue;
        K f = g.at(i, p) * inv;
        for (int j = 0; j < n; ++j)
          if (!used[j]) g.at(i, j) = g.at(i, j) - f * g.at(p, j);
        g.at(i, p) = K(0);
      }
    }
    return {pos, neg};
  }

  void warm_caches() const {
    ensure_ad_cache();
    ensure_killing_cache();
  }

  const std::unordered_map<uint64_t, std::vector<std::pair<int, K>>>& table() const {
    return table_;
  }

private:
  static uint64_t key(int i, int j) { return (uint64_t(uint32_t(i)) << 32) | uint32_t(j); }

  static int sign_of(const Rational& x) { return x.sign(); }
  static int sign_of(const Gauss& x) { return x.re.sign(); }  // used on real diagonals only

  void ensure_ad_cache() const {
    if (!ad_cache_.empty()) return;
    ad_cache_.assign(dim, SparseMat<K>(dim, dim));
    for (const auto& [kij, terms] : table_) {
      int i = int(kij >> 32), j = int(kij & 0xffffffffu);
      for (const auto& [k, c] : terms) {
        ad_cache_[i].add(k, j, c);          // [e_i, e_j] contributes to column j of ad_i
        ad_cache_[j].add(k, i, K(0) - c);   // [e_j, e_i] = -[e_i, e_j]
      }
    }
  }

  void ensure_killing_cache() const {
    if (killing_cache_) return;
    ensure_ad_cache();
    auto gram = std::make_unique<Mat<K>>(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        // graded pairing: B(g_a, g_b) = 0 unless a + b = 0 (mod m)
        if (residue(degree[i] + degree[j]) != 0) continue;
        K t = ad_cache_[i].trace_product(ad_cache_[j]);
        gram->at(i, j) = t;
        gram->at(j, i) = std::move(t);
      }
    killing_cache_ = std::move(gram);
  }

  std::unordered_map<uint64_t, std::vector<std::pair<int, K>>> table_;
  mutable std::vector<SparseMat<K>> ad_cache_;
  mutable std::unique_ptr<Mat<K>> killing_cache_;
};

using GradedAlgebra = GradedAlgebraT<Rational>;
using ComplexAlgebra = GradedAlgebraT<Gauss>;

template <class K>
ElementT<K> ElementT<K>::graded_component(int k) const {
  ElementT<K> out = ElementT<K>::zero(alg);
  int r = alg->residue(k);
  for (int i = 0; i < alg->dim; ++i)
    if (alg->degree[i] == r) out.coords[i] = coords[i];
  return out;
}

template <class K>
bool ElementT<K>::homogeneous_of_degree(int k) const {
  int r = alg->residue(k);
  for (int i = 0; i < alg->dim; ++i)
    if (!gradus::is_zero(coords[i]) && alg->degree[i] != r) return false;
  return true;
}

template <class K>
std::optional<int> ElementT<K>::degree() const {
  std::optional<int> d;
  for (int i = 0; i < alg->dim; ++i)
    if (!gradus::is_zero(coords[i])) {
      if (!d)
        d = alg->degree[i];
      else if (*d != alg->degree[i])
        return std::nullopt;
    }
  return d;
}

}  // namespace gradus
