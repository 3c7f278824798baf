#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradus/catalog/root_datum.hpp"
#include "gradus/lie/subspace.hpp"

namespace gradus {

// Linear or conjugate-linear map on a complexified algebra: v -> M v, or
// v -> M conj(v) when conjugates_scalars is set.
struct SemilinearMap {
  Mat<Gauss> matrix;
  bool conjugates_scalars = false;

  Vec<Gauss> apply(const Vec<Gauss>& v) const {
    if (!conjugates_scalars) return matrix * v;
    Vec<Gauss> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i].conj();
    return matrix * w;
  }

  ElementT<Gauss> apply(const ElementT<Gauss>& x) const {
    return ElementT<Gauss>(x.alg, apply(x.coords));
  }

  // this after o
  SemilinearMap compose(const SemilinearMap& o) const {
    Mat<Gauss> m = o.matrix;
    if (conjugates_scalars) {
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c).conj();
    }
    return {matrix * m, conjugates_scalars != o.conjugates_scalars};
  }

  bool is_identity() const {
    if (conjugates_scalars) return false;
    return matrix == Mat<Gauss>::identity(matrix.rows());
  }
};

// Grading automorphism of a complexified algebra. Literal Q(i) matrix exists
// exactly for m in {1, 2, 4}; for m = 3 the action is kept degree-indexed
// (scalar omega^k on degree k) and identities are checked through degree
// bookkeeping.
struct ThetaAction {
  int modulus = 1;
  std::optional<SemilinearMap> literal;
};

struct CenterData {
  std::vector<Mat<Rational>> generators;
  std::vector<int> orders;
};

struct CatalogEntry {
  AlgebraPtr<Rational> algebra;
  std::optional<RootDatum> roots;
  // R-compatible Cartan involution of the real form (restriction of the
  // compact-form conjugation); present for every catalog algebra.
  Mat<Rational> cartan_involution;
  CenterData center;
};

// --- catalog builders ---

struct SlGrading {
  enum Kind { Trivial, DiagInvolution } kind = Trivial;
  std::vector<int> signs;  // entries +1/-1, used by DiagInvolution
};

AlgebraPtr<Rational> build_sl(int n, const SlGrading& grading = {});
AlgebraPtr<Rational> build_sl2c_real();
AlgebraPtr<Rational> build_e7_split_z2();
AlgebraPtr<Rational> build_e8_split_z3();

std::vector<std::string> catalog_names();
CatalogEntry catalog_build(const std::string& name);

// --- complexification and structure maps ---

struct Complexification {
  AlgebraPtr<Gauss> algebra;
  SemilinearMap tau_g;  // coordinatewise conjugation fixing the real form
};

Complexification complexify(const GradedAlgebra& a);
AlgebraPtr<Gauss> complexify_algebra(const GradedAlgebra& a);

ThetaAction theta_automorphism(const ComplexAlgebra& ac);

// Conjugation with respect to the compact real form that is compatible with
// the split form: the complexification's Cartan-involution twist of tau_g.
SemilinearMap compact_form_conjugation(const CatalogEntry& entry, const ComplexAlgebra& ac);

// --- root space decomposition ---

template <class K>
struct RootSpace {
  Vec<K> functional;  // values on the Cartan basis vectors
  SubspaceT<K> space;
};

// Simultaneous eigenspace decomposition of ad(cartan basis). Requires the
// Cartan to be abelian with ad-diagonalizable (rational spectrum) elements.
std::vector<RootSpace<Rational>> root_space_decomposition(const AlgebraPtr<Rational>& a,
                                                          const Subspace& cartan);

}  // namespace gradus
