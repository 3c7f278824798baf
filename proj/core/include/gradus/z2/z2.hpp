#pragma once

#include "gradus/nilclass/nilclass.hpp"

namespace gradus {

struct CartanDecomposition {
  AlgebraPtr<Rational> alg;
  Mat<Rational> involution;  // the verified Cartan involution matrix
  Subspace k, p;
  std::map<int, Subspace> k_by_degree, p_by_degree;
};

// +1/-1 eigenspaces of an R-compatible Cartan involution on the real form,
// with the bracket inclusions and the definiteness of the Killing form
// verified exactly.
CartanDecomposition cartan_decomposition(const AlgebraPtr<Rational>& alg,
                                         const Mat<Rational>& tau_u);

// Lemma-style check: h_sub is a Cartan-subspace candidate (abelian inside
// g_1, semisimple on a basis and on random combinations) and tau_u-invariant.
bool standard_cartan_check(const Subspace& h_sub, const CartanDecomposition& D,
                           unsigned seed = 7);

// Commuting elliptic/vector split of a semisimple element along k and p.
std::pair<Element, Element> elliptic_vector_split(const Element& s, const CartanDecomposition& D);

// Exact spectral predicates used by the split.
bool is_elliptic(const Element& x);    // ad-spectrum in {0} ∪ i R, exactly
bool is_hyperbolic(const Element& x);  // ad-spectrum real, exactly

struct WeylElement {
  Mat<Rational> action;        // orthogonal action on the Cartan subspace basis
  bool realized = true;        // backed by an exact Ad-representative
  Mat<Rational> inner;         // the algebra automorphism, when realized
};

struct FiniteReflectionGroup {
  Subspace cartan;                    // ambient Cartan subspace
  std::vector<WeylElement> elements;  // closed under composition, contains id
  size_t order() const { return elements.size(); }
};

// Restricted Weyl group of the symmetric pair acting on h_sub: reflections in
// the restricted roots, realized where possible by rational torus elements
// I + (2/q) (ad z)^2 from compact generators z with single-frequency spectrum.
FiniteReflectionGroup restricted_weyl_group(const Subspace& h_sub, const CartanDecomposition& D,
                                            size_t closure_bound = 1000000);

bool semisimple_orbit_equivalent(const Element& x, const Element& y,
                                 const FiniteReflectionGroup& W);

struct MixedNormalForm {
  Element h_k, h_p, e_n;
};

MixedNormalForm mixed_normal_form(const Element& x, const CartanDecomposition& D);

enum class Verdict { Conjugate, Distinct, Undecided };

struct ConjugacyResult {
  Verdict verdict = Verdict::Undecided;
  std::string certificate;  // conjugating word / separating invariant / blocking stage
};

// Theorem-driven comparison for m = 2: semisimple parts through the
// (restricted Weyl group of a shared standard Cartan subspace), nilpotent
// parts through the classification pipeline inside the graded centralizer.
ConjugacyResult mixed_conjugacy(const Element& x, const Element& y, const CartanDecomposition& D,
                                const CenterData& C = {}, const ComponentOptions& opts = {});

}  // namespace gradus
