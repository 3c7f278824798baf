#pragma once

#include "gradus/lie/subspace.hpp"
#include "gradus/poly.hpp"

namespace gradus {

// (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h, all exact.
struct Sl2Triple {
  Element h, e, f;
};

struct JordanPair {
  Element xs, xn;
};

bool is_nilpotent(const Element& x);
bool is_semisimple(const Element& x);

// x = xs + xn with xs semisimple, xn nilpotent, [xs, xn] = 0. The matrix
// decomposition of ad(x) is pulled back through the (injective) ad map.
JordanPair jordan_decompose(const Element& x);

// sl2-triple through a nonzero homogeneous degree-1 nilpotent: solve for a
// partial f, then apply the correction (ad_h + 2) z = -[h,f] - 2f inside
// Z_g(e) ∩ g_{-1}. All relations are re-verified before returning.
Sl2Triple jmv_triple(const Element& e);

Element characteristic(const Element& e);

// Z_{g_0}(e) ∩ [g_{-1}, e]: the nilpotent ideal all characteristics of e
// differ by.
Subspace u_g0(const Element& e);

// Automorphism exp(ad z) mapping h to h2 and fixing e, built by the graded
// correction iteration over the positive ad_h-eigenspaces of u_g0(e).
Mat<Rational> conjugate_characteristics(const Element& e, const Element& h, const Element& h2);

// ad(h/2)-eigenvalue decomposition of e; all eigenvalues carrying a component
// must be strictly positive (certifying 0 in the orbit closure).
std::vector<std::pair<Rational, Element>> scaling_diagnostic(const Element& e, const Element& h);

// --- shared spectral helpers ---

// Roots of the squarefree part of p, all of which must be rational (real);
// nullopt when an irrational or complex root exists.
std::optional<std::vector<Rational>> rational_roots_of_squarefree(const Poly& p);

// Projection of x onto the ad(h)-eigenspace of eigenvalue lambda, via the
// Lagrange projector polynomial evaluated on sparse matvecs.
Element eigen_project(const Element& h, const std::vector<Rational>& spectrum, size_t which,
                      const Element& x);

}  // namespace gradus
