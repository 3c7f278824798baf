#pragma once

#include "gradus/catalog/catalog.hpp"

namespace gradus {

struct CompatibilityReport {
  bool comp_holds = false;   // tau_g theta = theta^{-1} tau_g
  bool comp2_holds = false;  // tau_g theta^{-1} = theta tau_g
  bool grad_holds = false;   // tau_g preserves every degree block
  std::string witness;       // basis label on failure
  bool ok() const { return comp_holds && comp2_holds && grad_holds; }
};

// Verifies the three compatibility relations on a basis. For m = 3 the theta
// action has no Q(i) matrix; the relations are then checked blockwise (they
// reduce to tau_g preserving each degree block).
CompatibilityReport check_compatibility(const AlgebraPtr<Gauss>& ac, const SemilinearMap& tau_g,
                                        const ThetaAction& theta);

struct RCompatibility {
  bool compatible = false;
  std::string reason;                 // populated on failure
  std::vector<int> block_map;         // degree k -> degree (block image), when compatible
};

// True iff tau_u is a conjugate-linear involutive automorphism mapping each
// degree-k block onto the degree-(-k) block.
RCompatibility is_r_compatible(const AlgebraPtr<Gauss>& ac, const SemilinearMap& tau_u);

// Degree-reversal orbit map on the real form: applies the restriction of a
// verified R-compatible conjugation to a homogeneous element.
Element degree_reversal_map(const CatalogEntry& entry, const Element& x);

// --- Theorem 3.7 numeric improvement (the only floating-point code path) ---

struct ApproxOperator {
  std::vector<double> matrix;  // row-major, realified dimension 2n
  int dim = 0;
  double tolerance = 1e-9;

  double at(int r, int c) const { return matrix[size_t(r) * dim + c]; }
};

struct ImproveResult {
  ApproxOperator phi;
  ApproxOperator improved_conjugation;  // tau_{phi(u')} realified
  double residual_tau_g_commutator = 0;   // || tau_g tau_new - tau_new tau_g ||_inf
  double residual_theta_commutator = 0;   // || theta tau_new - tau_new theta ||_inf
  double residual_hel3 = 0;               // || tau_u' phi tau_u'^{-1} - phi^{-1} ||_inf
  std::vector<double> spectrum;           // eigenvalues of (tau_g tau_u')^2
};

// phi = [(tau_g tau_u')^2]^{1/4} by spectral decomposition in the Killing
// inner product of u'; returns phi and the improved conjugation phi tau_u'
// phi^{-1}, with commutator residuals measured against the tolerance.
ImproveResult improve_compact_form(const AlgebraPtr<Gauss>& ac, const SemilinearMap& tau_g,
                                   const SemilinearMap& tau_u_prime, const ThetaAction& theta,
                                   double tolerance = 1e-9);

}  // namespace gradus
