#pragma once

#include <map>
#include <optional>

#include "gradus/catalog/catalog.hpp"
#include "gradus/jmv/jmv.hpp"
#include "gradus/lie/subspace.hpp"
#include "gradus/sturm.hpp"

namespace gradus {

// Z-graded slice: integer ad(h/2)-eigenspaces intersected with the matching
// residue blocks.
struct SliceDecomposition {
  AlgebraPtr<Rational> alg;
  Element h;
  std::map<int, Subspace> components;  // k -> g_k(h/2)

  int dim_at(int k) const {
    auto it = components.find(k);
    return it == components.end() ? 0 : it->second.dimension();
  }
  const Subspace* at(int k) const {
    auto it = components.find(k);
    return it == components.end() ? nullptr : &it->second;
  }
};

SliceDecomposition slice(const Element& h);

// Commutant (derived subalgebra) of the slice with its induced Z-grading.
SliceDecomposition slice_commutant(const SliceDecomposition& S);

struct SupportData {
  Subspace cartan_subspace;
  Vec<Rational> phi;  // values of the character on the cartan basis
  SliceDecomposition eigenspace_algebra;  // g(h_sub, phi)
  SliceDecomposition support;             // its commutant
  bool locally_flat = false;
  bool maximality_unverified = true;
};

SupportData support(const Element& e, unsigned seed = 1);

// Genericity data of a characteristic slice: the symbolic m x n matrix
// b_ik(a) = sum_j a_j c_ijk over the bases f_1..f_m of g_0(h/2)' and
// e_1..e_n of g_1(h/2). Minors are kept as row selections; their values and
// the sum of their squares (det of the Gram matrix, by Cauchy-Binet) are
// evaluated exactly on demand.
struct GenericityData {
  SliceDecomposition slice;
  Subspace f_space;  // g_0(h/2)'
  Subspace e_space;  // g_1(h/2)
  // c[i][j][k]: coefficient of e_k in [f_i, e_j]
  std::vector<std::vector<Vec<Rational>>> c;
  std::optional<std::vector<std::vector<int>>> minor_rows;  // row subsets, when enumerable

  int m() const { return f_space.dimension(); }
  int n() const { return e_space.dimension(); }

  Mat<Rational> evaluate_b(const Vec<Rational>& a) const;
  Rational minor_value(const std::vector<int>& rows, const Vec<Rational>& a) const;
  // det(b(a)^T b(a)) = sum_l P_l(a)^2
  Rational sum_of_squared_minors(const Vec<Rational>& a) const;
  Element element_at(const Vec<Rational>& a) const;
  bool generic_at(const Vec<Rational>& a) const;
};

GenericityData genericity_matrix(const SliceDecomposition& S, const SliceDecomposition& Sc,
                                 int minor_enumeration_cap = 20000);

bool is_generic(const GenericityData& G, const Element& e);

struct ComponentOptions {
  uint64_t seed = 1;
  int samples = 200;
  Rational box = Rational(3);
  int grid_bits = 4;     // sample coordinates are integers / 2^grid_bits
  int orbit_moves = 8;   // attempted exp(ad z) merges
};

struct Certificate {
  enum Kind { Segment, OrbitMove } kind = Segment;
  Vec<Rational> from, to;  // slice coordinates
  Poly segment_poly;       // restriction of sum P_l^2, certified positive on [0,1]
};

struct ComponentReport {
  enum Mode { Exact, Heuristic } mode = Heuristic;
  int class_count = 0;
  std::vector<Element> representatives;
  std::vector<Vec<Rational>> representative_coords;      // slice coordinates
  std::vector<std::vector<Vec<Rational>>> class_points;  // per class
  std::vector<Certificate> certificates;
  std::vector<std::string> caveats;
};

ComponentReport component_analysis(const GenericityData& G, const ComponentOptions& opts = {});

// Exact connectivity certificate: the restriction of sum P_l^2 to the segment
// between two set points, when strictly positive on [0,1].
std::optional<Poly> certify_segment(const GenericityData& G, const Vec<Rational>& x,
                                    const Vec<Rational>& y);

// Lemma 4.8 step: merge classes connected by the center generators, emitting
// the deduplicated orbit classes with coset representatives.
ComponentReport center_cosets(const Element& e_k, const CenterData& C, const ComponentReport& R,
                              const GenericityData& G);

struct OrbitVerification {
  bool nilpotent = false;
  bool generic = false;
  bool fingerprint_matches = false;
};

struct PipelineReport {
  SliceDecomposition slice;
  ComponentReport components;
  std::vector<OrbitVerification> verification;  // one per representative
  std::string characteristic_fingerprint;
};

PipelineReport classify_nilpotent_orbits(const Element& h, const CenterData& C,
                                         const ComponentOptions& opts = {});

// Canonical conjugacy invariant: the ad(h) eigenvalue/multiplicity table per
// graded component together with the slice dimensions. Distinct fingerprints
// certify distinct classes; equal ones stay possibly-conjugate.
std::string characteristic_fingerprint(const Element& h);

enum class CharacteristicComparison { Distinct, PossiblyConjugate };
CharacteristicComparison characteristics_distinct(const Element& h1, const Element& h2);

}  // namespace gradus
