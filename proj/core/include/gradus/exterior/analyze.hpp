#pragma once

#include <optional>

#include "gradus/catalog/catalog.hpp"
#include "gradus/exterior/multivector.hpp"
#include "gradus/jmv/jmv.hpp"

namespace gradus {

// Identifications between multivectors and degree-1 elements of the exterior
// catalog models: Λ⁴R⁸ with the Z2-graded model on sl(8), Λ³R⁹ with the
// Z3-graded model on sl(9). Coordinates align index-for-index, so these are
// coordinate copies plus block placement.
Element to_lie_element(const CatalogEntry& entry, const MultiVector& w);
MultiVector from_lie_element(const CatalogEntry& entry, const Element& x);

// sl(n) action on k-vectors through the model's g_0 identification
MultiVector sl_action(const Mat<Rational>& X, const MultiVector& w);
Element sl_to_lie(const CatalogEntry& entry, const Mat<Rational>& X);

struct KVectorOptions {
  bool dualize = false;          // input is a form; route through duality first
  bool deep_split = true;        // attempt the elliptic/vector split when mixed (m=2)
  uint64_t seed = 1;
};

struct KVectorReport {
  std::string model;  // "e7-split-z2" or "e8-split-z3"
  MultiVector normalized;  // canonical coordinate gauge (leading coefficient 1)
  Rational gauge;          // w = gauge * normalized
  bool nilpotent = false;
  bool semisimple = false;
  std::string verdict;  // "zero" | "nilpotent" | "semisimple" | "mixed"
  std::optional<Element> characteristic_h;
  std::optional<bool> generic;
  std::optional<std::string> fingerprint;
  std::optional<Element> mixed_hk, mixed_hp, mixed_en;
  std::vector<std::string> notes;
};

KVectorReport analyze_kvector(const MultiVector& w, const KVectorOptions& opts = {});

}  // namespace gradus
