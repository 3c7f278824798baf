#pragma once

#include <json.hpp>

#include "gradus/exterior/multivector.hpp"
#include "gradus/lie/algebra.hpp"

namespace gradus {

using Json = nlohmann::ordered_json;

// Algebra schema: {name, scalar: "Q"|"Q(i)", modulus, basis: [labels],
// degrees: [ints], brackets: [[i, j, [[k, "c"], ...]], ...]} with i < j only.
Json algebra_to_json(const GradedAlgebra& a);
Json algebra_to_json(const ComplexAlgebra& a);
AlgebraPtr<Rational> algebra_from_json(const Json& j);
AlgebraPtr<Gauss> complex_algebra_from_json(const Json& j);

// Element schema: {algebra, coords: ["p/q", ...]}.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j, const AlgebraPtr<Rational>& alg);

// MultiVector schema: {n, k, terms: [[[i1,...,ik], "p/q"], ...]}.
Json multivector_to_json(const MultiVector& w);
MultiVector multivector_from_json(const Json& j);

// Stable non-cryptographic content digest for run manifests.
std::string fnv1a_digest(const std::string& data);

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::optional<uint64_t> seed;
  std::string version;
  std::map<std::string, std::string> input_digests;

  Json to_json() const;
};

}  // namespace gradus
