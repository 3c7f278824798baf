#include "gradus/io/json_io.hpp"

#include <stdexcept>

namespace gradus {

namespace {

template <class K>
Json algebra_to_json_impl(const GradedAlgebraT<K>& a, const char* scalar_tag) {
  Json j;
  j["name"] = a.name;
  j["scalar"] = scalar_tag;
  j["modulus"] = a.modulus;
  j["basis"] = a.labels;
  j["degrees"] = a.degree;
  Json brackets = Json::array();
  // deterministic ordering: ascending (i, j)
  std::vector<std::pair<int, int>> keys;
  for (const auto& [kij, terms] : a.table())
    keys.push_back({int(kij >> 32), int(kij & 0xffffffffu)});
  std::sort(keys.begin(), keys.end());
  for (auto [i, jx] : keys) {
    Json terms = Json::array();
    for (const auto& [k, c] : a.bracket_basis(i, jx))
      terms.push_back(Json::array({k, scalar_str(c)}));
    brackets.push_back(Json::array({i, jx, terms}));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

template <class K>
std::shared_ptr<GradedAlgebraT<K>> algebra_from_json_impl(const Json& j, const char* scalar_tag,
                                                          K (*parse)(std::string_view)) {
  if (j.at("scalar").get<std::string>() != scalar_tag)
    throw std::invalid_argument("algebra_from_json: scalar field mismatch, expected " +
                                std::string(scalar_tag));
  auto labels = j.at("basis").get<std::vector<std::string>>();
  auto degrees = j.at("degrees").get<std::vector<int>>();
  if (labels.size() != degrees.size())
    throw std::invalid_argument("algebra_from_json: basis/degrees size mismatch");
  int m = j.at("modulus").get<int>();
  if (m < 1) throw std::invalid_argument("algebra_from_json: modulus must be positive");
  auto a = std::make_shared<GradedAlgebraT<K>>(j.at("name").get<std::string>(), int(labels.size()),
                                               m);
  a->labels = std::move(labels);
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0 || degrees[i] >= m)
      throw std::invalid_argument("algebra_from_json: degree out of range");
    a->degree[i] = degrees[i];
  }
  for (const auto& ent : j.at("brackets")) {
    int i = ent.at(0).get<int>();
    int jx = ent.at(1).get<int>();
    if (i >= jx || i < 0 || jx >= a->dim)
      throw std::invalid_argument("algebra_from_json: bracket indices must satisfy 0 <= i < j < dim");
    std::vector<std::pair<int, K>> terms;
    for (const auto& t : ent.at(2)) {
      int k = t.at(0).get<int>();
      if (k < 0 || k >= a->dim) throw std::invalid_argument("algebra_from_json: target index out of range");
      terms.push_back({k, parse(t.at(1).get<std::string>())});
    }
    a->set_bracket(i, jx, std::move(terms));
  }
  return a;
}

Rational parse_rational(std::string_view s) { return Rational::parse(s); }
Gauss parse_gauss(std::string_view s) { return Gauss::parse(s); }

}  // namespace

Json algebra_to_json(const GradedAlgebra& a) { return algebra_to_json_impl(a, "Q"); }
Json algebra_to_json(const ComplexAlgebra& a) { return algebra_to_json_impl(a, "Q(i)"); }

AlgebraPtr<Rational> algebra_from_json(const Json& j) {
  return algebra_from_json_impl<Rational>(j, "Q", &parse_rational);
}

AlgebraPtr<Gauss> complex_algebra_from_json(const Json& j) {
  return algebra_from_json_impl<Gauss>(j, "Q(i)", &parse_gauss);
}

Json element_to_json(const Element& x) {
  Json j;
  j["algebra"] = x.alg->name;
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(c.str());
  j["coords"] = std::move(coords);
  return j;
}

Element element_from_json(const Json& j, const AlgebraPtr<Rational>& alg) {
  auto coords = j.at("coords").get<std::vector<std::string>>();
  if (int(coords.size()) != alg->dim)
    throw std::invalid_argument("element_from_json: expected " + std::to_string(alg->dim) +
                                " coordinates, got " + std::to_string(coords.size()));
  Element x = Element::zero(alg);
  for (size_t i = 0; i < coords.size(); ++i) x.coords[i] = Rational::parse(coords[i]);
  return x;
}

Json multivector_to_json(const MultiVector& w) {
  Json j;
  j["n"] = w.n;
  j["k"] = w.k;
  Json terms = Json::array();
  for (const auto& [t, c] : w.terms) {
    Json tup = Json::array();
    for (int i : t) tup.push_back(i + 1);  // 1-based in the interchange format
    terms.push_back(Json::array({tup, c.str()}));
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiVector multivector_from_json(const Json& j) {
  MultiVector w{j.at("n").get<int>(), j.at("k").get<int>(), {}};
  if (w.n < 1 || w.k < 0 || w.k > w.n)
    throw std::invalid_argument("multivector_from_json: invalid (n, k)");
  for (const auto& ent : j.at("terms")) {
    std::vector<int> t;
    for (const auto& v : ent.at(0)) {
      int idx = v.get<int>() - 1;
      if (idx < 0 || idx >= w.n) throw std::invalid_argument("multivector_from_json: index out of range");
      t.push_back(idx);
    }
    if (int(t.size()) != w.k)
      throw std::invalid_argument("multivector_from_json: tuple length differs from grade");
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i - 1] >= t[i])
        throw std::invalid_argument("multivector_from_json: tuples must be strictly increasing");
    w.add_term(std::move(t), Rational::parse(ent.at(1).get<std::string>()));
  }
  return w;
}

std::string fnv1a_digest(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["arguments"] = arguments;
  if (seed)
    j["seed"] = *seed;
  else
    j["seed"] = nullptr;
  j["version"] = version;
  Json d = Json::object();
  for (const auto& [k, v] : input_digests) d[k] = v;
  j["input_digests"] = std::move(d);
  return j;
}

}  // namespace gradus
