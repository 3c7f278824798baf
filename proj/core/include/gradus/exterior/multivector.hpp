#pragma once

#include <map>
#include <stdexcept>

#include "gradus/exterior/tuples.hpp"
#include "gradus/matrix.hpp"
#include "gradus/rational.hpp"

namespace gradus {

// Exterior-algebra element with coordinates on strictly increasing index
// tuples. The same container carries k-vectors and k-forms; which one is
// meant follows from context (forms pair against vectors by the sorted-tuple
// delta convention).
struct MultiVector {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> terms;

  static MultiVector zero(int n_, int k_) { return {n_, k_, {}}; }

  static MultiVector basis(int n_, std::vector<int> tuple) {
    MultiVector m{n_, int(tuple.size()), {}};
    m.terms[std::move(tuple)] = Rational(1);
    return m;
  }

  void add_term(std::vector<int> tuple, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(tuple);
    if (it == terms.end()) {
      terms.emplace(std::move(tuple), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  MultiVector operator+(const MultiVector& o) const {
    MultiVector out = *this;
    for (const auto& [t, c] : o.terms) out.add_term(t, c);
    return out;
  }

  MultiVector operator*(const Rational& s) const {
    MultiVector out{n, k, {}};
    for (const auto& [t, c] : terms) out.add_term(t, c * s);
    return out;
  }

  bool operator==(const MultiVector& o) const {
    return n == o.n && k == o.k && terms == o.terms;
  }
};

// vol_* (top-grade vector) and vol^* (top-grade functional) normalized to
// pair to 1.
struct VolumePair {
  MultiVector vol_star;    // e_1 ^ ... ^ e_n
  MultiVector vol_costar;  // its dual functional

  static VolumePair standard(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    VolumePair v;
    v.vol_star = MultiVector::basis(n, all);
    v.vol_costar = MultiVector::basis(n, all);
    v.vol_costar.k = n;
    return v;
  }
};

inline MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.n != b.n) throw std::invalid_argument("wedge: ambient dimensions differ");
  MultiVector out{a.n, a.k + b.k, {}};
  if (a.k + b.k > a.n) {
    out.k = a.k + b.k;  // grade overflow wedges to zero
    return out;
  }
  for (const auto& [s, cs] : a.terms)
    for (const auto& [t, ct] : b.terms) {
      std::vector<int> sorted;
      int sign = tuples::concat_sign(s, t, &sorted);
      if (sign == 0) continue;
      out.add_term(std::move(sorted), cs * ct * Rational(sign));
    }
  return out;
}

// P_*: grade-k functional -> (n-k)-vector, x -> x ⌟ vol_*; satisfies
// y(P_*(x)) = (x ^ y)(vol_*) for every (n-k)-form y.
inline MultiVector poincare_dual(const MultiVector& form) {
  MultiVector out{form.n, form.n - form.k, {}};
  for (const auto& [s, c] : form.terms) {
    auto comp = tuples::complement(s, form.n);
    int sign = tuples::concat_sign(s, comp);
    out.add_term(std::move(comp), c * Rational(sign));
  }
  return out;
}

// The co-volume direction: grade-k vector -> (n-k)-form, w -> vol^* ⌞ w.
inline MultiVector poincare_codual(const MultiVector& vec) {
  MultiVector out{vec.n, vec.n - vec.k, {}};
  for (const auto& [s, c] : vec.terms) {
    auto comp = tuples::complement(s, vec.n);
    int sign = tuples::concat_sign(s, comp);
    out.add_term(std::move(comp), c * Rational(sign));
  }
  return out;
}

// pairing of a k-form against a k-vector (sorted-tuple delta convention)
inline Rational pair_form_vector(const MultiVector& form, const MultiVector& vec) {
  Rational acc(0);
  for (const auto& [t, c] : form.terms) {
    auto it = vec.terms.find(t);
    if (it != vec.terms.end()) acc += c * it->second;
  }
  return acc;
}

// GL(n) pushforward on k-vectors: g.(v_1 ^ ... ^ v_k) via k x k minors.
MultiVector gl_pushforward(const Mat<Rational>& g, const MultiVector& w);

}  // namespace gradus
