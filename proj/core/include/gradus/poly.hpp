#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gradus/rational.hpp"

namespace gradus {

// Univariate polynomial, coefficients lowest degree first, trailing zeros
// trimmed. The zero polynomial has an empty coefficient list.
template <class K>
class PolyT {
public:
  PolyT() = default;
  explicit PolyT(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static PolyT constant(K v) { return PolyT(std::vector<K>{std::move(v)}); }
  static PolyT x() { return PolyT(std::vector<K>{K(0), K(1)}); }
  static PolyT monomial(int deg, K v = K(1)) {
    std::vector<K> c(deg + 1);
    c[deg] = std::move(v);
    return PolyT(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero polynomial
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : K(0); }

  K eval(const K& x) const {
    K r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  PolyT derivative() const {
    if (degree() < 1) return PolyT();
    std::vector<K> d(degree());
    for (int i = 1; i <= degree(); ++i) d[i - 1] = c_[i] * K(i);
    return PolyT(std::move(d));
  }

  PolyT monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / lead());
  }

  PolyT operator-() const {
    auto c = c_;
    for (auto& x : c) x = K(0) - x;
    return PolyT(std::move(c));
  }

  friend PolyT operator+(const PolyT& a, const PolyT& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return PolyT(std::move(c));
  }
  friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (!is_zero(b.c_[j])) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyT(std::move(c));
  }

  friend PolyT operator*(const PolyT& a, const K& s) {
    auto c = a.c_;
    for (auto& x : c) x = x * s;
    return PolyT(std::move(c));
  }

  // Euclidean division: returns (quotient, remainder).
  static std::pair<PolyT, PolyT> divmod(PolyT a, const PolyT& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    PolyT q;
    std::vector<K> qc(std::max(0, a.degree() - b.degree() + 1));
    K inv = K(1) / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      int shift = a.degree() - b.degree();
      K f = a.lead() * inv;
      qc[shift] = f;
      std::vector<K> nc = a.c_;
      for (int i = 0; i <= b.degree(); ++i) nc[i + shift] = nc[i + shift] - f * b.c_[i];
      a = PolyT(std::move(nc));
    }
    return {PolyT(std::move(qc)), a};
  }

  friend PolyT operator%(const PolyT& a, const PolyT& b) { return divmod(a, b).second; }
  friend PolyT operator/(const PolyT& a, const PolyT& b) { return divmod(a, b).first; }

  friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (gradus::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      std::string coeff_str = scalar_str(c_[i]);
      if (i == 0) {
        s += coeff_str;
      } else {
        if (coeff_str != "1") s += "(" + coeff_str + ")*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && gradus::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using Poly = PolyT<Rational>;

template <class K>
PolyT<K> gcd(PolyT<K> a, PolyT<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// p / gcd(p, p'), monic. Over a field of characteristic zero this strips
// repeated factors.
template <class K>
PolyT<K> squarefree_part(const PolyT<K>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  if (p.degree() == 0) return PolyT<K>::constant(K(1));
  auto g = gcd(p, p.derivative());
  return (p / g).monic();
}

// Substitute q into p: p(q(t)).
template <class K>
PolyT<K> compose(const PolyT<K>& p, const PolyT<K>& q) {
  PolyT<K> r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * q + PolyT<K>::constant(p.coeff(i));
  }
  return r;
}

// Extended Euclid: g = gcd(a,b) monic with g = u*a + v*b.
template <class K>
struct ExtGcd {
  PolyT<K> g, u, v;
};

template <class K>
ExtGcd<K> ext_gcd(const PolyT<K>& a, const PolyT<K>& b) {
  PolyT<K> r0 = a, r1 = b;
  PolyT<K> u0 = PolyT<K>::constant(K(1)), u1;
  PolyT<K> v0, v1 = PolyT<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = PolyT<K>::divmod(r0, r1);
    PolyT<K> u2 = u0 - q * u1;
    PolyT<K> v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  K inv = K(1) / r0.lead();
  return {r0 * inv, u0 * inv, v0 * inv};
}

// Inverse of a modulo m, when gcd(a, m) = 1.
template <class K>
PolyT<K> inverse_mod(const PolyT<K>& a, const PolyT<K>& m) {
  auto e = ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  return e.u % m;
}

}  // namespace gradus
