#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradus {

// Exact rational scalar backed by GMP. Always canonical: positive
// denominator, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Grammar: optional sign, integer, optional "/q" with q > 0 after sign fold.
  static Rational parse(std::string_view s) {
    auto r = try_parse(s);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    return *r;
  }

  static std::optional<Rational> try_parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return std::nullopt;
    for (size_t i = 0; i < t.size(); ++i) {
      char c = t[i];
      bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                ((c == '+' || c == '-') && (i == 0 || t[i - 1] == '/'));
      if (!ok) return std::nullopt;
    }
    if (t.back() == '/' || t.front() == '/') return std::nullopt;
    try {
      mpq_class q(t, 10);
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return Rational(q);
    } catch (...) {
      return std::nullopt;
    }
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  double to_double() const { return v_.get_d(); }

  // Integer value when is_integer() and it fits a long.
  long to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw std::domain_error("Rational: not a small integer: " + str());
    return v_.get_num().get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

inline Rational pow(const Rational& a, unsigned e) {
  Rational r(1), b = a;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline mpz_class floor_int(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

inline mpz_class ceil_int(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

// The rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) {
    Rational r = simplest_rational_in(-hi, -lo);
    return -r;
  }
  // 0 < lo <= hi
  Rational lo_c = lo, hi_c = hi;
  mpz_class int_lo = ceil_int(lo_c);
  if (Rational(int_lo) <= hi_c) return Rational(int_lo);
  mpz_class n = floor_int(lo_c);
  Rational fl = lo_c - Rational(n), fh = hi_c - Rational(n);
  Rational inner = simplest_rational_in(Rational(1) / fh, Rational(1) / fl);
  return Rational(n) + Rational(1) / inner;
}

// Gaussian rational re + im*i with i^2 = -1.
struct Gauss {
  Rational re, im;

  Gauss() = default;
  Gauss(long n) : re(n) {}
  Gauss(Rational r) : re(std::move(r)) {}
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Gauss conj() const { return Gauss(re, -im); }

  // Grammar: "p/q" | "p/q+r/s i" | "r/s i" (spaces optional, i suffix).
  static Gauss parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("Gauss: empty literal");
    if (t.back() == 'i') {
      t.pop_back();
      if (t.empty() || t == "+") return Gauss(Rational(0), Rational(1));
      if (t == "-") return Gauss(Rational(0), Rational(-1));
      // split at the sign that separates real and imaginary parts
      for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-') {
          auto re_part = Rational::try_parse(t.substr(0, i));
          std::string im_str = t.substr(i);
          if (im_str == "+") im_str = "1";
          if (im_str == "-") im_str = "-1";
          auto im_part = Rational::try_parse(im_str);
          if (re_part && im_part) return Gauss(*re_part, *im_part);
        }
      }
      return Gauss(Rational(0), Rational::parse(t));
    }
    return Gauss(Rational::parse(t));
  }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string imag = im.str() + " i";
    if (re.is_zero()) return imag;
    if (im.sign() > 0) return re.str() + " + " + imag;
    return re.str() + " - " + (-im).str() + " i";
  }

  Gauss operator-() const { return Gauss(-re, -im); }
  Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
  Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
  Gauss& operator*=(const Gauss& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n.is_zero()) throw std::domain_error("Gauss: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

// Field helpers shared by the templated linear algebra.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Gauss& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline Gauss conj(const Gauss& x) { return x.conj(); }
inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Gauss& x) { return x.str(); }

}  // namespace gradus
