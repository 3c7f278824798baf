#pragma once

#include <stdexcept>
#include <vector>

#include "gradus/poly.hpp"

namespace gradus {

// Sturm-sequence machinery for exact real-root isolation and sign analysis
// of univariate rational polynomials.

struct SturmSequence {
  std::vector<Poly> seq;

  static SturmSequence of(const Poly& p) {
    SturmSequence s;
    Poly a = p, b = p.derivative();
    s.seq.push_back(a);
    while (!b.is_zero()) {
      s.seq.push_back(b);
      Poly r = -(a % b);
      a = std::move(b);
      b = std::move(r);
    }
    return s;
  }

  int variations_at(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& q : seq) {
      int s = q.eval(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int variations_at_neg_inf() const { return variations_at_inf(-1); }
  int variations_at_pos_inf() const { return variations_at_inf(+1); }

private:
  int variations_at_inf(int dir) const {
    int v = 0, prev = 0;
    for (const auto& q : seq) {
      if (q.is_zero()) continue;
      int s = q.lead().sign();
      if (dir < 0 && q.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
};

// Number of distinct real roots in (a, b].
inline int roots_in_interval(const SturmSequence& s, const Rational& a, const Rational& b) {
  return s.variations_at(a) - s.variations_at(b);
}

inline int count_distinct_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("count_distinct_real_roots: zero polynomial");
  Poly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  auto s = SturmSequence::of(q);
  return s.variations_at_neg_inf() - s.variations_at_pos_inf();
}

// Cauchy bound: all real roots lie in (-B, B).
inline Rational root_bound(const Poly& p) {
  Rational m(0);
  Rational lead = p.lead().abs();
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = p.coeff(i).abs() / lead;
    if (c > m) m = c;
  }
  return m + Rational(1);
}

// Disjoint isolating intervals (a_i, b_i], one per distinct real root, sorted
// increasingly; endpoints are rationals and never roots of the squarefree part
// except possibly b_i (the half-open convention keeps counting exact).
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  Poly q = squarefree_part(p);
  std::vector<std::pair<Rational, Rational>> out;
  if (q.degree() <= 0) return out;
  auto s = SturmSequence::of(q);
  Rational B = root_bound(q);
  struct Box {
    Rational a, b;
    int count;
  };
  int total = roots_in_interval(s, -B, B);
  if (total == 0) return out;
  std::vector<Box> work{{-B, B, total}};
  while (!work.empty()) {
    Box w = work.back();
    work.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      out.push_back({w.a, w.b});
      continue;
    }
    Rational mid = (w.a + w.b) / Rational(2);
    // nudge the midpoint off a root so both halves stay half-open clean
    while (q.eval(mid).sign() == 0) mid = (w.a + mid) / Rational(2);
    int left = roots_in_interval(s, w.a, mid);
    work.push_back({w.a, mid, left});
    work.push_back({mid, w.b, w.count - left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

// Number of connected components of {x in R : p(x) > 0}, exactly.
// Roots of p split the line into sign-constant intervals; positive intervals
// are the components (roots themselves are excluded by strictness).
inline int sturm_components(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("sturm_components: zero polynomial");
  if (p.degree() == 0) return p.lead().sign() > 0 ? 1 : 0;
  auto boxes = isolate_real_roots(p);
  Poly q = squarefree_part(p);
  // Sample points: one left of all roots, one between consecutive isolating
  // intervals, one right of all roots. Interval gaps are root-free.
  std::vector<Rational> samples;
  if (boxes.empty()) {
    samples.push_back(Rational(0));
  } else {
    samples.push_back(boxes.front().first - Rational(1));
    for (size_t i = 0; i + 1 < boxes.size(); ++i) {
      Rational m = (boxes[i].second + boxes[i + 1].first) / Rational(2);
      while (q.eval(m).sign() == 0) m = (m + boxes[i + 1].first) / Rational(2);
      samples.push_back(m);
    }
    samples.push_back(boxes.back().second + Rational(1));
  }
  int components = 0;
  for (const auto& x : samples)
    if (p.eval(x).sign() > 0) ++components;
  return components;
}

// Exact check that p(t) > 0 for every t in [0, 1].
inline bool strictly_positive_on_unit_interval(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.eval(Rational(0)).sign() <= 0) return false;
  if (p.eval(Rational(1)).sign() <= 0) return false;
  if (p.degree() == 0) return true;
  Poly q = squarefree_part(p);
  auto s = SturmSequence::of(q);
  // No roots in (0, 1] and both endpoint values positive means no sign change.
  return roots_in_interval(s, Rational(0), Rational(1)) == 0;
}

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Poly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly term = Poly::constant(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Rational d = xs[i] - xs[j];
      term = term * Poly(std::vector<Rational>{-xs[j] / d, Rational(1) / d});
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace gradus
