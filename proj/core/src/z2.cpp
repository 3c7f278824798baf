#include "gradus/z2/z2.hpp"

#include <random>
#include <stdexcept>
#include <tuple>

#include "gradus/jordan_matrix.hpp"
#include "gradus/minpoly.hpp"

namespace gradus {

namespace {

Subspace eigenspace_of_involution(const AlgebraPtr<Rational>& alg, const Mat<Rational>& tau,
                                  int sign) {
  Mat<Rational> M = tau;
  for (int i = 0; i < alg->dim; ++i) M.at(i, i) -= Rational(sign);
  Mat<Rational> ker = kernel_basis(M);
  std::vector<Vec<Rational>> rows;
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return Subspace::from_span(alg, rows);
}

// definiteness of the Killing form on a subspace: +1 positive, -1 negative
bool killing_definite_on(const AlgebraPtr<Rational>& alg, const Subspace& S, int want_sign) {
  const int d = S.dimension();
  Mat<Rational> gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational v = alg->killing(S.element(i), S.element(j));
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  // symmetric elimination: all pivots must carry the wanted sign
  for (int c = 0; c < d; ++c) {
    if (gram.at(c, c).sign() != want_sign) return false;
    Rational inv = Rational(1) / gram.at(c, c);
    for (int r = c + 1; r < d; ++r) {
      if (gram.at(r, c).is_zero()) continue;
      Rational f = gram.at(r, c) * inv;
      for (int j = c; j < d; ++j) gram.at(r, j) -= f * gram.at(c, j);
    }
  }
  return true;
}

}  // namespace

CartanDecomposition cartan_decomposition(const AlgebraPtr<Rational>& alg,
                                         const Mat<Rational>& tau_u) {
  if (tau_u.rows() != alg->dim || tau_u.cols() != alg->dim)
    throw std::invalid_argument("cartan_decomposition: dimension mismatch");
  if (!(tau_u * tau_u == Mat<Rational>::identity(alg->dim)))
    throw std::invalid_argument("cartan_decomposition: map is not involutive on g");

  CartanDecomposition D;
  D.alg = alg;
  D.involution = tau_u;
  D.k = eigenspace_of_involution(alg, tau_u, +1);
  D.p = eigenspace_of_involution(alg, tau_u, -1);
  if (D.k.dimension() + D.p.dimension() != alg->dim)
    throw std::invalid_argument("cartan_decomposition: eigenspaces do not fill g");

  // bracket inclusions [k,k] ⊆ k, [k,p] ⊆ p, [p,p] ⊆ k. Exhaustive on small
  // algebras; above that, verify the automorphism property on the bracket
  // table (which implies the inclusions) plus a sampled sweep.
  auto check_incl = [&](const Subspace& A, const Subspace& B, const Subspace& into, int cap) {
    for (int i = 0; i < std::min(A.dimension(), cap); ++i)
      for (int j = 0; j < std::min(B.dimension(), cap); ++j)
        if (!into.contains(alg->bracket(A.element(i), B.element(j))))
          throw std::logic_error("cartan_decomposition: bracket inclusion fails");
  };
  if (alg->dim <= 32) {
    check_incl(D.k, D.k, D.k, alg->dim);
    check_incl(D.k, D.p, D.p, alg->dim);
    check_incl(D.p, D.p, D.k, alg->dim);
  } else {
    for (const auto& [kij, terms] : alg->table()) {
      int i = int(kij >> 32), j = int(kij & 0xffffffffu);
      Element xi = Element::basis_vector(alg, i), xj = Element::basis_vector(alg, j);
      Element lhs(alg, tau_u * alg->bracket(xi, xj).coords);
      Element rhs = alg->bracket(Element(alg, tau_u * xi.coords), Element(alg, tau_u * xj.coords));
      if (!(lhs == rhs))
        throw std::logic_error("cartan_decomposition: involution is not an automorphism");
    }
    check_incl(D.k, D.k, D.k, 8);
    check_incl(D.k, D.p, D.p, 8);
    check_incl(D.p, D.p, D.k, 8);
  }

  if (!killing_definite_on(alg, D.k, -1))
    throw std::logic_error("cartan_decomposition: Killing form not negative definite on k");
  if (!killing_definite_on(alg, D.p, +1))
    throw std::logic_error("cartan_decomposition: Killing form not positive definite on p");

  for (int deg = 0; deg < alg->modulus; ++deg) {
    Subspace block = Subspace::from_span(alg, [&] {
      std::vector<Vec<Rational>> rows;
      for (int b : alg->degree_block(deg)) {
        Vec<Rational> v(alg->dim, Rational(0));
        v[b] = Rational(1);
        rows.push_back(std::move(v));
      }
      return rows;
    }());
    D.k_by_degree.emplace(deg, D.k.intersect(block));
    D.p_by_degree.emplace(deg, D.p.intersect(block));
  }
  return D;
}

bool is_elliptic(const Element& x) {
  Poly mu = minimal_polynomial(x.alg->ad_sparse(x));
  if (squarefree_part(mu) != mu.monic()) return false;
  // strip a factor t if present, then require an even polynomial in t with
  // all roots of q(u) = r(sqrt(u)) real and negative
  Poly r = mu.monic();
  if (r.coeff(0).is_zero()) {
    r = r / Poly::x();
    if (r.coeff(0).is_zero()) return false;  // repeated zero root: not semisimple anyway
  }
  if (r.degree() == 0) return true;  // spectrum {0}
  std::vector<Rational> even;
  for (int i = 0; i <= r.degree(); ++i) {
    if (i % 2 == 1 && !r.coeff(i).is_zero()) return false;
    if (i % 2 == 0) even.push_back(r.coeff(i));
  }
  Poly q(std::move(even));
  auto s = SturmSequence::of(q);
  int total = s.variations_at_neg_inf() - s.variations_at_pos_inf();
  int negative = s.variations_at_neg_inf() - s.variations_at(Rational(0));
  return total == q.degree() && negative == q.degree();
}

bool is_hyperbolic(const Element& x) {
  Poly mu = minimal_polynomial(x.alg->ad_sparse(x));
  if (squarefree_part(mu) != mu.monic()) return false;
  return count_distinct_real_roots(mu) == mu.degree();
}

bool standard_cartan_check(const Subspace& h_sub, const CartanDecomposition& D, unsigned seed) {
  const auto alg = D.alg;
  // inside g_1
  for (int r = 0; r < h_sub.dimension(); ++r)
    if (!h_sub.element(r).homogeneous_of_degree(1))
      throw std::invalid_argument("standard_cartan_check: subspace is not inside g_1");
  // abelian
  for (int i = 0; i < h_sub.dimension(); ++i)
    for (int j = i + 1; j < h_sub.dimension(); ++j)
      if (!alg->bracket(h_sub.element(i), h_sub.element(j)).is_zero())
        throw std::invalid_argument("standard_cartan_check: subspace is not abelian");
  // semisimple on a basis and random combinations
  std::mt19937_64 rng(seed);
  auto semisimple = [&](const Element& x) {
    Poly mu = minimal_polynomial(alg->ad_sparse(x));
    return squarefree_part(mu) == mu.monic();
  };
  for (int r = 0; r < h_sub.dimension(); ++r)
    if (!semisimple(h_sub.element(r)))
      throw std::invalid_argument("standard_cartan_check: basis element " + std::to_string(r) +
                                  " is not semisimple");
  for (int t = 0; t < 5; ++t) {
    Element x = Element::zero(alg);
    for (int r = 0; r < h_sub.dimension(); ++r)
      x = x + h_sub.element(r) * Rational(long(rng() % 7) - 3);
    if (!x.is_zero() && !semisimple(x))
      throw std::invalid_argument("standard_cartan_check: a combination is not semisimple");
  }
  // tau_u-invariance
  std::vector<Vec<Rational>> img;
  for (int r = 0; r < h_sub.dimension(); ++r) img.push_back(D.involution * h_sub.basis.row(r));
  Subspace image = Subspace::from_span(alg, img);
  if (!(image == h_sub)) return false;
  // the split h = (h ∩ k) ⊕ (h ∩ p) reconstructs h
  Subspace hk = h_sub.intersect(D.k), hp = h_sub.intersect(D.p);
  return hk.sum(hp) == h_sub;
}

std::pair<Element, Element> elliptic_vector_split(const Element& s, const CartanDecomposition& D) {
  const auto alg = D.alg;
  // projections along g = k ⊕ p
  Mat<Rational> proj_sys(alg->dim, D.k.dimension() + D.p.dimension());
  for (int c = 0; c < D.k.dimension(); ++c)
    for (int r = 0; r < alg->dim; ++r) proj_sys.at(r, c) = D.k.basis.at(c, r);
  for (int c = 0; c < D.p.dimension(); ++c)
    for (int r = 0; r < alg->dim; ++r) proj_sys.at(r, D.k.dimension() + c) = D.p.basis.at(c, r);
  auto sol = solve(proj_sys, s.coords);
  if (!sol) throw std::logic_error("elliptic_vector_split: k ⊕ p does not span g");
  Element hk = Element::zero(s.alg), hp = Element::zero(s.alg);
  for (int c = 0; c < D.k.dimension(); ++c)
    if (!(*sol)[c].is_zero()) hk = hk + D.k.element(c) * (*sol)[c];
  for (int c = 0; c < D.p.dimension(); ++c)
    if (!(*sol)[D.k.dimension() + c].is_zero())
      hp = hp + D.p.element(c) * (*sol)[D.k.dimension() + c];

  if (!alg->bracket(hk, hp).is_zero())
    throw std::invalid_argument(
        "elliptic_vector_split: not in standard position; conjugate first");
  if (!hk.is_zero() && !is_elliptic(hk))
    throw std::logic_error("elliptic_vector_split: k-part fails the elliptic spectrum check");
  if (!hp.is_zero() && !is_hyperbolic(hp))
    throw std::logic_error("elliptic_vector_split: p-part fails the real spectrum check");
  return {hk, hp};
}

namespace {

bool mat_in_list(const std::vector<WeylElement>& els, const Mat<Rational>& m) {
  for (const auto& e : els)
    if (e.action == m) return true;
  return false;
}

}  // namespace

FiniteReflectionGroup restricted_weyl_group(const Subspace& h_sub, const CartanDecomposition& D,
                                            size_t closure_bound) {
  const auto alg = D.alg;
  FiniteReflectionGroup W;
  W.cartan = h_sub;
  const int hd = h_sub.dimension();
  W.elements.push_back({Mat<Rational>::identity(hd), true, Mat<Rational>::identity(alg->dim)});

  // joint eigenfunctionals of ad(h_sub) on g; for compact parts the spectrum
  // of (ad u)^2 supplies the functional data
  std::vector<WeylElement> generators;

  // candidate compact generators: basis of k, filtered by single-frequency
  // minimal polynomial t (t^2 + q) and h_sub-preservation of the rotation
  for (int c = 0; c < D.k.dimension(); ++c) {
    Element z = D.k.element(c);
    Poly mu = minimal_polynomial(alg->ad_sparse(z));
    // accept t^2 + q and t (t^2 + q) = t^3 + q t
    Rational q;
    if (mu.degree() == 2 && mu.coeff(1).is_zero() && mu.coeff(0).sign() > 0) {
      q = mu.coeff(0);
    } else if (mu.degree() == 3 && mu.coeff(0).is_zero() && mu.coeff(2).is_zero() &&
               mu.coeff(1).sign() > 0) {
      q = mu.coeff(1);
    } else {
      continue;
    }
    // half-turn rotation: R = I + (2/q) (ad z)^2, an exact exp(pi/sqrt(q) ad z)
    auto adz = alg->ad_dense(z);
    Mat<Rational> R = Mat<Rational>::identity(alg->dim) + (adz * adz) * (Rational(2) / q);
    // automorphism sanity on basis pairs of the small algebras; on large ones
    // sample through the table
    bool ok = true;
    for (const auto& [kij, terms] : alg->table()) {
      int i = int(kij >> 32), j = int(kij & 0xffffffffu);
      Element xi = Element::basis_vector(alg, i), xj = Element::basis_vector(alg, j);
      Element lhs(alg, R * alg->bracket(xi, xj).coords);
      Element rhs = alg->bracket(Element(alg, R * xi.coords), Element(alg, R * xj.coords));
      if (!(lhs == rhs)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // induced action on h_sub
    Mat<Rational> act(hd, hd);
    bool preserves = true;
    for (int r = 0; r < hd && preserves; ++r) {
      Vec<Rational> img = R * h_sub.basis.row(r);
      auto coords = h_sub.coordinates_of(img);
      if (!coords) {
        preserves = false;
        break;
      }
      for (int i = 0; i < hd; ++i) act.at(i, r) = (*coords)[i];
    }
    if (!preserves) continue;
    if (act == Mat<Rational>::identity(hd)) continue;
    if (!mat_in_list(generators, act)) generators.push_back({act, true, R});
  }

  // abstract reflections for restricted roots not covered by a realized
  // generator: s_r(x) = x - 2 B(x, t_r)/B(t_r, t_r) t_r on a p-type Cartan
  {
    auto rsd = root_space_decomposition(alg, h_sub);
    for (const auto& rs : rsd) {
      bool zero = true;
      for (const auto& v : rs.functional)
        if (!v.is_zero()) zero = false;
      if (zero) continue;
      // reflection in the functional w.r.t. the Killing form restricted to h_sub
      Mat<Rational> gram(hd, hd);
      for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j)
          gram.at(i, j) = alg->killing(h_sub.element(i), h_sub.element(j));
      auto tvec = solve(gram, rs.functional);
      if (!tvec) continue;
      Rational norm(0);
      for (int i = 0; i < hd; ++i) norm += rs.functional[i] * (*tvec)[i];
      if (norm.is_zero()) continue;
      Mat<Rational> refl = Mat<Rational>::identity(hd);
      for (int r = 0; r < hd; ++r)
        for (int c = 0; c < hd; ++c)
          refl.at(r, c) -= Rational(2) * (*tvec)[r] * rs.functional[c] / norm;
      if (!mat_in_list(generators, refl) && !(refl == Mat<Rational>::identity(hd)))
        generators.push_back({refl, false, Mat<Rational>()});
    }
  }

  // drop abstract duplicates of realized generators
  {
    std::vector<WeylElement> dedup;
    for (const auto& g : generators) {
      bool dup = false;
      for (const auto& d : dedup)
        if (d.action == g.action) dup = true;
      if (!dup) dedup.push_back(g);
      else if (g.realized)
        for (auto& d : dedup)
          if (d.action == g.action && !d.realized) d = g;
    }
    generators = std::move(dedup);
  }

  // closure under composition
  std::vector<WeylElement> frontier = W.elements;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& f : frontier)
      for (const auto& g : generators) {
        WeylElement h;
        h.action = g.action * f.action;
        h.realized = f.realized && g.realized;
        if (h.realized && f.inner.rows() > 0 && g.inner.rows() > 0) h.inner = g.inner * f.inner;
        if (!mat_in_list(W.elements, h.action) && !mat_in_list(next, h.action)) next.push_back(h);
      }
    for (auto& e : next) {
      W.elements.push_back(e);
      if (W.elements.size() > closure_bound)
        throw std::runtime_error("restricted_weyl_group: not finite — input not a Cartan subspace");
    }
    frontier = std::move(next);
  }
  return W;
}

bool semisimple_orbit_equivalent(const Element& x, const Element& y,
                                 const FiniteReflectionGroup& W) {
  auto cx = W.cartan.coordinates_of(x.coords);
  auto cy = W.cartan.coordinates_of(y.coords);
  if (!cx || !cy)
    throw std::invalid_argument("semisimple_orbit_equivalent: inputs must lie in the Cartan subspace");
  for (const auto& w : W.elements)
    if (w.action * *cx == *cy) return true;
  return false;
}

MixedNormalForm mixed_normal_form(const Element& x, const CartanDecomposition& D) {
  auto jd = jordan_decompose(x);
  auto [hk, hp] = elliptic_vector_split(jd.xs, D);
  return {hk, hp, jd.xn};
}

namespace {

// graded centralizer commutant as a standalone algebra, with maps in and out
struct CentralizerContext {
  AlgebraPtr<Rational> sub;
  Mat<Rational> embedding;  // rows: sub basis in ambient coordinates
  std::optional<Element> to_sub(const Element& ambient_x) const {
    Subspace rows(ambient_x.alg, embedding);
    auto coords = rows.coordinates_of(ambient_x.coords);
    if (!coords) return std::nullopt;
    return Element(sub, *coords);
  }
};

CentralizerContext centralizer_algebra(const Element& es) {
  CentralizerContext ctx;
  auto Z = centralizer(es);
  auto Zc = commutant(Z);
  ctx.embedding = graded_subalgebra_embedding(Zc);
  ctx.sub = graded_subalgebra(Zc, "Z(" + es.alg->name + ")'");
  return ctx;
}

}  // namespace

ConjugacyResult mixed_conjugacy(const Element& x, const Element& y, const CartanDecomposition& D,
                                const CenterData& C, const ComponentOptions& opts) {
  const auto alg = D.alg;
  if (alg->modulus != 2 && alg->modulus != 1)
    throw std::invalid_argument("mixed_conjugacy: m = 2 (or trivial) gradings only");

  if (x == y) return {Verdict::Conjugate, "identity"};

  auto jx = jordan_decompose(x);
  auto jy = jordan_decompose(y);

  // semisimple stage
  Element sx = jx.xs, sy = jy.xs;
  if (!(sx.is_zero() && sy.is_zero())) {
    if (sx.is_zero() != sy.is_zero())
      return {Verdict::Distinct, "semisimple stage: one semisimple part vanishes, the other does not"};
    // both nonzero: need a shared standard Cartan subspace
    Element xk = Element::zero(x.alg), xp = xk, yk = xk, yp = xk;
    try {
      std::tie(xk, xp) = elliptic_vector_split(sx, D);
      std::tie(yk, yp) = elliptic_vector_split(sy, D);
    } catch (const std::invalid_argument& err) {
      return {Verdict::Undecided, std::string("semisimple stage: ") + err.what()};
    }
    // quick invariant: ad-spectra of the full semisimple parts must agree
    Poly mx = minimal_polynomial(alg->ad_sparse(sx));
    Poly my = minimal_polynomial(alg->ad_sparse(sy));
    if (mx != my && squarefree_part(mx) != squarefree_part(my))
      return {Verdict::Distinct, "semisimple stage: ad-spectra differ"};
    // build a Cartan subspace from sx
    std::vector<Vec<Rational>> rows{sx.coords};
    if (!sy.is_zero()) rows.push_back(sy.coords);
    Subspace span = Subspace::from_span(alg, rows);
    // all pairs must commute to compare inside one subspace
    if (!alg->bracket(sx, sy).is_zero())
      return {Verdict::Undecided, "semisimple stage: parts not in standard position (no shared Cartan subspace found)"};
    if (!standard_cartan_check(span, D))
      return {Verdict::Undecided, "semisimple stage: shared span is not a standard Cartan subspace"};
    auto W = restricted_weyl_group(span, D);
    // compare (elliptic, vector) pairs simultaneously
    auto cxk = span.coordinates_of(xk.coords), cxp = span.coordinates_of(xp.coords);
    auto cyk = span.coordinates_of(yk.coords), cyp = span.coordinates_of(yp.coords);
    if (!cxk || !cxp || !cyk || !cyp)
      return {Verdict::Undecided, "semisimple stage: split parts escaped the Cartan subspace"};
    bool found = false;
    bool realized = false;
    for (const auto& w : W.elements) {
      if (w.action * *cxk == *cyk && w.action * *cxp == *cyp) {
        found = true;
        realized = w.realized;
        break;
      }
    }
    if (!found) {
      // sound separation: both lie in the same Cartan subspace and no Weyl
      // element matches
      return {Verdict::Distinct, "semisimple stage: no restricted Weyl element matches the split parts"};
    }
    if (!realized)
      return {Verdict::Undecided, "semisimple stage: matching reflection lacks an exact Ad representative"};
    if (jx.xn.is_zero() && jy.xn.is_zero())
      return {Verdict::Conjugate, "semisimple stage: restricted Weyl element (compact word)"};
    // nilpotent stage inside the centralizer of the matched semisimple part
    if (!(sx == sy))
      return {Verdict::Undecided, "nilpotent stage: semisimple parts match only up to a Weyl move; transport not implemented"};
    auto ctx = centralizer_algebra(sx);
    auto ex = ctx.to_sub(jx.xn), ey = ctx.to_sub(jy.xn);
    if (!ex || !ey)
      return {Verdict::Undecided, "nilpotent stage: nilpotent part escaped the centralizer commutant"};
    auto sub_hx = characteristic(*ex);
    auto sub_hy = characteristic(*ey);
    if (characteristics_distinct(sub_hx, sub_hy) == CharacteristicComparison::Distinct)
      return {Verdict::Distinct, "nilpotent stage: characteristic fingerprints differ"};
    if (!(sub_hx == sub_hy))
      return {Verdict::Undecided, "nilpotent stage: characteristics differ; fingerprints agree"};
    auto S = slice(sub_hx);
    auto G = genericity_matrix(S, slice_commutant(S));
    auto R = component_analysis(G, opts);
    auto merged = center_cosets(*ex, C, R, G);
    auto cex = G.e_space.coordinates_of(ex->coords);
    auto cey = G.e_space.coordinates_of(ey->coords);
    if (!cex || !cey) return {Verdict::Undecided, "nilpotent stage: parts escaped the slice"};
    // locate classes (exact mode: sign; else: membership)
    auto locate = [&](const Vec<Rational>& a) -> int {
      if (merged.mode == ComponentReport::Exact) {
        for (int c = 0; c < merged.class_count; ++c)
          if (merged.representative_coords[c][0].sign() == a[0].sign()) return c;
        return -1;
      }
      for (int c = 0; c < merged.class_count; ++c)
        for (const auto& mpt : merged.class_points[c])
          if (mpt == a || certify_segment(G, a, mpt)) return c;
      return -1;
    };
    int clx = locate(*cex), cly = locate(*cey);
    if (clx < 0 || cly < 0) return {Verdict::Undecided, "nilpotent stage: class not certified"};
    if (clx == cly) return {Verdict::Conjugate, "nilpotent stage: same certified class"};
    if (merged.mode == ComponentReport::Exact)
      return {Verdict::Distinct, "nilpotent stage: different exact components, center applied"};
    return {Verdict::Undecided, "nilpotent stage: different heuristic classes (separation not certified)"};
  }

  // purely nilpotent comparison in the ambient algebra
  Element ex = jx.xn, ey = jy.xn;
  if (ex.is_zero() || ey.is_zero()) {
    if (ex.is_zero() && ey.is_zero()) return {Verdict::Conjugate, "both zero"};
    return {Verdict::Distinct, "one element is zero, the other is not"};
  }
  auto hx = characteristic(ex);
  auto hy = characteristic(ey);
  if (characteristics_distinct(hx, hy) == CharacteristicComparison::Distinct)
    return {Verdict::Distinct, "nilpotent stage: characteristic fingerprints differ"};
  if (!(hx == hy))
    return {Verdict::Undecided, "nilpotent stage: characteristics differ; fingerprints agree"};
  auto S = slice(hx);
  auto G = genericity_matrix(S, slice_commutant(S));
  auto R = component_analysis(G, opts);
  auto merged = center_cosets(ex, C, R, G);
  auto cex = G.e_space.coordinates_of(ex.coords);
  auto cey = G.e_space.coordinates_of(ey.coords);
  if (!cex || !cey) return {Verdict::Undecided, "nilpotent stage: parts escaped the slice"};
  auto locate = [&](const Vec<Rational>& a) -> int {
    if (merged.mode == ComponentReport::Exact) {
      for (int c = 0; c < merged.class_count; ++c)
        if (merged.representative_coords[c][0].sign() == a[0].sign()) return c;
      return -1;
    }
    for (int c = 0; c < merged.class_count; ++c)
      for (const auto& mpt : merged.class_points[c])
        if (mpt == a || certify_segment(G, a, mpt)) return c;
    return -1;
  };
  int clx = locate(*cex), cly = locate(*cey);
  if (clx < 0 || cly < 0) return {Verdict::Undecided, "nilpotent stage: class not certified"};
  if (clx == cly) return {Verdict::Conjugate, "nilpotent stage: same certified class"};
  if (merged.mode == ComponentReport::Exact)
    return {Verdict::Distinct, "nilpotent stage: different exact components, center applied"};
  return {Verdict::Undecided, "nilpotent stage: different heuristic classes (separation not certified)"};
}

}  // namespace gradus
