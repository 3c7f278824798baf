#include "gradus/jmv/jmv.hpp"

#include <stdexcept>

#include "gradus/jordan_matrix.hpp"
#include "gradus/minpoly.hpp"
#include "gradus/sturm.hpp"

namespace gradus {

namespace {

Poly ad_minimal_polynomial(const Element& x) {
  auto ad = x.alg->ad_sparse(x);
  return minimal_polynomial(ad);
}

bool poly_is_power_of_t(const Poly& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (!p.coeff(i).is_zero()) return false;
  return true;
}

}  // namespace

bool is_nilpotent(const Element& x) { return poly_is_power_of_t(ad_minimal_polynomial(x)); }

bool is_semisimple(const Element& x) {
  Poly mu = ad_minimal_polynomial(x);
  return squarefree_part(mu) == mu.monic();
}

std::optional<std::vector<Rational>> rational_roots_of_squarefree(const Poly& p) {
  Poly q = squarefree_part(p);
  if (q.degree() == 0) return std::vector<Rational>{};
  auto intervals = isolate_real_roots(q);
  if (int(intervals.size()) != q.degree()) return std::nullopt;
  auto s = SturmSequence::of(q);
  std::vector<Rational> roots;
  for (auto [lo, hi] : intervals) {
    bool found = false;
    for (int iter = 0; iter < 256; ++iter) {
      Rational cand = simplest_rational_in(lo, hi);
      if (q.eval(cand).is_zero()) {
        roots.push_back(cand);
        found = true;
        break;
      }
      Rational mid = (lo + hi) / Rational(2);
      while (q.eval(mid).is_zero()) mid = (lo + mid) / Rational(2);
      if (roots_in_interval(s, lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

Element eigen_project(const Element& h, const std::vector<Rational>& spectrum, size_t which,
                      const Element& x) {
  auto ad = h.alg->ad_sparse(h);
  // Lagrange projector: prod_{j != which} (t - l_j) / (l_which - l_j)
  Vec<Rational> v = x.coords;
  Rational denom(1);
  for (size_t j = 0; j < spectrum.size(); ++j) {
    if (j == which) continue;
    Vec<Rational> w = ad * v;
    for (size_t r = 0; r < w.size(); ++r) w[r] -= spectrum[j] * v[r];
    v = std::move(w);
    denom *= spectrum[which] - spectrum[j];
  }
  Rational inv = Rational(1) / denom;
  for (auto& c : v) c *= inv;
  return Element(x.alg, std::move(v));
}

JordanPair jordan_decompose(const Element& x) {
  const auto& alg = *x.alg;
  auto ad = alg.ad_sparse(x);
  Poly mu = minimal_polynomial(ad);
  Poly s = semisimple_projection_poly(mu);

  // columns of S = s(ad x) via Horner on sparse matvecs
  auto s_column = [&](int j) {
    Vec<Rational> acc(alg.dim, Rational(0));
    for (int d = s.degree(); d >= 0; --d) {
      acc = ad * acc;
      if (!s.coeff(d).is_zero()) acc[j] += s.coeff(d);
    }
    return acc;
  };

  // solve ad(y) = S: for every basis j, ad(e_j) y = -S e_j. Rows are fed
  // until the system reaches full rank; the candidate is then re-verified on
  // every column (consistency is a theorem, the replay check makes it exact).
  IncrementalSolver<Rational> solver(alg.dim);
  for (int j = 0; j < alg.dim && !solver.full_rank(); ++j) {
    Vec<Rational> rhs_col = s_column(j);
    const auto& adj = alg.basis_ad(j);
    for (int r = 0; r < alg.dim && !solver.full_rank(); ++r) {
      const auto& row = adj.row(r);
      if (row.empty() && rhs_col[r].is_zero()) continue;
      Vec<Rational> dense_row(alg.dim, Rational(0));
      for (const auto& [c, v] : row) dense_row[c] = v;
      if (!solver.add_row(std::move(dense_row), -rhs_col[r]))
        throw std::logic_error("jordan_decompose: ad(y) = S inconsistent (semisimplicity violated)");
    }
  }
  auto y = solver.solution();
  if (!y || !solver.full_rank())
    throw std::logic_error("jordan_decompose: ad is not injective on this algebra");

  JordanPair out;
  out.xs = Element(x.alg, *y);
  out.xn = x - out.xs;
  // full replay of ad(x_s) = S
  for (int j = 0; j < alg.dim; ++j) {
    Element ej = Element::basis_vector(x.alg, j);
    Vec<Rational> want = s_column(j);
    Vec<Rational> got = alg.bracket(out.xs, ej).coords;
    if (want != got)
      throw std::logic_error("jordan_decompose: ad(y) = S verification failed");
  }
  // verify the defining properties
  if (!alg.bracket(out.xs, out.xn).is_zero())
    throw std::logic_error("jordan_decompose: parts do not commute");
  auto dx = x.degree();
  if (dx && !(out.xs.homogeneous_of_degree(*dx) && out.xn.homogeneous_of_degree(*dx)))
    throw std::logic_error("jordan_decompose: homogeneity not preserved");
  return out;
}

Sl2Triple jmv_triple(const Element& e) {
  const auto& alg = *e.alg;
  if (e.is_zero()) throw std::invalid_argument("jmv_triple: e must be nonzero");
  if (!e.homogeneous_of_degree(1))
    throw std::invalid_argument("jmv_triple: e must be homogeneous of degree 1");
  if (!is_nilpotent(e)) throw std::invalid_argument("jmv_triple: e must be nilpotent");

  auto ad_e = alg.ad_sparse(e);
  auto block = alg.degree_block(-1);
  const int nb = int(block.size());

  // step 1: [[e, f'], e] = 2e, i.e. ad(e)^2 f' = -2e, f' in g_{-1}
  Mat<Rational> M(alg.dim, nb);
  for (int c = 0; c < nb; ++c) {
    Vec<Rational> v(alg.dim, Rational(0));
    v[block[c]] = Rational(1);
    v = ad_e * v;
    v = ad_e * v;
    for (int r = 0; r < alg.dim; ++r) M.at(r, c) = v[r];
  }
  Vec<Rational> rhs(alg.dim);
  for (int r = 0; r < alg.dim; ++r) rhs[r] = Rational(-2) * e.coords[r];
  auto sol = rank_kernel_solve(M, &rhs);
  if (!sol.solution)
    throw std::invalid_argument("jmv_triple: not nilpotent or not in a graded semisimple algebra");
  Element f_r = Element::zero(e.alg);
  for (int c = 0; c < nb; ++c) f_r.coords[block[c]] = (*sol.solution)[c];

  Element h = alg.bracket(e, f_r);

  // step 3 (correction): (ad_h + 2) z = -[h, f'] - 2 f' for z in Z_g(e) ∩ g_{-1}
  Element r = -(alg.bracket(h, f_r)) - f_r * Rational(2);
  Element f = f_r;
  if (!r.is_zero()) {
    Subspace zc = centralizer(e);
    std::vector<Vec<Rational>> deg_rows;
    for (int b : block) {
      Vec<Rational> v(alg.dim, Rational(0));
      v[b] = Rational(1);
      deg_rows.push_back(std::move(v));
    }
    Subspace gm1 = Subspace::from_span(e.alg, deg_rows);
    Subspace W = zc.intersect(gm1);
    Mat<Rational> C(alg.dim, W.dimension());
    for (int c = 0; c < W.dimension(); ++c) {
      Element w = W.element(c);
      Element img = alg.bracket(h, w) + w * Rational(2);
      for (int row = 0; row < alg.dim; ++row) C.at(row, c) = img.coords[row];
    }
    auto zsol = solve(C, r.coords);
    if (!zsol)
      throw std::logic_error("jmv_triple: correction equation unsolvable in Z_g(e) ∩ g_{-1}");
    Element z = Element::zero(e.alg);
    for (int c = 0; c < W.dimension(); ++c)
      if (!(*zsol)[c].is_zero()) z = z + W.element(c) * (*zsol)[c];
    f = f_r + z;
  }

  Sl2Triple t{h, e, f};
  // exact relation replay
  if (!(alg.bracket(t.h, t.e) - t.e * Rational(2)).is_zero() ||
      !(alg.bracket(t.h, t.f) + t.f * Rational(2)).is_zero() ||
      !(alg.bracket(t.e, t.f) - t.h).is_zero())
    throw std::logic_error("jmv_triple: triple relations failed after correction");
  if (!t.h.homogeneous_of_degree(0))
    throw std::logic_error("jmv_triple: characteristic escaped g_0");

  // uniqueness of f given (e, h): the homogeneous solution space of
  // [e,f] = h, [h,f] = -2f in g_{-1} is zero-dimensional
  {
    auto ad_h = alg.ad_sparse(h);
    Mat<Rational> U(2 * alg.dim, nb);
    for (int c = 0; c < nb; ++c) {
      Vec<Rational> v(alg.dim, Rational(0));
      v[block[c]] = Rational(1);
      Vec<Rational> a = ad_e * v;  // [e, f] up to sign: ad_e v = [e, v]
      Vec<Rational> b = ad_h * v;
      for (int r = 0; r < alg.dim; ++r) {
        U.at(r, c) = a[r];
        U.at(alg.dim + r, c) = b[r] + Rational(2) * v[r];
      }
    }
    if (kernel_basis(U).rows() != 0)
      throw std::logic_error("jmv_triple: f is not unique for (e, h)");
  }
  return t;
}

Element characteristic(const Element& e) { return jmv_triple(e).h; }

Subspace u_g0(const Element& e) {
  const auto& alg = *e.alg;
  Subspace g0 = Subspace::from_span(e.alg, [&] {
    std::vector<Vec<Rational>> rows;
    for (int b : alg.degree_block(0)) {
      Vec<Rational> v(alg.dim, Rational(0));
      v[b] = Rational(1);
      rows.push_back(std::move(v));
    }
    return rows;
  }());
  Subspace zg0 = centralizer(e, g0);
  std::vector<Vec<Rational>> img;
  for (int b : alg.degree_block(-1)) {
    Element x = Element::basis_vector(e.alg, b);
    img.push_back(alg.bracket(x, e).coords);
  }
  Subspace image = Subspace::from_span(e.alg, img);
  return zg0.intersect(image);
}

Mat<Rational> conjugate_characteristics(const Element& e, const Element& h, const Element& h2) {
  const auto& alg = *e.alg;
  auto check = [&](const Element& hh) {
    return (alg.bracket(hh, e) - e * Rational(2)).is_zero();
  };
  if (!check(h) || !check(h2))
    throw std::invalid_argument("conjugate_characteristics: inputs do not complete e");

  Element v = h2 - h;
  Subspace u = u_g0(e);
  if (!u.contains(v))
    throw std::invalid_argument("conjugate_characteristics: not characteristics of the same e");
  if (v.is_zero()) return Mat<Rational>::identity(alg.dim);

  // ad_h eigendecomposition of u: positive integer eigenvalues only
  const int ud = u.dimension();
  Mat<Rational> R(ud, ud);
  for (int c = 0; c < ud; ++c) {
    auto img = alg.bracket(h, u.element(c));
    auto coords = u.coordinates_of(img.coords);
    if (!coords) throw std::logic_error("conjugate_characteristics: u not ad_h-invariant");
    for (int r = 0; r < ud; ++r) R.at(r, c) = (*coords)[r];
  }
  auto spec = rational_roots_of_squarefree(minimal_polynomial(R));
  if (!spec) throw std::logic_error("conjugate_characteristics: non-rational ad_h spectrum on u");
  std::vector<long> eigs;
  for (const auto& lam : *spec) {
    if (!lam.is_integer() || lam.sign() <= 0)
      throw std::logic_error("conjugate_characteristics: ad_h eigenvalue on u not a positive integer");
    eigs.push_back(lam.to_long());
  }
  std::sort(eigs.begin(), eigs.end());
  long kmax = eigs.empty() ? 0 : eigs.back();

  // component of an algebra element in u(e)_k: Lagrange projector of the
  // restricted operator R applied to u-coordinates
  auto component_in = [&](const Element& x, long k) {
    auto coords = u.coordinates_of(x.coords);
    if (!coords) throw std::logic_error("conjugate_characteristics: element escaped u");
    if (std::find(eigs.begin(), eigs.end(), k) == eigs.end()) return Element::zero(e.alg);
    Vec<Rational> vv = *coords;
    Rational denom(1);
    for (long lam : eigs) {
      if (lam == k) continue;
      Vec<Rational> w(ud, Rational(0));
      for (int r = 0; r < ud; ++r) {
        for (int c = 0; c < ud; ++c)
          if (!R.at(r, c).is_zero()) w[r] += R.at(r, c) * vv[c];
        w[r] -= Rational(lam) * vv[r];
      }
      vv = std::move(w);
      denom *= Rational(k - lam);
    }
    Element out = Element::zero(e.alg);
    Rational inv = Rational(1) / denom;
    for (int c = 0; c < ud; ++c) {
      Rational coeff = vv[c] * inv;
      if (coeff.is_zero()) continue;
      out = out + u.element(c) * coeff;
    }
    return out;
  };

  // graded correction iteration: z_1 = -v_1, z_{j+1} = z_j + z'_{j+1}/(j+1)
  Element z = -component_in(v, 1);
  Element target = h + v;
  Mat<Rational> P = Mat<Rational>::identity(alg.dim);
  for (long j = 1; j <= kmax; ++j) {
    P = nilpotent_exp(alg.ad_dense(z));
    Element image(e.alg, P * h.coords);
    Element err = image - target;
    if (err.is_zero()) break;
    if (j == kmax) throw std::logic_error("conjugate_characteristics: iteration did not close");
    Element zj = component_in(err, j + 1);
    z = z + zj * (Rational(1) / Rational(j + 1));
  }
  P = nilpotent_exp(alg.ad_dense(z));

  Element himg(e.alg, P * h.coords);
  Element eimg(e.alg, P * e.coords);
  if (!(himg == h2) || !(eimg == e))
    throw std::logic_error("conjugate_characteristics: verification failed");
  return P;
}

std::vector<std::pair<Rational, Element>> scaling_diagnostic(const Element& e, const Element& h) {
  const auto& alg = *e.alg;
  Poly mu = minimal_polynomial(alg.ad_sparse(h));
  auto spec = rational_roots_of_squarefree(mu);
  if (!spec || squarefree_part(mu) != mu.monic())
    throw std::invalid_argument("scaling_diagnostic: h is not semisimple with rational spectrum");
  std::vector<std::pair<Rational, Element>> out;
  for (size_t i = 0; i < spec->size(); ++i) {
    Element comp = eigen_project(h, *spec, i, e);
    if (comp.is_zero()) continue;
    Rational half = (*spec)[i] / Rational(2);
    if (half.sign() <= 0)
      throw std::invalid_argument("scaling_diagnostic: component at nonpositive eigenvalue " +
                                  half.str() + " (e not nilpotent for this h)");
    out.push_back({half, comp});
  }
  return out;
}

}  // namespace gradus
