#include "gradus/nilclass/nilclass.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "gradus/jordan_matrix.hpp"
#include "gradus/minpoly.hpp"

namespace gradus {

namespace {

Subspace degree_block_subspace(const AlgebraPtr<Rational>& alg, int k) {
  std::vector<Vec<Rational>> rows;
  for (int b : alg->degree_block(k)) {
    Vec<Rational> v(alg->dim, Rational(0));
    v[b] = Rational(1);
    rows.push_back(std::move(v));
  }
  return Subspace::from_span(alg, rows);
}

}  // namespace

SliceDecomposition slice(const Element& h) {
  const auto alg = h.alg;
  if (!h.homogeneous_of_degree(0)) throw std::invalid_argument("slice: h must lie in g_0");
  Poly mu = minimal_polynomial(alg->ad_sparse(h));
  if (squarefree_part(mu) != mu.monic())
    throw std::invalid_argument("slice: h is not semisimple (minimal polynomial " + mu.str() + ")");
  auto spec = rational_roots_of_squarefree(mu);
  if (!spec)
    throw std::invalid_argument("slice: non-integer spectrum; offending factor(s) in " + mu.str());
  for (const auto& lam : *spec)
    if (!lam.is_integer())
      throw std::invalid_argument("slice: non-integer spectrum; offending eigenvalue factor (t - " +
                                  lam.str() + ")");

  SliceDecomposition out;
  out.alg = alg;
  out.h = h;
  for (size_t i = 0; i < spec->size(); ++i) {
    const Rational& lam = (*spec)[i];
    mpz_class num = lam.num();
    if (mpz_odd_p(num.get_mpz_t())) continue;  // odd ad(h) eigenvalue: not in the slice
    long k = Rational(lam / Rational(2)).to_long();
    // eigenspace ∩ degree block via the Lagrange projector on block vectors
    std::vector<Vec<Rational>> vecs;
    for (int b : alg->degree_block(int(k))) {
      Element proj = eigen_project(h, *spec, i, Element::basis_vector(alg, b));
      if (!proj.is_zero()) vecs.push_back(proj.coords);
    }
    auto sub = Subspace::from_span(alg, vecs);
    if (sub.dimension() > 0) out.components.emplace(int(k), std::move(sub));
  }

  // bracket degree additivity across the integer grading
  for (const auto& [a, sa] : out.components)
    for (const auto& [b, sb] : out.components) {
      auto it = out.components.find(a + b);
      for (int i = 0; i < sa.dimension(); ++i)
        for (int j = 0; j < sb.dimension(); ++j) {
          auto br = alg->bracket(sa.element(i), sb.element(j));
          if (br.is_zero()) continue;
          if (it == out.components.end() || !it->second.contains(br))
            throw std::logic_error("slice: bracket additivity violated");
        }
    }
  return out;
}

SliceDecomposition slice_commutant(const SliceDecomposition& S) {
  SliceDecomposition out;
  out.alg = S.alg;
  out.h = S.h;
  std::map<int, std::vector<Vec<Rational>>> spans;
  for (const auto& [a, sa] : S.components)
    for (const auto& [b, sb] : S.components) {
      if (b < a) continue;
      for (int i = 0; i < sa.dimension(); ++i)
        for (int j = 0; j < sb.dimension(); ++j) {
          auto br = S.alg->bracket(sa.element(i), sb.element(j));
          if (!br.is_zero()) spans[a + b].push_back(br.coords);
        }
    }
  for (auto& [k, vecs] : spans) {
    auto sub = Subspace::from_span(S.alg, vecs);
    if (sub.dimension() > 0) out.components.emplace(k, std::move(sub));
  }
  return out;
}

SupportData support(const Element& e, unsigned seed) {
  const auto alg = e.alg;
  Element h = characteristic(e);

  Subspace g0 = degree_block_subspace(alg, 0);
  Subspace N = normalizer_of_line(e, g0);

  auto is_r_diagonalizable = [&](const Element& x) {
    Poly mu = minimal_polynomial(alg->ad_sparse(x));
    if (squarefree_part(mu) != mu.monic()) return false;
    return rational_roots_of_squarefree(mu).has_value();
  };

  SupportData out;
  std::vector<Vec<Rational>> a_rows{h.coords};
  Subspace A = Subspace::from_span(alg, a_rows);
  std::mt19937_64 rng(seed);
  Subspace C = N;
  while (true) {
    // commuting candidates inside the normalizer
    C = N;
    for (int r = 0; r < A.dimension(); ++r) C = centralizer(A.element(r), C);
    bool extended = false;
    for (int cidx = 0; cidx < C.dimension() && !extended; ++cidx) {
      Element cand = C.element(cidx);
      if (A.contains(cand)) continue;
      if (is_r_diagonalizable(cand)) {
        A = A.sum(Subspace::from_span(alg, {cand.coords}));
        extended = true;
      }
    }
    if (!extended && C.dimension() > A.dimension()) {
      // bounded random rational combinations
      for (int attempt = 0; attempt < 2 * C.dimension() && !extended; ++attempt) {
        Element cand = Element::zero(alg);
        for (int r = 0; r < C.dimension(); ++r) {
          long c = long(rng() % 5) - 2;
          if (c != 0) cand = cand + C.element(r) * Rational(c);
        }
        if (cand.is_zero() || A.contains(cand)) continue;
        if (is_r_diagonalizable(cand)) {
          A = A.sum(Subspace::from_span(alg, {cand.coords}));
          extended = true;
        }
      }
    }
    if (!extended) break;
  }
  out.cartan_subspace = A;
  out.maximality_unverified = C.dimension() > A.dimension();

  // character phi: [u, e] = phi(u) e
  out.phi.resize(A.dimension());
  for (int r = 0; r < A.dimension(); ++r) {
    Element br = alg->bracket(A.element(r), e);
    // proportionality to e
    Rational c(0);
    for (int i = 0; i < alg->dim; ++i)
      if (!e.coords[i].is_zero()) {
        c = br.coords[i] / e.coords[i];
        break;
      }
    if (!(br - e * c).is_zero())
      throw std::logic_error("support: [u,e] not proportional to e despite normalizer membership");
    out.phi[r] = c;
  }

  // g(h_sub, phi): joint eigenspaces with functional k * phi
  auto rsd = root_space_decomposition(alg, A);
  for (const auto& rs : rsd) {
    // solve f = k * phi for an integer k
    std::optional<Rational> k;
    bool ok = true;
    for (int i = 0; i < A.dimension(); ++i) {
      if (out.phi[i].is_zero()) {
        if (!rs.functional[i].is_zero()) ok = false;
        continue;
      }
      Rational cand = rs.functional[i] / out.phi[i];
      if (!k)
        k = cand;
      else if (*k != cand)
        ok = false;
    }
    if (!ok || !k || !k->is_integer()) continue;
    long kk = k->to_long();
    // also an honest graded piece: members must carry residue k mod m
    auto& comp = out.eigenspace_algebra.components;
    std::vector<Vec<Rational>> keep;
    for (int r = 0; r < rs.space.dimension(); ++r) {
      Element x = rs.space.element(r);
      if (x.homogeneous_of_degree(int(kk))) keep.push_back(x.coords);
    }
    if (keep.empty()) continue;
    auto sub = Subspace::from_span(alg, keep);
    auto it = comp.find(int(kk));
    if (it == comp.end())
      comp.emplace(int(kk), sub);
    else
      it->second = it->second.sum(sub);
  }
  out.eigenspace_algebra.alg = alg;
  out.eigenspace_algebra.h = h;
  out.support = slice_commutant(out.eigenspace_algebra);
  out.locally_flat = out.support.dim_at(0) == out.support.dim_at(1);
  return out;
}

Mat<Rational> GenericityData::evaluate_b(const Vec<Rational>& a) const {
  Mat<Rational> b(m(), n());
  for (int i = 0; i < m(); ++i)
    for (int k = 0; k < n(); ++k) {
      Rational acc(0);
      for (int j = 0; j < n(); ++j)
        if (!a[j].is_zero() && !c[i][j][k].is_zero()) acc += a[j] * c[i][j][k];
      b.at(i, k) = acc;
    }
  return b;
}

Rational GenericityData::minor_value(const std::vector<int>& rows, const Vec<Rational>& a) const {
  Mat<Rational> b = evaluate_b(a);
  Mat<Rational> sub(n(), n());
  for (int r = 0; r < n(); ++r)
    for (int k = 0; k < n(); ++k) sub.at(r, k) = b.at(rows[r], k);
  return det(sub);
}

Rational GenericityData::sum_of_squared_minors(const Vec<Rational>& a) const {
  Mat<Rational> b = evaluate_b(a);
  Mat<Rational> gram = b.transpose() * b;
  return det(gram);
}

Element GenericityData::element_at(const Vec<Rational>& a) const {
  Element x = Element::zero(slice.alg);
  for (int j = 0; j < n(); ++j)
    if (!a[j].is_zero()) x = x + e_space.element(j) * a[j];
  return x;
}

bool GenericityData::generic_at(const Vec<Rational>& a) const {
  return rank(evaluate_b(a)) == n();
}

GenericityData genericity_matrix(const SliceDecomposition& S, const SliceDecomposition& Sc,
                                 int minor_enumeration_cap) {
  GenericityData G;
  G.slice = S;
  const Subspace* e_sp = S.at(1);
  const Subspace* f_sp = Sc.at(0);
  if (!e_sp || e_sp->dimension() == 0)
    throw std::invalid_argument("genericity_matrix: slice has no degree-1 part");
  if (!f_sp || f_sp->dimension() == 0)
    throw std::invalid_argument("genericity_matrix: commutant has no degree-0 part");
  G.e_space = *e_sp;
  G.f_space = *f_sp;

  // (g1): the commutant's degree-1 part equals the slice's
  const Subspace* ce = Sc.at(1);
  if (!ce || !(*ce == *e_sp))
    throw std::logic_error("genericity_matrix: (g1) fails — commutant degree-1 part differs");

  const int m = G.m(), n = G.n();
  if (m < n)
    throw std::invalid_argument("genericity_matrix: slice violates m >= n — not a characteristic slice");

  G.c.assign(m, std::vector<Vec<Rational>>(n));
  std::vector<Vec<Rational>> image_span;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      auto br = S.alg->bracket(G.f_space.element(i), G.e_space.element(j));
      auto coords = G.e_space.coordinates_of(br.coords);
      if (!coords)
        throw std::logic_error("genericity_matrix: [f_i, e_j] escaped g_1(h/2)");
      G.c[i][j] = *coords;
      image_span.push_back(br.coords);
    }
  // (g01): [g_0(h/2)', g_1(h/2)] = g_1(h/2)
  if (!(Subspace::from_span(S.alg, image_span) == G.e_space))
    throw std::logic_error("genericity_matrix: (g01) fails — action does not span the degree-1 part");

  // minor enumeration when feasible
  double binom = 1;
  for (int i = 0; i < n; ++i) binom = binom * double(m - i) / double(i + 1);
  if (binom <= double(minor_enumeration_cap)) G.minor_rows = tuples::subsets(m, n);
  return G;
}

bool is_generic(const GenericityData& G, const Element& e) {
  auto coords = G.e_space.coordinates_of(e.coords);
  if (!coords) return false;
  return G.generic_at(*coords);
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// restriction of sum P_l^2 to the segment x + t(y - x), exactly, by
// interpolation of the Gram determinant (degree <= 2n)
Poly segment_polynomial(const GenericityData& G, const Vec<Rational>& x, const Vec<Rational>& y) {
  const int n = G.n();
  const int deg = 2 * n;
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    Rational t(i, deg == 0 ? 1 : deg);
    Vec<Rational> pt(x.size());
    for (size_t j = 0; j < x.size(); ++j) pt[j] = x[j] + t * (y[j] - x[j]);
    xs.push_back(t);
    ys.push_back(G.sum_of_squared_minors(pt));
  }
  return interpolate(xs, ys);
}

Rational norm2(const Vec<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x * x;
  return s;
}

bool lex_less(const Vec<Rational>& a, const Vec<Rational>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace

std::optional<Poly> certify_segment(const GenericityData& G, const Vec<Rational>& x,
                                    const Vec<Rational>& y) {
  Poly p = segment_polynomial(G, x, y);
  if (strictly_positive_on_unit_interval(p)) return p;
  return std::nullopt;
}

ComponentReport component_analysis(const GenericityData& G, const ComponentOptions& opts) {
  ComponentReport rep;
  const int n = G.n();

  if (n == 1) {
    // exact route: sum P_l^2 is a univariate polynomial of degree 2
    std::vector<Rational> xs{Rational(0), Rational(1), Rational(2)};
    std::vector<Rational> ys;
    for (const auto& t : xs) ys.push_back(G.sum_of_squared_minors({t}));
    Poly p = interpolate(xs, ys);
    if (p.is_zero())
      throw std::invalid_argument("component_analysis: set appears empty — check genericity data");
    rep.mode = ComponentReport::Exact;
    rep.class_count = sturm_components(p);
    if (rep.class_count == 0)
      throw std::invalid_argument("component_analysis: set appears empty — check genericity data");
    rep.representative_coords = {{Rational(1)}, {Rational(-1)}};
    rep.class_points = {{{Rational(1)}}, {{Rational(-1)}}};
    for (const auto& a : rep.representative_coords) rep.representatives.push_back(G.element_at(a));
    return rep;
  }

  rep.mode = ComponentReport::Heuristic;
  rep.caveats.push_back("class_count is an upper bound on component count");

  // deterministic seeded sampling on a dyadic grid in the box
  std::mt19937_64 rng(opts.seed);
  const long scale = 1L << opts.grid_bits;
  mpz_class hi_num = Rational(opts.box * Rational(scale)).num();  // box assumed integral/dyadic
  long hi = std::abs(long(hi_num.get_si()));
  std::vector<Vec<Rational>> pts;
  for (int s = 0; s < opts.samples; ++s) {
    Vec<Rational> a(n);
    for (int j = 0; j < n; ++j) {
      long r = long(rng() % uint64_t(2 * hi + 1)) - hi;
      a[j] = Rational(r, scale);
    }
    if (!G.sum_of_squared_minors(a).is_zero() && G.generic_at(a)) {
      bool dup = false;
      for (const auto& q : pts)
        if (q == a) {
          dup = true;
          break;
        }
      if (!dup) pts.push_back(std::move(a));
    }
  }
  if (pts.empty())
    throw std::invalid_argument("component_analysis: set appears empty — check genericity data");

  // greedy certified-segment clustering, deterministic in sample order
  std::vector<std::vector<Vec<Rational>>> classes;
  for (const auto& a : pts) {
    bool placed = false;
    for (size_t cidx = 0; cidx < classes.size() && !placed; ++cidx) {
      for (const auto& member : classes[cidx]) {
        if (auto p = certify_segment(G, member, a)) {
          Certificate cert;
          cert.kind = Certificate::Segment;
          cert.from = member;
          cert.to = a;
          cert.segment_poly = *p;
          rep.certificates.push_back(std::move(cert));
          classes[cidx].push_back(a);
          placed = true;
          break;
        }
      }
    }
    if (!placed) classes.push_back({a});
  }

  // orbit moves: exp(ad z) with z in g_0(h/2)' and nilpotent action on the
  // degree-1 part; sound merges only
  UnionFind uf(int(classes.size()));
  const int m = G.m();
  for (int mv = 0; mv < opts.orbit_moves; ++mv) {
    Vec<Rational> zc(m, Rational(0));
    if (mv < m)
      zc[mv] = Rational(1);
    else
      for (int i = 0; i < m; ++i) zc[i] = Rational(long(rng() % 5) - 2);
    // action matrix on the e-basis: sum_i zc_i * c[i][j][k]
    Mat<Rational> A(n, n);
    for (int i = 0; i < m; ++i) {
      if (zc[i].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!G.c[i][j][k].is_zero()) A.at(k, j) = A.at(k, j) + zc[i] * G.c[i][j][k];
    }
    // nilpotency of the restricted action
    Mat<Rational> P(n, n);
    try {
      P = nilpotent_exp(A);
    } catch (const std::domain_error&) {
      continue;
    }
    for (size_t cidx = 0; cidx < classes.size(); ++cidx) {
      Vec<Rational> img = P * classes[cidx][0];
      if (G.sum_of_squared_minors(img).is_zero()) continue;
      for (size_t other = 0; other < classes.size(); ++other) {
        if (uf.find(int(other)) == uf.find(int(cidx))) continue;
        bool linked = false;
        for (const auto& member : classes[other]) {
          if (member == img) linked = true;
          else if (auto p = certify_segment(G, img, member)) {
            Certificate cert;
            cert.kind = Certificate::OrbitMove;
            cert.from = classes[cidx][0];
            cert.to = member;
            cert.segment_poly = *p;
            rep.certificates.push_back(std::move(cert));
            linked = true;
          }
          if (linked) break;
        }
        if (linked) uf.unite(int(cidx), int(other));
      }
    }
  }

  // assemble merged classes
  std::map<int, std::vector<Vec<Rational>>> merged;
  for (size_t cidx = 0; cidx < classes.size(); ++cidx) {
    auto& dst = merged[uf.find(int(cidx))];
    dst.insert(dst.end(), classes[cidx].begin(), classes[cidx].end());
  }
  for (auto& [root, members] : merged) {
    // least-norm, then lexicographically-least representative
    Vec<Rational> best = members[0];
    for (const auto& c : members) {
      Rational nb = norm2(best), nc = norm2(c);
      if (nc < nb || (nc == nb && lex_less(c, best))) best = c;
    }
    rep.representative_coords.push_back(best);
    rep.class_points.push_back(members);
  }
  rep.class_count = int(rep.representative_coords.size());
  for (const auto& a : rep.representative_coords) rep.representatives.push_back(G.element_at(a));
  return rep;
}

namespace {

bool is_algebra_automorphism(const AlgebraPtr<Rational>& alg, const Mat<Rational>& M,
                             uint64_t sample_seed) {
  if (M.rows() != alg->dim || M.cols() != alg->dim) return false;
  auto apply = [&](const Element& x) { return Element(alg, M * x.coords); };
  auto check_pair = [&](int i, int j) {
    Element xi = Element::basis_vector(alg, i), xj = Element::basis_vector(alg, j);
    return alg->bracket(apply(xi), apply(xj)) == apply(alg->bracket(xi, xj));
  };
  if (alg->dim <= 64) {
    for (int i = 0; i < alg->dim; ++i)
      for (int j = i + 1; j < alg->dim; ++j)
        if (!check_pair(i, j)) return false;
    return true;
  }
  // large algebras: table pairs plus a seeded sample of the rest
  for (const auto& [kij, terms] : alg->table()) {
    int i = int(kij >> 32), j = int(kij & 0xffffffffu);
    if (!check_pair(i, j)) return false;
  }
  std::mt19937_64 rng(sample_seed);
  for (int t = 0; t < 500; ++t) {
    int i = int(rng() % uint64_t(alg->dim)), j = int(rng() % uint64_t(alg->dim));
    if (i != j && !check_pair(i, j)) return false;
  }
  return true;
}

}  // namespace

ComponentReport center_cosets(const Element& e_k, const CenterData& C, const ComponentReport& R,
                              const GenericityData& G) {
  // precondition: e_k is a point of the analyzed set
  auto ek_coords = G.e_space.coordinates_of(e_k.coords);
  if (!ek_coords || G.sum_of_squared_minors(*ek_coords).is_zero())
    throw std::invalid_argument("center_cosets: e_k is not a generic point of the slice");

  ComponentReport out = R;
  if (C.generators.empty()) return out;

  const auto alg = G.slice.alg;
  UnionFind uf(out.class_count);

  auto class_of = [&](const Vec<Rational>& a) -> int {
    for (int c = 0; c < int(out.class_points.size()); ++c)
      for (const auto& member : out.class_points[c])
        if (member == a) return c;
    if (out.mode == ComponentReport::Exact) {
      // one slice coordinate: classes are the two signs
      for (int c = 0; c < int(out.representative_coords.size()); ++c)
        if (out.representative_coords[c][0].sign() == a[0].sign()) return c;
      return -1;
    }
    for (int c = 0; c < int(out.class_points.size()); ++c)
      for (const auto& member : out.class_points[c])
        if (certify_segment(G, a, member)) return c;
    return -1;
  };

  for (const auto& M : C.generators) {
    if (!is_algebra_automorphism(alg, M, 0xC0FFEEu))
      throw std::invalid_argument("center_cosets: generator is not an automorphism");
    // center generators act trivially on g_0, so the base point is fixed
    if (!(Element(alg, M * G.slice.h.coords) == G.slice.h))
      throw std::invalid_argument("center_cosets: generator does not fix the characteristic");
    for (int c = 0; c < int(out.class_points.size()); ++c) {
      Element img(alg, M * G.element_at(out.representative_coords[c]).coords);
      auto coords = G.e_space.coordinates_of(img.coords);
      if (!coords) continue;
      int target = class_of(*coords);
      if (target >= 0 && uf.find(target) != uf.find(c)) uf.unite(c, target);
    }
  }

  // rebuild merged classes
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < out.class_count; ++c) groups[uf.find(c)].push_back(c);
  ComponentReport merged;
  merged.mode = out.mode;
  merged.caveats = out.caveats;
  merged.certificates = out.certificates;
  for (auto& [root, ids] : groups) {
    std::vector<Vec<Rational>> members;
    Vec<Rational> best = out.representative_coords[ids[0]];
    for (int id : ids) {
      members.insert(members.end(), out.class_points[id].begin(), out.class_points[id].end());
      const auto& cand = out.representative_coords[id];
      Rational nb = norm2(best), nc = norm2(cand);
      if (nc < nb || (nc == nb && lex_less(cand, best))) best = cand;
    }
    merged.representative_coords.push_back(best);
    merged.class_points.push_back(std::move(members));
    merged.representatives.push_back(G.element_at(best));
  }
  merged.class_count = int(merged.representative_coords.size());
  return merged;
}

PipelineReport classify_nilpotent_orbits(const Element& h, const CenterData& C,
                                         const ComponentOptions& opts) {
  PipelineReport out;
  out.slice = slice(h);
  auto Sc = slice_commutant(out.slice);
  auto G = genericity_matrix(out.slice, Sc);
  auto R = component_analysis(G, opts);
  out.components = center_cosets(R.representatives.front(), C, R, G);
  out.characteristic_fingerprint = characteristic_fingerprint(h);
  for (const auto& e : out.components.representatives) {
    OrbitVerification v;
    v.nilpotent = is_nilpotent(e);
    v.generic = is_generic(G, e);
    if (v.nilpotent) {
      auto t = jmv_triple(e);
      v.fingerprint_matches =
          characteristic_fingerprint(t.h) == out.characteristic_fingerprint;
    }
    out.verification.push_back(v);
  }
  return out;
}

std::string characteristic_fingerprint(const Element& h) {
  const auto alg = h.alg;
  std::string fp;
  for (int k = 0; k < alg->modulus; ++k) {
    auto block = alg->degree_block(k);
    if (block.empty()) continue;
    const int nb = int(block.size());
    // restriction of ad(h) to the block
    auto adh = alg->ad_sparse(h);
    Mat<Rational> R(nb, nb);
    std::vector<int> pos(alg->dim, -1);
    for (int i = 0; i < nb; ++i) pos[block[i]] = i;
    for (int i = 0; i < nb; ++i) {
      Vec<Rational> v(alg->dim, Rational(0));
      v[block[i]] = Rational(1);
      Vec<Rational> w = adh * v;
      for (int r = 0; r < alg->dim; ++r)
        if (!w[r].is_zero()) {
          if (pos[r] < 0) throw std::logic_error("characteristic_fingerprint: ad(h) broke grading");
          R.at(pos[r], i) = w[r];
        }
    }
    auto spec = rational_roots_of_squarefree(minimal_polynomial(R));
    if (!spec) throw std::invalid_argument("characteristic_fingerprint: non-rational spectrum");
    std::map<Rational, int> mult;
    for (const auto& lam : *spec) {
      Mat<Rational> shifted = R;
      for (int i = 0; i < nb; ++i) shifted.at(i, i) -= lam;
      mult[lam] = nb - rank(shifted);
    }
    fp += "deg" + std::to_string(k) + ":{";
    bool first = true;
    for (const auto& [lam, mm] : mult) {
      if (!first) fp += ",";
      first = false;
      fp += lam.str() + "^" + std::to_string(mm);
    }
    fp += "};";
  }
  // slice dimensions per integer degree
  auto S = slice(h);
  fp += "slice:{";
  bool first = true;
  for (const auto& [k, sub] : S.components) {
    if (!first) fp += ",";
    first = false;
    fp += std::to_string(k) + ":" + std::to_string(sub.dimension());
  }
  fp += "}";
  return fp;
}

CharacteristicComparison characteristics_distinct(const Element& h1, const Element& h2) {
  return characteristic_fingerprint(h1) == characteristic_fingerprint(h2)
             ? CharacteristicComparison::PossiblyConjugate
             : CharacteristicComparison::Distinct;
}

}  // namespace gradus
