#include "gradus/exterior/analyze.hpp"

#include <stdexcept>

#include "gradus/minpoly.hpp"
#include "gradus/nilclass/nilclass.hpp"
#include "gradus/z2/z2.hpp"

namespace gradus {

MultiVector gl_pushforward(const Mat<Rational>& g, const MultiVector& w) {
  if (g.rows() != w.n || g.cols() != w.n)
    throw std::invalid_argument("gl_pushforward: matrix size mismatch");
  MultiVector out{w.n, w.k, {}};
  auto targets = tuples::subsets(w.n, w.k);
  for (const auto& [s, c] : w.terms) {
    // g.(e_{s1} ^ ... ^ e_{sk}) = sum_T det(g[T, s]) e_T
    for (const auto& t : targets) {
      Mat<Rational> minor(w.k, w.k);
      for (int r = 0; r < w.k; ++r)
        for (int cc = 0; cc < w.k; ++cc) minor.at(r, cc) = g.at(t[r], s[cc]);
      Rational d = det(minor);
      if (!d.is_zero()) out.add_term(t, c * d);
    }
  }
  return out;
}

namespace {

struct ModelInfo {
  int n, k, wedge_offset, block_size;
};

ModelInfo model_info(const CatalogEntry& entry) {
  if (entry.algebra->name == "e7-split-z2") return {8, 4, 63, 70};
  if (entry.algebra->name == "e8-split-z3") return {9, 3, 80, 84};
  throw std::invalid_argument("exterior identification: unsupported catalog algebra " +
                              entry.algebra->name);
}

}  // namespace

Element to_lie_element(const CatalogEntry& entry, const MultiVector& w) {
  ModelInfo mi = model_info(entry);
  if (w.n != mi.n || w.k != mi.k)
    throw std::invalid_argument("to_lie_element: expected grade " + std::to_string(mi.k) +
                                " on R^" + std::to_string(mi.n));
  tuples::TupleIndex tup(mi.n, mi.k);
  Element x = Element::zero(entry.algebra);
  for (const auto& [t, c] : w.terms) {
    int idx = tup.index(t);
    if (idx < 0) throw std::invalid_argument("to_lie_element: malformed index tuple");
    x.coords[mi.wedge_offset + idx] = c;
  }
  return x;
}

MultiVector from_lie_element(const CatalogEntry& entry, const Element& x) {
  ModelInfo mi = model_info(entry);
  if (!x.homogeneous_of_degree(1))
    throw std::invalid_argument("from_lie_element: element is not homogeneous of degree 1");
  tuples::TupleIndex tup(mi.n, mi.k);
  MultiVector w{mi.n, mi.k, {}};
  for (int s = 0; s < tup.size(); ++s) {
    const Rational& c = x.coords[mi.wedge_offset + s];
    if (!c.is_zero()) w.add_term(tup.tuple(s), c);
  }
  return w;
}

MultiVector sl_action(const Mat<Rational>& X, const MultiVector& w) {
  MultiVector out{w.n, w.k, {}};
  for (const auto& [s, c] : w.terms) {
    for (int pos = 0; pos < w.k; ++pos) {
      int from = s[pos];
      for (int to = 0; to < w.n; ++to) {
        const Rational& x = X.at(to, from);
        if (x.is_zero()) continue;
        std::vector<int> t;
        int sign = tuples::replace_index(s, from, to, t);
        if (sign == 0 && to != from) continue;
        if (to == from) {
          out.add_term(s, c * x);
        } else {
          out.add_term(std::move(t), c * x * Rational(sign));
        }
      }
    }
  }
  return out;
}

Element sl_to_lie(const CatalogEntry& entry, const Mat<Rational>& X) {
  ModelInfo mi = model_info(entry);
  if (X.rows() != mi.n || X.cols() != mi.n)
    throw std::invalid_argument("sl_to_lie: matrix size mismatch");
  // coordinates in the model's sl(n) block: off-diagonal entries then the
  // partial sums of the diagonal
  Element out = Element::zero(entry.algebra);
  int idx = 0;
  for (int i = 0; i < mi.n; ++i)
    for (int j = 0; j < mi.n; ++j) {
      if (i == j) continue;
      out.coords[idx++] = X.at(i, j);
    }
  Rational s(0);
  for (int i = 0; i < mi.n - 1; ++i) {
    s += X.at(i, i);
    out.coords[idx++] = s;
  }
  return out;
}

KVectorReport analyze_kvector(const MultiVector& w_in, const KVectorOptions& opts) {
  KVectorReport rep;
  MultiVector w = w_in;

  if (opts.dualize) {
    if (w.n == 8 && w.k == 4) {
      w = poincare_dual(w);
      rep.notes.push_back("input 4-form dualized through P_* to a 4-vector");
    } else {
      throw std::invalid_argument(
          "analyze_kvector: --dualize supports 4-forms on R^8; for 3-forms on R^9 analyze the "
          "reversal image instead");
    }
  }

  // model selection
  std::string model_name;
  if (w.n == 8 && w.k == 4) {
    model_name = "e7-split-z2";
  } else if (w.n == 9 && w.k == 3) {
    model_name = "e8-split-z3";
  } else if (w.n == 8 && w.k == 3) {
    // pad into R^9: orbit statements then live in GL(9); invariants reported
    // are those stable under the padding
    MultiVector padded{9, 3, w.terms};
    w = std::move(padded);
    model_name = "e8-split-z3";
    rep.notes.push_back(
        "3-vector on R^8 embedded into R^9; GL(8) vs GL(9) orbit equivalence differs — reported "
        "invariants are padding-stable only");
  } else {
    throw std::invalid_argument(
        "analyze_kvector: supported models are (n,k) = (8,4) via e7-split-z2 and (9,3) via "
        "e8-split-z3 (3-vectors on R^8 are padded)");
  }
  rep.model = model_name;

  // canonical coordinate gauge: leading coefficient 1 (GL-scaling note)
  rep.normalized = w;
  rep.gauge = Rational(1);
  if (!w.is_zero()) {
    rep.gauge = w.terms.begin()->second;
    rep.normalized = w * (Rational(1) / rep.gauge);
    rep.notes.push_back(
        "verdicts are scale-invariant; representative shown in the unit-leading-coefficient gauge");
  }

  CatalogEntry entry = catalog_build(model_name);
  Element x = to_lie_element(entry, w);

  if (x.is_zero()) {
    rep.verdict = "zero";
    rep.nilpotent = true;
    rep.semisimple = true;
    rep.notes.push_back("zero orbit: trivially semisimple");
    return rep;
  }

  rep.nilpotent = is_nilpotent(x);
  rep.semisimple = is_semisimple(x);
  rep.verdict = rep.nilpotent ? "nilpotent" : (rep.semisimple ? "semisimple" : "mixed");

  if (rep.nilpotent) {
    auto t = jmv_triple(x);
    rep.characteristic_h = t.h;
    rep.fingerprint = characteristic_fingerprint(t.h);
    auto S = slice(t.h);
    auto G = genericity_matrix(S, slice_commutant(S));
    rep.generic = is_generic(G, x);
  } else {
    rep.fingerprint.reset();
    if (entry.algebra->modulus == 2 && opts.deep_split) {
      try {
        auto D = cartan_decomposition(entry.algebra, entry.cartan_involution);
        auto nf = mixed_normal_form(x, D);
        rep.mixed_hk = nf.h_k;
        rep.mixed_hp = nf.h_p;
        rep.mixed_en = nf.e_n;
      } catch (const std::exception& err) {
        rep.notes.push_back(std::string("mixed normal form unavailable: ") + err.what());
      }
    }
  }
  return rep;
}

}  // namespace gradus
