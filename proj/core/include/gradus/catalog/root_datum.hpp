#pragma once

#include <set>
#include <vector>

#include "gradus/exterior/tuples.hpp"

namespace gradus {

// Root lists in epsilon coordinates, modulo the relation sum(eps_i) = 0.
// Canonical representative: subtract the minimum coordinate, so negation of
// a root is comparable after canonicalization.
struct RootDatum {
  struct Root {
    std::vector<int> eps;
    bool sum_type = false;  // eps_p + eps_q + ... vs eps_i - eps_j
  };

  int ambient = 0;
  std::vector<Root> roots;

  static std::vector<int> canonical(std::vector<int> v) {
    int mn = v[0];
    for (int x : v) mn = std::min(mn, x);
    for (int& x : v) x -= mn;
    return v;
  }

  static std::vector<int> negate(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return canonical(out);
  }

  bool closed_under_negation() const {
    std::set<std::vector<int>> all;
    for (const auto& r : roots) all.insert(canonical(r.eps));
    for (const auto& r : roots)
      if (!all.count(negate(r.eps))) return false;
    return true;
  }

  int count(bool sum_type) const {
    int c = 0;
    for (const auto& r : roots)
      if (r.sum_type == sum_type) ++c;
    return c;
  }

  // eps_i - eps_j for i != j, plus eps-sum roots over k-subsets (and their
  // negatives when with_negatives).
  static RootDatum build(int ambient, int subset_size, bool with_negatives) {
    RootDatum d;
    d.ambient = ambient;
    for (int i = 0; i < ambient; ++i)
      for (int j = 0; j < ambient; ++j) {
        if (i == j) continue;
        Root r;
        r.eps.assign(ambient, 0);
        r.eps[i] = 1;
        r.eps[j] = -1;
        d.roots.push_back(std::move(r));
      }
    for (const auto& s : tuples::subsets(ambient, subset_size)) {
      Root r;
      r.eps.assign(ambient, 0);
      for (int i : s) r.eps[i] = 1;
      r.sum_type = true;
      d.roots.push_back(r);
      if (with_negatives) {
        for (int& x : r.eps) x = -x;
        d.roots.push_back(std::move(r));
      }
    }
    return d;
  }

  // e7: 56 difference roots and the 70 four-index sum roots on 8 coordinates
  // (the complement relation makes the sum list negation-closed by itself).
  static RootDatum e7() { return build(8, 4, false); }

  // e8: 72 difference roots and 2 x 84 three-index sum roots on 9 coordinates.
  static RootDatum e8() { return build(9, 3, true); }
};

}  // namespace gradus
