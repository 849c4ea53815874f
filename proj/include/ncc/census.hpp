// Exhaustive curve censuses: every isotopy class of essential simple
// closed curve whose canonical normal weight fits a bound.
//
// Enumeration runs over interior-edge weight vectors (corner weights are
// determined by edge weights via parity and triangle inequalities), keeps
// the connected ones, reduces each to canonical form, and classifies one
// representative per distinct canonical vector.  Completeness at bound W
// holds because a class of canonical weight w <= W is its own witness.
//
// Canonical-form uniqueness is not assumed: validate_census_classes
// certifies every pair of listed classes non-isotopic with the overlay
// test (which never consults canonical forms) and drives random slide
// walks away from each class, checking they stay isotopic and reduce back
// to the same canonical vector.  Ambiguity fails loudly either way.
#pragma once

#include "ncc/curve.hpp"

#include <map>
#include <random>
#include <vector>

namespace ncc {

// Visits every nonzero matched corner vector whose edge weights sum to at
// most `weight_bound`.
template <typename F>
void for_each_matched_vector(const Cellulation& cell, int weight_bound, F&& visit) {
  const auto& interior = cell.interior_edges();
  std::vector<int> ew(cell.edge_count(), 0);
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i == interior.size()) {
      CornerVec x = corners_from_edge_weights(cell, ew);
      if (!x.empty() && total_weight(x) > 0) visit(static_cast<const CornerVec&>(x));
      return;
    }
    for (int w = 0; w <= left; ++w) {
      ew[interior[i]] = w;
      self(self, i + 1, left - w);
    }
    ew[interior[i]] = 0;
  };
  rec(rec, 0, weight_bound);
}

// All essential classes with canonical total weight <= weight_bound,
// ordered by (weight, lexicographic coordinates) so that censuses at
// growing bounds are prefixes of one another.
inline std::vector<CurveClass> enumerate_classes(SurfaceSig sig, int weight_bound) {
  sig.require_within_cap();
  if (weight_bound < 1) throw error("census weight bound must be at least 1");
  const Cellulation& cell = cellulation_for(sig);

  std::map<CornerVec, CornerVec> reduced_to_canonical;
  std::map<CornerVec, bool> seen_canonical;  // value: essential
  std::vector<CurveClass> out;
  for_each_matched_vector(cell, weight_bound, [&](const CornerVec& x) {
    if (trace_components(cell, x).size() != 1) return;
    CornerVec g = detail::greedy_reduce(cell, x);
    auto memo = reduced_to_canonical.find(g);
    CornerVec can;
    if (memo != reduced_to_canonical.end()) {
      can = memo->second;
    } else {
      can = canonical_weights(cell, g);
      reduced_to_canonical.emplace(std::move(g), can);
    }
    auto [it, fresh] = seen_canonical.try_emplace(can, false);
    if (!fresh) return;
    const auto rep = detail::cut_classify(cell, can);
    if (rep.trivial) return;
    it->second = true;
    CurveClass c;
    c.sig = cell.sig();
    c.weights = std::move(can);
    c.sidedness = rep.cls.sidedness;
    c.separating = rep.cls.separating;
    c.complement_orientable = rep.cls.complement_orientable;
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Canonicalization oracle over a full census.  Two failure modes are
// checked independently of the slide move set's completeness:
//  - the census listing one isotopy class twice under different canonical
//    vectors, caught by the pairwise overlay test;
//  - a slide sequence leaving the isotopy class or escaping the plateau
//    search, caught by random walks that must stay overlay-isotopic to
//    their class and reduce back to its canonical vector.
// Throws with a description on the first violation.
inline void validate_census_classes(SurfaceSig sig, int weight_bound, int trials_per_class = 5,
                                    int walk_steps = 4) {
  const Cellulation& cell = cellulation_for(sig);
  const auto census = enumerate_classes(sig, weight_bound);
  for (size_t i = 0; i < census.size(); ++i)
    for (size_t j = i + 1; j < census.size(); ++j) {
      if (census[i].sidedness != census[j].sidedness) continue;
      if (isotopic(cell, census[i].weights, census[j].weights))
        throw error("census on " + sig.str() + " lists one isotopy class twice (entries " +
                    std::to_string(i) + " and " + std::to_string(j) + ")");
    }

  std::mt19937 rng(20240u + 977u * static_cast<unsigned>(sig.genus) +
                   static_cast<unsigned>(sig.boundary));
  for (const auto& c : census) {
    const int budget = total_weight(c.weights) + 10;
    for (int trial = 0; trial < trials_per_class; ++trial) {
      CornerVec v = c.weights;
      for (int step = 0; step < walk_steps; ++step) {
        auto nb = detail::slide_neighbors(cell, v);
        std::erase_if(nb, [&](const CornerVec& z) { return total_weight(z) > budget; });
        if (nb.empty()) break;
        v = nb[rng() % nb.size()];
      }
      if (!isotopic(cell, v, c.weights))
        throw error("slide walk left its isotopy class on " + sig.str());
      if (canonical_weights(cell, v) != c.weights)
        throw error("slide walk failed to reduce back to its canonical vector on " + sig.str());
    }
  }
}

}  // namespace ncc
