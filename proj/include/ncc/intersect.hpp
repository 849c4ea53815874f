#pragma once
// Exact geometric intersection numbers between distinct curve classes.
//
// Fast path: overlay the two canonical coordinate vectors as layers of an
// arrangement and remove curve-curve bigon faces until the region analysis
// finds none.  Two embedded essential circles with no bigon between them
// realise their minimal crossing number, so the terminal count is i(a,b).
//
// Oracle: rerun the reduction many times from randomly slid representatives
// of both classes and with a randomised removal order, and keep the
// minimum.  Every maximal bigon-removal sequence from every representative
// pair must stop at the same count, so any order or representative
// dependence shows up as a discrepancy against the fast path.  A mod-2
// cross-check (removals delete crossings in pairs, and slides never change
// the crossing parity of an overlay) guards the restarts themselves.

#include "ncc/arrangement.hpp"
#include "ncc/census.hpp"
#include "ncc/curve.hpp"

#include <random>
#include <string>
#include <vector>

namespace ncc {

class same_class : public error {
public:
  same_class() : error("geometric intersection is defined for distinct classes only") {}
};

class cell_mismatch : public error {
public:
  cell_mismatch(SurfaceSig a, SurfaceSig b)
      : error("curve classes live on different surfaces: " + a.str() + " vs " + b.str()) {}
};

class budget_exceeded : public error {
public:
  budget_exceeded(int combined, int cap)
      : error("oracle budget exceeded: combined weight " + std::to_string(combined) +
              " over cap " + std::to_string(cap)) {}
};

namespace detail {

inline void check_pair(const CurveClass& a, const CurveClass& b) {
  if (a.sig != b.sig) throw cell_mismatch(a.sig, b.sig);
  if (a.weights == b.weights) throw same_class();
}

inline int overlay_min_crossings(const Cellulation& cell, const CornerVec& a, const CornerVec& b) {
  Arrangement arr(cell);
  arr.add_normal_multicurve(a, 0);
  arr.add_normal_multicurve(b, 1);
  arr.minimize_crossings(1);
  return arr.crossing_count_between(0, 1);
}

inline void random_slide_walk(const Cellulation& cell, CornerVec& x, std::mt19937& rng,
                              int weight_budget, int steps) {
  for (int s = 0; s < steps; ++s) {
    auto nb = slide_neighbors(cell, x);
    std::erase_if(nb, [&](const CornerVec& z) { return total_weight(z) > weight_budget; });
    if (nb.empty()) return;
    x = nb[rng() % nb.size()];
  }
}

}  // namespace detail

inline int geometric_intersection(const CurveClass& a, const CurveClass& b) {
  detail::check_pair(a, b);
  return detail::overlay_min_crossings(cellulation_for(a.sig), a.weights, b.weights);
}

inline bool disjoint(const CurveClass& a, const CurveClass& b) {
  detail::check_pair(a, b);
  const Cellulation& cell = cellulation_for(a.sig);
  Arrangement arr(cell);
  arr.add_normal_multicurve(a.weights, 0);
  arr.add_normal_multicurve(b.weights, 1);
  // Removals delete crossings two at a time, so an odd overlay can never
  // reach zero.
  if (arr.crossing_count_between(0, 1) % 2 == 1) return false;
  arr.minimize_crossings(1);
  return arr.crossing_count_between(0, 1) == 0;
}

// Independent brute-force recomputation of i(a,b); test harness only.  The
// refinement level scales both the weight cap and the number of randomised
// restarts.
inline int oracle_intersection(const CurveClass& a, const CurveClass& b, int refinement = 2) {
  detail::check_pair(a, b);
  if (refinement < 1) refinement = 1;
  const Cellulation& cell = cellulation_for(a.sig);
  const int combined = total_weight(a.weights) + total_weight(b.weights);
  const int cap = 12 * refinement;
  if (combined > cap) throw budget_exceeded(combined, cap);

  std::mt19937 rng(9731u + 131u * static_cast<unsigned>(combined) +
                   17u * static_cast<unsigned>(total_weight(a.weights)) +
                   static_cast<unsigned>(refinement));
  const int trials = 4 * refinement;
  int best = -1, parity = -1;
  for (int t = 0; t < trials; ++t) {
    CornerVec xa = a.weights, xb = b.weights;
    if (t > 0) {
      detail::random_slide_walk(cell, xa, rng, total_weight(xa) + refinement + 2, 3);
      detail::random_slide_walk(cell, xb, rng, total_weight(xb) + refinement + 2, 3);
    }
    Arrangement arr(cell);
    arr.add_normal_multicurve(xa, 0);
    arr.add_normal_multicurve(xb, 1);
    const int direct = arr.crossing_count_between(0, 1);
    if (parity < 0) parity = direct % 2;
    if (direct % 2 != parity)
      throw error("oracle: slid representatives changed the crossing parity");
    while (arr.remove_bigon(1, static_cast<int>(rng() % 64))) {
    }
    const int n = arr.crossing_count_between(0, 1);
    if (n % 2 != parity) throw error("oracle: bigon removal changed the crossing parity");
    if (best < 0 || n < best) best = n;
  }
  return best;
}

// Symmetric matrix of pairwise intersection numbers in census order; the
// diagonal is unused and left at zero.
inline std::vector<std::vector<int>> intersection_matrix(const std::vector<CurveClass>& census) {
  const size_t n = census.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = geometric_intersection(census[i], census[j]);
  return m;
}

}  // namespace ncc
