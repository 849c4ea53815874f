#pragma once
// Finite truncations of the curve complex C(N): the census as vertex set,
// disjointness as the edge relation, maximal cliques, and pants
// certification by literal cutting.
//
// A clique of the slice graph is a genuine maximal simplex of C(N) exactly
// when cutting the surface along a simultaneous disjoint realization of
// its classes leaves only pairs of pants: regions with chi = -1,
// orientable, and three boundary circles.  Truncation also produces
// maximal cliques that merely ran out of disjoint census partners; those
// are flagged as artifacts, never promoted.
//
// Disjoint classes are realized simultaneously through the coordinate sum:
// the normal multicurve of a sum vector is embedded, so whenever its
// components canonicalize back to the given classes it is a disjoint
// realization of all of them at once.  When strand exchange spoils the sum
// the builder falls back to an incremental search over slid
// representatives, demanding a crossing-free overlay at every step.

#include "ncc/census.hpp"
#include "ncc/intersect.hpp"
#include "ncc/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ncc {

class clique_budget_exceeded : public error {
public:
  explicit clique_budget_exceeded(size_t budget)
      : error("maximal clique enumeration exceeded the budget of " + std::to_string(budget)) {}
};

class lemma2_inapplicable : public error {
public:
  explicit lemma2_inapplicable(SurfaceSig sig)
      : error("no dimension range is defined on " + sig.str()) {}
};

class not_disjoint : public error {
public:
  not_disjoint() : error("curves intersect essentially, no disjoint system contains both") {}
};

class not_members : public error {
public:
  not_members() : error("curve is not a member of the decomposition") {}
};

class no_completion_within_bound : public error {
public:
  no_completion_within_bound(SurfaceSig sig, int bound)
      : error("no pants completion on " + sig.str() + " within weight bound " +
              std::to_string(bound) + "; one may still exist at a higher bound") {}
};

// Dimension window [a, b] for maximal simplices on N_{g,n}, with r the
// orientable genus of the thickest orientable piece.
struct Lemma2Range {
  int r = 0;
  int a = 0;
  int b = 0;
};

inline Lemma2Range lemma2_range(SurfaceSig sig) {
  if (sig.genus == 1 || (sig.genus == 2 && sig.boundary == 0)) throw lemma2_inapplicable(sig);
  const SimplexDimensionRange d = dimension_range(sig);
  return {sig.genus / 2, d.min_dim, d.max_dim};
}

struct ComplexSlice {
  SurfaceSig sig;
  int weight_bound = 0;
  std::vector<CurveClass> vertices;         // census order
  std::vector<std::vector<char>> adj;       // symmetric, zero diagonal

  bool edge(int u, int v) const { return adj[u][v] != 0; }

  int edge_count() const {
    int count = 0;
    for (size_t u = 0; u < adj.size(); ++u)
      for (size_t v = u + 1; v < adj.size(); ++v)
        if (adj[u][v]) ++count;
    return count;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (size_t u = 0; u < adj.size(); ++u)
      for (size_t v = u + 1; v < adj.size(); ++v)
        if (adj[u][v]) out.push_back({static_cast<int>(u), static_cast<int>(v)});
    return out;
  }
};

inline ComplexSlice build_slice(SurfaceSig sig, int weight_bound) {
  sig.require_within_cap();
  cellulation_for(sig);  // warm the shared cache before the parallel section
  ComplexSlice s;
  s.sig = sig;
  s.weight_bound = weight_bound;
  s.vertices = enumerate_classes(sig, weight_bound);
  const int m = static_cast<int>(s.vertices.size());
  s.adj.assign(m, std::vector<char>(m, 0));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) pairs.push_back({u, v});
  parallel_for(static_cast<int>(pairs.size()), [&](int k) {
    const auto [u, v] = pairs[k];
    if (disjoint(s.vertices[u], s.vertices[v])) s.adj[u][v] = s.adj[v][u] = 1;
  });
  return s;
}

// One pair of pants of a cut surface: the curve index behind each of its
// boundary circles (a curve can appear twice), plus circles on the surface
// boundary.
struct Pants {
  std::vector<int> curve_circles;
  int boundary_circles = 0;
};

struct PantsDecomposition {
  SurfaceSig sig;
  std::vector<CurveClass> curves;           // sorted
  std::vector<Pants> pants;
  std::vector<std::vector<char>> adjacent;  // some pants carries both
};

namespace detail {

inline CornerVec component_vector(int size, const TracedComponent& comp) {
  CornerVec v(size, 0);
  for (const Arc& a : comp.arcs) ++v[corner_index(a.tri, a.corner)];
  return v;
}

// Every normal representative of the class reachable by slides without the
// weight ever exceeding the budget, in (weight, lex) order.
inline std::vector<CornerVec> slide_orbit(const Cellulation& cell, const CornerVec& start,
                                          int weight_budget) {
  std::set<CornerVec> visited{start};
  std::vector<CornerVec> queue{start};
  for (size_t qi = 0; qi < queue.size() && queue.size() < 20000; ++qi)
    for (CornerVec& z : slide_neighbors(cell, queue[qi])) {
      if (total_weight(z) > weight_budget || visited.count(z)) continue;
      visited.insert(z);
      queue.push_back(std::move(z));
    }
  std::vector<CornerVec> out(visited.begin(), visited.end());
  std::sort(out.begin(), out.end(), [](const CornerVec& a, const CornerVec& b) {
    return weight_key(a) < weight_key(b);
  });
  return out;
}

// A single embedded normal multicurve whose components realize exactly the
// given classes.
inline CornerVec realize_disjointly(const Cellulation& cell, const std::vector<CurveClass>& cs) {
  const int size = 3 * cell.tri_count();
  auto matches = [&](const CornerVec& m) {
    const auto comps = trace_components(cell, m);
    if (comps.size() != cs.size()) return false;
    std::multiset<CornerVec> want, got;
    for (const auto& c : cs) want.insert(c.weights);
    for (const auto& comp : comps) got.insert(canonical_weights(cell, component_vector(size, comp)));
    return want == got;
  };
  CornerVec sum(size, 0);
  for (const auto& c : cs)
    for (int i = 0; i < size; ++i) sum[i] += c.weights[i];
  if (matches(sum)) return sum;
  CornerVec built(size, 0);
  for (const auto& c : cs) {
    bool placed = false;
    for (const CornerVec& rep : slide_orbit(cell, c.weights, total_weight(c.weights) + 4)) {
      if (total_weight(built) > 0) {
        Arrangement arr(cell);
        arr.add_normal_multicurve(built, 0);
        arr.add_normal_multicurve(rep, 1);
        if (arr.crossing_count() != 0) continue;
      }
      for (int i = 0; i < size; ++i) built[i] += rep[i];
      placed = true;
      break;
    }
    if (!placed)
      throw error("no simultaneous disjoint normal realization found on " + cell.sig().str());
  }
  if (!matches(built))
    throw error("incremental disjoint realization drifted on " + cell.sig().str());
  return built;
}

}  // namespace detail

// Cuts along a simultaneous realization of the (pairwise disjoint, sorted
// on return) classes; engaged iff every cut component is a pair of pants.
inline std::optional<PantsDecomposition> as_pants_decomposition(SurfaceSig sig,
                                                                std::vector<CurveClass> curves) {
  if (curves.empty()) return std::nullopt;
  std::sort(curves.begin(), curves.end());
  for (size_t i = 0; i + 1 < curves.size(); ++i)
    if (curves[i] == curves[i + 1]) throw same_class();
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (!disjoint(curves[i], curves[j])) throw not_disjoint();

  const Cellulation& cell = cellulation_for(sig);
  const CornerVec m = detail::realize_disjointly(cell, curves);
  Arrangement arr(cell);
  arr.add_normal_multicurve(m, 0);

  const auto comps = trace_components(cell, m);
  std::vector<int> curve_of_path(comps.size(), -1);
  std::vector<char> used(curves.size(), 0);
  for (size_t p = 0; p < comps.size(); ++p) {
    const CornerVec can =
        canonical_weights(cell, detail::component_vector(3 * cell.tri_count(), comps[p]));
    for (size_t i = 0; i < curves.size(); ++i)
      if (!used[i] && curves[i].weights == can) {
        curve_of_path[p] = static_cast<int>(i);
        used[i] = 1;
        break;
      }
    if (curve_of_path[p] < 0) throw error("realized component matches no class in the system");
  }

  PantsDecomposition pd;
  pd.sig = sig;
  pd.curves = curves;
  pd.adjacent.assign(curves.size(), std::vector<char>(curves.size(), 0));
  std::vector<int> circle_count(curves.size(), 0);
  int boundary_circles = 0;
  const auto an = arr.analyze_regions();
  for (const auto& reg : an.regions) {
    if (reg.chi != -1 || !reg.orientable || reg.walks.size() != 3) return std::nullopt;
    Pants pc;
    for (const auto& w : reg.walks) {
      if (w.crossing_corners != 0)
        throw error("crossing corner on the boundary of a crossing-free cut");
      if (w.touches_boundary) {
        for (const auto& piece : w.pieces)
          if (piece.kind == Arrangement::WalkPiece::Strand)
            throw error("cut circle mixes surface boundary with a curve");
        ++pc.boundary_circles;
        ++boundary_circles;
        continue;
      }
      if (w.path_tags.size() != 1) throw error("cut circle runs along several curves");
      const auto& [path, plus, minus] = w.path_tags[0];
      const int ci = curve_of_path[path];
      if ((plus && minus) != (curves[ci].sidedness == Sidedness::OneSided))
        throw error("cut circle sidedness disagrees with the class");
      pc.curve_circles.push_back(ci);
      ++circle_count[ci];
    }
    std::sort(pc.curve_circles.begin(), pc.curve_circles.end());
    for (size_t a = 0; a < pc.curve_circles.size(); ++a)
      for (size_t b = a + 1; b < pc.curve_circles.size(); ++b) {
        const int u = pc.curve_circles[a], v = pc.curve_circles[b];
        if (u != v) pd.adjacent[u][v] = pd.adjacent[v][u] = 1;
      }
    pd.pants.push_back(std::move(pc));
  }

  int k1 = 0, k2 = 0;
  for (size_t i = 0; i < curves.size(); ++i) {
    const bool one = curves[i].sidedness == Sidedness::OneSided;
    ++(one ? k1 : k2);
    if (circle_count[i] != (one ? 1 : 2))
      throw error("cut circle count disagrees with sidedness");
  }
  if (2 * k2 + k1 != 3 * sig.genus + 2 * sig.boundary - 6)
    throw error("curve system hits the pants count without the census identity");
  if (boundary_circles != sig.boundary) throw error("surface boundary circle count mismatch");
  if (static_cast<int>(pd.pants.size()) != sig.genus + sig.boundary - 2)
    throw error("pants count disagrees with the Euler characteristic");
  return pd;
}

struct MaximalSimplex {
  std::vector<int> vertices;  // ascending slice indices
  bool certified = false;
  std::optional<PantsDecomposition> pants;  // engaged iff certified
};

// All maximal cliques of the slice graph via pivoting Bron-Kerbosch over a
// degeneracy order, each flagged by pants certification.
inline std::vector<MaximalSimplex> maximal_simplices(const ComplexSlice& slice,
                                                     size_t clique_budget = 20000) {
  const int m = static_cast<int>(slice.vertices.size());
  std::vector<std::vector<int>> cliques;

  // Degeneracy order: repeatedly strip a minimum-degree vertex.
  std::vector<int> order, rank(m, -1);
  {
    std::vector<int> deg(m, 0);
    std::vector<char> gone(m, 0);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) deg[u] += slice.adj[u][v] ? 1 : 0;
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int u = 0; u < m; ++u)
        if (!gone[u] && (pick < 0 || deg[u] < deg[pick])) pick = u;
      gone[pick] = 1;
      rank[pick] = step;
      order.push_back(pick);
      for (int v = 0; v < m; ++v)
        if (!gone[v] && slice.adj[pick][v]) --deg[v];
    }
  }

  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          if (cliques.size() >= clique_budget) throw clique_budget_exceeded(clique_budget);
          cliques.push_back(r);
          return;
        }
        int pivot = -1, best = -1;
        for (const auto& pool : {p, x})
          for (int u : pool) {
            int count = 0;
            for (int w : p) count += slice.adj[u][w] ? 1 : 0;
            if (count > best) best = count, pivot = u;
          }
        std::vector<int> ext;
        for (int v : p)
          if (!slice.adj[pivot][v]) ext.push_back(v);
        for (int v : ext) {
          std::vector<int> p2, x2;
          for (int w : p)
            if (slice.adj[v][w]) p2.push_back(w);
          for (int w : x)
            if (slice.adj[v][w]) x2.push_back(w);
          r.push_back(v);
          expand(r, std::move(p2), std::move(x2));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };

  for (int u : order) {
    std::vector<int> r{u}, p, x;
    for (int v = 0; v < m; ++v) {
      if (!slice.adj[u][v]) continue;
      (rank[v] > rank[u] ? p : x).push_back(v);
    }
    expand(r, std::move(p), std::move(x));
  }

  std::vector<MaximalSimplex> out;
  for (auto& cl : cliques) {
    std::sort(cl.begin(), cl.end());
    MaximalSimplex ms;
    ms.vertices = cl;
    std::vector<CurveClass> classes;
    for (int v : cl) classes.push_back(slice.vertices[v]);
    ms.pants = as_pants_decomposition(slice.sig, std::move(classes));
    ms.certified = ms.pants.has_value();
    out.push_back(std::move(ms));
  }
  std::sort(out.begin(), out.end(), [](const MaximalSimplex& a, const MaximalSimplex& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

inline bool is_top_dimensional(const PantsDecomposition& pd) {
  const Lemma2Range range = lemma2_range(pd.sig);
  return static_cast<int>(pd.curves.size()) - 1 == range.b;
}

inline bool adjacency(const PantsDecomposition& pd, const CurveClass& a, const CurveClass& b) {
  auto index_of = [&](const CurveClass& c) {
    for (size_t i = 0; i < pd.curves.size(); ++i)
      if (pd.curves[i] == c) return static_cast<int>(i);
    throw not_members();
  };
  const int i = index_of(a), j = index_of(b);
  if (i == j) throw same_class();
  return pd.adjacent[i][j] != 0;
}

// Deterministic backtracking completion: extends `partial` by census
// curves in census order and returns the first certified decomposition.
inline PantsDecomposition extend_to_pants(const std::vector<CurveClass>& partial, SurfaceSig sig,
                                          int weight_bound) {
  sig.require_within_cap();
  for (const auto& c : partial)
    if (c.sig != sig) throw cell_mismatch(c.sig, sig);
  for (size_t i = 0; i < partial.size(); ++i)
    for (size_t j = i + 1; j < partial.size(); ++j) {
      if (partial[i] == partial[j]) throw same_class();
      if (!disjoint(partial[i], partial[j])) throw not_disjoint();
    }

  const auto census = enumerate_classes(sig, weight_bound);
  const int target = 3 * sig.genus + 2 * sig.boundary - 6;
  auto load = [](const CurveClass& c) { return c.sidedness == Sidedness::TwoSided ? 2 : 1; };
  std::vector<CurveClass> chosen = partial;
  int base = 0;
  for (const auto& c : partial) base += load(c);

  std::function<std::optional<PantsDecomposition>(int, int)> dfs =
      [&](int start, int sum) -> std::optional<PantsDecomposition> {
    if (sum == target) return as_pants_decomposition(sig, chosen);
    for (int j = start; j < static_cast<int>(census.size()); ++j) {
      if (sum + load(census[j]) > target) continue;
      bool usable = true;
      for (const auto& c : chosen) {
        if (c == census[j] || !disjoint(c, census[j])) {
          usable = false;
          break;
        }
      }
      if (!usable) continue;
      chosen.push_back(census[j]);
      if (auto pd = dfs(j + 1, sum + load(census[j]))) return pd;
      chosen.pop_back();
    }
    return std::nullopt;
  };
  if (base <= target)
    if (auto pd = dfs(0, base)) return *pd;
  throw no_completion_within_bound(sig, weight_bound);
}

// Sorted dimensions of the certified maximal cliques at this bound.
inline std::vector<int> certified_dimension_spectrum(SurfaceSig sig, int weight_bound,
                                                     size_t clique_budget = 20000) {
  const ComplexSlice slice = build_slice(sig, weight_bound);
  std::set<int> dims;
  for (const auto& ms : maximal_simplices(slice, clique_budget))
    if (ms.certified) dims.insert(static_cast<int>(ms.vertices.size()) - 1);
  return {dims.begin(), dims.end()};
}

// Smallest W >= start whose certified dimension spectrum is nonempty and
// unchanged at every bound through the scan horizon, with at least three
// bounds on the plateau.  A bare three-bound window is not enough: light
// censuses plateau briefly before a heavier class extends the spectrum.
// Slices never claim completeness; this is stabilization evidence only.
inline int stabilized_bound(SurfaceSig sig, int start = 2, int limit = 8) {
  if (limit - start < 2) throw error("stabilization scan needs at least three bounds");
  std::vector<std::vector<int>> spectra;
  for (int w = start; w <= limit; ++w) spectra.push_back(certified_dimension_spectrum(sig, w));
  const auto& final_spectrum = spectra.back();
  if (final_spectrum.empty())
    throw error("no certified decomposition on " + sig.str() + " up to weight " +
                std::to_string(limit));
  int first = limit;
  for (int w = limit - 1; w >= start; --w) {
    if (spectra[w - start] != final_spectrum) break;
    first = w;
  }
  if (limit - first < 2)
    throw error("no stabilized bound for " + sig.str() + " up to " + std::to_string(limit));
  return first;
}

}  // namespace ncc
