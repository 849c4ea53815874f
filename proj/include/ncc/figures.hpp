#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncc/slice.hpp"

namespace ncc {

// No witness for the requested configuration among census curves at the
// fixture's weight bound.
class pattern_unavailable : public error {
public:
  using error::error;
};

// A named curve configuration: a certified decomposition P with labelled
// members, plus labelled probe classes outside P that intersect it in a
// pinned pattern.  Fixtures are found by constraint search over the census,
// never by hard-coded coordinates.
struct FigureFixture {
  std::string name;
  SurfaceSig sig{};
  int weight_bound = 0;
  PantsDecomposition pants;
  std::map<std::string, int> members;        // label -> index into pants.curves
  std::map<std::string, CurveClass> probes;  // label -> class outside P

  const CurveClass& curve(const std::string& label) const {
    if (auto it = members.find(label); it != members.end()) return pants.curves[it->second];
    if (auto it = probes.find(label); it != probes.end()) return it->second;
    throw error("fixture " + name + " has no curve labelled " + label);
  }
};

namespace detail {

// Walks census subsets of exactly `target` curves in lexicographic order,
// certifies the ones whose side loads meet the budget, and hands each
// certified decomposition to `accept` until one produces a fixture.
template <typename F>
std::optional<FigureFixture> search_decompositions(SurfaceSig sig,
                                                   const std::vector<CurveClass>& census,
                                                   int target, F&& accept) {
  const int budget = pants_side_budget(sig);
  const int m = static_cast<int>(census.size());
  auto load = [](const CurveClass& c) { return c.sidedness == Sidedness::OneSided ? 1 : 2; };
  std::vector<std::vector<signed char>> dj(m, std::vector<signed char>(m, -1));
  auto disjoint_at = [&](int i, int j) {
    signed char& c = dj[i][j];
    if (c < 0) c = dj[j][i] = disjoint(census[i], census[j]) ? 1 : 0;
    return c == 1;
  };

  std::vector<int> chosen;
  std::optional<FigureFixture> found;
  std::function<bool(int, int)> dfs = [&](int start, int sum) -> bool {
    if (static_cast<int>(chosen.size()) == target) {
      if (sum != budget) return false;
      std::vector<CurveClass> cs;
      cs.reserve(chosen.size());
      for (int v : chosen) cs.push_back(census[v]);
      auto pd = as_pants_decomposition(sig, std::move(cs));
      if (!pd) return false;
      found = accept(std::move(*pd));
      return found.has_value();
    }
    const int left = target - static_cast<int>(chosen.size()) - 1;
    for (int j = start; j < m; ++j) {
      const int lj = load(census[j]);
      if (sum + lj + left > budget) continue;      // every later pick weighs at least 1
      if (sum + lj + 2 * left < budget) continue;  // and at most 2
      bool ok = true;
      for (int v : chosen)
        if (!disjoint_at(v, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(j);
      if (dfs(j + 1, sum + lj)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0, 0);
  return found;
}

// First two distinct census classes crossing `cross` while missing `avoid`.
inline std::optional<std::pair<CurveClass, CurveClass>> probe_pair(
    const std::vector<CurveClass>& census, const CurveClass& cross, const CurveClass& avoid) {
  std::optional<CurveClass> first;
  for (const auto& c : census) {
    if (c == cross || c == avoid) continue;
    if (geometric_intersection(c, cross) == 0 || geometric_intersection(c, avoid) != 0) continue;
    if (!first) {
      first = c;
      continue;
    }
    return std::make_pair(*first, c);
  }
  return std::nullopt;
}

inline std::vector<int> member_neighbors(const PantsDecomposition& pd, int i) {
  std::vector<int> out;
  for (size_t j = 0; j < pd.curves.size(); ++j)
    if (static_cast<int>(j) != i && adjacency(pd, pd.curves[i], pd.curves[j]))
      out.push_back(static_cast<int>(j));
  return out;
}

inline void split_by_sidedness(const PantsDecomposition& pd, std::vector<int>& one,
                               std::vector<int>& two) {
  for (size_t i = 0; i < pd.curves.size(); ++i)
    (pd.curves[i].sidedness == Sidedness::OneSided ? one : two).push_back(static_cast<int>(i));
}

inline pattern_unavailable no_witness(const std::string& name, SurfaceSig sig, int weight_bound) {
  return pattern_unavailable("fixture " + name + ": no witness on " + sig.str() +
                             " within weight " + std::to_string(weight_bound));
}

// Decompositions on a closed surface of odd genus at the two extreme sizes:
// the small one carries a single 1-sided curve, the large one a 1-sided
// curve per crosscap.  Which extreme is forced by the size alone, since a
// decomposition of s curves has 2s - budget 1-sided members.
inline FigureFixture build_fig1(const std::string& name, SurfaceSig sig, int weight_bound,
                                bool maximal) {
  if (!sig.closed() || sig.genus < 3 || sig.genus % 2 == 0)
    throw error("fixture " + name + " expects a closed surface of odd genus >= 3, got " +
                sig.str());
  const Lemma2Range range = lemma2_range(sig);
  const int target = (maximal ? range.b : range.a) + 1;
  const auto census = enumerate_classes(sig, weight_bound);
  auto fx = search_decompositions(
      sig, census, target, [&](PantsDecomposition pd) -> std::optional<FigureFixture> {
        FigureFixture f;
        f.pants = std::move(pd);
        std::vector<int> one, two;
        split_by_sidedness(f.pants, one, two);
        if (one.size() == 1) {
          f.members["a"] = one[0];
        } else {
          for (size_t i = 0; i < one.size(); ++i) f.members["a" + std::to_string(i + 1)] = one[i];
        }
        for (size_t i = 0; i < two.size(); ++i) f.members["y" + std::to_string(i + 1)] = two[i];
        return f;
      });
  if (!fx) throw no_witness(name, sig, weight_bound);
  const int k1 = 2 * target - pants_side_budget(sig);
  int ones = 0;
  for (const auto& c : fx->pants.curves) ones += c.sidedness == Sidedness::OneSided;
  if (static_cast<int>(fx->pants.curves.size()) != target || ones != k1 ||
      is_top_dimensional(fx->pants) != maximal)
    throw error("fixture " + name + ": witness fails its defining constraints");
  return *fx;
}

// Genus-1 configuration: the decomposition {a, x_1..x_{n-2}} with its single
// 1-sided curve a, plus probes z, t crossing the last two-sided curve while
// missing the previous one (missing a itself when n = 3 leaves only one x).
inline FigureFixture build_fig2(SurfaceSig sig, int weight_bound) {
  if (sig.genus != 1 || sig.boundary < 3)
    throw error("fixture fig2 expects genus 1 with at least three boundary circles, got " +
                sig.str());
  const int n = sig.boundary;
  const auto census = enumerate_classes(sig, weight_bound);
  auto fx = search_decompositions(
      sig, census, n - 1, [&](PantsDecomposition pd) -> std::optional<FigureFixture> {
        std::vector<int> one, two;
        split_by_sidedness(pd, one, two);
        if (one.size() != 1) return std::nullopt;
        if (n == 3) {
          auto zt = probe_pair(census, pd.curves[two[0]], pd.curves[one[0]]);
          if (!zt) return std::nullopt;
          FigureFixture f;
          f.pants = std::move(pd);
          f.members["a"] = one[0];
          f.members["x1"] = two[0];
          f.probes["z"] = zt->first;
          f.probes["t"] = zt->second;
          return f;
        }
        for (int p : two)
          for (int q : two) {
            if (p == q) continue;
            auto zt = probe_pair(census, pd.curves[q], pd.curves[p]);
            if (!zt) continue;
            FigureFixture f;
            f.pants = pd;
            f.members["a"] = one[0];
            int next = 1;
            for (int r : two)
              if (r != p && r != q) f.members["x" + std::to_string(next++)] = r;
            f.members["x" + std::to_string(n - 3)] = p;
            f.members["x" + std::to_string(n - 2)] = q;
            f.probes["z"] = zt->first;
            f.probes["t"] = zt->second;
            return f;
          }
        return std::nullopt;
      });
  if (!fx) throw no_witness("fig2", sig, weight_bound);
  const CurveClass& hit = fx->curve(n == 3 ? "x1" : "x" + std::to_string(n - 2));
  const CurveClass& miss = fx->curve(n == 3 ? "a" : "x" + std::to_string(n - 3));
  for (const char* p : {"z", "t"})
    if (geometric_intersection(fx->curve(p), hit) == 0 ||
        geometric_intersection(fx->curve(p), miss) != 0)
      throw error("fixture fig2: witness fails its defining constraints");
  return *fx;
}

// Genus-2 configuration: a top-dimensional decomposition {a, b, x_1..x_{n-1}}
// whose 1-sided curve a touches only the other 1-sided curve b and one
// two-sided curve x_1, plus probes z, t against the far end of the chain.
inline FigureFixture build_fig3(SurfaceSig sig, int weight_bound) {
  if (sig.genus != 2 || sig.boundary < 3)
    throw error("fixture fig3-probe expects genus 2 with at least three boundary circles, got " +
                sig.str());
  const int n = sig.boundary;
  const auto census = enumerate_classes(sig, weight_bound);
  auto fx = search_decompositions(
      sig, census, n + 1, [&](PantsDecomposition pd) -> std::optional<FigureFixture> {
        std::vector<int> one, two;
        split_by_sidedness(pd, one, two);
        if (one.size() != 2) return std::nullopt;
        for (int flip = 0; flip < 2; ++flip) {
          const int a = one[flip], b = one[1 - flip];
          const std::vector<int> nb = member_neighbors(pd, a);
          if (nb.size() != 2) continue;
          const int other = nb[0] == b ? nb[1] : nb[1] == b ? nb[0] : -1;
          if (other < 0 || pd.curves[other].sidedness != Sidedness::TwoSided) continue;
          std::vector<int> rest;
          for (int r : two)
            if (r != other) rest.push_back(r);
          auto assemble = [&](int p, int q,
                              const std::pair<CurveClass, CurveClass>& zt) -> FigureFixture {
            FigureFixture f;
            f.pants = pd;
            f.members["a"] = a;
            f.members["b"] = b;
            f.members["x1"] = other;
            int next = 2;
            for (int r : rest)
              if (r != p && r != q) f.members["x" + std::to_string(next++)] = r;
            if (p >= 0) f.members["x" + std::to_string(n - 2)] = p;
            f.members["x" + std::to_string(n - 1)] = q;
            f.probes["z"] = zt.first;
            f.probes["t"] = zt.second;
            return f;
          };
          if (n == 3) {
            auto zt = probe_pair(census, pd.curves[rest[0]], pd.curves[other]);
            if (!zt) continue;
            return assemble(-1, rest[0], *zt);
          }
          for (int p : rest)
            for (int q : rest) {
              if (p == q) continue;
              auto zt = probe_pair(census, pd.curves[q], pd.curves[p]);
              if (zt) return assemble(p, q, *zt);
            }
        }
        return std::nullopt;
      });
  if (!fx) throw no_witness("fig3-probe", sig, weight_bound);
  const CurveClass& a = fx->curve("a");
  const auto nb = member_neighbors(fx->pants, fx->members.at("a"));
  if (!is_top_dimensional(fx->pants) || a.sidedness != Sidedness::OneSided || nb.size() != 2)
    throw error("fixture fig3-probe: witness fails its defining constraints");
  const CurveClass& hit = fx->curve("x" + std::to_string(n - 1));
  const CurveClass& miss = fx->curve(n == 3 ? "x1" : "x" + std::to_string(n - 2));
  for (const char* p : {"z", "t"})
    if (geometric_intersection(fx->curve(p), hit) == 0 ||
        geometric_intersection(fx->curve(p), miss) != 0)
      throw error("fixture fig3-probe: witness fails its defining constraints");
  return *fx;
}

// Configuration on genus >= 3 with one or two boundary circles: a
// top-dimensional decomposition carrying a 1-sided curve with nonorientable
// complement that touches exactly one other curve of the decomposition.
inline FigureFixture build_fig4(SurfaceSig sig, int weight_bound) {
  if (sig.genus < 3 || sig.boundary < 1 || sig.boundary > 2)
    throw error("fixture fig4-probe expects genus >= 3 with one or two boundary circles, got " +
                sig.str());
  const int target = lemma2_range(sig).b + 1;
  const auto census = enumerate_classes(sig, weight_bound);
  auto fx = search_decompositions(
      sig, census, target, [&](PantsDecomposition pd) -> std::optional<FigureFixture> {
        for (size_t i = 0; i < pd.curves.size(); ++i) {
          if (pd.curves[i].sidedness != Sidedness::OneSided) continue;
          if (pd.curves[i].complement_orientable) continue;
          const std::vector<int> nb = member_neighbors(pd, static_cast<int>(i));
          if (nb.size() != 1) continue;
          FigureFixture f;
          f.pants = pd;
          f.members["a"] = static_cast<int>(i);
          f.members["x"] = nb[0];
          int next = 1;
          for (size_t j = 0; j < pd.curves.size(); ++j)
            if (j != i && static_cast<int>(j) != nb[0])
              f.members["p" + std::to_string(next++)] = static_cast<int>(j);
          return f;
        }
        return std::nullopt;
      });
  if (!fx) throw no_witness("fig4-probe", sig, weight_bound);
  const CurveClass& a = fx->curve("a");
  if (!is_top_dimensional(fx->pants) || a.sidedness != Sidedness::OneSided ||
      a.complement_orientable || member_neighbors(fx->pants, fx->members.at("a")).size() != 1)
    throw error("fixture fig4-probe: witness fails its defining constraints");
  return *fx;
}

}  // namespace detail

// Builds a catalogued configuration on a compatible signature.  A zero
// weight bound selects the recorded default for that catalogue entry, a
// bound at which the witness is known to exist.
inline FigureFixture figure_fixture(const std::string& name, SurfaceSig sig,
                                    int weight_bound = 0) {
  sig.require_within_cap();
  if (weight_bound <= 0) {
    static const std::map<std::pair<std::string, std::pair<int, int>>, int> kDefaultBound = {
        {{"fig1-min", {3, 0}}, 6},  {{"fig1-min", {5, 0}}, 8}, {{"fig1-min", {7, 0}}, 14},
        {{"fig1-max", {3, 0}}, 6},  {{"fig1-max", {5, 0}}, 8}, {{"fig1-max", {7, 0}}, 14},
        {{"fig2", {1, 3}}, 11},     {{"fig2", {1, 4}}, 8},     {{"fig3-probe", {2, 3}}, 11},
        {{"fig4-probe", {3, 1}}, 8}};
    auto it = kDefaultBound.find({name, {sig.genus, sig.boundary}});
    if (it == kDefaultBound.end())
      throw error("no recorded weight bound for fixture " + name + " on " + sig.str() +
                  "; pass one explicitly");
    weight_bound = it->second;
  }
  FigureFixture f;
  if (name == "fig1-min")
    f = detail::build_fig1(name, sig, weight_bound, false);
  else if (name == "fig1-max")
    f = detail::build_fig1(name, sig, weight_bound, true);
  else if (name == "fig2")
    f = detail::build_fig2(sig, weight_bound);
  else if (name == "fig3-probe")
    f = detail::build_fig3(sig, weight_bound);
  else if (name == "fig4-probe")
    f = detail::build_fig4(sig, weight_bound);
  else
    throw error("unknown figure fixture " + name);
  f.name = name;
  f.sig = sig;
  f.weight_bound = weight_bound;
  return f;
}

}  // namespace ncc
