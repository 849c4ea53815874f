// Isotopy classes of curves as canonical normal coordinate vectors.
//
// The move that changes the coordinates of an embedded curve within its
// isotopy class is a vertex slide: a maximal family of consecutive arcs
// hugging an interior vertex innermostly (rank 0 at every corner it turns)
// is pushed across the vertex onto the complementary fan of its link, and
// the two arcs flanking the family trade their crossing on the entry/exit
// edge for one on the next edge around the vertex, which re-corners them in
// place.  The lens swept between old and new position contains only the
// vertex: any strand separating them would have to cross an entry edge
// nearer the vertex than the family's innermost crossing.  Sliding k
// sectors of an L-sector link changes total weight by L - 2k - 2.
//
// Canonical form: greedily apply weight-reducing slides, then explore the
// plateau by breadth-first search allowing a small weight slack, and take
// the lexicographically least vector of minimal weight.  Uniqueness of this
// form per isotopy class is not assumed: censuses are checked pairwise with
// an overlay isotopy test that needs no canonical form at all (isotopic
// curves in minimal position cobound an annulus, or for one-sided curves a
// disk through their single crossing).
//
// Classification and essentiality come from cutting: one-sidedness from the
// orientation-reversal parity of the traced curve (cross-checked against
// the boundary walks of the cut), separating from the region count, and
// trivial curves from a region that is a disk, a Möbius band, or an annulus
// shared with a boundary component.
#pragma once

#include "ncc/arrangement.hpp"

#include <deque>
#include <optional>
#include <set>
#include <vector>

namespace ncc {

enum class Sidedness { OneSided, TwoSided };
enum class TrivialReason { Disk, Moebius, BoundaryParallel };

inline const char* to_string(Sidedness s) {
  return s == Sidedness::OneSided ? "one-sided" : "two-sided";
}

inline const char* to_string(TrivialReason r) {
  switch (r) {
    case TrivialReason::Disk: return "disk";
    case TrivialReason::Moebius: return "moebius";
    default: return "boundary-parallel";
  }
}

class trivial_curve : public error {
public:
  explicit trivial_curve(TrivialReason r)
      : error(std::string("trivial curve: bounds ") +
              (r == TrivialReason::BoundaryParallel ? "an annulus with a boundary component"
                                                    : to_string(r))),
        reason(r) {}
  TrivialReason reason;
};

class disconnected_curve : public error {
public:
  explicit disconnected_curve(int components)
      : error("normal coordinates trace " + std::to_string(components) +
              " components, expected a single circle") {}
};

class matching_violation : public error {
public:
  matching_violation() : error("normal coordinates violate the matching equations") {}
};

namespace detail {

// One step of the link walk around the vertex at (t, c), crossing the side
// at slot `cross`: the next sector.
inline std::pair<int, int> link_step(const Cellulation& cell, int t, int c, int cross) {
  const auto& g = cell.gluing(side_id(t, cross));
  const bool start = c == (cross + 1) % 3;
  const int t2 = side_tri(g.other), slot2 = side_slot(g.other);
  const bool start2 = g.aligned ? start : !start;
  return {t2, start2 ? (slot2 + 1) % 3 : (slot2 + 2) % 3};
}

// A closed transversal as its cyclic chart-crossing sequence: step (t, in,
// out) runs through triangle t from side `in` to side `out`.  Wave steps
// (in == out) are not normal; reduction removes a wave and fuses its two
// neighbours, which the gluing consistency of the cycle forces into the
// same triangle, and repeats until no wave is left.  Reduction is
// confluent, so the terminal normal coordinates depend only on the isotopy
// class of the input.
struct ChartStep {
  int tri, in, out;
};

inline CornerVec reduce_chart_sequence(const Cellulation& cell, std::vector<ChartStep> seq,
                                       size_t corner_count) {
  for (size_t i = 0; i < seq.size(); ++i) {
    const ChartStep& p = seq[i];
    const ChartStep& q = seq[(i + 1) % seq.size()];
    if (cell.gluing(side_id(p.tri, p.out)).other != side_id(q.tri, q.in))
      throw error("chart-crossing sequence is not glued consistently");
  }
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i < seq.size(); ++i) {
      if (seq[i].in != seq[i].out) continue;
      const size_t m = seq.size();
      if (m == 1) throw error("chart-crossing sequence collapsed to a wave");
      const size_t p = (i + m - 1) % m, q = (i + 1) % m;
      if (p == q) {
        seq.erase(seq.begin() + i);
      } else {
        if (seq[p].tri != seq[q].tri || seq[p].out != seq[q].in)
          throw error("wave neighbours landed in different charts");
        seq[p].out = seq[q].out;
        seq.erase(seq.begin() + std::max(i, q));
        seq.erase(seq.begin() + std::min(i, q));
      }
      again = true;
      break;
    }
  }
  CornerVec y(corner_count, 0);
  for (const ChartStep& st : seq) ++y[corner_index(st.tri, 3 - st.in - st.out)];
  return y;
}

// All coordinate vectors one slide away from x (x must trace connected).
// Only maximal innermost families slide: partial families normalize into
// extensions of themselves.  Three shapes arise.  A family with two
// distinct flanking arcs re-corners both flanks chart-locally, which needs
// two free sectors on the far side; families covering L-1 of the L link
// sectors are skipped there.  A family that is the whole curve trades its
// fan for the complementary one wholesale.  A family whose single closing
// arc rides both outer radii would need both flank re-cornerings at once,
// which leaves waves; the swept curve is rebuilt as a chart-crossing
// sequence and renormalized instead.
inline std::vector<CornerVec> slide_neighbors(const Cellulation& cell, const CornerVec& x) {
  if (!satisfies_matching(cell, x)) throw error("slide enumeration requires matched coordinates");
  const auto comps = trace_components(cell, x);
  if (comps.size() != 1) throw error("slide enumeration requires a connected curve");
  const auto& arcs = comps[0].arcs;
  const auto& exits = comps[0].exit_slots;
  const int n = static_cast<int>(arcs.size());

  // slideable[i]: arc i turns innermostly at an interior vertex.
  // cont[i]: arcs i and i+1 hug the same vertex at the same edge end.
  std::vector<char> slideable(n, 0), cont(n, 0);
  for (int i = 0; i < n; ++i) {
    if (arcs[i].rank != 0) continue;
    const int v = cell.vertex_of_corner(arcs[i].tri, arcs[i].corner);
    if (cell.vertex_is_boundary(v)) continue;
    slideable[i] = 1;
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (!slideable[i] || !slideable[j]) continue;
    const auto [t2, c2] = link_step(cell, arcs[i].tri, arcs[i].corner, exits[i]);
    if (t2 == arcs[j].tri && c2 == arcs[j].corner) cont[i] = 1;
  }

  auto entry_slot = [&](int i) {
    const int c = arcs[i].corner;
    return (c + 1) % 3 == exits[i] ? (c + 2) % 3 : (c + 1) % 3;
  };

  std::set<CornerVec> out;
  auto emit_family = [&](int s, int k) {
    const Arc& a0 = arcs[s];
    // Walk the full link of the family's vertex, recording for each sector
    // the sides crossed into and out of it along the walk direction.
    struct Sector {
      int tri, corner, in, out;
    };
    std::vector<Sector> link;
    {
      int t = a0.tri, c = a0.corner, cross = exits[s];
      do {
        const int in = (c + 1) % 3 == cross ? (c + 2) % 3 : (c + 1) % 3;
        link.push_back({t, c, in, cross});
        if (static_cast<int>(link.size()) > 3 * cell.tri_count())
          throw error("slide link walk does not close");
        const auto& g = cell.gluing(side_id(t, cross));
        if (g.other < 0) throw error("slide link walk hit the surface boundary");
        const bool start = c == (cross + 1) % 3;
        const int t2 = side_tri(g.other), slot2 = side_slot(g.other);
        const bool start2 = g.aligned ? start : !start;
        c = start2 ? (slot2 + 1) % 3 : (slot2 + 2) % 3;
        t = t2;
        cross = (slot2 == (c + 1) % 3 ? c + 2 : c + 1) % 3;
      } while (!(t == a0.tri && c == a0.corner && cross == exits[s]));
    }
    const int L = static_cast<int>(link.size());
    if (k > L) return;
    for (int i = 0; i < k; ++i) {
      const Arc& r = arcs[(s + i) % n];
      if (link[i].tri != r.tri || link[i].corner != r.corner)
        throw error("slide family disagrees with the vertex link");
    }
    const int ai = (s + n - 1) % n, bi = (s + k) % n;
    if (k < n && ai == bi) {
      // The closing arc rides both outer radii, so both of its ends would
      // re-corner at once.  Sweep the crossing sequence: the closing step,
      // a wave where the family used to enter, the complementary sectors
      // walked backwards, and a wave where it used to leave.
      if (k >= L) return;
      std::vector<ChartStep> seq;
      seq.push_back({arcs[ai].tri, entry_slot(ai), exits[ai]});
      seq.push_back({link[0].tri, link[0].in, link[0].in});
      for (int j = L - 1; j >= k; --j) seq.push_back({link[j].tri, link[j].out, link[j].in});
      seq.push_back({link[k - 1].tri, link[k - 1].out, link[k - 1].out});
      CornerVec y = reduce_chart_sequence(cell, std::move(seq), x.size());
      if (!satisfies_matching(cell, y)) throw error("slide broke the matching equations");
      out.insert(std::move(y));
      return;
    }
    CornerVec y = x;
    auto dec = [&](int t, int c) {
      if (--y[corner_index(t, c)] < 0) throw error("slide produced a negative corner weight");
    };
    for (int i = 0; i < k; ++i) dec(arcs[(s + i) % n].tri, arcs[(s + i) % n].corner);
    if (k == n) {
      // The whole curve hugs the vertex and closes through one crossing
      // away from the link; it trades its fan for the complementary one
      // wholesale and keeps that crossing.
      if (k >= L) return;  // no room on the far side
      for (int j = k; j <= L - 1; ++j) ++y[corner_index(link[j].tri, link[j].corner)];
    } else {
      if (k > L - 2) return;
      dec(arcs[ai].tri, arcs[ai].corner);
      dec(arcs[bi].tri, arcs[bi].corner);
      for (int j = k + 1; j <= L - 2; ++j) ++y[corner_index(link[j].tri, link[j].corner)];
      ++y[corner_index(arcs[ai].tri, exits[ai])];
      ++y[corner_index(arcs[bi].tri, entry_slot(bi))];
    }
    if (!satisfies_matching(cell, y)) throw error("slide broke the matching equations");
    out.insert(std::move(y));
  };
  for (int s = 0; s < n; ++s) {
    if (!slideable[s] || cont[(s + n - 1) % n]) continue;
    int k = 1;
    while (k < n && cont[(s + k - 1) % n]) ++k;
    emit_family(s, k);
  }
  return {out.begin(), out.end()};
}

inline std::pair<int, CornerVec> weight_key(const CornerVec& v) {
  return {total_weight(v), v};
}

inline CornerVec greedy_reduce(const Cellulation& cell, CornerVec x) {
  for (int guard = 0; guard < 100000; ++guard) {
    std::optional<CornerVec> best;
    for (CornerVec& y : slide_neighbors(cell, x)) {
      if (total_weight(y) >= total_weight(x)) continue;
      if (!best || weight_key(y) < weight_key(*best)) best = std::move(y);
    }
    if (!best) return x;
    x = std::move(*best);
  }
  throw error("curve reduction did not terminate");
}

}  // namespace detail

// Weight-minimal vectors reachable from `start` by slides, exploring with
// the given slack and restarting whenever something lighter appears.
inline std::vector<CornerVec> plateau_minima(const Cellulation& cell, const CornerVec& start,
                                             int slack = 2, size_t cap = 400000) {
  CornerVec x = detail::greedy_reduce(cell, start);
  for (int guard = 0; guard < 1000; ++guard) {
    const int base = total_weight(x);
    std::set<CornerVec> visited{x};
    std::deque<CornerVec> queue{x};
    std::optional<CornerVec> improved;
    while (!queue.empty() && !improved) {
      const CornerVec y = std::move(queue.front());
      queue.pop_front();
      for (CornerVec& z : detail::slide_neighbors(cell, y)) {
        if (total_weight(z) > base + slack) continue;
        if (!visited.insert(z).second) continue;
        if (total_weight(z) < base) {
          improved = std::move(z);
          break;
        }
        if (visited.size() > cap) throw cap_exceeded("canonicalization plateau exceeds cap");
        queue.push_back(std::move(z));
      }
    }
    if (improved) {
      x = detail::greedy_reduce(cell, *improved);
      continue;
    }
    std::vector<CornerVec> minima;
    for (const CornerVec& v : visited)
      if (total_weight(v) == base) minima.push_back(v);
    return minima;  // set order: already lexicographically sorted
  }
  throw error("canonicalization failed to stabilize");
}

inline CornerVec canonical_weights(const Cellulation& cell, const CornerVec& raw) {
  return plateau_minima(cell, raw).front();
}

struct Classification {
  Sidedness sidedness = Sidedness::TwoSided;
  bool separating = false;
  bool complement_orientable = false;
};

namespace detail {

struct CutClassification {
  Classification cls;
  std::optional<TrivialReason> trivial;
};

inline CutClassification cut_classify(const Cellulation& cell, const CornerVec& x) {
  const auto comps = trace_components(cell, x);
  if (comps.size() != 1) throw disconnected_curve(static_cast<int>(comps.size()));
  const bool one_sided = comps[0].one_sided;

  Arrangement arr(cell);
  arr.add_normal_multicurve(x, 0);
  const auto an = arr.analyze_regions();
  if (an.regions.empty() || an.regions.size() > 2)
    throw error("cutting along one curve produced an impossible region count");

  int curve_walks = 0;
  bool tags_one_sided = false;
  for (const auto& reg : an.regions)
    for (const auto& walk : reg.walks) {
      if (walk.touches_boundary) continue;
      ++curve_walks;
      for (const auto& [path, plus, minus] : walk.path_tags)
        if (plus && minus) tags_one_sided = true;
    }
  if (tags_one_sided != one_sided)
    throw error("sidedness disagreement between trace parity and cut walks");
  if (curve_walks != (one_sided ? 1 : 2))
    throw error("cut produced the wrong number of curve boundary circles");

  CutClassification out;
  out.cls.sidedness = one_sided ? Sidedness::OneSided : Sidedness::TwoSided;
  out.cls.separating = an.regions.size() == 2;
  if (one_sided && out.cls.separating) throw error("a one-sided curve cannot separate");
  out.cls.complement_orientable = true;
  for (const auto& reg : an.regions)
    if (!reg.orientable) out.cls.complement_orientable = false;

  if (!one_sided) {
    auto curve_only = [](const Arrangement::Region& reg) {
      return reg.walks.size() == 1 && !reg.walks[0].touches_boundary;
    };
    for (const auto& reg : an.regions)
      if (reg.chi == 1 && curve_only(reg)) out.trivial = TrivialReason::Disk;
    if (!out.trivial)
      for (const auto& reg : an.regions)
        if (reg.chi == 0 && !reg.orientable && curve_only(reg))
          out.trivial = TrivialReason::Moebius;
    if (!out.trivial)
      for (const auto& reg : an.regions) {
        if (reg.chi != 0 || !reg.orientable || reg.walks.size() != 2) continue;
        const bool b0 = reg.walks[0].touches_boundary;
        const bool b1 = reg.walks[1].touches_boundary;
        if (b0 != b1) out.trivial = TrivialReason::BoundaryParallel;
      }
  }
  return out;
}

}  // namespace detail

// Total for connected matched inputs; `x` should be canonical when the
// result is compared against stored classification fields.
inline Classification classify(const Cellulation& cell, const CornerVec& x) {
  return detail::cut_classify(cell, x).cls;
}

// Components of the preimage in the orientation double cover: 1 for
// one-sided curves, 2 for two-sided ones.
inline int double_cover_components(const Cellulation& cell, const CornerVec& x) {
  const Cellulation cover = cell.orientation_double_cover();
  return static_cast<int>(trace_components(cover, lift_to_cover(cell, x)).size());
}

// Decides whether two connected matched curves are isotopic by overlaying
// them and cutting to minimal position.  Needs no canonical form: isotopic
// two-sided curves end up disjoint and cobound an annulus, isotopic
// one-sided curves end up crossing once with a disk between them whose
// boundary passes that crossing twice.  Both witnesses are exclusive to
// isotopic pairs, since each region boundary carries a full copy of each
// curve and so realizes the parallelism.
inline bool isotopic(const Cellulation& cell, const CornerVec& x, const CornerVec& y) {
  if (x == y) return true;
  const auto cx = trace_components(cell, x);
  const auto cy = trace_components(cell, y);
  if (cx.size() != 1 || cy.size() != 1) throw error("isotopy test requires connected curves");
  if (cx[0].one_sided != cy[0].one_sided) return false;

  Arrangement arr(cell);
  arr.add_normal_multicurve(x, 0);
  arr.add_normal_multicurve(y, 1);
  arr.minimize_crossings(1);
  const int crossings = arr.crossing_count();
  const auto an = arr.analyze_regions();

  if (!cx[0].one_sided) {
    if (crossings != 0) return false;
    for (const auto& reg : an.regions) {
      if (reg.chi != 0 || !reg.orientable || reg.walks.size() != 2) continue;
      if (reg.walks[0].touches_boundary || reg.walks[1].touches_boundary) continue;
      int walk_layer[2] = {-1, -1};
      bool mixed = false;
      for (int w = 0; w < 2; ++w)
        for (const auto& piece : reg.walks[w].pieces) {
          if (piece.kind != Arrangement::WalkPiece::Strand) continue;
          const int layer = arr.path(piece.path).layer;
          if (walk_layer[w] == -1) walk_layer[w] = layer;
          else if (walk_layer[w] != layer) mixed = true;
        }
      if (!mixed && walk_layer[0] >= 0 && walk_layer[1] >= 0 && walk_layer[0] != walk_layer[1])
        return true;
    }
    return false;
  }

  if (crossings != 1) return false;
  for (const auto& reg : an.regions) {
    if (reg.chi != 1 || reg.walks.size() != 1) continue;
    const auto& walk = reg.walks[0];
    if (walk.touches_boundary || walk.crossing_corners != 2) continue;
    bool layer_seen[2] = {false, false};
    for (const auto& piece : walk.pieces)
      if (piece.kind == Arrangement::WalkPiece::Strand)
        layer_seen[arr.path(piece.path).layer] = true;
    if (layer_seen[0] && layer_seen[1]) return true;
  }
  return false;
}

struct CurveClass {
  SurfaceSig sig;
  CornerVec weights;  // canonical
  Sidedness sidedness = Sidedness::TwoSided;
  bool separating = false;
  bool complement_orientable = false;

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.sig == b.sig && a.weights == b.weights;
  }
  friend bool operator<(const CurveClass& a, const CurveClass& b) {
    if (a.sig != b.sig) return a.sig < b.sig;
    return detail::weight_key(a.weights) < detail::weight_key(b.weights);
  }
};

inline CurveClass canonicalize(const Cellulation& cell, const CornerVec& raw) {
  if (static_cast<int>(raw.size()) != 3 * cell.tri_count() || !satisfies_matching(cell, raw))
    throw matching_violation();
  if (total_weight(raw) == 0) throw trivial_curve(TrivialReason::Disk);
  {
    const auto comps = trace_components(cell, raw);
    if (comps.size() != 1) throw disconnected_curve(static_cast<int>(comps.size()));
  }
  CornerVec can = canonical_weights(cell, raw);
  if (total_weight(can) == 0) throw trivial_curve(TrivialReason::Disk);
  const auto rep = detail::cut_classify(cell, can);
  if (rep.trivial) throw trivial_curve(*rep.trivial);
  CurveClass c;
  c.sig = cell.sig();
  c.weights = std::move(can);
  c.sidedness = rep.cls.sidedness;
  c.separating = rep.cls.separating;
  c.complement_orientable = rep.cls.complement_orientable;
  return c;
}

}  // namespace ncc
