// Normal curves on a cellulation, in corner coordinates: entry (t, k) counts
// the arcs in triangle t cutting off corner k.  A corner-k arc crosses sides
// (k+1)%3 and (k+2)%3; the induced point counts on the two sides of every
// interior edge must agree (matching), and boundary sides carry no points.
//
// Points on side s are ordered along its direction (corner (s+1)%3 towards
// corner (s+2)%3): first the corner-(s+1) bundle, innermost arc first, then
// the corner-(s+2) bundle, innermost arc last.  Arc (t, k, rank) therefore
// meets side (k+2)%3 at position rank and side (k+1)%3 at position
// weight-1-rank, rank 0 being the arc closest to the corner.
#pragma once

#include "ncc/cellulation.hpp"

#include <vector>

namespace ncc {

using CornerVec = std::vector<int>;

inline int corner_index(int tri, int corner) { return 3 * tri + corner; }

inline int side_weight(const CornerVec& x, int side) {
  const int t = side_tri(side), s = side_slot(side);
  return x[corner_index(t, (s + 1) % 3)] + x[corner_index(t, (s + 2) % 3)];
}

inline int total_weight(const CornerVec& x) {
  int sum = 0;
  for (int v : x) sum += v;
  return sum;
}

inline bool satisfies_matching(const Cellulation& cell, const CornerVec& x) {
  if (static_cast<int>(x.size()) != 3 * cell.tri_count()) return false;
  for (int v : x)
    if (v < 0) return false;
  for (int s = 0; s < cell.side_count(); ++s) {
    const auto& g = cell.gluing(s);
    if (g.other < 0) {
      if (side_weight(x, s) != 0) return false;
    } else if (side_weight(x, s) != side_weight(x, g.other)) {
      return false;
    }
  }
  return true;
}

inline void require_matching(const Cellulation& cell, const CornerVec& x) {
  if (!satisfies_matching(cell, x))
    throw error("corner vector violates the matching equations");
}

// Per-edge weights of a matched corner vector, indexed by edge id.
inline std::vector<int> edge_weights(const Cellulation& cell, const CornerVec& x) {
  std::vector<int> w(cell.edge_count(), 0);
  for (int e = 0; e < cell.edge_count(); ++e) w[e] = side_weight(x, cell.edge_sides(e)[0]);
  return w;
}

// Corner vector from interior-edge weights (boundary edges weigh 0), or an
// empty vector when parity or a triangle inequality fails in some triangle.
inline CornerVec corners_from_edge_weights(const Cellulation& cell, const std::vector<int>& w) {
  CornerVec x(3 * cell.tri_count(), 0);
  for (int t = 0; t < cell.tri_count(); ++t) {
    int sw[3];
    for (int s = 0; s < 3; ++s) {
      const int e = cell.edge_of_side(side_id(t, s));
      sw[s] = cell.is_boundary_side(side_id(t, s)) ? 0 : w[e];
    }
    if ((sw[0] + sw[1] + sw[2]) % 2 != 0) return {};
    for (int k = 0; k < 3; ++k) {
      const int v = sw[(k + 1) % 3] + sw[(k + 2) % 3] - sw[k];
      if (v < 0) return {};
      x[corner_index(t, k)] = v / 2;
    }
  }
  return x;
}

struct Arc {
  int tri = -1;
  int corner = -1;
  int rank = -1;
  auto operator<=>(const Arc&) const = default;
};

// The two points of an arc, as (side id, position along side direction).
struct SidePoint {
  int side = -1;
  int pos = -1;
  auto operator<=>(const SidePoint&) const = default;
};

inline SidePoint arc_point_on(const CornerVec& x, const Arc& a, int slot) {
  const int s = side_id(a.tri, slot);
  if (slot == (a.corner + 2) % 3) return {s, a.rank};
  return {s, side_weight(x, s) - 1 - a.rank};
}

inline Arc arc_at_point(const CornerVec& x, const SidePoint& p) {
  const int t = side_tri(p.side), s = side_slot(p.side);
  const int first_bundle = x[corner_index(t, (s + 1) % 3)];
  if (p.pos < first_bundle) return {t, (s + 1) % 3, p.pos};
  return {t, (s + 2) % 3, side_weight(x, p.side) - 1 - p.pos};
}

// Crosses an interior edge: the identified point on the partner side.
inline SidePoint cross_edge(const Cellulation& cell, const CornerVec& x, const SidePoint& p) {
  const auto& g = cell.gluing(p.side);
  if (g.other < 0) throw error("cannot cross a boundary side");
  const int w = side_weight(x, p.side);
  return {g.other, g.aligned ? p.pos : w - 1 - p.pos};
}

struct TracedComponent {
  std::vector<Arc> arcs;        // cyclic order along the curve
  std::vector<int> exit_slots;  // slot through which arc i leaves its triangle
  bool one_sided = false;       // orientation transport along the loop reverses
};

// Decomposes a matched corner vector into its traced components.
inline std::vector<TracedComponent> trace_components(const Cellulation& cell,
                                                     const CornerVec& x) {
  std::vector<TracedComponent> out;
  // Visit flags per arc per exit direction are not needed: following the
  // curve from an arc in one direction returns to it from the other, so a
  // single per-arc flag suffices.
  std::vector<std::vector<char>> seen(cell.tri_count() * 3);
  auto arc_seen = [&](const Arc& a) -> char& {
    auto& v = seen[corner_index(a.tri, a.corner)];
    if (static_cast<int>(v.size()) <= a.rank) v.resize(a.rank + 1, 0);
    return v[static_cast<size_t>(a.rank)];
  };
  for (int t = 0; t < cell.tri_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int count = x[corner_index(t, k)];
      for (int r = 0; r < count; ++r) {
        Arc start{t, k, r};
        if (arc_seen(start)) continue;
        TracedComponent comp;
        Arc cur = start;
        int exit_slot = (start.corner + 2) % 3;
        bool reversed = false;
        do {
          arc_seen(cur) = 1;
          comp.arcs.push_back(cur);
          comp.exit_slots.push_back(exit_slot);
          const SidePoint leave = arc_point_on(x, cur, exit_slot);
          if (cell.gluing(leave.side).aligned) reversed = !reversed;
          const SidePoint enter = cross_edge(cell, x, leave);
          cur = arc_at_point(x, enter);
          // Continue out the arc's other side.
          const int in_slot = side_slot(enter.side);
          exit_slot = in_slot == (cur.corner + 1) % 3 ? (cur.corner + 2) % 3 : (cur.corner + 1) % 3;
        } while (cur != start);
        comp.one_sided = reversed;
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

inline bool is_connected_curve(const Cellulation& cell, const CornerVec& x) {
  return trace_components(cell, x).size() == 1;
}

// Lift to the orientation double cover built by orientation_double_cover():
// sheet 0 keeps coordinates, sheet 1 is the mirrored copy.
inline CornerVec lift_to_cover(const Cellulation& base, const CornerVec& x) {
  const int T = base.tri_count();
  CornerVec up(6 * T, 0);
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      up[corner_index(t, k)] = x[corner_index(t, k)];
      up[corner_index(t + T, k)] = x[corner_index(t, mirror_slot(k))];
    }
  return up;
}

}  // namespace ncc
