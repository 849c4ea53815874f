// Configurations of closed curves on a cellulated surface, held purely
// combinatorially: each curve is a cyclic list of edge crossings (ports),
// each edge stores the merged order of all ports on it, and inside a
// triangle consecutive ports span a taut chord.  Two chords cross exactly
// when their endpoints interleave on the triangle boundary, and chords of
// curves in the same layer never interleave (layers stay embedded).
//
// One engine, three jobs:
//  * crossing counts between layers plus bigon removal by surgery; a
//    configuration of two embedded systems with no bigon face realizes
//    their minimal position, which is how intersection numbers are read;
//  * region analysis of the complement: per-triangle cells merged across
//    glued walls, with Euler characteristic, orientability and labeled
//    boundary walks per region; this is what cutting, sidedness tests and
//    pants certification consume;
//  * incremental disjoint realization of curve systems whose pairwise
//    intersection numbers vanish.
//
// Region boundary walks are computed with (half-edge, side) states so that
// they stay well defined across orientation-reversing gluings, where chart
// left and right swap.
#pragma once

#include "ncc/normal.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace ncc {

class Arrangement {
public:
  struct Port {
    int path = -1;
    int edge = -1;
    int side_in = -1;  // side through which the strand enters its next triangle
    bool alive = false;
  };

  struct Path {
    int layer = 0;
    std::vector<int> ports;  // cyclic, in traversal order
  };

  explicit Arrangement(const Cellulation& cell)
      : cell_(&cell), edge_ports_(cell.edge_count()) {}

  const Cellulation& cell() const { return *cell_; }
  int path_count() const { return static_cast<int>(paths_.size()); }
  const Path& path(int p) const { return paths_[p]; }
  const Port& port(int id) const { return ports_[id]; }
  const std::vector<int>& ports_on_edge(int e) const { return edge_ports_[e]; }

  // Adds every component of a matched corner vector as a path in `layer`.
  // New crossings are interleaved against existing ones by normal-position
  // parameter (existing points win ties); the choice only influences how
  // much bigon removal has to run later.  Returns the new path ids.
  std::vector<int> add_normal_multicurve(const CornerVec& x, int layer) {
    require_matching(*cell_, x);
    const auto comps = trace_components(*cell_, x);
    // Merged slot for each new point, per edge, indexed by the point's
    // position along the canonical side.
    std::vector<std::vector<int>> slots(cell_->edge_count());
    for (int e = 0; e < cell_->edge_count(); ++e) {
      const int w_new = side_weight(x, cell_->edge_sides(e)[0]);
      if (w_new == 0) continue;
      const int w_old = static_cast<int>(edge_ports_[e].size());
      int i = 0, j = 0;
      while (i < w_old || j < w_new) {
        bool take_old;
        if (i == w_old)
          take_old = false;
        else if (j == w_new)
          take_old = true;
        else
          take_old = static_cast<long long>(i + 1) * (w_new + 1) <=
                     static_cast<long long>(j + 1) * (w_old + 1);
        if (take_old)
          ++i;
        else
          slots[e].push_back(i + j), ++j;
      }
      // Insert placeholders now; slots are final indices in ascending
      // order, so sequential insertion at those indices is exact.
      for (int s : slots[e]) edge_ports_[e].insert(edge_ports_[e].begin() + s, -1);
    }
    std::vector<int> created;
    for (const TracedComponent& comp : comps) {
      const int pid = static_cast<int>(paths_.size());
      paths_.push_back({layer, {}});
      created.push_back(pid);
      for (size_t a = 0; a < comp.arcs.size(); ++a) {
        const SidePoint leave = arc_point_on(x, comp.arcs[a], comp.exit_slots[a]);
        const SidePoint enter = cross_edge(*cell_, x, leave);
        const int e = cell_->edge_of_side(leave.side);
        const int cpos = cell_->edge_sides(e)[0] == leave.side ? leave.pos : enter.pos;
        const int id = static_cast<int>(ports_.size());
        ports_.push_back({pid, e, enter.side, true});
        if (edge_ports_[e][slots[e][cpos]] != -1)
          throw error("arrangement: placeholder already claimed");
        edge_ports_[e][slots[e][cpos]] = id;
        paths_[pid].ports.push_back(id);
      }
    }
    for (int e = 0; e < cell_->edge_count(); ++e)
      for (int id : edge_ports_[e])
        if (id < 0) throw error("arrangement: unclaimed placeholder");
    validate();
    return created;
  }

  // ----- chords and crossings -------------------------------------------

  struct Chord {
    int path = -1;
    int path_pos = -1;  // chord runs ports[path_pos] -> ports[path_pos + 1]
    int tri = -1;
    int from_port = -1;
    int to_port = -1;
    int from_ord = -1;  // boundary ordinals within the triangle
    int to_ord = -1;
  };

  struct Crossing {
    int chord_a = -1;
    int chord_b = -1;
    int tri = -1;
  };

  std::vector<Chord> chords() const {
    std::vector<Chord> out;
    for (int pid = 0; pid < path_count(); ++pid) {
      const auto& pl = paths_[pid].ports;
      const int m = static_cast<int>(pl.size());
      for (int j = 0; j < m; ++j) {
        Chord c;
        c.path = pid;
        c.path_pos = j;
        c.from_port = pl[j];
        c.to_port = pl[(j + 1) % m];
        c.tri = side_tri(ports_[c.from_port].side_in);
        if (side_tri(twin_side(ports_[c.to_port])) != c.tri)
          throw error("arrangement: consecutive ports do not share a triangle");
        c.from_ord = boundary_ordinal(c.tri, entry_point(c.from_port));
        c.to_ord = boundary_ordinal(c.tri, exit_point(c.tri, c.to_port));
        out.push_back(c);
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Chord& a, const Chord& b) {
      if (a.tri != b.tri) return a.tri < b.tri;
      if (a.path != b.path) return a.path < b.path;
      return a.path_pos < b.path_pos;
    });
    return out;
  }

  std::vector<Crossing> crossings(const std::vector<Chord>& ch) const {
    std::vector<Crossing> out;
    for (size_t i = 0; i < ch.size(); ++i)
      for (size_t j = i + 1; j < ch.size() && ch[j].tri == ch[i].tri; ++j) {
        if (paths_[ch[i].path].layer == paths_[ch[j].path].layer) continue;
        if (chords_interleave(ch[i], ch[j]))
          out.push_back({static_cast<int>(i), static_cast<int>(j), ch[i].tri});
      }
    return out;
  }

  int crossing_count() const {
    const auto ch = chords();
    return static_cast<int>(crossings(ch).size());
  }

  int crossing_count_between(int layer_a, int layer_b) const {
    const auto ch = chords();
    int n = 0;
    for (const Crossing& c : crossings(ch)) {
      const int la = paths_[ch[c.chord_a].path].layer;
      const int lb = paths_[ch[c.chord_b].path].layer;
      if ((la == layer_a && lb == layer_b) || (la == layer_b && lb == layer_a)) ++n;
    }
    return n;
  }

  // ----- region analysis -------------------------------------------------

  struct WalkPiece {
    enum Kind { Strand, SurfaceBoundary, CrossingCorner };
    Kind kind = Strand;
    int path = -1;      // Strand
    int chord = -1;     // Strand: chord index in the analysis snapshot
    int seg = -1;       // Strand: segment index along the chord
    bool forward = false;  // Strand: traversed along the path direction
    int sigma = 0;      // Strand: chart side the region lies on, +1 left
    int boundary = -1;  // SurfaceBoundary: boundary label
    int side = -1;      // SurfaceBoundary: facet side id
    int crossing = -1;  // CrossingCorner
  };

  struct BoundaryWalk {
    std::vector<WalkPiece> pieces;
    int crossing_corners = 0;
    bool touches_boundary = false;
    // Side tag of each path traversed: tag at the path's base segment
    // (chord 0, segment 0), +1, -1 or both (one-sided traversal).
    std::vector<std::tuple<int, bool, bool>> path_tags;  // (path, plus, minus)
  };

  struct Region {
    int cell_count = 0;
    int chi = 0;
    bool orientable = true;
    std::vector<BoundaryWalk> walks;
  };

  struct Analysis {
    std::vector<Region> regions;
    std::vector<Chord> chords;
    std::vector<Crossing> crossings;
  };

  Analysis analyze_regions() const {
    Sub sub = subdivide();
    return analyze(sub);
  }

  // ----- bigon removal ---------------------------------------------------

  // Removes curve-curve bigon faces involving layer `active` until none
  // remain.  Each removal is an isotopy of one active-layer curve and cuts
  // the crossing count by exactly 2.  Returns the number removed.
  int minimize_crossings(int active) {
    int removed = 0;
    while (remove_one_bigon(active)) ++removed;
    return removed;
  }

  // Removes one bigon face, `choice` selecting among those available;
  // returns false when none remain.  Callers use this to vary the removal
  // order and check that the terminal crossing count does not depend on it.
  bool remove_bigon(int active, int choice) { return remove_one_bigon(active, choice); }

  void validate() const {
    for (int e = 0; e < cell_->edge_count(); ++e)
      for (int id : edge_ports_[e])
        if (id < 0 || !ports_[id].alive || ports_[id].edge != e)
          throw error("arrangement: edge list corrupt");
    for (int pid = 0; pid < path_count(); ++pid) {
      const auto& pl = paths_[pid].ports;
      if (pl.empty()) throw error("arrangement: empty path");
      for (size_t j = 0; j < pl.size(); ++j) {
        const Port& p = ports_[pl[j]];
        if (!p.alive || p.path != pid) throw error("arrangement: path list corrupt");
        const Port& q = ports_[pl[(j + 1) % pl.size()]];
        if (side_tri(p.side_in) != side_tri(twin_side(q)))
          throw error("arrangement: path does not thread triangles");
      }
    }
    const auto ch = chords();
    for (size_t i = 0; i < ch.size(); ++i)
      for (size_t j = i + 1; j < ch.size() && ch[j].tri == ch[i].tri; ++j)
        if (paths_[ch[i].path].layer == paths_[ch[j].path].layer &&
            chords_interleave(ch[i], ch[j]))
          throw error("arrangement: a layer crosses itself");
  }

private:
  const Cellulation* cell_;
  std::vector<Port> ports_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> edge_ports_;

  // ----- small geometry helpers -----------------------------------------

  int twin_side(const Port& p) const {
    const auto& s = cell_->edge_sides(p.edge);
    return s[0] == p.side_in ? s[1] : s[0];
  }

  int rank_on_edge(int id) const {
    const auto& list = edge_ports_[ports_[id].edge];
    for (int r = 0; r < static_cast<int>(list.size()); ++r)
      if (list[r] == id) return r;
    throw error("arrangement: port missing from its edge");
  }

  int pos_on_side(int id, int side) const {
    const Port& p = ports_[id];
    const int r = rank_on_edge(id);
    if (cell_->edge_sides(p.edge)[0] == side) return r;
    const int w = static_cast<int>(edge_ports_[p.edge].size());
    return cell_->gluing(side).aligned ? r : w - 1 - r;
  }

  SidePoint entry_point(int id) const {
    return {ports_[id].side_in, pos_on_side(id, ports_[id].side_in)};
  }

  SidePoint exit_point(int tri, int id) const {
    const int s = twin_side(ports_[id]);
    if (side_tri(s) != tri) throw error("arrangement: exit side in wrong triangle");
    return {s, pos_on_side(id, s)};
  }

  int side_points(int side) const {
    return static_cast<int>(edge_ports_[cell_->edge_of_side(side)].size());
  }

  // Boundary walk of a triangle: corner 0, side 2, corner 1, side 0,
  // corner 2, side 1 (counterclockwise in the reference orientation).
  int boundary_ordinal(int tri, const SidePoint& p) const {
    const int slot = side_slot(p.side);
    const int w2 = side_points(side_id(tri, 2));
    const int w0 = side_points(side_id(tri, 0));
    if (slot == 2) return 1 + p.pos;
    if (slot == 0) return w2 + 2 + p.pos;
    return w2 + w0 + 3 + p.pos;
  }

  int corner_ordinal(int tri, int corner) const {
    const int w2 = side_points(side_id(tri, 2));
    const int w0 = side_points(side_id(tri, 0));
    if (corner == 0) return 0;
    if (corner == 1) return w2 + 1;
    return w2 + w0 + 2;
  }

  int boundary_cycle_len(int tri) const {
    int n = 3;
    for (int s = 0; s < 3; ++s) n += side_points(side_id(tri, s));
    return n;
  }

  static bool ordinal_between(int x, int lo, int hi) {
    if (lo < hi) return lo < x && x < hi;
    return x > lo || x < hi;
  }

  bool chords_interleave(const Chord& a, const Chord& b) const {
    return ordinal_between(b.from_ord, a.from_ord, a.to_ord) !=
           ordinal_between(b.to_ord, a.from_ord, a.to_ord);
  }

  // ----- subdivision -----------------------------------------------------

  struct Sub {
    std::vector<Chord> chords;
    std::vector<Crossing> crossings;
    // Per chord: crossings in order along the chord, as crossing indices.
    std::vector<std::vector<int>> on_chord;

    // Nodes: corners [0, 3T), then port appearances, then crossings.
    int corner_end = 0;
    int port_end = 0;
    std::vector<int> port_node_base;             // per side id
    std::vector<std::pair<int, int>> port_key;   // node - corner_end -> (side, pos)

    struct E {
      int u = -1, v = -1;
      bool wall = false;
      int side = -1, k = -1;  // wall: side id and interval index
      int chord = -1, seg = -1;
      int tri = -1;
    };
    std::vector<E> edges;
    std::vector<int> wall_base;       // per side id: first wall subedge
    std::vector<int> chord_seg_base;  // per chord: first segment subedge

    std::vector<std::vector<int>> rot;  // per node: outgoing halves, ccw
    std::vector<int> rot_pos;           // per half

    std::vector<int> face_of_half;
    std::vector<std::vector<int>> faces;  // walk order halves
    std::vector<char> outer;

    int from_of(int h) const { return h % 2 == 0 ? edges[h / 2].u : edges[h / 2].v; }
    int to_of(int h) const { return h % 2 == 0 ? edges[h / 2].v : edges[h / 2].u; }
  };

  Sub subdivide() const {
    Sub sub;
    sub.chords = chords();
    sub.crossings = crossings(sub.chords);
    sub.on_chord.assign(sub.chords.size(), {});
    for (int ci = 0; ci < static_cast<int>(sub.crossings.size()); ++ci) {
      sub.on_chord[sub.crossings[ci].chord_a].push_back(ci);
      sub.on_chord[sub.crossings[ci].chord_b].push_back(ci);
    }
    // Order crossings along each chord.  All chords crossing `base` are
    // pairwise disjoint (they belong to the other layer), so their order
    // along `base` is the boundary order of their endpoints on the arc
    // left of `base`, measured from base.from.
    for (size_t c = 0; c < sub.chords.size(); ++c) {
      const Chord& base = sub.chords[c];
      const int L = boundary_cycle_len(base.tri);
      auto key = [&](int ci) {
        const Crossing& cr = sub.crossings[ci];
        const Chord& other =
            sub.chords[cr.chord_a == static_cast<int>(c) ? cr.chord_b : cr.chord_a];
        for (int x : {other.from_ord, other.to_ord})
          if (ordinal_between(x, base.from_ord, base.to_ord))
            return (x - base.from_ord + L) % L;
        throw error("arrangement: crossing chord without endpoint beside base");
      };
      std::stable_sort(sub.on_chord[c].begin(), sub.on_chord[c].end(),
                       [&](int a, int b) { return key(a) < key(b); });
    }

    // Nodes.
    sub.corner_end = 3 * cell_->tri_count();
    sub.port_node_base.assign(cell_->side_count(), -1);
    int next = sub.corner_end;
    for (int s = 0; s < cell_->side_count(); ++s) {
      sub.port_node_base[s] = next;
      for (int p = 0; p < side_points(s); ++p) sub.port_key.push_back({s, p});
      next += side_points(s);
    }
    sub.port_end = next;
    next += static_cast<int>(sub.crossings.size());

    auto port_node = [&](const SidePoint& p) { return sub.port_node_base[p.side] + p.pos; };
    auto crossing_node = [&](int ci) { return sub.port_end + ci; };

    // Wall subedges, directed along each side (u at the lower ordinal).
    sub.wall_base.assign(cell_->side_count(), -1);
    for (int s = 0; s < cell_->side_count(); ++s) {
      const int t = side_tri(s), slot = side_slot(s);
      const int w = side_points(s);
      sub.wall_base[s] = static_cast<int>(sub.edges.size());
      for (int k = 0; k <= w; ++k) {
        Sub::E e;
        e.wall = true;
        e.side = s;
        e.k = k;
        e.tri = t;
        e.u = k == 0 ? 3 * t + (slot + 1) % 3 : port_node({s, k - 1});
        e.v = k == w ? 3 * t + (slot + 2) % 3 : port_node({s, k});
        sub.edges.push_back(e);
      }
    }
    // Chord segment subedges, directed from entry to exit.
    for (size_t c = 0; c < sub.chords.size(); ++c) {
      const Chord& ch = sub.chords[c];
      sub.chord_seg_base.push_back(static_cast<int>(sub.edges.size()));
      std::vector<int> stations;
      stations.push_back(port_node(entry_point(ch.from_port)));
      for (int ci : sub.on_chord[c]) stations.push_back(crossing_node(ci));
      stations.push_back(port_node(exit_point(ch.tri, ch.to_port)));
      for (size_t s = 0; s + 1 < stations.size(); ++s) {
        Sub::E e;
        e.u = stations[s];
        e.v = stations[s + 1];
        e.chord = static_cast<int>(c);
        e.seg = static_cast<int>(s);
        e.tri = ch.tri;
        sub.edges.push_back(e);
      }
    }

    // Rotations: per node, outgoing halves in counterclockwise order.
    const int H = 2 * static_cast<int>(sub.edges.size());
    std::vector<std::vector<int>> incident(next);
    for (int h = 0; h < H; ++h) incident[sub.from_of(h)].push_back(h);
    sub.rot.assign(next, {});
    sub.rot_pos.assign(H, -1);
    for (int v = 0; v < next; ++v) {
      auto& halves = incident[v];
      if (halves.empty()) continue;
      const int tri = sub.edges[halves[0] / 2].tri;
      const int L = boundary_cycle_len(tri);
      auto far_ordinal = [&](int h) {
        const Sub::E& e = sub.edges[h / 2];
        if (!e.wall) {
          const Chord& ch = sub.chords[e.chord];
          return h % 2 == 0 ? ch.to_ord : ch.from_ord;
        }
        const int head = sub.to_of(h);
        if (head < sub.corner_end) return corner_ordinal(tri, head - 3 * tri);
        return boundary_ordinal(tri, {sub.port_key[head - sub.corner_end].first,
                                      sub.port_key[head - sub.corner_end].second});
      };
      std::vector<std::array<int, 3>> keyed;  // (primary, tiebreak, half)
      if (v >= sub.port_end) {
        for (int h : halves) keyed.push_back({far_ordinal(h), 0, h});
      } else {
        const int q = v < sub.corner_end
                          ? corner_ordinal(tri, v - 3 * tri)
                          : boundary_ordinal(tri, {sub.port_key[v - sub.corner_end].first,
                                                   sub.port_key[v - sub.corner_end].second});
        for (int h : halves) {
          const int d = ((far_ordinal(h) - q) % L + L) % L;
          const Sub::E& e = sub.edges[h / 2];
          int tie = 1;
          if (e.wall) tie = d == 1 ? 0 : 2;
          keyed.push_back({d, tie, h});
        }
      }
      std::sort(keyed.begin(), keyed.end());
      for (auto& k : keyed) {
        sub.rot_pos[k[2]] = static_cast<int>(sub.rot[v].size());
        sub.rot[v].push_back(k[2]);
      }
    }

    // Faces: next half after h is the rotation predecessor of its twin,
    // which walks every face with the face on the left.
    sub.face_of_half.assign(H, -1);
    auto next_face_half = [&](int h) {
      const int tw = h ^ 1;
      const auto& r = sub.rot[sub.from_of(tw)];
      const int i = sub.rot_pos[tw];
      return r[(i + static_cast<int>(r.size()) - 1) % r.size()];
    };
    for (int h0 = 0; h0 < H; ++h0) {
      if (sub.face_of_half[h0] >= 0) continue;
      const int f = static_cast<int>(sub.faces.size());
      sub.faces.push_back({});
      int h = h0;
      do {
        sub.face_of_half[h] = f;
        sub.faces[f].push_back(h);
        h = next_face_half(h);
      } while (h != h0);
    }
    // Outer faces contain a backward wall half (odd halves run against the
    // boundary direction); inner cells use only forward wall halves.
    sub.outer.assign(sub.faces.size(), 0);
    for (size_t f = 0; f < sub.faces.size(); ++f)
      for (int h : sub.faces[f])
        if (sub.edges[h / 2].wall && h % 2 == 1) sub.outer[f] = 1;
    // Sanity: one outer face per triangle, and cells count to
    // 1 + chords + crossings in each triangle.
    std::vector<int> outer_per_tri(cell_->tri_count(), 0), cells_per_tri(cell_->tri_count(), 0);
    std::vector<int> expect(cell_->tri_count(), 1);
    for (size_t f = 0; f < sub.faces.size(); ++f) {
      const int t = sub.edges[sub.faces[f][0] / 2].tri;
      ++(sub.outer[f] ? outer_per_tri[t] : cells_per_tri[t]);
    }
    for (const Chord& c : sub.chords) ++expect[c.tri];
    for (const Crossing& c : sub.crossings) ++expect[c.tri];
    for (int t = 0; t < cell_->tri_count(); ++t)
      if (outer_per_tri[t] != 1 || cells_per_tri[t] != expect[t])
        throw error("arrangement: face census mismatch");
    return sub;
  }

  // ----- regions ---------------------------------------------------------

  // Union-find over cells with an orientation parity bit per element.
  struct ParityUF {
    std::vector<int> parent;
    std::vector<char> parity;   // relative to parent
    std::vector<char> twisted;  // per root: region is nonorientable
    explicit ParityUF(int n) : parent(n), parity(n, 0), twisted(n, 0) {
      for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
      if (parent[x] == x) return {x, 0};
      auto [r, p] = find(parent[x]);
      parent[x] = r;
      parity[x] = static_cast<char>(parity[x] ^ p);
      return {r, parity[x]};
    }
    void unite(int a, int b, int flip) {
      auto [ra, pa] = find(a);
      auto [rb, pb] = find(b);
      if (ra == rb) {
        if ((pa ^ pb) != flip) twisted[ra] = 1;
        return;
      }
      parent[rb] = ra;
      parity[rb] = static_cast<char>(pa ^ pb ^ flip);
      twisted[ra] = static_cast<char>(twisted[ra] | twisted[rb]);
    }
  };

  // Wall identification: the glued twin of wall subedge (side, k).
  struct WallTwin {
    int side = -1;
    int k = -1;
    bool aligned = false;
  };
  WallTwin wall_twin(int side, int k) const {
    const auto& g = cell_->gluing(side);
    if (g.other < 0) return {};
    const int w = side_points(side);
    return {g.other, g.aligned ? k : w - k, g.aligned};
  }

  Analysis analyze(const Sub& sub) const {
    Analysis out;
    out.chords = sub.chords;
    out.crossings = sub.crossings;

    const int F = static_cast<int>(sub.faces.size());
    ParityUF uf(F);
    for (int s = 0; s < cell_->side_count(); ++s) {
      const auto& g = cell_->gluing(s);
      if (g.other < 0 || g.other < s) continue;
      const int w = side_points(s);
      for (int k = 0; k <= w; ++k) {
        const WallTwin tw = wall_twin(s, k);
        const int c0 = sub.face_of_half[2 * (sub.wall_base[s] + k)];
        const int c1 = sub.face_of_half[2 * (sub.wall_base[tw.side] + tw.k)];
        if (sub.outer[c0] || sub.outer[c1])
          throw error("arrangement: forward wall half bounds an outer face");
        uf.unite(c0, c1, tw.aligned ? 1 : 0);
      }
    }
    // Region ids in order of smallest member cell.
    std::vector<int> region_of_cell(F, -1);
    std::vector<int> roots;
    for (int f = 0; f < F; ++f) {
      if (sub.outer[f]) continue;
      const int r = uf.find(f).first;
      if (region_of_cell[r] < 0) {
        region_of_cell[r] = static_cast<int>(roots.size());
        roots.push_back(r);
      }
    }
    out.regions.resize(roots.size());
    for (int f = 0; f < F; ++f) {
      if (sub.outer[f]) continue;
      const int reg = region_of_cell[uf.find(f).first];
      region_of_cell[f] = reg;  // reuse the array for all cells
      ++out.regions[reg].cell_count;
    }
    for (size_t i = 0; i < roots.size(); ++i)
      out.regions[i].orientable = !uf.twisted[uf.find(roots[i]).first];

    // Euler characteristic per region as a compact surface: the piece left
    // after cutting along every strand.  Cutting duplicates curve-side
    // material, so chord subedges count once per covered side, ports once
    // per covered path side and crossings once per wedge corner.  Walls and
    // cellulation vertices stay interior and collapse under the gluing.
    std::vector<std::set<std::tuple<int, int, int>>> vset(roots.size()), eset(roots.size());
    auto wall_ident = [&](const Sub::E& e) -> std::tuple<int, int, int> {
      const auto& g = cell_->gluing(e.side);
      if (g.other < 0) return {4, e.side, e.k};
      const WallTwin tw = wall_twin(e.side, e.k);
      if (e.side <= tw.side) return {4, e.side, e.k};
      return {4, tw.side, tw.k};
    };
    auto port_ident = [&](int node) -> int {
      const auto [side, pos] = sub.port_key[node - sub.corner_end];
      const int e = cell_->edge_of_side(side);
      const int r = cell_->edge_sides(e)[0] == side
                        ? pos
                        : (cell_->gluing(side).aligned
                               ? pos
                               : static_cast<int>(edge_ports_[e].size()) - 1 - pos);
      return edge_ports_[e][r];
    };
    for (int f = 0; f < F; ++f) {
      if (sub.outer[f]) continue;
      const int reg = region_of_cell[f];
      for (int h : sub.faces[f]) {
        const Sub::E& e = sub.edges[h / 2];
        if (e.wall) {
          eset[reg].insert(wall_ident(e));
          for (int n : {e.u, e.v})
            if (n < sub.corner_end)
              vset[reg].insert({0, cell_->vertex_of_corner(n / 3, n % 3), 0});
          continue;
        }
        eset[reg].insert({3, 2 * e.chord + h % 2, e.seg});
        for (int n : {e.u, e.v}) {
          if (n >= sub.port_end) continue;
          // Path-side tag, normalised so the two charts at the port agree:
          // the chart of the outgoing stub flips when the gluing is aligned.
          const bool al = cell_->gluing(sub.port_key[n - sub.corner_end].first).aligned;
          const int tag = (h % 2) ^ (n == e.u && al ? 1 : 0);
          vset[reg].insert({1, port_ident(n), tag});
        }
        const int head = sub.to_of(h);
        if (head >= sub.port_end) vset[reg].insert({2, head - sub.port_end, h});
      }
    }
    int chi_sum = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
      out.regions[i].chi = static_cast<int>(vset[i].size()) - static_cast<int>(eset[i].size()) +
                           out.regions[i].cell_count;
      chi_sum += out.regions[i].chi;
    }
    // Cutting along the strand graph adds one to the total characteristic
    // per crossing, so the regions must account for the whole surface.
    const int chi_surface = cell_->vertex_count() - cell_->edge_count() + cell_->tri_count();
    if (chi_sum != chi_surface + static_cast<int>(sub.crossings.size()))
      throw error("arrangement: region Euler characteristics are inconsistent");

    // Boundary walks with (half, sigma) states.
    walk_regions(sub, region_of_cell, out);
    return out;
  }

  // Steps the boundary walk: from piece `h` with the region on chart side
  // `sigma`, rotate around the head node (teleporting across glued walls)
  // until the next strand or free-wall piece.
  std::pair<int, int> walk_step(const Sub& sub, int h, int sigma,
                                std::vector<int>* corner_hits) const {
    int v = sub.to_of(h);
    int outh = h ^ 1;
    int sg = sigma;
    for (int guard = 0; guard < 1000000; ++guard) {
      const auto& r = sub.rot[v];
      const int m = static_cast<int>(r.size());
      const int i = sub.rot_pos[outh];
      const int g = r[((i + (sg == 1 ? -1 : 1)) % m + m) % m];
      const Sub::E& e = sub.edges[g / 2];
      if (!e.wall) {
        if (v >= sub.port_end && corner_hits) corner_hits->push_back(v - sub.port_end);
        return {g, sg};
      }
      if (cell_->gluing(e.side).other < 0) return {g, sg};  // surface boundary
      // Teleport across the gluing and keep rotating on the far chart.
      const WallTwin tw = wall_twin(e.side, e.k);
      const int e2 = sub.wall_base[tw.side] + tw.k;
      // g runs along the side direction iff it is the forward half; the
      // identification matches side directions iff aligned.
      const bool fwd = g % 2 == 0;
      const bool fwd2 = tw.aligned ? fwd : !fwd;
      const int g2 = 2 * e2 + (fwd2 ? 0 : 1);
      // Continue rotating around the identified node, arriving via g2.
      v = sub.from_of(g2);
      outh = g2;
      if (tw.aligned) sg = -sg;
    }
    throw error("arrangement: runaway boundary walk");
  }

  void walk_regions(const Sub& sub, const std::vector<int>& region_of_cell,
                    Analysis& out) const {
    const int H = 2 * static_cast<int>(sub.edges.size());
    // State id: half * 2 + (sigma == +1 ? 0 : 1).
    std::vector<char> visited(2 * H, 0);
    auto state = [](int h, int sg) { return 2 * h + (sg == 1 ? 0 : 1); };

    std::vector<std::pair<int, int>> seeds;
    for (int h = 0; h < H; ++h) {
      const Sub::E& e = sub.edges[h / 2];
      if (!e.wall) {
        seeds.push_back({h, 1});
        seeds.push_back({h, -1});
      } else if (cell_->gluing(e.side).other < 0) {
        // Only the inner side of a surface-boundary wall is walkable.
        if (h % 2 == 0)
          seeds.push_back({h, 1});
        else
          seeds.push_back({h, -1});
      }
    }
    for (auto [h0, s0] : seeds) {
      if (visited[state(h0, s0)]) continue;
      BoundaryWalk walk;
      int region = -1;
      int h = h0, sg = s0;
      do {
        visited[state(h, sg)] = 1;
        visited[state(h ^ 1, -sg)] = 1;  // the same circle, walked backwards
        const Sub::E& e = sub.edges[h / 2];
        const int cellh = sg == 1 ? sub.face_of_half[h] : sub.face_of_half[h ^ 1];
        if (sub.outer[cellh]) throw error("arrangement: boundary walk fell outside");
        if (region < 0)
          region = region_of_cell[cellh];
        else if (region != region_of_cell[cellh])
          throw error("arrangement: boundary walk switched regions");
        WalkPiece piece;
        if (e.wall) {
          piece.kind = WalkPiece::SurfaceBoundary;
          piece.boundary = cell_->gluing(e.side).boundary;
          piece.side = e.side;
          walk.touches_boundary = true;
        } else {
          piece.kind = WalkPiece::Strand;
          piece.chord = e.chord;
          piece.seg = e.seg;
          piece.path = sub.chords[e.chord].path;
          piece.forward = h % 2 == 0;
          piece.sigma = sg;
        }
        walk.pieces.push_back(piece);
        std::vector<int> corner_hits;
        auto [nh, nsg] = walk_step(sub, h, sg, &corner_hits);
        for (int ci : corner_hits) {
          WalkPiece corner;
          corner.kind = WalkPiece::CrossingCorner;
          corner.crossing = ci;
          walk.pieces.push_back(corner);
          ++walk.crossing_corners;
        }
        h = nh;
        sg = nsg;
      } while (!(h == h0 && sg == s0));
      // Side tags at each path's base segment.
      std::vector<std::tuple<int, bool, bool>> tags;
      for (const WalkPiece& p : walk.pieces) {
        if (p.kind != WalkPiece::Strand) continue;
        const Chord& c = sub.chords[p.chord];
        if (c.path_pos != 0 || p.seg != 0) continue;
        const int tau = p.forward ? p.sigma : -p.sigma;
        bool found = false;
        for (auto& [path, plus, minus] : tags)
          if (path == c.path) {
            (tau == 1 ? plus : minus) = true;
            found = true;
          }
        if (!found) tags.push_back({c.path, tau == 1, tau == -1});
      }
      walk.path_tags = std::move(tags);
      if (region < 0) throw error("arrangement: walk with no region");
      out.regions[region].walks.push_back(std::move(walk));
    }
  }

  // ----- bigon surgery ---------------------------------------------------

  struct Bigon {
    int crossing_x = -1, crossing_y = -1;
    // Runs in walk order from x to y; each piece is (half, sigma).
    std::vector<std::pair<int, int>> run_a, run_b;  // a: active layer
  };

  std::vector<Bigon> all_bigons(const Sub& sub, const Analysis& an, int active) const {
    std::vector<Bigon> out;
    for (const auto& reg : an.regions) {
      if (reg.chi != 1 || reg.walks.size() != 1) continue;
      const BoundaryWalk& w = reg.walks[0];
      if (w.crossing_corners != 2 || w.touches_boundary) continue;
      // Rebuild the run structure with half/sigma detail: rerun the walk
      // from a piece of this region.  Find it via the stored pieces.
      // Locate corners and split.
      std::vector<int> corner_pos;
      for (size_t i = 0; i < w.pieces.size(); ++i)
        if (w.pieces[i].kind == WalkPiece::CrossingCorner) corner_pos.push_back(static_cast<int>(i));
      const int x = w.pieces[corner_pos[0]].crossing;
      const int y = w.pieces[corner_pos[1]].crossing;
      if (x == y) continue;  // folded disk, not a bigon
      auto run_between = [&](int from, int to) {
        std::vector<const WalkPiece*> run;
        const int n = static_cast<int>(w.pieces.size());
        for (int i = (from + 1) % n; i != to; i = (i + 1) % n) run.push_back(&w.pieces[i]);
        return run;
      };
      const auto r1 = run_between(corner_pos[0], corner_pos[1]);
      const auto r2 = run_between(corner_pos[1], corner_pos[0]);
      if (r1.empty() || r2.empty()) continue;
      auto run_path = [&](const std::vector<const WalkPiece*>& run) {
        const int p = run[0]->path;
        for (auto* piece : run)
          if (piece->kind != WalkPiece::Strand || piece->path != p) return -1;
        return p;
      };
      const int p1 = run_path(r1), p2 = run_path(r2);
      if (p1 < 0 || p2 < 0) throw error("arrangement: bigon runs are not single paths");
      const bool a1 = paths_[p1].layer == active, a2 = paths_[p2].layer == active;
      if (a1 == a2) continue;  // neither or both in the active layer
      Bigon big;
      auto to_halves = [&](const std::vector<const WalkPiece*>& run) {
        std::vector<std::pair<int, int>> halves;
        for (auto* piece : run) {
          const int eid = sub.chord_seg_base[piece->chord] + piece->seg;
          halves.push_back({2 * eid + (piece->forward ? 0 : 1), piece->sigma});
        }
        return halves;
      };
      if (a1) {
        big.crossing_x = x;
        big.crossing_y = y;
        big.run_a = to_halves(r1);
        big.run_b = to_halves(r2);
      } else {
        big.crossing_x = y;
        big.crossing_y = x;
        big.run_a = to_halves(r2);
        big.run_b = to_halves(r1);
      }
      out.push_back(std::move(big));
    }
    return out;
  }

  std::optional<Bigon> find_bigon(const Sub& sub, const Analysis& an, int active) const {
    auto bigs = all_bigons(sub, an, active);
    if (bigs.empty()) return std::nullopt;
    return bigs.front();
  }

  // `choice` selects among the currently available bigon faces, so callers
  // can vary the removal order.
  bool remove_one_bigon(int active, int choice = 0) {
    Sub sub = subdivide();
    const int before = static_cast<int>(sub.crossings.size());
    if (before == 0) return false;
    Analysis an = analyze(sub);
    auto bigs = all_bigons(sub, an, active);
    if (bigs.empty()) return false;
    std::optional<Bigon> big = bigs[static_cast<size_t>(choice) % bigs.size()];

    // Active run: path, traversal direction, teleport ports, cut chords.
    const Chord& a_first = sub.chords[sub.edges[big->run_a.front().first / 2].chord];
    const Chord& a_last = sub.chords[sub.edges[big->run_a.back().first / 2].chord];
    const int pa = a_first.path;
    const bool a_forward = big->run_a.front().first % 2 == 0;
    for (auto& [h, sg] : big->run_a)
      if ((h % 2 == 0) != a_forward)
        throw error("arrangement: active run changes direction");
    const int m_a = static_cast<int>(paths_[pa].ports.size());
    // Path positions to remove: strictly between the outside attachment
    // points, one teleport per consecutive piece pair.  The run is a
    // contiguous sub-path, so its end chords coincide only when it wraps
    // the whole path and every port goes; path_pos arithmetic cannot tell
    // that wrap from an empty interior.
    const int splice_count = static_cast<int>(big->run_a.size()) - 1;
    const int splice_after = a_forward ? a_first.path_pos : a_last.path_pos;

    // Passive run: per teleport, the pierced port and insertion data.  The
    // run has q teleports between its q+1 pieces; the subdivision's node
    // keys give the exact wall sides in both charts, which stays valid on
    // self-glued edges.
    struct NewPort {
      int b_port = -1;
      int edge = -1;
      int side_exit = -1;   // wall side in the arriving piece's chart
      int side_entry = -1;  // wall side in the departing piece's chart
      bool insert_before = false;
    };
    std::vector<NewPort> inserts;
    for (size_t i = 0; i + 1 < big->run_b.size(); ++i) {
      const auto [h, sg] = big->run_b[i];
      const int h2 = big->run_b[i + 1].first;
      const int to_node = sub.to_of(h);
      const int from_node = sub.from_of(h2);
      if (to_node < sub.corner_end || to_node >= sub.port_end ||
          from_node < sub.corner_end || from_node >= sub.port_end)
        throw error("arrangement: passive run teleport is not a port");
      const auto [s_exit, p_exit] = sub.port_key[to_node - sub.corner_end];
      const auto [s_entry, p_entry] = sub.port_key[from_node - sub.corner_end];
      (void)p_entry;
      NewPort np;
      np.edge = cell_->edge_of_side(s_exit);
      if (cell_->edge_of_side(s_entry) != np.edge)
        throw error("arrangement: teleport spans two edges");
      np.side_exit = s_exit;
      np.side_entry = s_entry;
      {
        const int w = static_cast<int>(edge_ports_[np.edge].size());
        const int r = cell_->edge_sides(np.edge)[0] == s_exit
                          ? p_exit
                          : (cell_->gluing(s_exit).aligned ? p_exit : w - 1 - p_exit);
        np.b_port = edge_ports_[np.edge][r];
      }
      // The bigon lies on the sigma side of the arriving piece; sigma=+1
      // puts it on the increasing-position flank of the exit side, so the
      // replacement strand goes on the other flank.
      bool before = sg == 1;
      if (cell_->edge_sides(np.edge)[0] != s_exit && !cell_->gluing(s_exit).aligned)
        before = !before;
      np.insert_before = before;
      inserts.push_back(np);
    }

    const auto saved_ports = ports_;
    const auto saved_paths = paths_;
    const auto saved_edges = edge_ports_;
    for (int attempt = 0; attempt < 2; ++attempt) {
      const bool flip = attempt == 1;
      // Delete the active run's teleports.
      std::vector<int> doomed;
      for (int i = 0; i < splice_count; ++i)
        doomed.push_back(paths_[pa].ports[(splice_after + 1 + i) % m_a]);
      for (int id : doomed) {
        auto& list = edge_ports_[ports_[id].edge];
        list.erase(std::find(list.begin(), list.end(), id));
        ports_[id].alive = false;
      }
      // Create replacements along the passive run.  In path order the
      // replacement travels x to y, which runs against the passive walk
      // direction (y to x); so a path parallel to the walk consumes the
      // teleports reversed and crosses each edge back into the arriving
      // chart, and an antiparallel path does the opposite.
      std::vector<int> fresh;
      for (const NewPort& np : inserts) {
        const int id = static_cast<int>(ports_.size());
        const int side_in = a_forward ? np.side_exit : np.side_entry;
        ports_.push_back({pa, np.edge, side_in, true});
        auto& list = edge_ports_[np.edge];
        const auto it = std::find(list.begin(), list.end(), np.b_port);
        if (it == list.end()) throw error("arrangement: passive port vanished");
        const bool before = np.insert_before != flip;
        list.insert(before ? it : it + 1, id);
        fresh.push_back(id);
      }
      if (a_forward) std::reverse(fresh.begin(), fresh.end());
      // Splice the path.  A whole-path run leaves only the replacements:
      // the surviving active material is the mid-chord segment between the
      // two crossings, which touches no port.
      std::vector<int> np_list;
      if (splice_count == m_a) {
        np_list = fresh;
      } else {
        for (int i = 0; i < m_a; ++i) {
          const int idx = (splice_after + i) % m_a;
          if (i == 0) {
            np_list.push_back(paths_[pa].ports[idx]);
            for (int id : fresh) np_list.push_back(id);
          } else if (i > splice_count) {
            np_list.push_back(paths_[pa].ports[idx]);
          }
        }
      }
      paths_[pa].ports = np_list;

      bool ok = true;
      try {
        validate();
        if (crossing_count() != before - 2) ok = false;
      } catch (const error&) {
        ok = false;
      }
      if (ok) return true;
      ports_ = saved_ports;
      paths_ = saved_paths;
      edge_ports_ = saved_edges;
    }
    throw error("arrangement: bigon surgery failed in both orientations");
  }
};

}  // namespace ncc
