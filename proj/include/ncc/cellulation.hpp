// Triangulated models of surfaces as generalized (Delta-complex) gluings:
// triangles with paired sides, loops and multi-edges allowed.  Each surface
// signature gets one fixed cellulation, built deterministically from its
// fundamental polygon; crosscaps appear as the orientation-reversing side
// pairings of that polygon.
//
// Side/corner conventions, used everywhere downstream:
//   corners of a triangle are 0,1,2; side s is opposite corner s and is
//   directed from corner (s+1)%3 to corner (s+2)%3.  A gluing identifies
//   two sides; `aligned` records whether the identification matches the two
//   side directions (position i -> i) or reverses them (i -> w-1-i).
//   With all triangles carrying the same reference orientation, crossing an
//   aligned gluing reverses local orientation; crossing a reversed one
//   preserves it.
#pragma once

#include "ncc/surface.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ncc {

inline int side_id(int tri, int slot) { return 3 * tri + slot; }
inline int side_tri(int side) { return side / 3; }
inline int side_slot(int side) { return side % 3; }

// Corner relabeling of a mirrored triangle: 0<->0, 1<->2.  Mirroring also
// reverses every side direction; side s maps to mirror_slot(s).
inline int mirror_slot(int s) { return s == 0 ? 0 : 3 - s; }

class Cellulation {
public:
  struct Gluing {
    int other = -1;       // partner side id, -1 for a boundary side
    bool aligned = false; // true: position i maps to i (orientation-reversing)
    int boundary = -1;    // boundary component label for boundary sides
  };

  // Builds the fixed cellulation for a signature.  The fundamental polygon
  // word is a1 a1 a2 a2 ... ag ag (x1 d1 x1^-1) ... (xn dn xn^-1) with the
  // di sides left free as boundary; the polygon is fanned out from its
  // first vertex.  The projective plane (its polygon is a 2-gon) is coned
  // from an interior vertex instead.
  explicit Cellulation(const SurfaceSig& sig) : sig_(sig) {
    struct PolySide {
      int label;     // matching pair id, or -1 for boundary
      bool forward;  // direction of the label along the polygon orientation
      int boundary;  // boundary component index for free sides
    };
    std::vector<PolySide> word;
    int label = 0;
    for (int g = 0; g < sig.genus; ++g) {
      word.push_back({label, true, -1});
      word.push_back({label, true, -1});
      ++label;
    }
    for (int b = 0; b < sig.boundary; ++b) {
      word.push_back({label, true, -1});
      word.push_back({-1, true, b});
      word.push_back({label, false, -1});
      ++label;
    }
    const int k = static_cast<int>(word.size());
    if (k == 2) {
      build_projective_plane();
    } else {
      build_fan(word);
    }
    finish();
  }

  // Raw constructor for derived complexes (covers, scratch triangulations
  // inside the mapping-class machinery).  `glue` must already be mirrored
  // consistently; finish() derives edges and vertices and validates.
  Cellulation(int tri_count, std::vector<Gluing> glue, int boundary_count)
      : sig_(SurfaceSig{1, 0}), has_sig_(false), tri_count_(tri_count),
        glue_(std::move(glue)), boundary_count_(boundary_count) {
    finish();
  }

  const SurfaceSig& sig() const {
    if (!has_sig_) throw error("cellulation has no surface signature");
    return sig_;
  }
  bool has_sig() const { return has_sig_; }

  int tri_count() const { return tri_count_; }
  int side_count() const { return 3 * tri_count_; }
  const Gluing& gluing(int side) const { return glue_[side]; }
  bool is_boundary_side(int side) const { return glue_[side].other < 0; }

  int edge_count() const { return static_cast<int>(edge_sides_.size()); }
  int interior_edge_count() const { return interior_edges_; }
  int edge_of_side(int side) const { return edge_of_side_[side]; }
  // Sides of an edge; [1] is -1 for boundary edges.
  const std::array<int, 2>& edge_sides(int e) const { return edge_sides_[e]; }
  const std::vector<int>& interior_edges() const { return interior_edge_ids_; }

  int vertex_count() const { return vertex_count_; }
  int vertex_of_corner(int tri, int corner) const { return corner_vertex_[3 * tri + corner]; }
  bool vertex_is_boundary(int v) const { return boundary_vertex_[v]; }

  // Corner sectors around the vertex at (tri, corner), in the cyclic order
  // obtained by first crossing the side at slot `first_slot` (which must be
  // adjacent to the corner).  Interior vertices only: the walk closes.
  std::vector<std::pair<int, int>> vertex_link(int tri, int corner, int first_slot) const {
    if (first_slot == corner) throw error("vertex link: slot not adjacent to corner");
    std::vector<std::pair<int, int>> out;
    int t = tri, c = corner, cross = first_slot;
    do {
      out.push_back({t, c});
      if (static_cast<int>(out.size()) > 3 * tri_count_)
        throw error("vertex link walk does not close");
      const Gluing& g = glue_[side_id(t, cross)];
      if (g.other < 0) throw error("vertex link hit the surface boundary");
      // The corner sits at the start of the crossed side iff it is the
      // (slot+1) corner; gluings match starts iff aligned.
      const bool start = c == (cross + 1) % 3;
      const int t2 = side_tri(g.other), slot2 = side_slot(g.other);
      const bool start2 = g.aligned ? start : !start;
      const int c2 = start2 ? (slot2 + 1) % 3 : (slot2 + 2) % 3;
      t = t2;
      c = c2;
      cross = (slot2 == (c2 + 1) % 3 ? c2 + 2 : c2 + 1) % 3;
    } while (!(t == tri && c == corner && cross == first_slot));
    return out;
  }

  int boundary_count() const { return boundary_count_; }

  bool orientable() const { return orientable_; }

  // Number of edges whose gluing reverses orientation; equals the crosscap
  // count for signature cellulations.
  int reversing_edge_count() const {
    int c = 0;
    for (int e = 0; e < edge_count(); ++e)
      if (edge_sides_[e][1] >= 0 && glue_[edge_sides_[e][0]].aligned) ++c;
    return c;
  }

  int euler_characteristic() const { return vertex_count_ - edge_count() + tri_count_; }

  // Orientation double cover.  Sheet 1 triangles are mirrored copies
  // (corner k of (t,1) is corner mirror_slot(k) of t), so every gluing of
  // the cover is orientation-preserving.  Triangle (t,s) has id t + s*T.
  Cellulation orientation_double_cover() const {
    const int T = tri_count_;
    std::vector<Gluing> cg(6 * T);
    int bd = 0;
    auto cover_side = [&](int t, int slot, int sheet) {
      return side_id(t + sheet * T, sheet == 0 ? slot : mirror_slot(slot));
    };
    for (int s = 0; s < side_count(); ++s) {
      const int t = side_tri(s), sl = side_slot(s);
      const Gluing& g = glue_[s];
      if (g.other < 0) {
        for (int sheet = 0; sheet < 2; ++sheet) {
          Gluing& out = cg[cover_side(t, sl, sheet)];
          out.other = -1;
          out.boundary = bd;  // labels are fresh; count is what matters
        }
        bd += 2;
        continue;
      }
      const int t2 = side_tri(g.other), sl2 = side_slot(g.other);
      for (int sheet = 0; sheet < 2; ++sheet) {
        const int target_sheet = g.aligned ? 1 - sheet : sheet;
        Gluing& out = cg[cover_side(t, sl, sheet)];
        out.other = cover_side(t2, sl2, target_sheet);
        out.aligned = false;  // all cover gluings preserve orientation
      }
    }
    // Boundary labels: renumber 0..(components-1) is done lazily; the cover
    // is only used for lifting curves, where labels are irrelevant.
    return Cellulation(2 * T, std::move(cg), bd);
  }

private:
  SurfaceSig sig_;
  bool has_sig_ = true;
  int tri_count_ = 0;
  std::vector<Gluing> glue_;
  int boundary_count_ = 0;

  std::vector<int> edge_of_side_;
  std::vector<std::array<int, 2>> edge_sides_;
  std::vector<int> interior_edge_ids_;
  int interior_edges_ = 0;
  std::vector<int> corner_vertex_;
  int vertex_count_ = 0;
  std::vector<bool> boundary_vertex_;
  bool orientable_ = false;

  void glue_pair(int side_a, int side_b, bool aligned) {
    glue_[side_a] = {side_b, aligned, -1};
    glue_[side_b] = {side_a, aligned, -1};
  }

  void build_projective_plane() {
    // Moebius band from one triangle (sides 1 and 2 glued aligned, i.e.
    // with an orientation reversal) capped off with a cone disk from the
    // other (sides 1 and 2 glued reversed).  The band's core crosses the
    // self-glued edge once, so the minimal essential curve has weight 1.
    tri_count_ = 2;
    glue_.assign(6, Gluing{});
    glue_pair(side_id(0, 1), side_id(0, 2), true);
    glue_pair(side_id(1, 1), side_id(1, 2), false);
    glue_pair(side_id(0, 0), side_id(1, 0), false);
    boundary_count_ = 0;
  }

  template <typename Word>
  void build_fan(const Word& word) {
    const int k = static_cast<int>(word.size());
    tri_count_ = k - 2;
    glue_.assign(3 * tri_count_, Gluing{});
    // Triangle i = (p0, p_{i+1}, p_{i+2}).  Polygon side j sits on:
    //   j = 0    -> triangle 0, slot 2   (directed p0 -> p1)
    //   0<j<k-1  -> triangle j-1, slot 0 (directed p_j -> p_{j+1})
    //   j = k-1  -> triangle k-3, slot 1 (directed p_{k-1} -> p0)
    // All three carry the polygon's own direction, so a pairing of polygon
    // sides with label directions (f1, f2) is aligned iff f1 == f2.
    auto poly_side = [&](int j) {
      if (j == 0) return side_id(0, 2);
      if (j == k - 1) return side_id(k - 3, 1);
      return side_id(j - 1, 0);
    };
    // Fan diagonals p0-p_j shared by triangles j-2 (slot 1) and j-1 (slot 2),
    // anti-aligned (both triangles keep the plane's orientation).
    for (int j = 2; j <= k - 2; ++j) glue_pair(side_id(j - 2, 1), side_id(j - 1, 2), false);
    std::vector<int> first_of_label(word.size(), -1);
    for (int j = 0; j < k; ++j) {
      if (word[j].label < 0) {
        glue_[poly_side(j)].other = -1;
        glue_[poly_side(j)].boundary = word[j].boundary;
        continue;
      }
      int& first = first_of_label[word[j].label];
      if (first < 0) {
        first = j;
      } else {
        glue_pair(poly_side(first), poly_side(j), word[first].forward == word[j].forward);
      }
    }
    boundary_count_ = 0;
    for (int j = 0; j < k; ++j)
      if (word[j].label < 0) ++boundary_count_;
  }

  void finish() {
    // Edges.
    edge_of_side_.assign(side_count(), -1);
    for (int s = 0; s < side_count(); ++s) {
      if (edge_of_side_[s] >= 0) continue;
      const int e = static_cast<int>(edge_sides_.size());
      if (glue_[s].other < 0) {
        edge_sides_.push_back({s, -1});
        edge_of_side_[s] = e;
      } else {
        const int o = glue_[s].other;
        if (glue_[o].other != s || glue_[o].aligned != glue_[s].aligned)
          throw error("cellulation gluing tables are not mutual");
        edge_sides_.push_back({s, o});
        edge_of_side_[s] = edge_of_side_[o] = e;
        interior_edge_ids_.push_back(e);
      }
    }
    interior_edges_ = static_cast<int>(interior_edge_ids_.size());

    // Vertex classes via union-find over corners.
    std::vector<int> parent(3 * tri_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int s = 0; s < side_count(); ++s) {
      const Gluing& g = glue_[s];
      if (g.other < 0 || g.other < s) continue;
      const int t = side_tri(s), sl = side_slot(s);
      const int t2 = side_tri(g.other), sl2 = side_slot(g.other);
      const int start = 3 * t + (sl + 1) % 3, end = 3 * t + (sl + 2) % 3;
      const int start2 = 3 * t2 + (sl2 + 1) % 3, end2 = 3 * t2 + (sl2 + 2) % 3;
      if (g.aligned) {
        unite(start, start2);
        unite(end, end2);
      } else {
        unite(start, end2);
        unite(end, start2);
      }
    }
    corner_vertex_.assign(3 * tri_count_, -1);
    vertex_count_ = 0;
    for (int c = 0; c < 3 * tri_count_; ++c) {
      const int root = find(c);
      if (corner_vertex_[root] < 0) corner_vertex_[root] = vertex_count_++;
      corner_vertex_[c] = corner_vertex_[root];
    }
    boundary_vertex_.assign(vertex_count_, false);
    for (int s = 0; s < side_count(); ++s) {
      if (glue_[s].other >= 0) continue;
      const int t = side_tri(s), sl = side_slot(s);
      boundary_vertex_[corner_vertex_[3 * t + (sl + 1) % 3]] = true;
      boundary_vertex_[corner_vertex_[3 * t + (sl + 2) % 3]] = true;
    }

    // Orientability: try to 2-color triangles so that every interior gluing
    // crossed keeps colors equal iff it is orientation-preserving.
    std::vector<int> color(tri_count_, -1);
    orientable_ = true;
    for (int seed = 0; seed < tri_count_; ++seed) {
      if (color[seed] >= 0) continue;
      color[seed] = 0;
      std::vector<int> stack{seed};
      while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int sl = 0; sl < 3; ++sl) {
          const Gluing& g = glue_[side_id(t, sl)];
          if (g.other < 0) continue;
          const int t2 = side_tri(g.other);
          const int want = g.aligned ? 1 - color[t] : color[t];
          if (color[t2] < 0) {
            color[t2] = want;
            stack.push_back(t2);
          } else if (color[t2] != want) {
            orientable_ = false;
          }
        }
      }
    }

    if (has_sig_) validate_signature();
  }

  void validate_signature() {
    if (euler_characteristic() != sig_.euler_characteristic())
      throw error("cellulation euler characteristic mismatch for " + sig_.str());
    if (orientable_) throw error("cellulation for " + sig_.str() + " came out orientable");
    if (reversing_edge_count() != sig_.genus)
      throw error("cellulation for " + sig_.str() + " has wrong crosscap gluing count");
    if (boundary_count_ != sig_.boundary)
      throw error("cellulation boundary count mismatch for " + sig_.str());
  }
};

// The shared cellulation for a signature.  Deterministic: repeated calls
// return references to the same object.
inline const Cellulation& cellulation_for(const SurfaceSig& sig) {
  static std::mutex mu;
  static auto* cache = new std::vector<std::pair<SurfaceSig, std::unique_ptr<Cellulation>>>();
  std::lock_guard<std::mutex> lock(mu);
  for (auto& entry : *cache)
    if (entry.first == sig) return *entry.second;
  cache->emplace_back(sig, std::make_unique<Cellulation>(sig));
  return *cache->back().second;
}

}  // namespace ncc
