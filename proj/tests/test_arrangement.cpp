#include "ncc/arrangement.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace ncc;

namespace {

CornerVec from_edges(const Cellulation& cell, const std::vector<int>& ew) {
  CornerVec x = corners_from_edge_weights(cell, ew);
  REQUIRE(!x.empty());
  return x;
}

// All connected matched curves with interior edge weight sum <= cap.
std::vector<CornerVec> small_curves(const Cellulation& cell, int cap) {
  const auto& interior = cell.interior_edges();
  std::vector<CornerVec> out;
  std::vector<int> ew(cell.edge_count(), 0);
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i == interior.size()) {
      CornerVec x = corners_from_edge_weights(cell, ew);
      if (x.empty() || total_weight(x) == 0) return;
      if (!satisfies_matching(cell, x)) return;
      if (is_connected_curve(cell, x)) out.push_back(x);
      return;
    }
    for (int w = 0; w <= left; ++w) {
      ew[interior[i]] = w;
      self(self, i + 1, left - w);
    }
    ew[interior[i]] = 0;
  };
  rec(rec, 0, cap);
  return out;
}

int chi_sum(const Arrangement::Analysis& an) {
  int s = 0;
  for (const auto& r : an.regions) s += r.chi;
  return s;
}

}  // namespace

TEST_CASE("empty arrangement describes the whole surface") {
  for (SurfaceSig sig : {SurfaceSig{1, 2}, SurfaceSig{2, 1}, SurfaceSig{3, 0}}) {
    const Cellulation& cell = cellulation_for(sig);
    Arrangement arr(cell);
    arr.validate();
    const auto an = arr.analyze_regions();
    REQUIRE(an.regions.size() == 1);
    const auto& reg = an.regions[0];
    CHECK(reg.chi == sig.euler_characteristic());
    CHECK_FALSE(reg.orientable);
    CHECK(reg.walks.size() == static_cast<size_t>(sig.boundary));
    std::vector<int> labels;
    for (const auto& w : reg.walks) {
      REQUIRE(!w.pieces.empty());
      CHECK(w.touches_boundary);
      CHECK(w.crossing_corners == 0);
      labels.push_back(w.pieces[0].boundary);
      for (const auto& p : w.pieces) {
        CHECK(p.kind == Arrangement::WalkPiece::SurfaceBoundary);
        CHECK(p.boundary == w.pieces[0].boundary);
      }
    }
    std::sort(labels.begin(), labels.end());
    for (int b = 0; b < sig.boundary; ++b) CHECK(labels[b] == b);
  }
}

TEST_CASE("cutting the projective plane along its core leaves a disk") {
  const Cellulation& cell = cellulation_for({1, 0});
  Arrangement arr(cell);
  // The core crosses the self-glued band edge once and nothing else.
  std::vector<int> w(cell.edge_count(), 0);
  for (int e = 0; e < cell.edge_count(); ++e) {
    const auto& sides = cell.edge_sides(e);
    if (side_tri(sides[0]) == 0 && side_tri(sides[1]) == 0) w[e] = 1;
  }
  const CornerVec core = from_edges(cell, w);
  REQUIRE(total_weight(core) == 1);
  const auto paths = arr.add_normal_multicurve(core, 0);
  REQUIRE(paths.size() == 1);
  REQUIRE(arr.path(paths[0]).ports.size() == 1);

  const auto an = arr.analyze_regions();
  REQUIRE(an.crossings.empty());
  REQUIRE(an.regions.size() == 1);
  const auto& reg = an.regions[0];
  CHECK(reg.chi == 1);
  CHECK(reg.orientable);
  REQUIRE(reg.walks.size() == 1);
  const auto& walk = reg.walks[0];
  CHECK_FALSE(walk.touches_boundary);
  CHECK(walk.crossing_corners == 0);
  // The disk boundary double covers the one-sided core: its single chord
  // is traversed twice, once per side.
  REQUIRE(walk.pieces.size() == 2);
  REQUIRE(walk.path_tags.size() == 1);
  const auto& [path, plus, minus] = walk.path_tags[0];
  CHECK(path == paths[0]);
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("self-intersection via two layers matches sidedness") {
  int surgeries = 0;
  for (SurfaceSig sig : {SurfaceSig{1, 0}, SurfaceSig{1, 2}, SurfaceSig{2, 1}}) {
    const Cellulation& cell = cellulation_for(sig);
    for (const CornerVec& x : small_curves(cell, 3)) {
      const auto comps = trace_components(cell, x);
      REQUIRE(comps.size() == 1);
      Arrangement arr(cell);
      arr.add_normal_multicurve(x, 0);
      arr.add_normal_multicurve(x, 1);
      const int before = arr.crossing_count_between(0, 1);
      surgeries += arr.minimize_crossings(1);
      arr.validate();
      const int after = arr.crossing_count_between(0, 1);
      INFO("surface " << sig.str() << " weight " << total_weight(x));
      CHECK((before - after) % 2 == 0);
      CHECK(after == (comps[0].one_sided ? 1 : 0));
    }
  }
  // The sweep must actually exercise bigon removal.
  CHECK(surgeries > 0);
}

TEST_CASE("single-curve cut preserves euler characteristic") {
  for (SurfaceSig sig : {SurfaceSig{1, 2}, SurfaceSig{2, 1}}) {
    const Cellulation& cell = cellulation_for(sig);
    for (const CornerVec& x : small_curves(cell, 3)) {
      Arrangement arr(cell);
      arr.add_normal_multicurve(x, 0);
      const auto an = arr.analyze_regions();
      REQUIRE(an.crossings.empty());
      INFO("surface " << sig.str() << " weight " << total_weight(x));
      CHECK(chi_sum(an) == sig.euler_characteristic());
      REQUIRE(!an.regions.empty());
      REQUIRE(an.regions.size() <= 2);
      // Every region boundary circle along the curve carries a tag.
      for (const auto& reg : an.regions)
        for (const auto& w : reg.walks)
          for (const auto& [p, plus, minus] : w.path_tags) CHECK((plus || minus));
    }
  }
}

TEST_CASE("normal overlays start crossing-free within a layer") {
  const Cellulation& cell = cellulation_for({2, 1});
  const auto curves = small_curves(cell, 2);
  REQUIRE(!curves.empty());
  for (const CornerVec& x : curves) {
    Arrangement arr(cell);
    arr.add_normal_multicurve(x, 0);
    CHECK(arr.crossing_count() == 0);
    CHECK_NOTHROW(arr.validate());
  }
}
