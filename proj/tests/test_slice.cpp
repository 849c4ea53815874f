#include "ncc/slice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace ncc;

TEST_CASE("lemma2_range matches the closed-form table") {
  const Lemma2Range r50 = lemma2_range({5, 0});
  CHECK(r50.r == 2);
  CHECK(r50.a == 4);
  CHECK(r50.b == 6);
  const Lemma2Range r21 = lemma2_range({2, 1});
  CHECK(r21.a == 0);
  CHECK(r21.b == 1);
  const Lemma2Range r30 = lemma2_range({3, 0});
  CHECK(r30.a == 1);
  CHECK(r30.b == 2);
  const Lemma2Range r70 = lemma2_range({7, 0});
  CHECK(r70.a == 7);
  CHECK(r70.b == 10);

  for (int g = 2; g <= 8; ++g)
    for (int n = 0; n <= 6; ++n) {
      if (g == 2 && n == 0) continue;
      const Lemma2Range r = lemma2_range({g, n});
      INFO("(" << g << "," << n << ")");
      CHECK(r.b - r.a == r.r);
      CHECK(r.a <= r.b);
    }

  CHECK_THROWS_AS(lemma2_range({1, 0}), lemma2_inapplicable);
  CHECK_THROWS_AS(lemma2_range({1, 4}), lemma2_inapplicable);
  CHECK_THROWS_AS(lemma2_range({2, 0}), lemma2_inapplicable);
}

TEST_CASE("slice edges are exactly the disjoint census pairs") {
  const ComplexSlice s = build_slice({2, 1}, 6);
  CHECK(s.vertices == enumerate_classes({2, 1}, 6));
  const int m = static_cast<int>(s.vertices.size());
  for (int u = 0; u < m; ++u) {
    CHECK(!s.edge(u, u));
    for (int v = u + 1; v < m; ++v) {
      CHECK(s.edge(u, v) == s.edge(v, u));
      CHECK(s.edge(u, v) == disjoint(s.vertices[u], s.vertices[v]));
    }
  }
  CHECK(static_cast<int>(s.edges().size()) == s.edge_count());
}

TEST_CASE("growing the bound induces the smaller slice") {
  const ComplexSlice small = build_slice({2, 1}, 6);
  const ComplexSlice big = build_slice({2, 1}, 7);
  REQUIRE(small.vertices.size() <= big.vertices.size());
  // Census order is (weight, lex), so the small census need not be a prefix
  // of the big one; locate each vertex instead.
  std::vector<int> at;
  for (const auto& c : small.vertices) {
    const auto it = std::find(big.vertices.begin(), big.vertices.end(), c);
    REQUIRE(it != big.vertices.end());
    at.push_back(static_cast<int>(it - big.vertices.begin()));
  }
  for (size_t u = 0; u < at.size(); ++u)
    for (size_t v = u + 1; v < at.size(); ++v)
      CHECK(small.edge(static_cast<int>(u), static_cast<int>(v)) == big.edge(at[u], at[v]));
}

TEST_CASE("projective plane slices stay degenerate at every bound") {
  for (int w : {2, 5, 9}) {
    const ComplexSlice s = build_slice({1, 0}, w);
    CHECK(s.vertices.size() == 1);
    CHECK(s.edge_count() == 0);
  }
}

TEST_CASE("certified spectra at the recorded stabilized bounds") {
  struct Row {
    SurfaceSig sig;
    int limit;
    int stabilized;
    std::vector<int> dims;
  };
  const Row rows[] = {
      {{2, 1}, 8, 5, {0, 1}},
      {{3, 0}, 8, 5, {1, 2}},
      {{3, 1}, 10, 8, {2, 3}},
  };
  for (const Row& row : rows) {
    INFO(row.sig.str());
    CHECK(stabilized_bound(row.sig, 2, row.limit) == row.stabilized);
    CHECK(certified_dimension_spectrum(row.sig, row.stabilized) == row.dims);
    const Lemma2Range r = lemma2_range(row.sig);
    CHECK(row.dims.front() == r.a);
    CHECK(row.dims.back() == r.b);
  }
}

TEST_CASE("certified cliques cut to pants and satisfy the census identity") {
  for (SurfaceSig sig : {SurfaceSig{2, 1}, SurfaceSig{3, 0}, SurfaceSig{3, 1}}) {
    const int w = sig.genus + sig.boundary >= 4 ? 8 : 6;
    const ComplexSlice slice = build_slice(sig, w);
    bool any_certified = false;
    for (const auto& ms : maximal_simplices(slice)) {
      if (!ms.certified) {
        CHECK(!ms.pants.has_value());
        continue;
      }
      any_certified = true;
      REQUIRE(ms.pants.has_value());
      const PantsDecomposition& pd = *ms.pants;
      CHECK(pd.curves.size() == ms.vertices.size());
      CHECK(static_cast<int>(pd.pants.size()) == pants_count(sig));
      int k1 = 0, k2 = 0;
      for (const auto& c : pd.curves) ++(c.sidedness == Sidedness::OneSided ? k1 : k2);
      CHECK(2 * k2 + k1 == pants_side_budget(sig));
      // Adjacency is symmetric, irreflexive, and leaves no curve isolated
      // unless it is the whole decomposition.
      const size_t k = pd.curves.size();
      for (size_t i = 0; i < k; ++i) {
        CHECK(!pd.adjacent[i][i]);
        int partners = 0;
        for (size_t j = 0; j < k; ++j) {
          CHECK(pd.adjacent[i][j] == pd.adjacent[j][i]);
          if (pd.adjacent[i][j]) ++partners;
        }
        if (k > 1) CHECK(partners >= 1);
      }
    }
    CHECK(any_certified);
  }
}

TEST_CASE("top-dimensional flag follows the range maximum") {
  const int w21 = 5;
  const ComplexSlice s21 = build_slice({2, 1}, w21);
  for (const auto& ms : maximal_simplices(s21)) {
    if (!ms.certified) continue;
    CHECK(is_top_dimensional(*ms.pants) == (ms.vertices.size() == 2));
  }
  const ComplexSlice s30 = build_slice({3, 0}, 5);
  for (const auto& ms : maximal_simplices(s30)) {
    if (!ms.certified) continue;
    CHECK(is_top_dimensional(*ms.pants) == (ms.vertices.size() == 3));
  }
}

TEST_CASE("pants adjacency accessor checks membership") {
  const ComplexSlice s = build_slice({2, 1}, 5);
  std::optional<PantsDecomposition> two;
  for (const auto& ms : maximal_simplices(s))
    if (ms.certified && ms.vertices.size() == 2) two = ms.pants;
  REQUIRE(two.has_value());
  CHECK(adjacency(*two, two->curves[0], two->curves[1]));
  CHECK(adjacency(*two, two->curves[1], two->curves[0]));
  CHECK_THROWS_AS(adjacency(*two, two->curves[0], two->curves[0]), same_class);
  const auto outsider = enumerate_classes({2, 1}, 8).back();
  CHECK_THROWS_AS(adjacency(*two, two->curves[0], outsider), not_members);
}

TEST_CASE("extend_to_pants completes partial systems deterministically") {
  const PantsDecomposition from_empty = extend_to_pants({}, {2, 1}, 5);
  CHECK(!from_empty.curves.empty());
  const PantsDecomposition again = extend_to_pants({}, {2, 1}, 5);
  CHECK(again.curves == from_empty.curves);

  // A one-sided seed in (3,0) completes, and some certified 3-curve system
  // containing a one-sided class exists at the stabilized bound.
  const auto census30 = enumerate_classes({3, 0}, 5);
  std::optional<CurveClass> core;
  for (const auto& c : census30)
    if (c.sidedness == Sidedness::OneSided) {
      core = c;
      break;
    }
  REQUIRE(core.has_value());
  const PantsDecomposition seeded = extend_to_pants({*core}, {3, 0}, 5);
  CHECK(std::find(seeded.curves.begin(), seeded.curves.end(), *core) != seeded.curves.end());
  bool top_with_core = false;
  for (const auto& ms : maximal_simplices(build_slice({3, 0}, 5)))
    if (ms.certified && ms.vertices.size() == 3)
      for (int v : ms.vertices)
        if (build_slice({3, 0}, 5).vertices[v] == *core) top_with_core = true;
  CHECK(top_with_core);
}

TEST_CASE("extend_to_pants rejects bad seeds and reports truncation") {
  const auto census = enumerate_classes({2, 1}, 8);
  std::optional<std::pair<CurveClass, CurveClass>> crossing;
  for (size_t i = 0; i < census.size() && !crossing; ++i)
    for (size_t j = i + 1; j < census.size() && !crossing; ++j)
      if (!disjoint(census[i], census[j])) crossing = {census[i], census[j]};
  REQUIRE(crossing.has_value());
  CHECK_THROWS_AS(extend_to_pants({crossing->first, crossing->second}, {2, 1}, 8), not_disjoint);
  CHECK_THROWS_AS(extend_to_pants({census[0], census[0]}, {2, 1}, 8), same_class);
  // (4,1) has no certified decomposition below weight 8.
  CHECK_THROWS_AS(extend_to_pants({}, {4, 1}, 6), no_completion_within_bound);
}

TEST_CASE("one-sided classes in the (1,2) slice obey the scharlemann bound") {
  for (int w : {stabilized_bound({1, 2}, 2, 8), 8}) {
    const ComplexSlice s = build_slice({1, 2}, w);
    for (size_t i = 0; i < s.vertices.size(); ++i) {
      if (s.vertices[i].sidedness != Sidedness::OneSided) continue;
      int crossing = 0;
      for (size_t j = 0; j < s.vertices.size(); ++j)
        if (j != i && geometric_intersection(s.vertices[i], s.vertices[j]) > 0) ++crossing;
      CHECK(crossing <= 1);
    }
  }
}

TEST_CASE("clique enumeration honours its budget") {
  const ComplexSlice s = build_slice({3, 0}, 6);
  CHECK_THROWS_AS(maximal_simplices(s, 2), clique_budget_exceeded);
}
