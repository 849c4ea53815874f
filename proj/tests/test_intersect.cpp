#include "ncc/intersect.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ncc;

TEST_CASE("intersection numbers are symmetric and match disjointness") {
  bool some_edge = false;
  for (SurfaceSig sig : {SurfaceSig{1, 2}, SurfaceSig{2, 1}, SurfaceSig{3, 0}}) {
    const auto census = enumerate_classes(sig, 6);
    for (size_t i = 0; i < census.size(); ++i)
      for (size_t j = i + 1; j < census.size(); ++j) {
        const int ij = geometric_intersection(census[i], census[j]);
        const int ji = geometric_intersection(census[j], census[i]);
        INFO(sig.str() << " pair " << i << "," << j);
        CHECK(ij == ji);
        CHECK(ij >= 0);
        CHECK(disjoint(census[i], census[j]) == (ij == 0));
        if (ij == 0) some_edge = true;
      }
  }
  CHECK(some_edge);
}

TEST_CASE("fast path agrees with the oracle on small censuses") {
  for (SurfaceSig sig : {SurfaceSig{1, 2}, SurfaceSig{2, 1}, SurfaceSig{3, 0}}) {
    const auto census = enumerate_classes(sig, 6);
    for (size_t i = 0; i < census.size(); ++i)
      for (size_t j = i + 1; j < census.size(); ++j) {
        INFO(sig.str() << " pair " << i << "," << j);
        CHECK(geometric_intersection(census[i], census[j]) ==
              oracle_intersection(census[i], census[j], 2));
      }
  }
}

TEST_CASE("oracle is symmetric on the full (1,2) census") {
  const auto census = enumerate_classes({1, 2}, 6);
  for (size_t i = 0; i < census.size(); ++i)
    for (size_t j = i + 1; j < census.size(); ++j)
      CHECK(oracle_intersection(census[i], census[j], 2) ==
            oracle_intersection(census[j], census[i], 2));
}

TEST_CASE("intersection matrix mirrors pairwise calls") {
  const auto census = enumerate_classes({3, 0}, 5);
  REQUIRE(census.size() >= 2);
  const auto m = intersection_matrix(census);
  REQUIRE(m.size() == census.size());
  for (size_t i = 0; i < census.size(); ++i) {
    CHECK(m[i][i] == 0);
    for (size_t j = i + 1; j < census.size(); ++j) {
      CHECK(m[i][j] == m[j][i]);
      CHECK(m[i][j] == geometric_intersection(census[i], census[j]));
    }
  }
}

TEST_CASE("intersection argument checking") {
  const auto c21 = enumerate_classes({2, 1}, 6);
  const auto c30 = enumerate_classes({3, 0}, 4);
  REQUIRE(c21.size() >= 2);
  REQUIRE(!c30.empty());
  CHECK_THROWS_AS(geometric_intersection(c21[0], c21[0]), same_class);
  CHECK_THROWS_AS(disjoint(c21[0], c21[0]), same_class);
  CHECK_THROWS_AS(oracle_intersection(c21[0], c21[0]), same_class);
  CHECK_THROWS_AS(geometric_intersection(c21[0], c30[0]), cell_mismatch);
  CHECK_THROWS_AS(disjoint(c21[0], c30[0]), cell_mismatch);

  const auto heavy = enumerate_classes({2, 1}, 8);
  REQUIRE(heavy.size() >= 2);
  const CurveClass& h1 = heavy[heavy.size() - 1];
  const CurveClass& h2 = heavy[heavy.size() - 2];
  REQUIRE(total_weight(h1.weights) + total_weight(h2.weights) > 12);
  CHECK_THROWS_AS(oracle_intersection(h1, h2, 1), budget_exceeded);
  CHECK_NOTHROW(oracle_intersection(h1, h2, 3));
}
