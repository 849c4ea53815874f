#include "ncc/surface.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ncc;

TEST_CASE("signature arithmetic") {
  SurfaceSig klein{2, 0};
  CHECK(klein.euler_characteristic() == 0);
  CHECK(klein.complexity() == 2);
  CHECK(klein.closed());
  CHECK(SurfaceSig{3, 2}.euler_characteristic() == -3);
  CHECK_THROWS_AS(SurfaceSig(0, 1), error);
  CHECK_THROWS_AS(SurfaceSig(1, -1), error);
}

TEST_CASE("dimension range of maximal systems") {
  auto r50 = dimension_range({5, 0});
  CHECK(r50.min_dim == 4);
  CHECK(r50.max_dim == 6);
  auto r21 = dimension_range({2, 1});
  CHECK(r21.min_dim == 0);
  CHECK(r21.max_dim == 1);
  auto r30 = dimension_range({3, 0});
  CHECK(r30.min_dim == 1);
  CHECK(r30.max_dim == 2);
  auto r41 = dimension_range({4, 1});
  CHECK(r41.min_dim == 3);
  CHECK(r41.max_dim == 5);

  SECTION("inapplicable signatures") {
    CHECK_THROWS_AS(dimension_range({1, 0}), error);
    CHECK_THROWS_AS(dimension_range({1, 5}), error);
    CHECK_THROWS_AS(dimension_range({2, 0}), error);
  }

  SECTION("width grows with genus only") {
    for (int g = 2; g <= 8; ++g) {
      for (int n = 0; n <= 6; ++n) {
        if (g == 2 && n == 0) continue;
        auto r = dimension_range({g, n});
        CHECK(r.width() == g / 2);
        CHECK(r.contains(r.min_dim));
        CHECK_FALSE(r.contains(r.max_dim + 1));
      }
    }
  }
}

TEST_CASE("rigidity case split") {
  CHECK(rigidity_case({1, 0}) == RigidityCase::Covered);
  CHECK(rigidity_case({1, 1}) == RigidityCase::Covered);
  CHECK(rigidity_case({2, 0}) == RigidityCase::Covered);
  CHECK(rigidity_case({2, 1}) == RigidityCase::Covered);
  CHECK(rigidity_case({3, 0}) == RigidityCase::Covered);
  CHECK(rigidity_case({1, 4}) == RigidityCase::Covered);
  CHECK(rigidity_case({5, 3}) == RigidityCase::Covered);

  CHECK(rigidity_case({2, 2}) == RigidityCase::OpenCase);
  CHECK(rigidity_case({1, 3}) == RigidityCase::OpenCase);
  CHECK(rigidity_case({3, 1}) == RigidityCase::OpenCase);
  CHECK(rigidity_case({4, 0}) == RigidityCase::OpenCase);

  CHECK(rigidity_case({1, 2}) == RigidityCase::Excluded);
  CHECK(rigidity_case({3, 0}) != RigidityCase::Excluded);

  SECTION("every signature lands in exactly one case") {
    for (int g = 1; g <= 9; ++g)
      for (int n = 0; n <= 9; ++n) {
        auto c = rigidity_case({g, n});
        bool covered = c == RigidityCase::Covered;
        bool open = c == RigidityCase::OpenCase;
        bool excluded = c == RigidityCase::Excluded;
        CHECK((covered + open + excluded) == 1);
        if (g + n >= 5) CHECK(covered);
      }
  }
}

TEST_CASE("pants counts") {
  CHECK(pants_count({2, 1}) == 1);
  CHECK(pants_count({3, 0}) == 1);
  CHECK(pants_count({5, 0}) == 3);
  CHECK(pants_count({1, 2}) == 1);
  CHECK(pants_count({7, 0}) == 5);
  CHECK_THROWS_AS(pants_count({1, 0}), error);
  CHECK_THROWS_AS(pants_count({1, 1}), error);
  CHECK_THROWS_AS(pants_count({2, 0}), error);

  SECTION("side budget identity") {
    // Every pants decomposition spends its curve sides against this budget:
    // 2 * (interior curves) + (curves meeting one boundary) adds up to it.
    CHECK(pants_side_budget({2, 1}) == 2);
    CHECK(pants_side_budget({3, 0}) == 3);
    CHECK(pants_side_budget({5, 0}) == 9);
    for (int g = 1; g <= 8; ++g)
      for (int n = 0; n <= 8; ++n) {
        SurfaceSig sig{g, n};
        if (sig.euler_characteristic() >= 0) continue;
        CHECK(pants_side_budget(sig) == 3 * pants_count(sig) - n);
      }
  }
}

TEST_CASE("enumeration cap") {
  CHECK(SurfaceSig{4, 4}.within_cap());
  CHECK_FALSE(SurfaceSig{5, 4}.within_cap());
  CHECK_NOTHROW(SurfaceSig{8, 0}.require_within_cap());
  CHECK_THROWS_AS(SurfaceSig(5, 4).require_within_cap(), cap_exceeded);
  CHECK_NOTHROW(SurfaceSig(5, 4).require_within_cap(12));
}
