#include "ncc/figures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace ncc;

namespace {

int one_sided_count(const PantsDecomposition& pd) {
  int k = 0;
  for (const auto& c : pd.curves) k += c.sidedness == Sidedness::OneSided;
  return k;
}

}  // namespace

TEST_CASE("fig1 extremes hit both ends of the dimension range") {
  for (int g : {3, 5}) {
    const SurfaceSig sig{g, 0};
    const Lemma2Range range = lemma2_range(sig);
    const FigureFixture lo = figure_fixture("fig1-min", sig);
    const FigureFixture hi = figure_fixture("fig1-max", sig);
    INFO(sig.str());
    CHECK(static_cast<int>(lo.pants.curves.size()) == range.a + 1);
    CHECK(static_cast<int>(hi.pants.curves.size()) == range.b + 1);
    CHECK(one_sided_count(lo.pants) == 1);
    CHECK(one_sided_count(hi.pants) == g);
    CHECK_FALSE(is_top_dimensional(lo.pants));
    CHECK(is_top_dimensional(hi.pants));
    CHECK(lo.curve("a").sidedness == Sidedness::OneSided);
    CHECK(hi.curve("a" + std::to_string(g)).sidedness == Sidedness::OneSided);
    CHECK(static_cast<int>(lo.members.size()) == range.a + 1);
    CHECK(static_cast<int>(hi.members.size()) == range.b + 1);
    CHECK(lo.probes.empty());
  }
}

TEST_CASE("genus seven carries the eight and eleven curve decompositions") {
  const SurfaceSig sig{7, 0};
  const FigureFixture lo = figure_fixture("fig1-min", sig);
  CHECK(lo.pants.curves.size() == 8);
  CHECK(lo.weight_bound == 14);
  CHECK(one_sided_count(lo.pants) == 1);
  CHECK(lo.pants.pants.size() == 5);

  const FigureFixture hi = figure_fixture("fig1-max", sig);
  CHECK(hi.pants.curves.size() == 11);
  CHECK(one_sided_count(hi.pants) == 7);
  CHECK(hi.pants.pants.size() == 5);
  CHECK(is_top_dimensional(hi.pants));
}

TEST_CASE("fig2 probes cross the last chain curve and miss the previous one") {
  const FigureFixture f = figure_fixture("fig2", {1, 4});
  CHECK(f.pants.curves.size() == 3);
  CHECK(f.curve("a").sidedness == Sidedness::OneSided);
  CHECK(f.curve("x1").sidedness == Sidedness::TwoSided);
  CHECK(f.curve("x2").sidedness == Sidedness::TwoSided);
  for (const char* p : {"z", "t"}) {
    INFO(p);
    CHECK(geometric_intersection(f.curve(p), f.curve("x2")) > 0);
    CHECK(geometric_intersection(f.curve(p), f.curve("x1")) == 0);
  }
  CHECK_FALSE(f.curve("z") == f.curve("t"));

  const FigureFixture g = figure_fixture("fig2", {1, 3});
  CHECK(g.pants.curves.size() == 2);
  CHECK(geometric_intersection(g.curve("z"), g.curve("x1")) > 0);
  CHECK(geometric_intersection(g.curve("z"), g.curve("a")) == 0);
  CHECK(geometric_intersection(g.curve("t"), g.curve("x1")) > 0);
  CHECK(geometric_intersection(g.curve("t"), g.curve("a")) == 0);
}

TEST_CASE("fig3 pins a crosscap touching only its partner and one chain curve") {
  const FigureFixture f = figure_fixture("fig3-probe", {2, 3});
  CHECK(f.pants.curves.size() == 4);
  CHECK(is_top_dimensional(f.pants));
  CHECK(f.curve("a").sidedness == Sidedness::OneSided);
  CHECK(f.curve("b").sidedness == Sidedness::OneSided);
  CHECK(f.curve("x1").sidedness == Sidedness::TwoSided);
  CHECK(f.curve("x2").sidedness == Sidedness::TwoSided);

  CHECK(adjacency(f.pants, f.curve("a"), f.curve("b")));
  CHECK(adjacency(f.pants, f.curve("a"), f.curve("x1")));
  CHECK_FALSE(adjacency(f.pants, f.curve("a"), f.curve("x2")));

  for (const char* p : {"z", "t"}) {
    INFO(p);
    CHECK(geometric_intersection(f.curve(p), f.curve("x2")) > 0);
    CHECK(geometric_intersection(f.curve(p), f.curve("x1")) == 0);
  }
}

TEST_CASE("fig4 pins a singly attached crosscap with nonorientable complement") {
  const FigureFixture f = figure_fixture("fig4-probe", {3, 1});
  CHECK(f.pants.curves.size() == 4);
  CHECK(is_top_dimensional(f.pants));
  const CurveClass& a = f.curve("a");
  CHECK(a.sidedness == Sidedness::OneSided);
  CHECK_FALSE(a.complement_orientable);
  int adjacent = 0;
  for (const auto& c : f.pants.curves)
    if (!(c == a) && adjacency(f.pants, a, c)) ++adjacent;
  CHECK(adjacent == 1);
  CHECK(adjacency(f.pants, a, f.curve("x")));
}

TEST_CASE("fixture searches are deterministic") {
  const FigureFixture f = figure_fixture("fig4-probe", {3, 1});
  const FigureFixture g = figure_fixture("fig4-probe", {3, 1});
  REQUIRE(f.pants.curves.size() == g.pants.curves.size());
  for (size_t i = 0; i < f.pants.curves.size(); ++i)
    CHECK(f.pants.curves[i] == g.pants.curves[i]);
  CHECK(f.members == g.members);
}

TEST_CASE("unknown names and incompatible signatures are refused") {
  CHECK_THROWS_AS(figure_fixture("fig9", {3, 0}, 6), error);
  CHECK_THROWS_AS(figure_fixture("fig1-min", {4, 0}, 6), error);
  CHECK_THROWS_AS(figure_fixture("fig1-min", {3, 2}, 6), error);
  CHECK_THROWS_AS(figure_fixture("fig2", {2, 3}, 8), error);
  CHECK_THROWS_AS(figure_fixture("fig3-probe", {2, 2}, 8), error);
  CHECK_THROWS_AS(figure_fixture("fig4-probe", {2, 1}, 8), error);
  CHECK_THROWS_AS(figure_fixture("fig4-probe", {3, 3}, 8), error);

  // Recorded defaults only cover catalogued signatures.
  CHECK_THROWS_AS(figure_fixture("fig2", {1, 5}), error);
}

TEST_CASE("a too small bound reports the missing witness") {
  CHECK_THROWS_AS(figure_fixture("fig1-max", {7, 0}, 8), pattern_unavailable);
  CHECK_THROWS_AS(figure_fixture("fig3-probe", {2, 3}, 6), pattern_unavailable);
  try {
    figure_fixture("fig3-probe", {2, 3}, 6);
  } catch (const pattern_unavailable& e) {
    CHECK(std::string(e.what()).find("weight 6") != std::string::npos);
  }
}
