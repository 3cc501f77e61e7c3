#include <gtest/gtest.h>

#include <random>

#include "model_data.hpp"
#include "tropiscad/complex.hpp"

namespace {

using namespace tropiscad;
using models::rows;

TEST(FromPointsAndCells, Genus2CurveIsAValidOneDimensionalComplex) {
  PolyhedralComplex c = models::genus2_curve();
  EXPECT_EQ(c.ambient_dim(), 3u);
  EXPECT_EQ(c.points().size(), 18u);
  EXPECT_EQ(c.num_vertices(), 14u);
  EXPECT_EQ(c.num_cells(), 27u);
  EXPECT_EQ(c.dim(), 1);
  EXPECT_TRUE(c.is_pure());
  EXPECT_FALSE(c.bounded());
  EXPECT_NO_THROW(c.validate());
}

TEST(FromPointsAndCells, SingleVertex) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0, 0}}), {{0}});
  EXPECT_EQ(c.num_cells(), 1u);
  EXPECT_EQ(c.dim(), 0);
  EXPECT_TRUE(c.bounded());
}

TEST(FromPointsAndCells, RedundantCellIsAbsorbed) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}), {{0, 1}, {0, 1, 2}},
                                                    {}, std::vector<long>{3, 1});
  ASSERT_EQ(c.num_cells(), 1u);
  EXPECT_EQ(c.maximal_cells()[0], (Cell{0, 1, 2}));
  EXPECT_EQ(c.weights(), std::vector<long>{1});
}

TEST(FromPointsAndCells, NormalizesAndDeduplicates) {
  // (2, 2, 4) is the vertex (1, 2); the ray (0, 3, 0) is e1; a non-extreme point is pruned.
  auto c = PolyhedralComplex::from_points_and_cells(rows({{2, 2, 4}, {1, 1, 2}, {0, 3, 0}, {1, 3, 2}}), {{0, 1, 2, 3}});
  EXPECT_EQ(c.points(), rows({{1, 1, 2}, {0, 1, 0}}));
  EXPECT_EQ(c.maximal_cells()[0], (Cell{0, 1}));
}

TEST(FromPointsAndCells, Errors) {
  EXPECT_THROW(PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}}), {{0, 1}}), ComplexError);
  EXPECT_THROW(PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {0, 1, 0}}), {{1}}), ComplexError);
  EXPECT_THROW(PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {0, 0, 0}}), {{0, 1}}), ComplexError);
  EXPECT_THROW(PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}}), {{0}}, {}, std::vector<long>{0}),
               ComplexError);
  EXPECT_THROW(PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}}), {{0}}, {}, std::vector<long>{1, 1}),
               ComplexError);
  try {
    PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {0, 1, 0}}), {{0}, {1}});
    FAIL();
  } catch (const ComplexError& e) {
    EXPECT_NE(std::string(e.what()).find("cell 1"), std::string::npos);
  }
}

TEST(Validate, CrossingSegmentsAreRejected) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}}),
                                                    {{0, 1}, {2, 3}});
  try {
    c.validate();
    FAIL();
  } catch (const ComplexError& e) {
    EXPECT_NE(std::string(e.what()).find("cells 0 and 1"), std::string::npos);
  }
  auto ok = PolyhedralComplex::from_points_and_cells(rows({{1, -1, 0}, {1, 0, 0}, {1, 0, 1}}), {{0, 1}, {1, 2}});
  EXPECT_NO_THROW(ok.validate());
}

TEST(Validate, LinealityIsCarried) {
  // Two half-planes glued along the x-axis in R^3, lineality along x.
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 5, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), {{0, 1}, {0, 2}},
                                                    rows({{2, 0, 0}}));
  EXPECT_EQ(c.lineality(), rows({{1, 0, 0}}));
  EXPECT_EQ(c.points().front(), (Vec{Rat(1), Rat(0), Rat(0), Rat(0)}));
  EXPECT_EQ(c.dim(), 2);
  EXPECT_NO_THROW(c.validate());
}

TEST(Properties, ConstructionIsIdempotent) {
  for (const auto& c : {models::genus2_curve(), models::quartic_curve()}) {
    auto again = PolyhedralComplex::from_points_and_cells(c.points(), c.maximal_cells(), c.lineality(), c.weights());
    EXPECT_EQ(again.points(), c.points());
    EXPECT_EQ(again.maximal_cells(), c.maximal_cells());
  }
}

PolyhedralComplex clipped_plane() {
  // The square [0,2]^2 split into two triangles, in the plane z = 1.
  return PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0, 1}, {1, 2, 0, 1}, {1, 0, 2, 1}, {1, 2, 2, 1}}),
                                                  {{0, 1, 3}, {0, 2, 3}});
}

TEST(Skeleton, EdgeGraphOfClippedPlane) {
  PolyhedralComplex c = clipped_plane();
  PolyhedralComplex one = skeleton(c, 1);
  // Oracle: the distinct edges of the two triangles.
  std::vector<Polyhedron> edges;
  for (const auto& p : c.cell_polyhedra())
    for (const auto& e : faces_of_dim(p, 1)) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EXPECT_EQ(edges.size(), 5u);
  EXPECT_EQ(one.num_cells(), 5u);
  std::vector<Polyhedron> got = one.cell_polyhedra();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, edges);
  EXPECT_FALSE(one.has_weights());

  auto zero = skeleton(c, 0);
  EXPECT_EQ(zero.num_cells(), 4u);
  EXPECT_EQ(zero.dim(), 0);
  EXPECT_THROW(skeleton(c, 3), ComplexError);
}

TEST(Skeleton, IdentityOnCurvesAndComposes) {
  PolyhedralComplex g = models::genus2_curve();
  PolyhedralComplex s = skeleton(g, 1);
  EXPECT_EQ(s.points(), g.points());
  EXPECT_EQ(s.maximal_cells(), g.maximal_cells());

  PolyhedralComplex c = clipped_plane();
  EXPECT_EQ(skeleton(skeleton(c, 1), 0).cell_polyhedra(), skeleton(c, 0).cell_polyhedra());
  EXPECT_EQ(skeleton(skeleton(c, 2), 1).cell_polyhedra(), skeleton(c, 1).cell_polyhedra());
}

TEST(GraphStats, Genus2Curve) {
  GraphStats s = graph_stats(models::genus2_curve());
  EXPECT_EQ(s, (GraphStats{14, 15, 12, 1, 2}));
}

TEST(GraphStats, SmallGraphs) {
  auto edge = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {1, 1, 0}}), {{0, 1}});
  EXPECT_EQ(graph_stats(edge), (GraphStats{2, 1, 0, 1, 0}));
  auto tri = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}), {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(graph_stats(tri), (GraphStats{3, 3, 0, 1, 1}));
  EXPECT_THROW(graph_stats(clipped_plane()), ComplexError);
}

// Spanning-tree oracle: cycles = edges not used by a BFS forest.
long spanning_forest_cycles(size_t nv, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<std::vector<size_t>> adj(nv);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(nv, false);
  long tree_edges = 0;
  for (size_t s = 0; s < nv; ++s) {
    if (seen[s]) continue;
    std::vector<size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        ++tree_edges;
        stack.push_back(w);
      }
    }
  }
  return static_cast<long>(edges.size()) - tree_edges;
}

TEST(Properties, BettiNumberMatchesSpanningTreeOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    // Random graph on a path so it is connected, plus chords.
    size_t nv = 3 + rng() % 6;
    std::vector<Vec> pts;
    for (size_t i = 0; i < nv; ++i) pts.push_back(Vec{Rat(1), Rat(long(i)), Rat(long(i * i)), Rat(long(i * i * i))});
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i + 1 < nv; ++i) edges.emplace_back(i, i + 1);
    for (size_t i = 0; i < nv; ++i)
      for (size_t j = i + 2; j < nv; ++j)
        if (rng() % 3 == 0) edges.emplace_back(i, j);
    std::vector<Cell> cs;
    for (auto [a, b] : edges) cs.push_back({a, b});
    auto c = PolyhedralComplex::from_points_and_cells(pts, cs);
    GraphStats s = graph_stats(c);
    EXPECT_EQ(s.num_components, 1u);
    EXPECT_GE(s.first_betti_number, 0);
    EXPECT_EQ(s.first_betti_number, spanning_forest_cycles(nv, edges));
  }
}

TEST(Components, CountsTouchingCells) {
  EXPECT_EQ(num_components(models::genus2_curve()), 1u);
  auto two = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {1, 1, 0}, {1, 5, 5}, {0, 1, 0}}),
                                                      {{0, 1}, {2, 3}, {0, 3}});
  EXPECT_EQ(num_components(two), 2u);
}

}  // namespace
