#include <gtest/gtest.h>

#include <set>

#include "model_data.hpp"
#include "tropiscad/bounding.hpp"
#include "tropiscad/hypersurface.hpp"

namespace {

using namespace tropiscad;
using models::rows;

PolyhedralComplex surface(std::string_view text) { return hypersurface(parse_tropical_polynomial(text, {"x", "y", "z"})); }

PolyhedralComplex quadric() {
  return hypersurface(dehomogenize(parse_tropical_polynomial(models::kQuadricText, {"w", "x", "y", "z"})));
}

// Vertices strictly inside the box.
std::set<Vec> interior_vertices(const PolyhedralComplex& c, const BoundingBox& box) {
  std::set<Vec> out;
  for (const auto& p : c.points()) {
    Vec x(p.begin() + 1, p.end());
    bool inside = true;
    for (const auto& h : box.polytope().inequalities()) inside = inside && sgn(h.eval(x)) > 0;
    if (inside) out.insert(x);
  }
  return out;
}

void expect_clipped(const PolyhedralComplex& c, const BoundingBox& box) {
  EXPECT_TRUE(c.lineality().empty());
  for (const auto& p : c.points()) {
    ASSERT_EQ(p[0], 1) << to_string(p);
    Vec x(p.begin() + 1, p.end());
    for (const auto& h : box.polytope().inequalities()) EXPECT_GE(h.eval(x), 0) << to_string(x);
  }
  EXPECT_TRUE(c.bounded());
}

TEST(GenerateBoundingBox, DefaultMarginAroundSingleVertex) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0, 0}}), {{0}});
  BoundingBox b = generate_bounding_box(c);
  EXPECT_EQ(b.lower(), (Vec{-1, -1, -1}));
  EXPECT_EQ(b.upper(), (Vec{1, 1, 1}));
  EXPECT_TRUE(b.is_cuboid());
  EXPECT_EQ(b.polytope().vertices().size(), 8u);
}

TEST(GenerateBoundingBox, PerAxisMargins) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0, 0}}), {{0}});
  BoundingBox b = generate_bounding_box(c, {3, 4, 5});
  EXPECT_EQ(b.lower(), (Vec{-3, -4, -5}));
  EXPECT_EQ(b.upper(), (Vec{3, 4, 5}));
  ASSERT_TRUE(b.margins().has_value());
  EXPECT_EQ((*b.margins())[2], std::make_pair(Rat(5), Rat(5)));
}

TEST(GenerateBoundingBox, Genus2Curve) {
  // Extremes of the vertex rows, computed straight from the listing.
  Vec lo(3, Rat(1000)), hi(3, Rat(-1000));
  for (const auto& r : models::kGenus2Points) {
    if (r[0] != 1) continue;
    for (size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], Rat(r[i + 1] - 1));
      hi[i] = std::max(hi[i], Rat(r[i + 1] + 1));
    }
  }
  BoundingBox b = generate_bounding_box(models::genus2_curve());
  EXPECT_EQ(b.lower(), lo);
  EXPECT_EQ(b.upper(), hi);
  EXPECT_EQ(b.lower(), (Vec{-11, -9, -1}));
  EXPECT_EQ(b.upper(), (Vec{11, 11, 4}));
}

TEST(GenerateBoundingBox, Errors) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}}), {{0}});
  EXPECT_THROW(generate_bounding_box(c, {0}), GeometryError);
  EXPECT_THROW(generate_bounding_box(c, {1, -1}), GeometryError);
  EXPECT_THROW(generate_bounding_box(c, {1, 1, 1}), GeometryError);
  auto empty = PolyhedralComplex::from_points_and_cells(2, {}, {}, {}, std::nullopt);
  EXPECT_THROW(generate_bounding_box(empty), GeometryError);
}

TEST(BoundingBox, CustomPolytope) {
  auto simplex = Polyhedron::from_generators(2, VRep{rows({{-3, -3}, {6, -3}, {-3, 6}}), {}, {}});
  BoundingBox b = BoundingBox::from_polytope(simplex);
  EXPECT_FALSE(b.is_cuboid());
  EXPECT_TRUE(BoundingBox::from_polytope(BoundingBox::cuboid({0, 0}, {1, 2}).polytope()).is_cuboid());
  EXPECT_THROW(BoundingBox::from_polytope(Polyhedron::from_generators(2, VRep{rows({{0, 0}, {1, 1}}), {}, {}})),
               GeometryError);
  EXPECT_THROW(BoundingBox::cuboid({0, 0}, {1, 0}), GeometryError);

  PolyhedralComplex line = hypersurface(parse_tropical_polynomial("min(0, x, y)", {"x", "y"}));
  PolyhedralComplex clipped = intersect_with_bounding_box(line, b);
  EXPECT_EQ(clipped.points(), rows({{1, -3, -3}, {1, 0, 0}, {1, 0, 3}, {1, 3, 0}}));
  expect_clipped(clipped, b);
}

TEST(IntersectWithBoundingBox, TropicalLineRaysAreCut) {
  PolyhedralComplex line = hypersurface(parse_tropical_polynomial("min(0, x, y)", {"x", "y"}));
  PolyhedralComplex c = intersect_with_bounding_box(line, BoundingBox::cuboid({-2, -2}, {2, 2}));
  EXPECT_EQ(c.points(), rows({{1, -2, -2}, {1, 0, 0}, {1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(c.maximal_cells(), (std::vector<Cell>{{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(c.weights(), (std::vector<long>{1, 1, 1}));
}

TEST(IntersectWithBoundingBox, BoundedComplexInsideIsUnchanged) {
  auto c = PolyhedralComplex::from_points_and_cells(rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}), {{0, 1, 2}});
  EXPECT_EQ(intersect_with_bounding_box(c, BoundingBox::cuboid({-5, -5}, {5, 5})), c);
}

TEST(IntersectWithBoundingBox, QuadricWithItsGeneratedBox) {
  PolyhedralComplex t = quadric();
  BoundingBox box = generate_bounding_box(t);
  PolyhedralComplex c = intersect_with_bounding_box(t, box);
  expect_clipped(c, box);
  EXPECT_EQ(c.num_cells(), t.num_cells());
  EXPECT_EQ(c.dim(), 2);
  EXPECT_NO_THROW(c.validate());
}

TEST(IntersectWithBoundingBox, LowerDimensionalLeftoversAndDropouts) {
  // The square [0,1]^2 touches the box x <= 0 only in an edge; the far segment misses it.
  auto c = PolyhedralComplex::from_points_and_cells(
      rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {1, 5, 5}, {1, 6, 5}}), {{0, 1, 2, 3}, {4, 5}});
  PolyhedralComplex clipped = intersect_with_bounding_box(c, BoundingBox::cuboid({-1, -1}, {0, 2}));
  EXPECT_EQ(clipped.points(), rows({{1, 0, 0}, {1, 0, 1}}));
  EXPECT_EQ(clipped.maximal_cells(), (std::vector<Cell>{{0, 1}}));
  EXPECT_EQ(clipped.dim(), 1);
}

TEST(IntersectWithBoundingBox, DimensionMismatch) {
  EXPECT_THROW(intersect_with_bounding_box(models::genus2_curve(), BoundingBox::cuboid({0, 0}, {1, 1})), ComplexError);
}

TEST(IntersectWithBoundingBox, LargerMarginKeepsInnerVertices) {
  for (const PolyhedralComplex& t : {quadric(), models::genus2_curve(), models::quartic_curve()}) {
    BoundingBox small = generate_bounding_box(t, {1});
    BoundingBox large = generate_bounding_box(t, {Rat(7, 2)});
    EXPECT_EQ(interior_vertices(intersect_with_bounding_box(t, small), small),
              interior_vertices(intersect_with_bounding_box(t, large), small));
  }
}

TEST(FrameForCurve, PlaneInCube) {
  PolyhedralComplex frame = frame_for_curve(surface("min(0, x)"), BoundingBox::cuboid({-1, -1, -1}, {1, 1, 1}));
  EXPECT_EQ(frame.num_cells(), 4u);
  EXPECT_EQ(frame.points(), rows({{1, 0, -1, -1}, {1, 0, -1, 1}, {1, 0, 1, -1}, {1, 0, 1, 1}}));
  EXPECT_FALSE(frame.has_weights());
}

TEST(FrameForCurve, TropicalPlaneMatchesFaceEnumeration) {
  BoundingBox box = BoundingBox::cuboid({-2, -2, -2}, {2, 2, 2});
  PolyhedralComplex clipped = intersect_with_bounding_box(surface("min(x, y, z, 0)"), box);
  PolyhedralComplex frame = frame_for_curve(surface("min(x, y, z, 0)"), box);

  std::set<Polyhedron> edges;
  for (size_t i = 0; i < clipped.num_cells(); ++i)
    for (auto& e : faces_of_dim(clipped.cell(i), 1)) edges.insert(std::move(e));
  std::set<Polyhedron> found;
  for (size_t i = 0; i < frame.num_cells(); ++i) found.insert(frame.cell(i));
  EXPECT_EQ(found, edges);
  EXPECT_EQ(frame, skeleton(clipped, 1));

  // Edges off the box boundary are the four clipped rays of the plane.
  size_t interior = 0;
  for (const auto& e : edges) {
    bool on_boundary = false;
    for (const auto& h : box.polytope().inequalities()) {
      bool all_tight = true;
      for (const auto& v : e.vertices()) all_tight = all_tight && sgn(h.eval(v)) == 0;
      on_boundary = on_boundary || all_tight;
    }
    if (!on_boundary) ++interior;
  }
  EXPECT_EQ(interior, 4u);
  EXPECT_EQ(edges.size(), 16u);
}

TEST(FrameForCurve, RejectsCurves) {
  EXPECT_THROW(frame_for_curve(models::genus2_curve(), generate_bounding_box(models::genus2_curve())), ComplexError);
}

}  // namespace
