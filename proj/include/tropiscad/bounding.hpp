#pragma once

// Bounding boxes and clipping of unbounded complexes to printable ones.

#include <optional>
#include <utility>
#include <vector>

#include "tropiscad/complex.hpp"

namespace tropiscad {

class BoundingBox {
 public:
  /// Axis-aligned box [lower_i, upper_i].
  static BoundingBox cuboid(const Vec& lower, const Vec& upper);
  /// Any bounded full-dimensional polytope.
  static BoundingBox from_polytope(Polyhedron polytope);

  const Polyhedron& polytope() const { return polytope_; }
  size_t ambient_dim() const { return polytope_.ambient_dim(); }
  bool is_cuboid() const { return is_cuboid_; }
  /// Per-axis (lower, upper) margins when the box was generated from a complex.
  const std::optional<std::vector<std::pair<Rat, Rat>>>& margins() const { return margins_; }

  /// Per-axis minimum and maximum over the box's vertices.
  Vec lower() const;
  Vec upper() const;

 private:
  friend BoundingBox generate_bounding_box(const PolyhedralComplex&, const Vec&);
  explicit BoundingBox(Polyhedron p, bool cuboid) : polytope_(std::move(p)), is_cuboid_(cuboid) {}

  Polyhedron polytope_;
  bool is_cuboid_ = false;
  std::optional<std::vector<std::pair<Rat, Rat>>> margins_;
};

/// Box around all vertices of `c` (rays are ignored) enlarged by margins[i]
/// on both sides of axis i. A single margin applies to every axis.
BoundingBox generate_bounding_box(const PolyhedralComplex& c, const Vec& margins = {Rat(1)});

/// Clips every maximal cell to the box. Cells that become empty vanish and
/// lower-dimensional leftovers stay unless another clipped cell contains them.
PolyhedralComplex intersect_with_bounding_box(const PolyhedralComplex& c, const BoundingBox& box);

/// The 1-skeleton of a surface clipped to the box, without weights.
PolyhedralComplex frame_for_curve(const PolyhedralComplex& surface, const BoundingBox& box);

}  // namespace tropiscad
