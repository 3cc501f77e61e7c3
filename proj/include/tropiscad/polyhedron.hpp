#pragma once

// Convex polyhedra with both generator and constraint descriptions, computed
// exactly by the double description method.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropiscad/rational.hpp"

namespace tropiscad {

/// Thrown for inconsistent dimensions, out-of-range arguments and other
/// malformed geometric input.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr size_t kMaxAmbientDim = 8;

/// Affine functional b + <a, x>, read as `>= 0` (inequality) or `= 0` (equation).
struct Constraint {
  Rat b;
  Vec a;

  Rat eval(const Vec& x) const { return b + dot(a, x); }
  bool operator==(const Constraint&) const = default;
};

struct HRep {
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equations;
};

struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

/// Minimal generators of {x : inequalities >= 0, equations = 0}, canonically
/// ordered. An infeasible system yields empty generator lists.
VRep vertex_enumeration(size_t dim, const HRep& h);

/// Minimal constraint description of conv(vertices) + cone(rays) + span(lineality).
HRep facet_enumeration(size_t dim, const VRep& v);

/// A convex polyhedron in R^n. Immutable; both descriptions are canonical.
///
/// Canonical form: lineality is a reduced echelon basis scaled to primitive
/// integer rows, vertices and rays are reduced modulo the lineality (zero on
/// its pivot coordinates), rays are primitive integer vectors, and every list
/// is sorted lexicographically. Equations share the same normalization and
/// inequalities are reduced modulo the equations and scaled to primitive
/// integer form.
class Polyhedron {
 public:
  static Polyhedron from_constraints(size_t dim, HRep h);
  static Polyhedron from_generators(size_t dim, VRep v);
  static Polyhedron whole_space(size_t dim);

  size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the affine hull; -1 when empty.
  int dim() const;
  bool empty() const { return v_.vertices.empty(); }
  bool bounded() const { return v_.rays.empty() && v_.lineality.empty(); }

  const std::vector<Vec>& vertices() const { return v_.vertices; }
  const std::vector<Vec>& rays() const { return v_.rays; }
  const std::vector<Vec>& lineality() const { return v_.lineality; }
  const std::vector<Constraint>& inequalities() const { return h_.inequalities; }
  const std::vector<Constraint>& equations() const { return h_.equations; }
  const VRep& generators() const { return v_; }
  const HRep& constraints() const { return h_; }

  bool contains(const Vec& point) const;
  /// True if `direction` lies in the recession cone.
  bool contains_direction(const Vec& direction) const;
  bool contains(const Polyhedron& other) const;

  /// Linear span of the directions of the affine hull.
  std::vector<Vec> tangent_space() const;

  /// A point in the relative interior (average of the generators).
  Vec relative_interior_point() const;

  bool operator==(const Polyhedron& other) const;

  std::string describe() const;

 private:
  Polyhedron(size_t dim, HRep h, VRep v) : ambient_dim_(dim), h_(std::move(h)), v_(std::move(v)) {}

  size_t ambient_dim_ = 0;
  HRep h_;
  VRep v_;
};

/// Lexicographic order on canonical generator lists.
bool operator<(const Polyhedron& a, const Polyhedron& b);

Polyhedron intersect_polyhedra(const Polyhedron& p, const Polyhedron& q);

/// All k-dimensional faces of `p`, canonically ordered and without duplicates.
std::vector<Polyhedron> faces_of_dim(const Polyhedron& p, int k);

}  // namespace tropiscad
