#include "tropiscad/bounding.hpp"

#include <algorithm>

namespace tropiscad {

BoundingBox BoundingBox::cuboid(const Vec& lower, const Vec& upper) {
  if (lower.size() != upper.size()) throw GeometryError("box corners have different dimensions");
  HRep h;
  for (size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] >= upper[i]) throw GeometryError("box is empty or flat along axis " + std::to_string(i));
    Constraint lo{-lower[i], Vec(lower.size(), Rat(0))};
    lo.a[i] = 1;
    Constraint hi{upper[i], Vec(lower.size(), Rat(0))};
    hi.a[i] = -1;
    h.inequalities.push_back(std::move(lo));
    h.inequalities.push_back(std::move(hi));
  }
  return BoundingBox(Polyhedron::from_constraints(lower.size(), std::move(h)), true);
}

BoundingBox BoundingBox::from_polytope(Polyhedron polytope) {
  if (polytope.empty() || !polytope.bounded()) throw GeometryError("bounding box must be a nonempty polytope");
  if (polytope.dim() != static_cast<int>(polytope.ambient_dim())) {
    throw GeometryError("bounding box must be full-dimensional, got dimension " + std::to_string(polytope.dim()));
  }
  BoundingBox box(std::move(polytope), false);
  const Vec lo = box.lower(), hi = box.upper();
  // Cuboid iff it has 2^n vertices, each a corner of the extreme ranges.
  const auto& vs = box.polytope_.vertices();
  box.is_cuboid_ = vs.size() == (size_t{1} << box.ambient_dim()) && std::all_of(vs.begin(), vs.end(), [&](const Vec& p) {
                     for (size_t i = 0; i < p.size(); ++i)
                       if (p[i] != lo[i] && p[i] != hi[i]) return false;
                     return true;
                   });
  return box;
}

Vec BoundingBox::lower() const {
  Vec v = polytope_.vertices().front();
  for (const auto& p : polytope_.vertices())
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::min(v[i], p[i]);
  return v;
}

Vec BoundingBox::upper() const {
  Vec v = polytope_.vertices().front();
  for (const auto& p : polytope_.vertices())
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], p[i]);
  return v;
}

BoundingBox generate_bounding_box(const PolyhedralComplex& c, const Vec& margins) {
  const size_t n = c.ambient_dim();
  if (margins.size() != 1 && margins.size() != n) {
    throw GeometryError("expected 1 or " + std::to_string(n) + " margins, got " + std::to_string(margins.size()));
  }
  for (const auto& m : margins) {
    if (sgn(m) <= 0) throw GeometryError("margins must be positive, got " + to_string(m));
  }
  std::optional<Vec> lo, hi;
  for (const auto& p : c.points()) {
    if (!PolyhedralComplex::is_vertex(p)) continue;
    Vec x(p.begin() + 1, p.end());
    if (!lo) {
      lo = hi = x;
      continue;
    }
    for (size_t i = 0; i < n; ++i) {
      (*lo)[i] = std::min((*lo)[i], x[i]);
      (*hi)[i] = std::max((*hi)[i], x[i]);
    }
  }
  if (!lo) throw GeometryError("cannot bound a complex without vertices");
  std::vector<std::pair<Rat, Rat>> used;
  for (size_t i = 0; i < n; ++i) {
    const Rat& m = margins.size() == 1 ? margins[0] : margins[i];
    (*lo)[i] -= m;
    (*hi)[i] += m;
    used.emplace_back(m, m);
  }
  BoundingBox box = BoundingBox::cuboid(*lo, *hi);
  box.margins_ = std::move(used);
  return box;
}

PolyhedralComplex intersect_with_bounding_box(const PolyhedralComplex& c, const BoundingBox& box) {
  const size_t n = c.ambient_dim();
  if (box.ambient_dim() != n) {
    throw ComplexError("complex lives in dimension " + std::to_string(n) + " but the box in " +
                       std::to_string(box.ambient_dim()));
  }
  std::vector<Polyhedron> clipped;
  std::vector<long> weights;
  for (size_t i = 0; i < c.num_cells(); ++i) {
    Polyhedron p = intersect_polyhedra(c.cell(i), box.polytope());
    if (p.empty()) continue;
    clipped.push_back(std::move(p));
    weights.push_back(c.weights()[i]);
  }
  std::optional<std::vector<long>> w;
  if (c.has_weights()) w = std::move(weights);
  if (clipped.empty()) return PolyhedralComplex::from_points_and_cells(n, {}, {}, {}, w);
  return PolyhedralComplex::from_polyhedra(n, clipped, std::move(w));
}

PolyhedralComplex frame_for_curve(const PolyhedralComplex& surface, const BoundingBox& box) {
  if (surface.dim() != 2) {
    throw ComplexError("a frame needs a 2-dimensional surface, got dimension " + std::to_string(surface.dim()));
  }
  return skeleton(intersect_with_bounding_box(surface, box), 1);
}

}  // namespace tropiscad
