#pragma once

// Tropical hypersurfaces as complexes dual to the regular subdivision of the
// Newton polytope.

#include <cstddef>
#include <vector>

#include "tropiscad/complex.hpp"
#include "tropiscad/polynomial.hpp"

namespace tropiscad {

struct SubdivisionEdge {
  size_t from;
  size_t to;
  long lattice_length;
};

struct DualSubdivision {
  /// Exponent rows with the coefficient appended as last coordinate.
  std::vector<Vec> lifted_points;
  /// Maximal cells: the points on each lower (Min) or upper (Max) facet of
  /// the lifted hull, as sorted index sets.
  std::vector<Cell> cells;
  /// Edges between hull vertices, each dual to a maximal cell of the hypersurface.
  std::vector<SubdivisionEdge> edges;
};

DualSubdivision regular_subdivision(const TropicalPolynomial& p);

/// The locus where the optimum is attained at least twice, weighted by the
/// lattice lengths of the dual edges. Empty for a single monomial.
PolyhedralComplex hypersurface(const TropicalPolynomial& p);

/// Vertices of `c` (affine coordinates) where the optimum of `p` is attained
/// only once, i.e. vertices off the hypersurface.
std::vector<Vec> vertices_off_hypersurface(const PolyhedralComplex& c, const TropicalPolynomial& p);

}  // namespace tropiscad
