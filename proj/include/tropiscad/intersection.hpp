#pragma once

// Stable intersection of weighted complexes and the balancing condition.

#include <string>
#include <vector>

#include "tropiscad/complex.hpp"

namespace tropiscad {

struct BalancingReport {
  bool balanced = true;
  /// Ridges where the weighted primitive normals do not sum into the ridge's span.
  std::vector<Polyhedron> violations;

  std::vector<std::string> violation_ids() const;
};

/// Checks the balancing condition at every ridge of a pure weighted complex.
/// Throws ComplexError for non-pure input.
BalancingReport check_balancing(const PolyhedralComplex& c);

/// Generic perturbation directions (1, q^-1, q^-2, ...) tried in order until
/// one is generic for the input pair.
std::vector<Vec> perturbation_directions(size_t ambient_dim);

/// Limit of A intersected with B + eps*v for generic v as eps -> 0+, with
/// multiplicities w(A)*w(B)*[Z^n : L_A + L_B]. Pure of dimension
/// dim A + dim B - n; empty when that is negative.
PolyhedralComplex stable_intersection(const PolyhedralComplex& a, const PolyhedralComplex& b);

/// Rational coordinates of `x` in the row basis `basis` (x must lie in its span).
Vec coordinates_in(const std::vector<Vec>& basis, const Vec& x);

}  // namespace tropiscad
