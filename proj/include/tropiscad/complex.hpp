#pragma once

// Embedded polyhedral complexes in homogeneous coordinates: each point is
// (1, x) for a vertex x or (0, d) for a ray direction d.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropiscad/polyhedron.hpp"

namespace tropiscad {

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Cell = std::vector<size_t>;

class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;

  /// Builds a complex from homogeneous points and cells given as index sets.
  ///
  /// Leading coordinates > 0 are normalized to 1; rays are scaled to
  /// primitive integer vectors; points are reduced modulo the lineality and
  /// deduplicated; cell indices are pruned to the generators that are extreme
  /// in their cell; cells contained in another cell are absorbed (together
  /// with their weights). Points come out sorted, vertices first. The
  /// face-to-face property is NOT checked here, see validate().
  static PolyhedralComplex from_points_and_cells(const std::vector<Vec>& points, const std::vector<Cell>& cells,
                                                 const std::vector<Vec>& lineality = {},
                                                 std::optional<std::vector<long>> weights = std::nullopt);

  /// Same, for an explicit ambient dimension (needed when there are no points).
  static PolyhedralComplex from_points_and_cells(size_t ambient_dim, const std::vector<Vec>& points,
                                                 const std::vector<Cell>& cells, const std::vector<Vec>& lineality,
                                                 std::optional<std::vector<long>> weights);

  /// Collects the generators of the given polyhedra. All polyhedra must share
  /// the same lineality space.
  static PolyhedralComplex from_polyhedra(size_t ambient_dim, const std::vector<Polyhedron>& cells,
                                          std::optional<std::vector<long>> weights = std::nullopt);

  size_t ambient_dim() const { return ambient_dim_; }
  /// Homogeneous coordinates, length ambient_dim() + 1.
  const std::vector<Vec>& points() const { return points_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  const std::vector<Cell>& maximal_cells() const { return cells_; }
  const std::vector<Polyhedron>& cell_polyhedra() const { return polyhedra_; }
  const Polyhedron& cell(size_t i) const { return polyhedra_.at(i); }

  bool has_weights() const { return has_weights_; }
  /// One weight per maximal cell; all 1 when none were given.
  const std::vector<long>& weights() const { return weights_; }
  PolyhedralComplex without_weights() const;

  size_t num_cells() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  /// Largest cell dimension; -1 for the empty complex.
  int dim() const;
  bool is_pure() const;
  bool bounded() const;
  size_t num_vertices() const;

  static bool is_vertex(const Vec& point) { return sgn(point[0]) != 0; }

  /// Checks that any two maximal cells meet in a common face. Throws
  /// ComplexError naming the offending pair.
  void validate() const;

  bool operator==(const PolyhedralComplex& o) const = default;

 private:
  size_t ambient_dim_ = 0;
  std::vector<Vec> points_;
  std::vector<Vec> lineality_;
  std::vector<Cell> cells_;
  std::vector<Polyhedron> polyhedra_;
  std::vector<long> weights_;
  bool has_weights_ = false;
};

/// Complex whose maximal cells are the k-faces of the cells of `c` (cells of
/// lower dimension are carried over). Weights are dropped.
PolyhedralComplex skeleton(const PolyhedralComplex& c, int k);

struct GraphStats {
  size_t num_vertices = 0;
  size_t num_bounded_edges = 0;
  size_t num_unbounded_edges = 0;
  size_t num_components = 0;
  long first_betti_number = 0;

  bool operator==(const GraphStats&) const = default;
};

/// Graph invariants of a complex of dimension at most one. Components and the
/// first Betti number refer to the bounded subgraph.
GraphStats graph_stats(const PolyhedralComplex& c);

/// Connected components of the union of the cells (cells touching in a point).
size_t num_components(const PolyhedralComplex& c);

/// True if `x` lies in some maximal cell.
bool contains_point(const PolyhedralComplex& c, const Vec& x);

}  // namespace tropiscad
