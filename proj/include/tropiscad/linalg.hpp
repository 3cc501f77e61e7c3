#pragma once

// Exact linear algebra over the rationals and over the integers.

#include <cstddef>
#include <vector>

#include "tropiscad/rational.hpp"

namespace tropiscad {

/// Reduced row echelon form. `pivots[i]` is the pivot column of `rows[i]`;
/// every pivot entry is 1.
struct RowEchelon {
  std::vector<Vec> rows;
  std::vector<size_t> pivots;

  size_t rank() const { return rows.size(); }
};

/// Gauss-Jordan elimination. Pivot columns are searched in `column_order`
/// when given (all columns in natural order otherwise).
RowEchelon rref(std::vector<Vec> rows, size_t ncols, const std::vector<size_t>& column_order = {});

size_t rank(const std::vector<Vec>& rows, size_t ncols);

/// Basis of {x : row . x = 0 for every row}.
std::vector<Vec> null_space(const std::vector<Vec>& rows, size_t ncols);

/// Subtracts multiples of the echelon rows so that `v` vanishes on every
/// pivot column. The result is a canonical representative modulo the row span.
Vec reduce(const Vec& v, const RowEchelon& basis);

bool in_span(const Vec& v, const RowEchelon& basis);

/// Canonical basis of a subspace: rref rows scaled to primitive integer
/// vectors with positive pivot entries.
std::vector<Vec> canonical_basis(const std::vector<Vec>& spanning, size_t ncols);

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row Hermite normal form of the lattice spanned by the rows (zero rows dropped).
IntMatrix hermite_rows(IntMatrix rows, size_t ncols);

/// Basis of the integer kernel {x in Z^n : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& rows, size_t ncols);

/// Basis of (span of `spanning`) intersected with Z^n.
IntMatrix saturated_lattice(const std::vector<Vec>& spanning, size_t ncols);

/// Index of the lattice spanned by `generators` in Z^n; zero when the
/// generators do not have full rank.
Integer lattice_index(const IntMatrix& generators, size_t ncols);

}  // namespace tropiscad
