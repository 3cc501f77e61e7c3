#include "tropiscad/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace tropiscad {

RowEchelon rref(std::vector<Vec> rows, size_t ncols, const std::vector<size_t>& column_order) {
  std::vector<size_t> order = column_order;
  if (order.empty()) {
    order.resize(ncols);
    std::iota(order.begin(), order.end(), size_t{0});
  }
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("rref: row length mismatch");
  }

  RowEchelon out;
  size_t next = 0;
  for (size_t col : order) {
    size_t pivot = next;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    Rat inv = 1 / rows[next][col];
    for (auto& x : rows[next]) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next || sgn(rows[r][col]) == 0) continue;
      Rat f = rows[r][col];
      for (size_t c = 0; c < ncols; ++c) rows[r][c] -= f * rows[next][c];
    }
    out.pivots.push_back(col);
    ++next;
    if (next == rows.size()) break;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

size_t rank(const std::vector<Vec>& rows, size_t ncols) { return rref(rows, ncols).rank(); }

std::vector<Vec> null_space(const std::vector<Vec>& rows, size_t ncols) {
  RowEchelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec reduce(const Vec& v, const RowEchelon& basis) {
  Vec out = v;
  for (size_t i = 0; i < basis.rows.size(); ++i) {
    Rat f = out[basis.pivots[i]];
    if (sgn(f) == 0) continue;
    for (size_t c = 0; c < out.size(); ++c) out[c] -= f * basis.rows[i][c];
  }
  return out;
}

bool in_span(const Vec& v, const RowEchelon& basis) { return is_zero(reduce(v, basis)); }

std::vector<Vec> canonical_basis(const std::vector<Vec>& spanning, size_t ncols) {
  RowEchelon e = rref(spanning, ncols);
  std::vector<Vec> out;
  out.reserve(e.rows.size());
  for (const auto& r : e.rows) out.push_back(primitive(r));
  return out;
}

namespace {

// Unimodular row reduction of the leading `ncols` columns to echelon form.
// Returns the number of nonzero (pivot) rows, which come first.
size_t integer_echelon(IntMatrix& m, size_t ncols) {
  size_t next = 0;
  for (size_t col = 0; col < ncols && next < m.size(); ++col) {
    while (true) {
      size_t best = m.size();
      for (size_t r = next; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() || abs(m[r][col]) < abs(m[best][col])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[next], m[best]);
      bool done = true;
      for (size_t r = next + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[next][col].get_mpz_t());
        for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[next][c];
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (next < m.size() && m[next][col] != 0) {
      if (m[next][col] < 0) {
        for (auto& x : m[next]) x = -x;
      }
      ++next;
    }
  }
  return next;
}

}  // namespace

IntMatrix hermite_rows(IntMatrix rows, size_t ncols) {
  size_t r = integer_echelon(rows, ncols);
  rows.resize(r);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& rows, size_t ncols) {
  size_t m = rows.size();
  IntMatrix aug(ncols, std::vector<Integer>(m + ncols, Integer(0)));
  for (size_t i = 0; i < ncols; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (rows[j].size() != ncols) throw std::invalid_argument("integer_kernel: row length mismatch");
      aug[i][j] = rows[j][i];
    }
    aug[i][m + i] = 1;
  }
  size_t r = integer_echelon(aug, m);
  IntMatrix kernel;
  for (size_t i = r; i < ncols; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end());
  }
  return kernel;
}

IntMatrix saturated_lattice(const std::vector<Vec>& spanning, size_t ncols) {
  IntMatrix equations;
  for (const auto& e : null_space(spanning, ncols)) equations.push_back(to_integers(primitive(e)));
  if (equations.empty()) {
    IntMatrix id(ncols, std::vector<Integer>(ncols, Integer(0)));
    for (size_t i = 0; i < ncols; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(equations, ncols);
}

Integer lattice_index(const IntMatrix& generators, size_t ncols) {
  IntMatrix h = hermite_rows(generators, ncols);
  if (h.size() < ncols) return 0;
  Integer index = 1;
  for (size_t i = 0; i < ncols; ++i) index *= h[i][i];
  return abs(index);
}

}  // namespace tropiscad
