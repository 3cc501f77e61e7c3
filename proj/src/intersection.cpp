#include "tropiscad/intersection.hpp"

#include <algorithm>
#include <map>

#include "tropiscad/linalg.hpp"

namespace tropiscad {

namespace {

std::vector<Vec> to_rational(const IntMatrix& m) {
  std::vector<Vec> out;
  for (const auto& row : m) {
    Vec v;
    for (const auto& x : row) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

// Direction from the ridge into the cell: a generator of the cell not in the ridge.
Vec direction_into(const Polyhedron& cell, const Polyhedron& ridge) {
  const Vec& base = ridge.vertices().front();
  for (const auto& v : cell.vertices()) {
    if (ridge.contains(v)) continue;
    Vec d(v.size());
    for (size_t i = 0; i < v.size(); ++i) d[i] = v[i] - base[i];
    return d;
  }
  for (const auto& r : cell.rays()) {
    if (!ridge.contains_direction(r)) return r;
  }
  throw ComplexError("ridge " + ridge.describe() + " is not a proper face of " + cell.describe());
}

struct Piece {
  Polyhedron poly;
  long weight;
};

// Splits every piece by the facet hyperplanes of all pieces in the group so
// that overlapping pieces become identical cells.
std::vector<Piece> refine(const std::vector<Piece>& group, int k) {
  std::vector<Constraint> cuts;
  for (const auto& p : group) cuts.insert(cuts.end(), p.poly.inequalities().begin(), p.poly.inequalities().end());
  std::vector<Piece> out;
  for (const auto& p : group) {
    std::vector<Polyhedron> parts{p.poly};
    for (const auto& h : cuts) {
      Constraint neg{-h.b, h.a};
      for (auto& x : neg.a) x = -x;
      std::vector<Polyhedron> next;
      for (const auto& q : parts) {
        Polyhedron plus = intersect_polyhedra(q, Polyhedron::from_constraints(q.ambient_dim(), HRep{{h}, {}}));
        Polyhedron minus = intersect_polyhedra(q, Polyhedron::from_constraints(q.ambient_dim(), HRep{{neg}, {}}));
        if (plus.dim() == k && minus.dim() == k) {
          next.push_back(std::move(plus));
          next.push_back(std::move(minus));
        } else {
          next.push_back(q);
        }
      }
      parts = std::move(next);
    }
    for (auto& q : parts) out.push_back({std::move(q), p.weight});
  }
  return out;
}

struct CellData {
  Polyhedron poly;
  long weight;
  std::vector<Vec> tangent;
  IntMatrix lattice;
};

std::vector<CellData> cell_data(const PolyhedralComplex& c) {
  std::vector<CellData> out;
  for (size_t i = 0; i < c.num_cells(); ++i) {
    const Polyhedron& p = c.cell(i);
    std::vector<Vec> t = p.tangent_space();
    IntMatrix l = saturated_lattice(t, c.ambient_dim());
    out.push_back({p, c.weights()[i], std::move(t), std::move(l)});
  }
  return out;
}

class DegenerateDirection {};

enum class Contribution { None, Yes };

// Does sigma meet tau + eps*v for all small eps > 0? Decided on the tangent
// cone at 0 of sigma - tau; throws DegenerateDirection when v lies on its boundary.
Contribution perturbed_meet(const Polyhedron& sigma, const Polyhedron& tau, const Vec& v) {
  const size_t n = sigma.ambient_dim();
  VRep cone;
  cone.vertices.push_back(Vec(n, Rat(0)));
  for (const auto& s : sigma.vertices()) {
    for (const auto& t : tau.vertices()) {
      Vec d(n);
      for (size_t i = 0; i < n; ++i) d[i] = s[i] - t[i];
      if (!is_zero(d)) cone.rays.push_back(std::move(d));
    }
  }
  for (const auto& r : sigma.rays()) cone.rays.push_back(r);
  for (const auto& r : tau.rays()) {
    Vec d = r;
    for (auto& x : d) x = -x;
    cone.rays.push_back(std::move(d));
  }
  cone.lineality = sigma.lineality();
  cone.lineality.insert(cone.lineality.end(), tau.lineality().begin(), tau.lineality().end());
  HRep h = facet_enumeration(n, cone);
  for (const auto& e : h.equations) {
    if (sgn(dot(e.a, v)) != 0) throw DegenerateDirection{};
  }
  for (const auto& f : h.inequalities) {
    int s = sgn(dot(f.a, v));
    if (s == 0) throw DegenerateDirection{};
    if (s < 0) return Contribution::None;
  }
  return Contribution::Yes;
}

std::vector<Piece> stable_pieces(const std::vector<CellData>& as, const std::vector<CellData>& bs, size_t n, int k,
                                 const Vec& v) {
  std::vector<Piece> pieces;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      std::vector<Vec> both = a.tangent;
      both.insert(both.end(), b.tangent.begin(), b.tangent.end());
      if (rank(both, n) != n) continue;
      Polyhedron meet = intersect_polyhedra(a.poly, b.poly);
      if (meet.empty() || meet.dim() != k) continue;
      if (perturbed_meet(a.poly, b.poly, v) == Contribution::None) continue;
      IntMatrix gens = a.lattice;
      gens.insert(gens.end(), b.lattice.begin(), b.lattice.end());
      Integer index = lattice_index(gens, n);
      pieces.push_back({std::move(meet), a.weight * b.weight * index.get_si()});
    }
  }
  return pieces;
}

struct ConstraintsLess {
  bool operator()(const std::vector<Constraint>& x, const std::vector<Constraint>& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Constraint& p, const Constraint& q) {
      if (p.b != q.b) return p.b < q.b;
      return compare(p.a, q.a) < 0;
    });
  }
};

}  // namespace

std::vector<std::string> BalancingReport::violation_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : violations) ids.push_back(r.describe());
  return ids;
}

Vec coordinates_in(const std::vector<Vec>& basis, const Vec& x) {
  const size_t k = basis.size();
  std::vector<Vec> rows;
  for (size_t j = 0; j < x.size(); ++j) {
    Vec r(k + 1);
    for (size_t i = 0; i < k; ++i) r[i] = basis[i][j];
    r[k] = x[j];
    rows.push_back(std::move(r));
  }
  RowEchelon e = rref(rows, k + 1);
  Vec c(k, Rat(0));
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == k) throw ComplexError("vector is not in the span of the basis");
    c[e.pivots[i]] = e.rows[i][k];
  }
  return c;
}

BalancingReport check_balancing(const PolyhedralComplex& c) {
  if (!c.is_pure()) throw ComplexError("balancing is only defined for pure complexes");
  BalancingReport report;
  const int k = c.dim();
  if (k <= 0) return report;
  const size_t n = c.ambient_dim();

  std::map<Polyhedron, std::vector<size_t>> ridges;
  for (size_t i = 0; i < c.num_cells(); ++i) {
    if (k - 1 < static_cast<int>(c.lineality().size())) break;
    for (auto& r : faces_of_dim(c.cell(i), k - 1)) ridges[std::move(r)].push_back(i);
  }

  for (const auto& [ridge, adjacent] : ridges) {
    std::vector<Vec> ridge_lattice = to_rational(saturated_lattice(ridge.tangent_space(), n));
    RowEchelon ridge_span = rref(ridge.tangent_space(), n);
    Vec sum(n, Rat(0));
    for (size_t i : adjacent) {
      const Polyhedron& cell = c.cell(i);
      std::vector<Vec> cell_lattice = to_rational(saturated_lattice(cell.tangent_space(), n));
      // phi: primitive integral functional on the cell lattice vanishing on the ridge lattice.
      std::vector<Vec> ridge_coords;
      for (const auto& r : ridge_lattice) ridge_coords.push_back(coordinates_in(cell_lattice, r));
      std::vector<Vec> kernel = null_space(ridge_coords, cell_lattice.size());
      if (kernel.size() != 1) throw ComplexError("ridge " + ridge.describe() + " is not of codimension one");
      Vec phi = primitive(kernel[0]);
      Vec d = direction_into(cell, ridge);
      Rat t = dot(phi, coordinates_in(cell_lattice, d));
      // d / |t| agrees with the primitive normal modulo the ridge span.
      Rat scale = Rat(c.weights()[i]) / abs(t);
      for (size_t j = 0; j < n; ++j) sum[j] += scale * d[j];
    }
    if (!in_span(sum, ridge_span)) {
      report.balanced = false;
      report.violations.push_back(ridge);
    }
  }
  return report;
}

std::vector<Vec> perturbation_directions(size_t n) {
  std::vector<Vec> out;
  for (long q : {7919L, 7927L, 7933L, 7937L, 7949L, 7951L, 7963L, 7993L}) {
    Vec v;
    Rat x = 1;
    for (size_t i = 0; i < n; ++i) {
      v.push_back(x);
      x /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

PolyhedralComplex stable_intersection(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ComplexError("stable_intersection: ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                       std::to_string(b.ambient_dim()) + " differ");
  }
  const size_t n = a.ambient_dim();
  auto empty = [n] { return PolyhedralComplex::from_points_and_cells(n, {}, {}, {}, std::vector<long>{}); };
  if (a.empty() || b.empty()) return empty();
  if (!a.is_pure() || !b.is_pure()) throw ComplexError("stable_intersection needs pure complexes");
  const int k = a.dim() + b.dim() - static_cast<int>(n);
  if (k < 0) return empty();

  std::vector<CellData> as = cell_data(a), bs = cell_data(b);
  std::vector<Piece> pieces;
  bool found = false;
  for (const auto& v : perturbation_directions(n)) {
    try {
      pieces = stable_pieces(as, bs, n, k, v);
      found = true;
      break;
    } catch (const DegenerateDirection&) {
    }
  }
  if (!found) throw ComplexError("no generic perturbation direction found");

  // Group by affine hull, refine overlapping groups, then merge equal cells.
  std::map<std::vector<Constraint>, std::vector<Piece>, ConstraintsLess> groups;
  for (auto& p : pieces) groups[p.poly.equations()].push_back(std::move(p));
  std::map<Polyhedron, long> merged;
  for (auto& [span, group] : groups) {
    bool overlapping = false;
    for (size_t i = 0; i < group.size() && !overlapping; ++i)
      for (size_t j = i + 1; j < group.size() && !overlapping; ++j)
        overlapping = intersect_polyhedra(group[i].poly, group[j].poly).dim() == k;
    if (overlapping) group = refine(group, k);
    for (auto& p : group) merged[p.poly] += p.weight;
  }

  std::vector<Polyhedron> cells;
  std::vector<long> weights;
  for (auto& [poly, w] : merged) {
    if (w == 0) continue;
    cells.push_back(poly);
    weights.push_back(w);
  }
  if (cells.empty()) return empty();
  return PolyhedralComplex::from_polyhedra(n, cells, std::move(weights));
}

}  // namespace tropiscad
