#include "tropiscad/hypersurface.hpp"

#include <algorithm>
#include <map>

namespace tropiscad {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare(a, b) < 0; }
};

}  // namespace

DualSubdivision regular_subdivision(const TropicalPolynomial& p) {
  if (p.num_terms() == 0) throw PolynomialError("regular subdivision needs at least one monomial");
  const size_t n = p.num_variables();
  if (n + 1 > kMaxAmbientDim) throw PolynomialError("too many variables for the geometry kernel");

  DualSubdivision sub;
  std::map<Vec, size_t, VecLess> index;
  for (size_t i = 0; i < p.num_terms(); ++i) {
    Vec lifted;
    for (long e : p.exponents()[i]) lifted.emplace_back(e);
    lifted.push_back(p.coefficients()[i]);
    index.emplace(lifted, i);
    sub.lifted_points.push_back(std::move(lifted));
  }

  // Lifted hull plus the vertical ray pointing away from the relevant side:
  // its facets with nonzero height coefficient are the lower (upper) facets.
  Vec vertical(n + 1, Rat(0));
  vertical[n] = p.convention() == Convention::Min ? 1 : -1;
  Polyhedron hull = Polyhedron::from_generators(n + 1, VRep{sub.lifted_points, {vertical}, {}});

  for (const auto& f : hull.inequalities()) {
    if (sgn(f.a[n]) == 0) continue;
    Cell cell;
    for (size_t i = 0; i < sub.lifted_points.size(); ++i) {
      if (sgn(f.eval(sub.lifted_points[i])) == 0) cell.push_back(i);
    }
    sub.cells.push_back(std::move(cell));
  }
  if (sub.cells.empty()) {
    // Only possible when the hull is a single lifted point plus the ray.
    sub.cells.push_back({index.at(hull.vertices().front())});
  }
  std::sort(sub.cells.begin(), sub.cells.end());

  if (hull.dim() >= 2) {
    for (const auto& e : faces_of_dim(hull, 1)) {
      if (!e.bounded()) continue;
      size_t a = index.at(e.vertices()[0]);
      size_t b = index.at(e.vertices()[1]);
      Integer g = 0;
      for (size_t k = 0; k < n; ++k) g = gcd(g, Integer(p.exponents()[a][k] - p.exponents()[b][k]));
      sub.edges.push_back({std::min(a, b), std::max(a, b), g.get_si()});
    }
  }
  std::sort(sub.edges.begin(), sub.edges.end(),
            [](const SubdivisionEdge& x, const SubdivisionEdge& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  return sub;
}

PolyhedralComplex hypersurface(const TropicalPolynomial& p) {
  const size_t n = p.num_variables();
  DualSubdivision sub = regular_subdivision(p);
  const auto& exps = p.exponents();
  const auto& coeffs = p.coefficients();
  const Rat sign = p.convention() == Convention::Min ? 1 : -1;

  auto difference = [&](size_t k, size_t i) {
    // sign * ((c_k + <m_k, x>) - (c_i + <m_i, x>)) >= 0 says term i is at least as good as term k.
    Constraint c{sign * (coeffs[k] - coeffs[i]), Vec(n)};
    for (size_t j = 0; j < n; ++j) c.a[j] = sign * Rat(exps[k][j] - exps[i][j]);
    return c;
  };

  std::vector<Polyhedron> cells;
  std::vector<long> weights;
  for (const auto& e : sub.edges) {
    HRep h;
    h.equations.push_back(difference(e.to, e.from));
    for (size_t k = 0; k < p.num_terms(); ++k) {
      if (k != e.from && k != e.to) h.inequalities.push_back(difference(k, e.from));
    }
    cells.push_back(Polyhedron::from_constraints(n, std::move(h)));
    weights.push_back(e.lattice_length);
  }
  if (cells.empty()) return PolyhedralComplex::from_points_and_cells(n, {}, {}, {}, std::vector<long>{});
  return PolyhedralComplex::from_polyhedra(n, cells, std::move(weights));
}

std::vector<Vec> vertices_off_hypersurface(const PolyhedralComplex& c, const TropicalPolynomial& p) {
  std::vector<Vec> off;
  for (const auto& pt : c.points()) {
    if (!PolyhedralComplex::is_vertex(pt)) continue;
    Vec x(pt.begin() + 1, pt.end());
    if (evaluate(p, x).argopt.size() < 2) off.push_back(std::move(x));
  }
  return off;
}

}  // namespace tropiscad
