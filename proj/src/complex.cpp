#include "tropiscad/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tropiscad/linalg.hpp"

namespace tropiscad {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare(a, b) < 0; }
};

// Vertices (leading 1) sort before rays (leading 0).
bool point_less(const Vec& a, const Vec& b) {
  bool va = sgn(a[0]) != 0, vb = sgn(b[0]) != 0;
  if (va != vb) return va;
  return compare(a, b) < 0;
}

Vec affine_part(const Vec& p) { return Vec(p.begin() + 1, p.end()); }

Vec with_lead(const Rat& lead, const Vec& x) {
  Vec p;
  p.reserve(x.size() + 1);
  p.push_back(lead);
  p.insert(p.end(), x.begin(), x.end());
  return p;
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<size_t> parent_;
};

// Is `sub` a face of `p`? Both are assumed nonempty with sub contained in p.
bool is_face_of(const Polyhedron& sub, const Polyhedron& p) {
  HRep h = p.constraints();
  for (const auto& c : p.inequalities()) {
    bool tight = true;
    for (const auto& v : sub.vertices()) tight = tight && sgn(c.eval(v)) == 0;
    for (const auto& r : sub.rays()) tight = tight && sgn(dot(c.a, r)) == 0;
    for (const auto& l : sub.lineality()) tight = tight && sgn(dot(c.a, l)) == 0;
    if (tight) h.equations.push_back(c);
  }
  return Polyhedron::from_constraints(p.ambient_dim(), std::move(h)) == sub;
}

}  // namespace

PolyhedralComplex PolyhedralComplex::from_points_and_cells(const std::vector<Vec>& points,
                                                           const std::vector<Cell>& cells,
                                                           const std::vector<Vec>& lineality,
                                                           std::optional<std::vector<long>> weights) {
  size_t n = 0;
  if (!points.empty()) {
    if (points.front().empty()) throw ComplexError("points need a homogenizing coordinate");
    n = points.front().size() - 1;
  } else if (!lineality.empty()) {
    n = lineality.front().size();
  } else if (!cells.empty()) {
    throw ComplexError("cells given without any points");
  }
  return from_points_and_cells(n, points, cells, lineality, std::move(weights));
}

PolyhedralComplex PolyhedralComplex::from_points_and_cells(size_t n, const std::vector<Vec>& points,
                                                           const std::vector<Cell>& cells,
                                                           const std::vector<Vec>& lineality,
                                                           std::optional<std::vector<long>> weights) {
  if (n > kMaxAmbientDim) throw ComplexError("ambient dimension " + std::to_string(n) + " is not supported");
  if (weights) {
    if (weights->size() != cells.size()) {
      throw ComplexError("expected " + std::to_string(cells.size()) + " weights, got " +
                         std::to_string(weights->size()));
    }
    for (size_t i = 0; i < weights->size(); ++i) {
      if ((*weights)[i] < 1) throw ComplexError("weight of cell " + std::to_string(i) + " must be positive");
    }
  }
  for (const auto& l : lineality) {
    if (l.size() != n) throw ComplexError("lineality direction has the wrong length");
  }

  PolyhedralComplex out;
  out.ambient_dim_ = n;
  out.lineality_ = canonical_basis(lineality, n);
  RowEchelon lin = rref(out.lineality_, n);

  // Normalized points; nullopt for rays that vanish modulo the lineality.
  std::vector<std::optional<Vec>> normalized(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const Vec& p = points[i];
    if (p.size() != n + 1) {
      throw ComplexError("point " + std::to_string(i) + " has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(n + 1));
    }
    int lead = sgn(p[0]);
    if (lead < 0) throw ComplexError("point " + std::to_string(i) + " has a negative leading coordinate");
    Vec x = affine_part(p);
    if (lead > 0) {
      for (auto& c : x) c /= p[0];
      normalized[i] = with_lead(Rat(1), reduce(x, lin));
    } else {
      if (is_zero(x)) throw ComplexError("point " + std::to_string(i) + " is a zero ray");
      Vec r = primitive(reduce(x, lin));
      if (!is_zero(r)) normalized[i] = with_lead(Rat(0), r);
    }
  }

  struct Pending {
    std::vector<Vec> gens;  // normalized homogeneous points
    Polyhedron poly;
    long weight;
  };
  std::vector<Pending> pending;
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    VRep v;
    v.lineality = out.lineality_;
    for (size_t idx : cells[ci]) {
      if (idx >= points.size()) {
        throw ComplexError("cell " + std::to_string(ci) + " refers to point " + std::to_string(idx) + " but only " +
                           std::to_string(points.size()) + " points exist");
      }
      if (!normalized[idx]) continue;
      const Vec& p = *normalized[idx];
      (sgn(p[0]) != 0 ? v.vertices : v.rays).push_back(affine_part(p));
    }
    if (v.vertices.empty()) {
      throw ComplexError("cell " + std::to_string(ci) + " has no vertex and spans no polyhedron");
    }
    Polyhedron poly = Polyhedron::from_generators(n, std::move(v));
    std::vector<Vec> gens;
    for (const auto& x : poly.vertices()) gens.push_back(with_lead(Rat(1), x));
    for (const auto& r : poly.rays()) gens.push_back(with_lead(Rat(0), r));
    pending.push_back({std::move(gens), std::move(poly), weights ? (*weights)[ci] : 1});
  }

  std::vector<Vec> all_points;
  for (const auto& p : pending) all_points.insert(all_points.end(), p.gens.begin(), p.gens.end());
  std::sort(all_points.begin(), all_points.end(), point_less);
  all_points.erase(std::unique(all_points.begin(), all_points.end()), all_points.end());
  std::map<Vec, size_t, VecLess> index;
  for (size_t i = 0; i < all_points.size(); ++i) index.emplace(all_points[i], i);

  struct Indexed {
    Cell cell;
    size_t source;
  };
  std::vector<Indexed> indexed;
  for (size_t i = 0; i < pending.size(); ++i) {
    Cell c;
    for (const auto& g : pending[i].gens) c.push_back(index.at(g));
    std::sort(c.begin(), c.end());
    indexed.push_back({std::move(c), i});
  }

  // Absorb cells contained in others; among duplicates keep the first.
  std::vector<bool> keep(indexed.size(), true);
  for (size_t i = 0; i < indexed.size(); ++i) {
    for (size_t j = 0; j < indexed.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Cell& a = indexed[i].cell;
      const Cell& b = indexed[j].cell;
      if (a.size() > b.size()) continue;
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      if (a.size() < b.size() || j < i) keep[i] = false;
    }
  }
  std::vector<Indexed> kept;
  for (size_t i = 0; i < indexed.size(); ++i) {
    if (keep[i]) kept.push_back(std::move(indexed[i]));
  }
  std::sort(kept.begin(), kept.end(), [](const Indexed& a, const Indexed& b) { return a.cell < b.cell; });

  // Drop unused points and renumber.
  std::vector<bool> used(all_points.size(), false);
  for (const auto& k : kept)
    for (size_t idx : k.cell) used[idx] = true;
  std::vector<size_t> renumber(all_points.size());
  for (size_t i = 0; i < all_points.size(); ++i) {
    if (!used[i]) continue;
    renumber[i] = out.points_.size();
    out.points_.push_back(all_points[i]);
  }
  for (auto& k : kept) {
    for (auto& idx : k.cell) idx = renumber[idx];
    out.cells_.push_back(k.cell);
    out.polyhedra_.push_back(pending[k.source].poly);
    out.weights_.push_back(pending[k.source].weight);
  }
  out.has_weights_ = weights.has_value();
  return out;
}

PolyhedralComplex PolyhedralComplex::from_polyhedra(size_t n, const std::vector<Polyhedron>& polys,
                                                    std::optional<std::vector<long>> weights) {
  std::vector<Vec> points;
  std::vector<Cell> cells;
  std::vector<Vec> lineality;
  for (size_t i = 0; i < polys.size(); ++i) {
    const Polyhedron& p = polys[i];
    if (p.ambient_dim() != n) throw ComplexError("cell " + std::to_string(i) + " lives in the wrong dimension");
    if (p.empty()) throw ComplexError("cell " + std::to_string(i) + " is empty");
    if (i == 0) {
      lineality = p.lineality();
    } else if (p.lineality() != lineality) {
      throw ComplexError("cell " + std::to_string(i) + " has a different lineality space");
    }
    Cell c;
    for (const auto& v : p.vertices()) {
      c.push_back(points.size());
      points.push_back(with_lead(Rat(1), v));
    }
    for (const auto& r : p.rays()) {
      c.push_back(points.size());
      points.push_back(with_lead(Rat(0), r));
    }
    cells.push_back(std::move(c));
  }
  return from_points_and_cells(n, points, cells, lineality, std::move(weights));
}

PolyhedralComplex PolyhedralComplex::without_weights() const {
  PolyhedralComplex c = *this;
  c.has_weights_ = false;
  std::fill(c.weights_.begin(), c.weights_.end(), 1);
  return c;
}

int PolyhedralComplex::dim() const {
  int d = -1;
  for (const auto& p : polyhedra_) d = std::max(d, p.dim());
  return d;
}

bool PolyhedralComplex::is_pure() const {
  int d = dim();
  return std::all_of(polyhedra_.begin(), polyhedra_.end(), [d](const Polyhedron& p) { return p.dim() == d; });
}

bool PolyhedralComplex::bounded() const {
  return lineality_.empty() && std::all_of(points_.begin(), points_.end(), [](const Vec& p) { return is_vertex(p); });
}

size_t PolyhedralComplex::num_vertices() const {
  return static_cast<size_t>(std::count_if(points_.begin(), points_.end(), [](const Vec& p) { return is_vertex(p); }));
}

void PolyhedralComplex::validate() const {
  for (size_t i = 0; i < polyhedra_.size(); ++i) {
    for (size_t j = i + 1; j < polyhedra_.size(); ++j) {
      Polyhedron common = intersect_polyhedra(polyhedra_[i], polyhedra_[j]);
      if (common.empty()) continue;
      if (!is_face_of(common, polyhedra_[i]) || !is_face_of(common, polyhedra_[j])) {
        throw ComplexError("cells " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not intersect in a common face");
      }
    }
  }
}

PolyhedralComplex skeleton(const PolyhedralComplex& c, int k) {
  if (k < 0 || k > c.dim()) {
    throw ComplexError("skeleton: k = " + std::to_string(k) + " outside [0, " + std::to_string(c.dim()) + "]");
  }
  std::vector<Polyhedron> faces;
  for (const auto& p : c.cell_polyhedra()) {
    if (p.dim() <= k) {
      faces.push_back(p);
      continue;
    }
    auto fs = faces_of_dim(p, k);
    faces.insert(faces.end(), fs.begin(), fs.end());
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) return PolyhedralComplex::from_points_and_cells(c.ambient_dim(), {}, {}, c.lineality(), {});
  return PolyhedralComplex::from_polyhedra(c.ambient_dim(), faces);
}

GraphStats graph_stats(const PolyhedralComplex& c) {
  if (c.dim() > 1) throw ComplexError("graph_stats needs a complex of dimension at most 1");
  GraphStats s;
  const auto& pts = c.points();
  s.num_vertices = c.num_vertices();
  UnionFind uf(pts.size());
  for (size_t i = 0; i < c.num_cells(); ++i) {
    const Cell& cell = c.maximal_cells()[i];
    if (c.cell(i).dim() != 1) continue;
    bool bounded_edge = c.lineality().empty() && cell.size() == 2 && PolyhedralComplex::is_vertex(pts[cell[0]]) &&
                        PolyhedralComplex::is_vertex(pts[cell[1]]);
    if (bounded_edge) {
      ++s.num_bounded_edges;
      uf.unite(cell[0], cell[1]);
    } else {
      ++s.num_unbounded_edges;
    }
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    if (PolyhedralComplex::is_vertex(pts[i]) && uf.find(i) == i) ++s.num_components;
  }
  s.first_betti_number = static_cast<long>(s.num_bounded_edges) - static_cast<long>(s.num_vertices) +
                         static_cast<long>(s.num_components);
  return s;
}

size_t num_components(const PolyhedralComplex& c) {
  UnionFind uf(c.points().size());
  const auto& pts = c.points();
  for (const auto& cell : c.maximal_cells()) {
    // Cells are located by their vertices; shared ray directions do not connect.
    for (size_t i = 1; i < cell.size(); ++i) {
      if (PolyhedralComplex::is_vertex(pts[cell[i]])) uf.unite(cell[0], cell[i]);
    }
  }
  std::vector<bool> root(c.points().size(), false);
  size_t count = 0;
  for (const auto& cell : c.maximal_cells()) {
    size_t r = uf.find(cell.front());
    if (!root[r]) {
      root[r] = true;
      ++count;
    }
  }
  return count;
}

bool contains_point(const PolyhedralComplex& c, const Vec& x) {
  return std::any_of(c.cell_polyhedra().begin(), c.cell_polyhedra().end(),
                     [&](const Polyhedron& p) { return p.contains(x); });
}

}  // namespace tropiscad
