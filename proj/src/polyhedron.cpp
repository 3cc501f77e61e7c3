#include "tropiscad/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tropiscad/linalg.hpp"

namespace tropiscad {

namespace {

class Bits {
 public:
  explicit Bits(size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
  bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }
  size_t count() const {
    size_t c = 0;
    for (auto w : words_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<uint64_t> words_;
};

struct ConeRay {
  Vec v;
  Bits zero;
};

struct ConeGenerators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Generators of {y in R^d : A y >= 0, E y = 0} by incremental insertion of the
// constraints (double description). Rays are kept minimal at every step, so
// the combinatorial adjacency test is exact.
ConeGenerators double_description(size_t d, const std::vector<Vec>& ineqs, const std::vector<Vec>& eqs) {
  std::vector<Vec> lin;
  for (size_t i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }

  size_t hull_dim = d;
  for (const auto& e : eqs) {
    auto it = std::find_if(lin.begin(), lin.end(), [&](const Vec& l) { return sgn(dot(e, l)) != 0; });
    if (it == lin.end()) continue;
    Vec pivot = *it;
    lin.erase(it);
    Rat pe = dot(e, pivot);
    for (auto& l : lin) {
      Rat f = dot(e, l) / pe;
      if (sgn(f) == 0) continue;
      for (size_t c = 0; c < d; ++c) l[c] -= f * pivot[c];
    }
    --hull_dim;
  }

  const size_t m = ineqs.size();
  std::vector<ConeRay> rays;
  for (size_t idx = 0; idx < m; ++idx) {
    const Vec& h = ineqs[idx];

    auto it = std::find_if(lin.begin(), lin.end(), [&](const Vec& l) { return sgn(dot(h, l)) != 0; });
    if (it != lin.end()) {
      Vec pivot = *it;
      lin.erase(it);
      Rat ph = dot(h, pivot);
      if (sgn(ph) < 0) {
        for (auto& x : pivot) x = -x;
        ph = -ph;
      }
      for (auto& l : lin) {
        Rat f = dot(h, l) / ph;
        if (sgn(f) == 0) continue;
        for (size_t c = 0; c < d; ++c) l[c] -= f * pivot[c];
      }
      for (auto& r : rays) {
        Rat f = dot(h, r.v) / ph;
        if (sgn(f) != 0) {
          for (size_t c = 0; c < d; ++c) r.v[c] -= f * pivot[c];
          r.v = primitive(r.v);
        }
        r.zero.set(idx);
      }
      Bits z(m);
      for (size_t j = 0; j < idx; ++j) z.set(j);
      rays.push_back({primitive(pivot), std::move(z)});
      continue;
    }

    std::vector<Rat> s(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(h, rays[i].v);
      int sg = sgn(s[i]);
      if (sg > 0) pos.push_back(i);
      else if (sg < 0) neg.push_back(i);
      else rays[i].zero.set(idx);
    }
    if (neg.empty()) continue;

    std::vector<ConeRay> next;
    next.reserve(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      if (sgn(s[i]) >= 0) next.push_back(rays[i]);
    }
    const size_t needed = hull_dim >= lin.size() + 2 ? hull_dim - lin.size() - 2 : 0;
    for (size_t p : pos) {
      for (size_t n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() < needed) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec v(d);
        for (size_t c = 0; c < d; ++c) v[c] = s[p] * rays[n].v[c] - s[n] * rays[p].v[c];
        common.set(idx);
        next.push_back({primitive(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

void check_dim(size_t dim) {
  if (dim > kMaxAmbientDim) {
    throw GeometryError("ambient dimension " + std::to_string(dim) + " exceeds the supported maximum of " +
                        std::to_string(kMaxAmbientDim));
  }
}

void check_length(const Vec& v, size_t n, const char* what) {
  if (v.size() != n) {
    throw GeometryError(std::string("ambient dimension mismatch: ") + what + " has length " +
                        std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
}

std::vector<size_t> linear_part_first(size_t n) {
  std::vector<size_t> order;
  for (size_t c = 1; c <= n; ++c) order.push_back(c);
  order.push_back(0);
  return order;
}

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) { return compare(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

Vec homogenize(const Rat& lead, const Vec& x) {
  Vec y;
  y.reserve(x.size() + 1);
  y.push_back(lead);
  y.insert(y.end(), x.begin(), x.end());
  return y;
}

Vec homogenize(const Constraint& c) { return homogenize(c.b, c.a); }

Constraint dehomogenize_constraint(const Vec& y) {
  return Constraint{y[0], Vec(y.begin() + 1, y.end())};
}

VRep canonical_vrep(size_t n, const VRep& raw) {
  VRep out;
  out.lineality = canonical_basis(raw.lineality, n);
  RowEchelon lin = rref(out.lineality, n);
  for (const auto& v : raw.vertices) out.vertices.push_back(reduce(v, lin));
  for (const auto& r : raw.rays) {
    Vec red = primitive(reduce(r, lin));
    if (!is_zero(red)) out.rays.push_back(std::move(red));
  }
  sort_unique(out.vertices);
  sort_unique(out.rays);
  return out;
}

HRep empty_hrep(size_t n) { return HRep{{Constraint{Rat(-1), Vec(n, Rat(0))}}, {}}; }

}  // namespace

VRep vertex_enumeration(size_t n, const HRep& h) {
  check_dim(n);
  std::vector<Vec> ineqs, eqs;
  ineqs.push_back(homogenize(Rat(1), Vec(n, Rat(0))));
  for (const auto& c : h.inequalities) {
    check_length(c.a, n, "inequality");
    ineqs.push_back(homogenize(c));
  }
  for (const auto& c : h.equations) {
    check_length(c.a, n, "equation");
    eqs.push_back(homogenize(c));
  }
  ConeGenerators cone = double_description(n + 1, ineqs, eqs);

  VRep raw;
  for (const auto& y : cone.rays) {
    Vec x(y.begin() + 1, y.end());
    if (sgn(y[0]) > 0) {
      for (auto& c : x) c /= y[0];
      raw.vertices.push_back(std::move(x));
    } else {
      raw.rays.push_back(std::move(x));
    }
  }
  if (raw.vertices.empty()) return VRep{};
  for (const auto& y : cone.lineality) raw.lineality.emplace_back(y.begin() + 1, y.end());
  return canonical_vrep(n, raw);
}

HRep facet_enumeration(size_t n, const VRep& v) {
  check_dim(n);
  if (v.vertices.empty()) throw GeometryError("facet enumeration needs at least one vertex");
  std::vector<Vec> ineqs, eqs;
  for (const auto& p : v.vertices) {
    check_length(p, n, "vertex");
    ineqs.push_back(homogenize(Rat(1), p));
  }
  for (const auto& r : v.rays) {
    check_length(r, n, "ray");
    ineqs.push_back(homogenize(Rat(0), r));
  }
  for (const auto& l : v.lineality) {
    check_length(l, n, "lineality direction");
    eqs.push_back(homogenize(Rat(0), l));
  }
  ConeGenerators polar = double_description(n + 1, ineqs, eqs);

  HRep out;
  RowEchelon eq = rref(polar.lineality, n + 1, linear_part_first(n));
  for (const auto& row : eq.rows) out.equations.push_back(dehomogenize_constraint(primitive(row)));
  std::vector<Vec> facets;
  for (const auto& y : polar.rays) {
    Vec red = primitive(reduce(y, eq));
    if (std::all_of(red.begin() + 1, red.end(), [](const Rat& x) { return sgn(x) == 0; })) continue;
    facets.push_back(std::move(red));
  }
  sort_unique(facets);
  for (const auto& f : facets) out.inequalities.push_back(dehomogenize_constraint(f));
  std::sort(out.equations.begin(), out.equations.end(), [](const Constraint& a, const Constraint& b) {
    return compare(homogenize(a), homogenize(b)) < 0;
  });
  return out;
}

Polyhedron Polyhedron::from_constraints(size_t n, HRep h) {
  VRep v = vertex_enumeration(n, h);
  if (v.vertices.empty()) return Polyhedron(n, empty_hrep(n), VRep{});
  HRep canonical = facet_enumeration(n, v);
  return Polyhedron(n, std::move(canonical), std::move(v));
}

Polyhedron Polyhedron::from_generators(size_t n, VRep v) {
  HRep h = facet_enumeration(n, v);
  VRep canonical = vertex_enumeration(n, h);
  return Polyhedron(n, std::move(h), std::move(canonical));
}

Polyhedron Polyhedron::whole_space(size_t n) { return from_constraints(n, HRep{}); }

int Polyhedron::dim() const {
  if (empty()) return -1;
  return static_cast<int>(ambient_dim_) - static_cast<int>(h_.equations.size());
}

bool Polyhedron::contains(const Vec& x) const {
  if (x.size() != ambient_dim_) throw GeometryError("contains: dimension mismatch");
  if (empty()) return false;
  for (const auto& c : h_.equations) {
    if (sgn(c.eval(x)) != 0) return false;
  }
  for (const auto& c : h_.inequalities) {
    if (sgn(c.eval(x)) < 0) return false;
  }
  return true;
}

bool Polyhedron::contains_direction(const Vec& d) const {
  if (d.size() != ambient_dim_) throw GeometryError("contains_direction: dimension mismatch");
  if (empty()) return false;
  for (const auto& c : h_.equations) {
    if (sgn(dot(c.a, d)) != 0) return false;
  }
  for (const auto& c : h_.inequalities) {
    if (sgn(dot(c.a, d)) < 0) return false;
  }
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.empty()) return true;
  for (const auto& v : other.vertices()) {
    if (!contains(v)) return false;
  }
  for (const auto& r : other.rays()) {
    if (!contains_direction(r)) return false;
  }
  for (const auto& l : other.lineality()) {
    Vec neg = l;
    for (auto& x : neg) x = -x;
    if (!contains_direction(l) || !contains_direction(neg)) return false;
  }
  return true;
}

std::vector<Vec> Polyhedron::tangent_space() const {
  std::vector<Vec> rows;
  for (const auto& c : h_.equations) rows.push_back(c.a);
  return null_space(rows, ambient_dim_);
}

Vec Polyhedron::relative_interior_point() const {
  if (empty()) throw GeometryError("relative_interior_point: empty polyhedron");
  Vec p(ambient_dim_, Rat(0));
  for (const auto& v : v_.vertices) {
    for (size_t i = 0; i < ambient_dim_; ++i) p[i] += v[i];
  }
  Rat k(static_cast<long>(v_.vertices.size()));
  for (auto& x : p) x /= k;
  for (const auto& r : v_.rays) {
    for (size_t i = 0; i < ambient_dim_; ++i) p[i] += r[i];
  }
  return p;
}

bool Polyhedron::operator==(const Polyhedron& o) const {
  return ambient_dim_ == o.ambient_dim_ && v_.vertices == o.v_.vertices && v_.rays == o.v_.rays &&
         v_.lineality == o.v_.lineality;
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
  auto lex = [](const std::vector<Vec>& x, const std::vector<Vec>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Vec& p, const Vec& q) { return compare(p, q) < 0; });
  };
  if (a.vertices() != b.vertices()) return lex(a.vertices(), b.vertices());
  if (a.rays() != b.rays()) return lex(a.rays(), b.rays());
  return lex(a.lineality(), b.lineality());
}

std::string Polyhedron::describe() const {
  std::ostringstream os;
  if (empty()) return "{}";
  os << "conv{";
  for (size_t i = 0; i < v_.vertices.size(); ++i) os << (i ? "," : "") << to_string(v_.vertices[i]);
  os << "}";
  if (!v_.rays.empty()) {
    os << "+cone{";
    for (size_t i = 0; i < v_.rays.size(); ++i) os << (i ? "," : "") << to_string(v_.rays[i]);
    os << "}";
  }
  if (!v_.lineality.empty()) {
    os << "+span{";
    for (size_t i = 0; i < v_.lineality.size(); ++i) os << (i ? "," : "") << to_string(v_.lineality[i]);
    os << "}";
  }
  return os.str();
}

Polyhedron intersect_polyhedra(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw GeometryError("intersect_polyhedra: ambient dimensions " + std::to_string(p.ambient_dim()) + " and " +
                        std::to_string(q.ambient_dim()) + " differ");
  }
  HRep h = p.constraints();
  h.inequalities.insert(h.inequalities.end(), q.inequalities().begin(), q.inequalities().end());
  h.equations.insert(h.equations.end(), q.equations().begin(), q.equations().end());
  return Polyhedron::from_constraints(p.ambient_dim(), std::move(h));
}

std::vector<Polyhedron> faces_of_dim(const Polyhedron& p, int k) {
  if (k < 0 || k > p.dim()) {
    throw GeometryError("faces_of_dim: k = " + std::to_string(k) + " outside [0, " + std::to_string(p.dim()) + "]");
  }
  const size_t n = p.ambient_dim();
  const size_t nv = p.vertices().size();
  std::vector<Vec> gens = p.vertices();
  gens.insert(gens.end(), p.rays().begin(), p.rays().end());

  // Incidence of generators with facets.
  std::vector<std::vector<bool>> incidence;
  for (const auto& f : p.inequalities()) {
    std::vector<bool> row(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) {
      row[g] = sgn(g < nv ? f.eval(gens[g]) : dot(f.a, gens[g])) == 0;
    }
    incidence.push_back(std::move(row));
  }

  auto face_dim = [&](const std::vector<size_t>& face) {
    std::vector<Vec> rows;
    for (size_t g : face) rows.push_back(homogenize(Rat(g < nv ? 1 : 0), gens[g]));
    for (const auto& l : p.lineality()) rows.push_back(homogenize(Rat(0), l));
    return static_cast<int>(rank(rows, n + 1)) - 1;
  };

  using Face = std::vector<size_t>;
  std::set<Face> level;
  Face all(gens.size());
  for (size_t g = 0; g < gens.size(); ++g) all[g] = g;
  level.insert(all);
  int level_dim = p.dim();

  while (level_dim > k) {
    std::set<Face> next;
    for (const auto& face : level) {
      std::vector<Face> candidates;
      for (const auto& row : incidence) {
        Face sub;
        for (size_t g : face) {
          if (row[g]) sub.push_back(g);
        }
        if (sub.size() == face.size()) continue;
        if (sub.empty() || sub.front() >= nv) continue;
        candidates.push_back(std::move(sub));
      }
      for (size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < candidates.size() && maximal; ++j) {
          if (i == j || candidates[i] == candidates[j]) continue;
          if (std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(), candidates[i].end())) {
            maximal = false;
          }
        }
        if (maximal) next.insert(candidates[i]);
      }
    }
    level = std::move(next);
    --level_dim;
  }

  std::vector<Polyhedron> faces;
  for (const auto& face : level) {
    if (face_dim(face) != k) continue;
    VRep v;
    for (size_t g : face) (g < nv ? v.vertices : v.rays).push_back(gens[g]);
    v.lineality = p.lineality();
    faces.push_back(Polyhedron::from_generators(n, std::move(v)));
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

}  // namespace tropiscad
