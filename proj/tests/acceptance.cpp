// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "model_data.hpp"
#include "oracles.hpp"
#include "scenes.hpp"
#include "tropiscad/bounding.hpp"
#include "tropiscad/hypersurface.hpp"
#include "tropiscad/intersection.hpp"
#include "tropiscad/linalg.hpp"

namespace {

using namespace tropiscad;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks; the first failure message is kept for the summary line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (out_.pass) out_.detail = what;
    out_.pass = false;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = out_.detail.empty() ? s : out_.detail + "; " + s;
  }
  Outcome outcome() const { return out_; }

 private:
  Outcome out_;
};

const std::vector<std::string> kWXYZ = {"w", "x", "y", "z"};

std::vector<Vec> exponent_points(const TropicalPolynomial& p) {
  std::vector<Vec> pts;
  for (const auto& e : p.exponents()) {
    Vec v;
    for (long x : e) v.emplace_back(x);
    pts.push_back(std::move(v));
  }
  return pts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

long ray_weight(const PolyhedralComplex& c, const Vec& dir) {
  long w = 0;
  for (size_t i = 0; i < c.num_cells(); ++i) {
    const Polyhedron& p = c.cell(i);
    if (!p.bounded() && primitive(p.rays().at(0)) == dir) w += c.weights()[i];
  }
  return w;
}

std::vector<Polyhedron> polyhedra(const PolyhedralComplex& c) {
  std::vector<Polyhedron> out;
  for (size_t i = 0; i < c.num_cells(); ++i) out.push_back(c.cell(i));
  return out;
}

Outcome quadric_surface() {
  Checks c;
  TropicalPolynomial p = dehomogenize(parse_tropical_polynomial(models::kQuadricText, kWXYZ));
  PolyhedralComplex t = hypersurface(p);
  c.expect(t.is_pure() && t.dim() == 2, "not pure of dimension 2");
  c.expect(num_components(t) == 1, "not connected");
  c.expect(check_balancing(t).balanced, "not balanced");
  auto expected = oracle::brute_force_subdivision(exponent_points(p), p.coefficients(), true);
  c.expect(regular_subdivision(p).cells == expected, "dual subdivision differs from the lower hull oracle");
  c.note(std::to_string(t.num_cells()) + " cells, " + std::to_string(expected.size()) + " subdivision cells");
  return c.outcome();
}

Outcome membership() {
  Checks c;
  std::mt19937 rng(1000);
  std::vector<TropicalPolynomial> ps{dehomogenize(parse_tropical_polynomial(models::kQuadricText, kWXYZ))};
  for (int i = 0; i < 20; ++i) {
    ps.push_back(gen::random_polynomial(rng, 2 + i % 2, 3 + i % 4, 2, i % 3 ? Convention::Min : Convention::Max));
  }
  size_t on = 0, off = 0, bad = 0;
  for (const auto& p : ps) {
    gen::MembershipTally t = gen::check_membership(p, hypersurface(p), 1000, rng);
    on += t.on_hypersurface;
    off += t.off_hypersurface;
    bad += t.mismatches;
  }
  c.expect(bad == 0, std::to_string(bad) + " mismatches");
  c.note(std::to_string(ps.size()) + " complexes, " + std::to_string(on) + " on, " + std::to_string(off) + " off");
  return c.outcome();
}

Outcome genus2_inspect() {
  Checks c;
  cli::JobConfig job;
  job.command = "inspect";
  job.complex_file = std::string(TROPISCAD_DATA_DIR) + "/genus2_curve.json";
  std::ostringstream out;
  cli::cmd_inspect(job, out);
  const std::string s = out.str();
  for (const char* line : {"bounded vertices: 14", "bounded edges: 15", "components: 1", "first Betti number: 2"}) {
    c.expect(has_line(s, line), std::string("missing \"") + line + "\"");
  }
  c.note("14 vertices, 15 edges, 1 component, genus 2");
  return c.outcome();
}

Outcome sextic_curve() {
  Checks c;
  PolyhedralComplex q = hypersurface(models::sextic_quadric());
  PolyhedralComplex k = hypersurface(models::sextic_cubic());
  PolyhedralComplex s = stable_intersection(q, k);
  c.expect(s.is_pure() && s.dim() == 1, "not pure of dimension 1");
  c.expect(check_balancing(s).balanced, "not balanced");

  auto oracle_weights = oracle::perturbed_ray_weights(polyhedra(q), q.weights(), polyhedra(k), k.weights(),
                                                      Rat(1, 100000), Vec{Rat(2), Rat(-5, 3), Rat(7, 11)});
  bool agree = true;
  for (const auto& [dir, w] : oracle_weights) agree = agree && ray_weight(s, dir) == w.get_si();
  size_t rays = 0;
  for (size_t i = 0; i < s.num_cells(); ++i) rays += !s.cell(i).bounded();
  c.expect(agree, "ray weights differ from the perturbation oracle");

  const Vec up{1, 1, 1}, down{-1, -1, -1};
  const long w_up = ray_weight(s, up);
  const auto it = oracle_weights.find(up);
  const long oracle_up = it == oracle_weights.end() ? 0 : it->second.get_si();
  c.expect(w_up == 6, "weight towards (1,1,1) is " + std::to_string(w_up) + " (oracle " + std::to_string(oracle_up) +
                          "), weight towards (-1,-1,-1) is " + std::to_string(ray_weight(s, down)));
  c.note(std::to_string(s.num_cells()) + " cells, oracle agrees on " + std::to_string(oracle_weights.size()) +
         " ray directions");
  return c.outcome();
}

Outcome bounding() {
  Checks c;
  std::vector<PolyhedralComplex> complexes{
      models::genus2_curve(),
      models::quartic_curve(),
      hypersurface(dehomogenize(parse_tropical_polynomial(models::kQuadricText, kWXYZ))),
      hypersurface(parse_tropical_polynomial("min(0, x, y, z)", {"x", "y", "z"})),
      hypersurface(parse_tropical_polynomial("min(0, x, y)", {"x", "y"})),
      hypersurface(parse_tropical_polynomial("min(0, x)", {"x", "y", "z"})),
      stable_intersection(hypersurface(models::sextic_quadric()), hypersurface(models::sextic_cubic())),
  };
  std::mt19937 rng(55);
  for (int i = 0; i < 10; ++i) complexes.push_back(hypersurface(gen::random_polynomial(rng, 2 + i % 2, 4, 2)));

  for (size_t i = 0; i < complexes.size(); ++i) {
    const PolyhedralComplex& x = complexes[i];
    const size_t n = x.ambient_dim();
    bool has_vertex = false;
    for (const auto& p : x.points()) has_vertex = has_vertex || PolyhedralComplex::is_vertex(p);
    BoundingBox box = has_vertex ? generate_bounding_box(x) : BoundingBox::cuboid(Vec(n, Rat(-3)), Vec(n, Rat(3)));
    PolyhedralComplex clipped = intersect_with_bounding_box(x, box);
    const std::string tag = "complex " + std::to_string(i);
    c.expect(clipped.lineality().empty(), tag + ": lineality survived");
    for (const auto& p : clipped.points()) {
      c.expect(PolyhedralComplex::is_vertex(p), tag + ": point with leading 0");
      Vec v(p.begin() + 1, p.end());
      for (const auto& h : box.polytope().inequalities())
        c.expect(sgn(h.eval(v)) >= 0, tag + ": vertex " + to_string(v) + " outside the box");
    }
  }
  BoundingBox g = generate_bounding_box(models::genus2_curve());
  c.expect(g.lower() == Vec{-11, -9, -1} && g.upper() == Vec{11, 11, 4},
           "genus-2 box is " + to_string(g.lower()) + " to " + to_string(g.upper()));
  c.note(std::to_string(complexes.size()) + " complexes clipped");
  return c.outcome();
}

Outcome duality() {
  Checks c;
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> count(3, 9);
  std::uniform_int_distribution<long> slack(0, 3);
  size_t bounded = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // Inequalities a.x >= a.p - s all hold at a random point p, so the polyhedron is nonempty.
    Vec p{gen::small_rat(rng, -3, 3, 2), gen::small_rat(rng, -3, 3, 2), gen::small_rat(rng, -3, 3, 2)};
    HRep h;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
      Vec a{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
      h.inequalities.push_back(Constraint{Rat(slack(rng)) - dot(a, p), a});
    }
    VRep v1 = vertex_enumeration(3, h);
    HRep h2 = facet_enumeration(3, v1);
    VRep v2 = vertex_enumeration(3, h2);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(!v1.vertices.empty(), tag + ": empty");
    c.expect(v1.vertices == v2.vertices && v1.rays == v2.rays && v1.lineality == v2.lineality, tag + ": V differs");
    HRep h3 = facet_enumeration(3, v2);
    c.expect(h2.inequalities == h3.inequalities && h2.equations == h3.equations, tag + ": H differs");
    bounded += v1.rays.empty() && v1.lineality.empty();
  }
  c.note("50 polyhedra, " + std::to_string(bounded) + " bounded");
  return c.outcome();
}

Outcome scad_goldens() {
  Checks c;
  const std::string dir = std::string(TROPISCAD_TEST_DIR) + "/golden/";
  const std::string surface = emit_scad(scenes::surface_scene(), ScadParams::defaults(SceneKind::SurfaceOnly));
  const std::string curve = emit_scad(scenes::curve_scene(), ScadParams::defaults(SceneKind::CurveWithFrame));
  const std::string both =
      emit_scad(scenes::surface_and_curve_scene(), ScadParams::defaults(SceneKind::SurfaceAndCurve));
  c.expect(surface == read_file(dir + "surface.scad"), "surface.scad differs");
  c.expect(curve == read_file(dir + "curve.scad"), "curve.scad differs");
  c.expect(both == read_file(dir + "surface_and_curve.scad"), "surface_and_curve.scad differs");
  c.expect(has_line(surface, "thicknessSurface = 0.05; // thickness of surface"), "surface thickness line");
  c.expect(has_line(surface, "colorSurface = \"SlateGray\"; // color of surface"), "surface color line");
  c.expect(has_line(both, "thicknessSurface = 0.01; // thickness of surface"), "combined surface thickness line");
  c.expect(has_line(both, "thicknessCurve = 0.1; // thickness of curve"), "combined curve thickness line");
  c.note("3 goldens byte-exact");
  return c.outcome();
}

Outcome feasibility() {
  Checks c;
  ScadParams p = ScadParams::defaults(SceneKind::SurfaceOnly);
  p.thickness_surface = parse_rat("0.05");
  auto thin = print_feasibility_check(scenes::ten_unit_scene(), p, 100);
  c.expect(thin.size() == 1, "0.05 gave " + std::to_string(thin.size()) + " warnings");
  p.thickness_surface = parse_rat("0.2");
  auto thick = print_feasibility_check(scenes::ten_unit_scene(), p, 100);
  c.expect(thick.empty(), "0.2 gave " + std::to_string(thick.size()) + " warnings");
  if (!thin.empty()) c.note(thin[0]);
  return c.outcome();
}

Outcome plane_and_quartic() {
  Checks c;
  TropicalPolynomial plane = dehomogenize(parse_tropical_polynomial(models::kPlaneText, kWXYZ));
  PolyhedralComplex curve = models::quartic_curve();
  c.expect(curve.dim() == 1, "quartic is not a curve");
  auto off = vertices_off_hypersurface(curve, plane);
  c.expect(off.empty(), std::to_string(off.size()) + " vertices off the plane");
  c.note(std::to_string(curve.points().size()) + " curve points checked");
  return c.outcome();
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quadric surface", 5, quadric_surface},
      {2, "membership", 30, membership},
      {3, "genus-2 inspect", 1, genus2_inspect},
      {4, "sextic curve", 60, sextic_curve},
      {5, "bounding", 5, bounding},
      {6, "duality round trips", 30, duality},
      {7, "scad goldens", 1, scad_goldens},
      {8, "print feasibility", 1, feasibility},
      {9, "plane and quartic", 1, plane_and_quartic},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      o.pass = false;
      o.detail = "over the time limit; " + o.detail;
    }
    failed += !o.pass;
    std::printf("criterion %d %s: %s (%.3f s, limit %g s) %s\n", cr.id, cr.name.c_str(), o.pass ? "PASS" : "FAIL", seconds,
                cr.limit_seconds, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
