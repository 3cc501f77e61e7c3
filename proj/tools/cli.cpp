#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tropiscad/bounding.hpp"
#include "tropiscad/hypersurface.hpp"
#include "tropiscad/intersection.hpp"
#include "tropiscad/io.hpp"

namespace tropiscad::cli {

namespace fs = std::filesystem;

namespace {

TropicalPolynomial load_polynomial(const std::string& arg, const JobConfig& job, std::ostream& out) {
  TropicalPolynomial p = [&] {
    if (arg.ends_with(".json") && fs::exists(arg)) return polynomial_from_json(read_json_file(arg));
    std::vector<std::string> vars = job.variables.empty() ? collect_variables(arg) : job.variables;
    return parse_tropical_polynomial(arg, vars, job.convention);
  }();
  if (p.num_variables() == 4 && p.is_homogeneous()) {
    out << "note: dehomogenizing " << to_string(p) << " by setting " << p.variables()[0] << " = 0\n";
    p = dehomogenize(p);
  }
  return p;
}

PolyhedralComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

PolyhedralComplex surface_from(const TropicalPolynomial& p) {
  PolyhedralComplex s = hypersurface(p);
  if (s.empty()) throw CliError("empty hypersurface: " + to_string(p) + " has a single monomial");
  return s;
}

BoundingBox make_box(const JobConfig& job, const PolyhedralComplex& sized_by) {
  if (job.box_file) return box_from_json(read_json_file(*job.box_file));
  return generate_bounding_box(sized_by, job.margins);
}

ScadParams params_for(SceneKind kind, const JobConfig& job) {
  ScadParams p = ScadParams::defaults(kind);
  if (job.color_surface) p.color_surface = Color::parse(*job.color_surface);
  if (job.color_curve) p.color_curve = Color::parse(*job.color_curve);
  if (job.color_frame) p.color_frame = Color::parse(*job.color_frame);
  if (job.thickness_surface) p.thickness_surface = *job.thickness_surface;
  if (job.thickness_curve) p.thickness_curve = *job.thickness_curve;
  if (job.thickness_frame) p.thickness_frame = *job.thickness_frame;
  if (job.scale) p.scaling_factor = *job.scale;
  if (job.sphere_resolution) p.sphere_resolution = *job.sphere_resolution;
  p.validate();
  return p;
}

void describe_box(const BoundingBox& box, std::ostream& out) {
  Vec lo = box.lower(), hi = box.upper();
  out << "box:";
  for (size_t i = 0; i < lo.size(); ++i) out << (i ? " x " : " ") << "[" << to_string(lo[i]) << ", " << to_string(hi[i]) << "]";
  if (!box.is_cuboid()) out << " (custom polytope, " << box.polytope().vertices().size() << " vertices)";
  out << "\n";
}

void finish(const Scene& scene, const JobConfig& job, std::ostream& out) {
  if (job.out.empty()) throw CliError("--out is required");
  ScadParams params = params_for(scene.kind, job);
  std::string text = emit_scad(scene, params);
  for (const auto& w : print_feasibility_check(scene, params, job.target_size_mm)) out << "warning: " << w << "\n";
  write_atomically(job.out, text, job.no_clobber);
  out << "wrote " << job.out << "\n";
}

void require_3d(const PolyhedralComplex& c, const char* what) {
  if (c.ambient_dim() != 3) {
    throw CliError(std::string(what) + " lives in dimension " + std::to_string(c.ambient_dim()) + ", expected 3");
  }
}

}  // namespace

void write_atomically(const std::string& path, const std::string& text, bool no_clobber) {
  fs::path target(path);
  if (no_clobber && fs::exists(target)) throw CliError(path + " exists and --no-clobber is set");
  fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::random_device rd;
  fs::path tmp = dir / ("." + target.filename().string() + "." + std::to_string(rd()) + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw CliError("cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw CliError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliError("cannot move output into " + path);
  }
}

void cmd_surface(const JobConfig& job, std::ostream& out) {
  PolyhedralComplex surface = [&] {
    if (job.polynomial) return surface_from(load_polynomial(*job.polynomial, job, out));
    if (job.complex_file) return load_complex(*job.complex_file);
    throw CliError("surface needs --polynomial or --complex");
  }();
  require_3d(surface, "surface");
  if (surface.dim() != 2) throw CliError("surface has dimension " + std::to_string(surface.dim()) + ", expected 2");
  BoundingBox box = make_box(job, surface);
  PolyhedralComplex bounded = intersect_with_bounding_box(surface, box);
  out << "surface: " << surface.num_cells() << " cells, " << bounded.num_cells() << " after clipping\n";
  describe_box(box, out);
  finish(Scene{SceneKind::SurfaceOnly, bounded, std::nullopt}, job, out);
}

void cmd_curve(const JobConfig& job, std::ostream& out) {
  PolyhedralComplex curve, frame_surface;
  if (job.polynomial && job.polynomial2) {
    frame_surface = surface_from(load_polynomial(*job.polynomial, job, out));
    PolyhedralComplex other = surface_from(load_polynomial(*job.polynomial2, job, out));
    curve = stable_intersection(frame_surface, other);
    if (curve.empty()) throw CliError("the stable intersection of the two surfaces is empty");
  } else if (job.complex_file) {
    curve = load_complex(*job.complex_file);
    if (job.surface_file) frame_surface = load_complex(*job.surface_file);
    else if (job.polynomial) frame_surface = surface_from(load_polynomial(*job.polynomial, job, out));
    else throw CliError("curve needs a framing surface via --surface or --polynomial");
  } else {
    throw CliError("curve needs --polynomial and --polynomial2, or --complex with a framing surface");
  }
  require_3d(curve, "curve");
  require_3d(frame_surface, "frame surface");
  if (curve.dim() != 1) throw CliError("curve has dimension " + std::to_string(curve.dim()) + ", expected 1");
  if (frame_surface.dim() != 2) {
    throw CliError("frame surface has dimension " + std::to_string(frame_surface.dim()) + ", expected 2");
  }
  BoundingBox box = make_box(job, curve);
  PolyhedralComplex bounded = intersect_with_bounding_box(curve, box);
  PolyhedralComplex frame = frame_for_curve(frame_surface, box);
  out << "curve: " << curve.num_cells() << " cells, " << bounded.num_cells() << " after clipping\n";
  out << "frame: " << frame.num_cells() << " edges\n";
  describe_box(box, out);
  finish(Scene{SceneKind::CurveWithFrame, bounded, frame}, job, out);
}

void cmd_surface_and_curve(const JobConfig& job, std::ostream& out) {
  std::optional<TropicalPolynomial> poly;
  PolyhedralComplex surface;
  if (job.polynomial) {
    poly = load_polynomial(*job.polynomial, job, out);
    surface = surface_from(*poly);
  } else if (job.surface_file) {
    surface = load_complex(*job.surface_file);
  } else {
    throw CliError("surface-and-curve needs --polynomial or --surface");
  }
  if (!job.complex_file) throw CliError("surface-and-curve needs the curve via --complex");
  PolyhedralComplex curve = load_complex(*job.complex_file);
  if (curve.empty()) throw CliError("curve is empty");
  require_3d(surface, "surface");
  require_3d(curve, "curve");
  if (surface.dim() != 2) throw CliError("surface has dimension " + std::to_string(surface.dim()) + ", expected 2");
  if (curve.dim() != 1) throw CliError("curve has dimension " + std::to_string(curve.dim()) + ", expected 1");

  size_t off = 0;
  if (poly) {
    off = vertices_off_hypersurface(curve, *poly).size();
  } else {
    for (const auto& p : curve.points())
      if (PolyhedralComplex::is_vertex(p) && !contains_point(surface, Vec(p.begin() + 1, p.end()))) ++off;
  }
  if (off > 0) out << "warning: " << off << " curve vertices do not lie on the surface\n";

  BoundingBox box = make_box(job, curve);
  PolyhedralComplex s = intersect_with_bounding_box(surface, box);
  PolyhedralComplex c = intersect_with_bounding_box(curve, box);
  out << "surface: " << s.num_cells() << " cells, curve: " << c.num_cells() << " cells\n";
  describe_box(box, out);
  finish(Scene{SceneKind::SurfaceAndCurve, s, c}, job, out);
}

void cmd_inspect(const JobConfig& job, std::ostream& out) {
  if (!job.complex_file) throw CliError("inspect needs --complex");
  PolyhedralComplex c = load_complex(*job.complex_file);
  c.validate();
  out << "ambient dimension: " << c.ambient_dim() << "\n";
  out << "dimension: " << c.dim() << "\n";
  out << "points: " << c.points().size() << " (" << c.num_vertices() << " vertices, "
      << c.points().size() - c.num_vertices() << " rays)\n";
  out << "lineality dimension: " << c.lineality().size() << "\n";
  out << "maximal cells: " << c.num_cells() << "\n";
  out << "pure: " << (c.is_pure() ? "yes" : "no") << "\n";
  out << "bounded: " << (c.bounded() ? "yes" : "no") << "\n";
  out << "components: " << num_components(c) << "\n";
  if (c.dim() == 1) {
    GraphStats g = graph_stats(c);
    out << "bounded vertices: " << g.num_vertices << "\n";
    out << "bounded edges: " << g.num_bounded_edges << "\n";
    out << "unbounded edges: " << g.num_unbounded_edges << "\n";
    out << "first Betti number: " << g.first_betti_number << "\n";
  } else {
    out << "first Betti number: undefined\n";
  }
  if (c.has_weights() && c.is_pure()) {
    BalancingReport r = check_balancing(c);
    out << "balanced: " << (r.balanced ? "true" : "false") << "\n";
    for (const auto& id : r.violation_ids()) out << "violating ridge: " << id << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Printable OpenSCAD models of tropical surfaces and curves", "tropiscad"};
  app.require_subcommand(1);
  JobConfig job;
  std::string convention, margin, margins, target, scale, ts, tc, tf;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--polynomial", job.polynomial, "Tropical polynomial text or a polynomial JSON file");
    sub->add_option("--vars", job.variables, "Variable order, e.g. w,x,y,z (default: alphabetical)")->delimiter(',');
    sub->add_option("--convention", convention, "Require min or max")->check(CLI::IsMember({"min", "max"}));
    sub->add_option("--complex", job.complex_file, "Complex JSON file");
    auto* m1 = sub->add_option("--margin", margin, "Box margin on every axis (default 1)");
    auto* m2 = sub->add_option("--margins", margins, "Per-axis box margins RX,RY,RZ");
    m1->excludes(m2);
    sub->add_option("--box", job.box_file, "Bounding polytope JSON file");
    sub->add_option("--out", job.out, "Output .scad file")->required();
    sub->add_option("--color-surface", job.color_surface);
    sub->add_option("--color-curve", job.color_curve);
    sub->add_option("--color-frame", job.color_frame);
    sub->add_option("--thickness-surface", ts);
    sub->add_option("--thickness-curve", tc);
    sub->add_option("--thickness-frame", tf);
    sub->add_option("--scale", scale, "scalingFactor");
    sub->add_option("--fn", job.sphere_resolution, "Sphere resolution");
    sub->add_option("--target-size-mm", target, "Printed size used by the thickness check (default 100)");
    sub->add_flag("--no-clobber", job.no_clobber, "Fail instead of overwriting the output");
  };
  CLI::App* surface = app.add_subcommand("surface", "Clip a tropical surface and export it");
  common(surface);
  CLI::App* curve = app.add_subcommand("curve", "Export a tropical curve with a frame");
  common(curve);
  curve->add_option("--polynomial2", job.polynomial2, "Second surface; the curve is the stable intersection");
  curve->add_option("--surface", job.surface_file, "Framing surface complex JSON file");
  CLI::App* both = app.add_subcommand("surface-and-curve", "Export a surface with a curve on it");
  common(both);
  both->add_option("--surface", job.surface_file, "Surface complex JSON file");
  CLI::App* inspect = app.add_subcommand("inspect", "Report invariants of a complex");
  inspect->add_option("--complex", job.complex_file, "Complex JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    auto rat = [](const std::string& s, const char* flag) {
      try {
        return parse_rat(s);
      } catch (const std::invalid_argument&) {
        throw CliError(std::string(flag) + ": '" + s + "' is not a number");
      }
    };
    if (!convention.empty()) job.convention = convention == "min" ? Convention::Min : Convention::Max;
    if (!margin.empty()) job.margins = {rat(margin, "--margin")};
    if (!margins.empty()) {
      job.margins.clear();
      std::stringstream in(margins);
      std::string item;
      while (std::getline(in, item, ',')) job.margins.push_back(rat(item, "--margins"));
    }
    if (!target.empty()) job.target_size_mm = rat(target, "--target-size-mm");
    if (!scale.empty()) job.scale = rat(scale, "--scale");
    if (!ts.empty()) job.thickness_surface = rat(ts, "--thickness-surface");
    if (!tc.empty()) job.thickness_curve = rat(tc, "--thickness-curve");
    if (!tf.empty()) job.thickness_frame = rat(tf, "--thickness-frame");

    if (job.no_clobber && !job.out.empty() && fs::exists(job.out)) throw CliError(job.out + " exists and --no-clobber is set");
    CLI::App* chosen = app.get_subcommands().front();
    job.command = chosen->get_name();
    if (chosen == surface) cmd_surface(job, out);
    else if (chosen == curve) cmd_curve(job, out);
    else if (chosen == both) cmd_surface_and_curve(job, out);
    else cmd_inspect(job, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tropiscad::cli
