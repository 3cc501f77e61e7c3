#include "tropiscad/scad.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace tropiscad {

namespace {

struct Part {
  const PolyhedralComplex* complex;
  std::string role;       // "surface", "curve" or "frame"
  std::string color_var;  // colorSurface ...
  std::string thickness_var;
  Rat thickness;
};

std::vector<Part> parts(const Scene& scene, const ScadParams& p) {
  switch (scene.kind) {
    case SceneKind::SurfaceOnly:
      return {{&scene.primary, "surface", "colorSurface", "thicknessSurface", p.thickness_surface}};
    case SceneKind::CurveWithFrame:
      return {{&*scene.secondary, "frame", "colorFrame", "thicknessFrame", p.thickness_frame},
              {&scene.primary, "curve", "colorCurve", "thicknessCurve", p.thickness_curve}};
    case SceneKind::SurfaceAndCurve:
      return {{&scene.primary, "surface", "colorSurface", "thicknessSurface", p.thickness_surface},
              {&*scene.secondary, "curve", "colorCurve", "thicknessCurve", p.thickness_curve}};
  }
  return {};
}

void check_printable(const PolyhedralComplex& c, const std::string& role) {
  if (c.empty()) throw ScadError(role + ": nothing to print");
  if (!c.bounded()) throw ScadError(role + ": complex is unbounded, clip it to a bounding box first");
  if (c.dim() > 2) throw ScadError(role + ": cells of dimension " + std::to_string(c.dim()) + " cannot be printed");
  if (c.ambient_dim() > 3) throw ScadError(role + ": ambient dimension " + std::to_string(c.ambient_dim()) + " exceeds 3");
}

void check_positive(const Rat& x, const char* what) {
  if (sgn(x) <= 0) throw ScadError(std::string(what) + " must be positive, got " + to_string(x));
}

// Exact decimal, or two rounded decimals followed by the exact quotient.
std::string millimetres(const Rat& x) {
  if (auto d = exact_decimal(x, 12)) return *d + " mm";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x.get_d());
  return std::string(buf) + " mm (" + to_string(x) + ")";
}

}  // namespace

std::string_view to_string(SceneKind kind) {
  switch (kind) {
    case SceneKind::SurfaceOnly:
      return "surface";
    case SceneKind::CurveWithFrame:
      return "curve";
    case SceneKind::SurfaceAndCurve:
      return "surface-and-curve";
  }
  return "";
}

std::string scad_number(const Rat& value) {
  if (auto d = exact_decimal(value, 12)) return *d;
  return to_string(value);
}

Color Color::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ScadError("empty color");
  if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); })) return Color{s};
  if (s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::array<Rat, 3> rgb;
  std::stringstream in(s);
  std::string item;
  size_t k = 0;
  while (std::getline(in, item, ',')) {
    if (k == 3) throw ScadError("color '" + std::string(text) + "' has more than three components");
    try {
      rgb[k] = parse_rat(item);
    } catch (const std::invalid_argument&) {
      throw ScadError("color '" + std::string(text) + "' is neither a name nor an RGB triple");
    }
    if (sgn(rgb[k]) < 0 || rgb[k] > 1) throw ScadError("RGB component " + item + " is outside [0,1]");
    ++k;
  }
  if (k != 3) throw ScadError("color '" + std::string(text) + "' needs three components");
  return Color{rgb};
}

std::string Color::scad() const {
  if (const auto* name = std::get_if<std::string>(&value)) return "\"" + *name + "\"";
  const auto& rgb = std::get<std::array<Rat, 3>>(value);
  return "[" + scad_number(rgb[0]) + ", " + scad_number(rgb[1]) + ", " + scad_number(rgb[2]) + "]";
}

ScadParams ScadParams::defaults(SceneKind kind) {
  ScadParams p;
  p.color_surface = Color{std::string("SlateGray")};
  p.color_frame = Color{std::string("SlateGray")};
  p.color_curve = Color{std::array<Rat, 3>{Rat(83, 100), Rat(15, 100), Rat(27, 100)}};
  p.scaling_factor = 1;
  p.thickness_frame = Rat(5, 100);
  if (kind == SceneKind::SurfaceAndCurve) {
    p.thickness_surface = Rat(1, 100);
    p.thickness_curve = Rat(1, 10);
  } else {
    p.thickness_surface = Rat(5, 100);
    p.thickness_curve = Rat(5, 100);
  }
  return p;
}

void ScadParams::validate() const {
  check_positive(scaling_factor, "scalingFactor");
  check_positive(thickness_surface, "thicknessSurface");
  check_positive(thickness_curve, "thicknessCurve");
  check_positive(thickness_frame, "thicknessFrame");
  if (sphere_resolution <= 0) throw ScadError("sphere resolution must be positive");
  for (const Color* c : {&color_surface, &color_curve, &color_frame}) {
    if (const auto* rgb = std::get_if<std::array<Rat, 3>>(&c->value)) {
      for (const auto& x : *rgb)
        if (sgn(x) < 0 || x > 1) throw ScadError("RGB component " + to_string(x) + " is outside [0,1]");
    }
  }
}

void Scene::validate() const {
  if (kind == SceneKind::SurfaceOnly) {
    if (secondary) throw ScadError("a surface scene takes a single complex");
  } else if (!secondary) {
    throw ScadError(std::string(to_string(kind)) + " scene needs two complexes");
  }
  for (const auto& part : parts(*this, ScadParams::defaults(kind))) check_printable(*part.complex, part.role);
  const PolyhedralComplex& curve = kind == SceneKind::SurfaceAndCurve ? *secondary : primary;
  if (kind != SceneKind::SurfaceOnly && curve.dim() != 1) {
    throw ScadError("curve must be 1-dimensional, got dimension " + std::to_string(curve.dim()));
  }
  if (secondary && secondary->ambient_dim() != primary.ambient_dim()) {
    throw ScadError("scene complexes live in different dimensions");
  }
}

std::string emit_scad(const Scene& scene, const ScadParams& params) {
  scene.validate();
  params.validate();
  std::vector<Part> ps = parts(scene, params);

  std::ostringstream out;
  size_t total = 0;
  for (const auto& p : ps) total += p.complex->num_cells();
  out << "// Generated by tropiscad, template: " << to_string(scene.kind) << "\n";
  out << "// " << total << " cells";
  for (const auto& p : ps) out << ", " << p.role << " " << p.complex->num_cells();
  out << "\n\n";

  switch (scene.kind) {
    case SceneKind::SurfaceOnly:
      out << "colorSurface = " << params.color_surface.scad() << "; // color of surface\n";
      out << "scalingFactor = " << scad_number(params.scaling_factor) << "; // global scaling factor\n";
      out << "thicknessSurface = " << scad_number(params.thickness_surface) << "; // thickness of surface\n";
      break;
    case SceneKind::CurveWithFrame:
      out << "colorFrame = " << params.color_frame.scad() << "; // color of frame\n";
      out << "colorCurve = " << params.color_curve.scad() << "; // color of curve\n";
      out << "scalingFactor = " << scad_number(params.scaling_factor) << "; // global scaling factor\n";
      out << "thicknessFrame = " << scad_number(params.thickness_frame) << "; // thickness of frame\n";
      out << "thicknessCurve = " << scad_number(params.thickness_curve) << "; // thickness of curve\n";
      break;
    case SceneKind::SurfaceAndCurve:
      out << "colorSurface = " << params.color_surface.scad() << "; // color of surface\n";
      out << "colorCurve = " << params.color_curve.scad() << "; // color of curve\n";
      out << "scalingFactor = " << scad_number(params.scaling_factor) << "; // global scaling factor\n";
      out << "thicknessSurface = " << scad_number(params.thickness_surface) << "; // thickness of surface\n";
      out << "thicknessCurve = " << scad_number(params.thickness_curve) << "; // thickness of curve\n";
      break;
  }
  out << "sphereResolution = " << params.sphere_resolution << "; // facets per vertex sphere\n";

  size_t next = 0;
  std::vector<std::pair<size_t, size_t>> ranges;
  for (const auto& p : ps) {
    const PolyhedralComplex& c = *p.complex;
    size_t first = next;
    for (const auto& cell : c.maximal_cells()) {
      out << "\nmodule cell" << next++ << "() {\n  hull() {\n";
      for (size_t idx : cell) {
        const Vec& pt = c.points()[idx];
        out << "    translate([";
        for (size_t i = 1; i <= 3; ++i) {
          if (i > 1) out << ", ";
          out << (i < pt.size() ? scad_number(pt[i]) : "0");
        }
        out << "]) sphere(r = " << p.thickness_var << ", $fn = sphereResolution);\n";
      }
      out << "  }\n}\n";
    }
    ranges.emplace_back(first, next);
  }

  out << "\nscale(scalingFactor) {\n";
  for (size_t k = 0; k < ps.size(); ++k) {
    out << "  color(" << ps[k].color_var << ") {\n";
    for (size_t i = ranges[k].first; i < ranges[k].second; ++i) out << "    cell" << i << "();\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::string> print_feasibility_check(const Scene& scene, const ScadParams& params,
                                                 const Rat& target_size_mm) {
  if (sgn(target_size_mm) <= 0) throw ScadError("target size must be positive, got " + to_string(target_size_mm));
  scene.validate();
  std::vector<Part> ps = parts(scene, params);

  std::optional<Vec> lo, hi;
  for (const auto& p : ps) {
    for (const auto& pt : p.complex->points()) {
      Vec x(pt.begin() + 1, pt.end());
      if (!lo) {
        lo = hi = x;
        continue;
      }
      for (size_t i = 0; i < x.size(); ++i) {
        (*lo)[i] = std::min((*lo)[i], x[i]);
        (*hi)[i] = std::max((*hi)[i], x[i]);
      }
    }
  }
  Rat extent = 0;
  for (size_t i = 0; i < lo->size(); ++i) extent = std::max(extent, Rat((*hi)[i] - (*lo)[i]));
  if (sgn(extent) == 0) return {"model has zero extent and cannot be scaled to " + scad_number(target_size_mm) + " mm"};

  const Rat minimum = 2 * target_size_mm / 100;
  std::vector<std::string> warnings;
  for (const auto& p : ps) {
    Rat wall = 2 * p.thickness * target_size_mm / extent;
    if (wall < minimum) {
      warnings.push_back(p.role + ": wall thickness " + millimetres(wall) + " is below the recommended " +
                         millimetres(minimum) + " for a " + millimetres(target_size_mm) + " print (" + p.thickness_var +
                         " = " + scad_number(p.thickness) + ")");
    }
  }
  return warnings;
}

}  // namespace tropiscad
