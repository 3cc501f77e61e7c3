#pragma once

// OpenSCAD export. Every maximal cell becomes the convex hull of spheres
// centred at its vertices.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropiscad/complex.hpp"

namespace tropiscad {

class ScadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SceneKind { SurfaceOnly, CurveWithFrame, SurfaceAndCurve };

std::string_view to_string(SceneKind kind);

/// An HTML color name or an RGB triple with components in [0, 1].
struct Color {
  std::variant<std::string, std::array<Rat, 3>> value;

  /// Accepts "SlateGray", "[0.83,.15,0.27]" or "0.83,0.15,0.27".
  static Color parse(std::string_view text);
  /// `"SlateGray"` with quotes, or `[0.83, 0.15, 0.27]`.
  std::string scad() const;

  bool operator==(const Color&) const = default;
};

struct ScadParams {
  Color color_surface;
  Color color_curve;
  Color color_frame;
  Rat scaling_factor;
  Rat thickness_surface;
  Rat thickness_curve;
  Rat thickness_frame;
  int sphere_resolution = 24;

  /// The default parameter values of each template.
  static ScadParams defaults(SceneKind kind);
  /// Throws ScadError on nonpositive thickness, scale or resolution.
  void validate() const;
};

/// SurfaceOnly: primary is the surface. CurveWithFrame: primary is the
/// curve, secondary the frame. SurfaceAndCurve: primary is the surface,
/// secondary the curve.
struct Scene {
  SceneKind kind;
  PolyhedralComplex primary;
  std::optional<PolyhedralComplex> secondary;

  void validate() const;
};

/// Deterministic OpenSCAD source for the scene.
std::string emit_scad(const Scene& scene, const ScadParams& params);

/// Warnings for every complex whose printed wall (twice its thickness
/// parameter) would be thinner than 2 mm per 100 mm of model size once the
/// largest extent is scaled to `target_size_mm`.
std::vector<std::string> print_feasibility_check(const Scene& scene, const ScadParams& params,
                                                 const Rat& target_size_mm);

/// Exact decimal when possible, otherwise `a/b`.
std::string scad_number(const Rat& value);

}  // namespace tropiscad
