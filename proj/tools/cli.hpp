#pragma once

// Command-line driver: surface, curve, surface-and-curve and inspect.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropiscad/polynomial.hpp"
#include "tropiscad/scad.hpp"

namespace tropiscad::cli {

struct JobConfig {
  std::string command;
  std::optional<std::string> polynomial;
  std::optional<std::string> polynomial2;
  std::optional<std::string> complex_file;
  std::optional<std::string> surface_file;
  std::optional<std::string> box_file;
  std::vector<std::string> variables;
  std::optional<Convention> convention;
  Vec margins{Rat(1)};
  std::string out;
  bool no_clobber = false;
  Rat target_size_mm = 100;
  // Overrides on top of the template defaults.
  std::optional<std::string> color_surface, color_curve, color_frame;
  std::optional<Rat> thickness_surface, thickness_curve, thickness_frame, scale;
  std::optional<int> sphere_resolution;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void cmd_surface(const JobConfig& job, std::ostream& out);
void cmd_curve(const JobConfig& job, std::ostream& out);
void cmd_surface_and_curve(const JobConfig& job, std::ostream& out);
void cmd_inspect(const JobConfig& job, std::ostream& out);

/// Writes `text` to a temporary file next to `path` and renames it into place.
void write_atomically(const std::string& path, const std::string& text, bool no_clobber);

/// Parses arguments (argv[0] included) and runs the command. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropiscad::cli
