#pragma once

// JSON forms of complexes, polynomials and bounding polytopes. Rationals are
// strings such as "-1/4"; plain JSON integers are accepted on input.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tropiscad/bounding.hpp"
#include "tropiscad/complex.hpp"
#include "tropiscad/polynomial.hpp"

namespace tropiscad {

/// Malformed input; what() starts with the JSON pointer of the offending value.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// {"points": [["1","-1","-1","0"], ...], "lineality": [...], "maximal_cells": [[0,1], ...], "weights": [1, ...]}
nlohmann::json complex_to_json(const PolyhedralComplex& c);
PolyhedralComplex complex_from_json(const nlohmann::json& j);

/// {"convention": "min", "variables": [...], "monomials": [[...]], "coefficients": ["1", ...]}
nlohmann::json polynomial_to_json(const TropicalPolynomial& p);
TropicalPolynomial polynomial_from_json(const nlohmann::json& j);

/// Either {"vertices": [["x","y","z"], ...]} or {"inequalities": [["b","a1",...], ...]}
/// meaning b + a.x >= 0.
BoundingBox box_from_json(const nlohmann::json& j);

/// Parses a file, reporting syntax errors with the file name.
nlohmann::json read_json_file(const std::string& path);

}  // namespace tropiscad
