#include "tropiscad/io.hpp"

#include <fstream>

namespace tropiscad {

using nlohmann::json;

namespace {

std::string at(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing");
  return *it;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Rat rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

std::vector<Vec> rational_rows(const json& j, const std::string& path) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    Vec row;
    for (size_t k = 0; k < array(j[i], p).size(); ++k) row.push_back(rational(j[i][k], at(p, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

json rational_rows_to_json(const std::vector<Vec>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json complex_to_json(const PolyhedralComplex& c) {
  json j;
  j["ambient_dim"] = c.ambient_dim();
  j["points"] = rational_rows_to_json(c.points());
  j["lineality"] = rational_rows_to_json(c.lineality());
  j["maximal_cells"] = c.maximal_cells();
  if (c.has_weights()) j["weights"] = c.weights();
  return j;
}

PolyhedralComplex complex_from_json(const json& j) {
  std::vector<Vec> points = rational_rows(field(j, "", "points"), "/points");
  std::vector<Vec> lineality;
  if (j.contains("lineality")) lineality = rational_rows(j["lineality"], "/lineality");
  const json& cj = array(field(j, "", "maximal_cells"), "/maximal_cells");
  std::vector<Cell> cells;
  for (size_t i = 0; i < cj.size(); ++i) {
    Cell cell;
    for (size_t k = 0; k < array(cj[i], at("/maximal_cells", i)).size(); ++k) {
      long v = integer(cj[i][k], at(at("/maximal_cells", i), k));
      if (v < 0 || static_cast<size_t>(v) >= points.size()) {
        throw SchemaError(at(at("/maximal_cells", i), k), "point index " + std::to_string(v) + " out of range");
      }
      cell.push_back(static_cast<size_t>(v));
    }
    cells.push_back(std::move(cell));
  }
  std::optional<std::vector<long>> weights;
  if (j.contains("weights")) {
    weights.emplace();
    for (size_t i = 0; i < array(j["weights"], "/weights").size(); ++i) weights->push_back(integer(j["weights"][i], at("/weights", i)));
  }
  size_t n = 0;
  if (j.contains("ambient_dim")) {
    n = static_cast<size_t>(integer(j["ambient_dim"], "/ambient_dim"));
  } else if (!points.empty()) {
    n = points[0].size() - 1;
  } else {
    throw SchemaError("/ambient_dim", "needed when there are no points");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n + 1) {
      throw SchemaError(at("/points", i), "expected " + std::to_string(n + 1) + " homogeneous coordinates");
    }
  }
  for (size_t i = 0; i < lineality.size(); ++i) {
    if (lineality[i].size() != n) throw SchemaError(at("/lineality", i), "expected " + std::to_string(n) + " coordinates");
  }
  return PolyhedralComplex::from_points_and_cells(n, points, cells, lineality, weights);
}

json polynomial_to_json(const TropicalPolynomial& p) {
  json j;
  j["convention"] = std::string(to_string(p.convention()));
  j["variables"] = p.variables();
  j["monomials"] = p.exponents();
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(to_string(x));
  j["coefficients"] = std::move(c);
  return j;
}

TropicalPolynomial polynomial_from_json(const json& j) {
  const json& conv = field(j, "", "convention");
  if (!conv.is_string() || (conv != "min" && conv != "max")) throw SchemaError("/convention", "expected \"min\" or \"max\"");
  std::vector<std::string> vars;
  const json& vj = array(field(j, "", "variables"), "/variables");
  for (size_t i = 0; i < vj.size(); ++i) {
    if (!vj[i].is_string()) throw SchemaError(at("/variables", i), "expected a string");
    vars.push_back(vj[i].get<std::string>());
  }
  std::vector<Exponent> rows;
  const json& mj = array(field(j, "", "monomials"), "/monomials");
  for (size_t i = 0; i < mj.size(); ++i) {
    Exponent e;
    for (size_t k = 0; k < array(mj[i], at("/monomials", i)).size(); ++k) e.push_back(integer(mj[i][k], at(at("/monomials", i), k)));
    rows.push_back(std::move(e));
  }
  Vec coeffs;
  const json& cj = array(field(j, "", "coefficients"), "/coefficients");
  for (size_t i = 0; i < cj.size(); ++i) coeffs.push_back(rational(cj[i], at("/coefficients", i)));
  try {
    return TropicalPolynomial(conv == "min" ? Convention::Min : Convention::Max, rows, coeffs, vars);
  } catch (const PolynomialError& e) {
    throw SchemaError("/", e.what());
  }
}

BoundingBox box_from_json(const json& j) {
  if (j.is_object() && j.contains("vertices")) {
    std::vector<Vec> vs = rational_rows(j["vertices"], "/vertices");
    if (vs.empty()) throw SchemaError("/vertices", "no vertices");
    return BoundingBox::from_polytope(Polyhedron::from_generators(vs[0].size(), VRep{vs, {}, {}}));
  }
  std::vector<Vec> rows = rational_rows(field(j, "", "inequalities"), "/inequalities");
  if (rows.empty()) throw SchemaError("/inequalities", "no inequalities");
  HRep h;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size() || r.size() < 2) throw SchemaError("/inequalities", "rows must have equal length >= 2");
    h.inequalities.push_back(Constraint{r[0], Vec(r.begin() + 1, r.end())});
  }
  return BoundingBox::from_polytope(Polyhedron::from_constraints(rows[0].size() - 1, std::move(h)));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace tropiscad
