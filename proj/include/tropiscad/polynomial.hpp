#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tropiscad/rational.hpp"

namespace tropiscad {

enum class Convention { Min, Max };

std::string_view to_string(Convention c);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

class PolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Exponent = std::vector<long>;

/// A tropical polynomial: the minimum (or maximum) over its terms of
/// coefficient + <exponent, x>.
class TropicalPolynomial {
 public:
  /// Repeated exponent rows are merged, keeping the optimal coefficient in
  /// the position of the first occurrence.
  TropicalPolynomial(Convention convention, std::vector<Exponent> exponents, Vec coefficients,
                     std::vector<std::string> variables);

  Convention convention() const { return convention_; }
  const std::vector<Exponent>& exponents() const { return exponents_; }
  const Vec& coefficients() const { return coefficients_; }
  const std::vector<std::string>& variables() const { return variables_; }
  size_t num_variables() const { return variables_.size(); }
  size_t num_terms() const { return exponents_.size(); }

  /// All exponent rows have the same sum.
  bool is_homogeneous() const;

  bool operator==(const TropicalPolynomial&) const = default;

 private:
  Convention convention_;
  std::vector<Exponent> exponents_;
  Vec coefficients_;
  std::vector<std::string> variables_;
};

/// Parses "min(1+2*w, x+y, ...)" style input. Terms are sums of rational
/// constants and variable multiples (`x`, `2*x`, `x*2`, `x^2`, `x+x`).
/// When `convention` is given, the keyword must agree with it.
TropicalPolynomial parse_tropical_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                             std::optional<Convention> convention = std::nullopt);

/// Distinct identifiers of the text in alphabetical order (the default
/// variable order).
std::vector<std::string> collect_variables(std::string_view text);

/// Prints in the syntax accepted by parse_tropical_polynomial.
std::string to_string(const TropicalPolynomial& p);

/// Sets the first variable to zero and drops it. Requires homogeneity.
TropicalPolynomial dehomogenize(const TropicalPolynomial& p);

struct Evaluation {
  Rat value;
  std::vector<size_t> argopt;
};

/// Optimal value and every term index attaining it.
Evaluation evaluate(const TropicalPolynomial& p, const Vec& x);

}  // namespace tropiscad
