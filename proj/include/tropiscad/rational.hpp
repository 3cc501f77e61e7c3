#pragma once

// Exact rational scalars and vectors shared by every module.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropiscad {

using Integer = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "3", "-1/4", "0.25", ".15" or "2e-3" into a canonical rational.
/// Throws std::invalid_argument on anything else.
Rat parse_rat(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& value);

/// Exact decimal expansion if the value has one with at most `max_digits`
/// fractional digits.
std::optional<std::string> exact_decimal(const Rat& value, int max_digits = 12);

Rat dot(const Vec& a, const Vec& b);

/// Scales `v` by a positive factor so that it becomes an integer vector with
/// coprime entries. The zero vector is returned unchanged.
Vec primitive(const Vec& v);

std::vector<Integer> to_integers(const Vec& integral);

bool is_zero(const Vec& v);

/// Lexicographic three-way comparison.
std::strong_ordering compare(const Vec& a, const Vec& b);

std::string to_string(const Vec& v);

}  // namespace tropiscad
