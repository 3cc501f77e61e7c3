#include "tropiscad/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace tropiscad {

std::string_view to_string(Convention c) { return c == Convention::Min ? "min" : "max"; }

TropicalPolynomial::TropicalPolynomial(Convention convention, std::vector<Exponent> exponents, Vec coefficients,
                                       std::vector<std::string> variables)
    : convention_(convention), variables_(std::move(variables)) {
  if (exponents.size() != coefficients.size()) {
    throw PolynomialError(std::to_string(exponents.size()) + " monomials but " + std::to_string(coefficients.size()) +
                          " coefficients");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw PolynomialError("empty variable name");
    if (!seen.insert(v).second) throw PolynomialError("duplicate variable '" + v + "'");
  }
  std::map<Exponent, size_t> position;
  for (size_t i = 0; i < exponents.size(); ++i) {
    const Exponent& e = exponents[i];
    if (e.size() != variables_.size()) {
      throw PolynomialError("monomial " + std::to_string(i) + " has " + std::to_string(e.size()) +
                            " exponents for " + std::to_string(variables_.size()) + " variables");
    }
    if (std::any_of(e.begin(), e.end(), [](long x) { return x < 0; })) {
      throw PolynomialError("monomial " + std::to_string(i) + " has a negative exponent");
    }
    auto [it, inserted] = position.emplace(e, exponents_.size());
    if (inserted) {
      exponents_.push_back(e);
      coefficients_.push_back(coefficients[i]);
    } else {
      Rat& c = coefficients_[it->second];
      if (convention_ == Convention::Min ? coefficients[i] < c : coefficients[i] > c) c = coefficients[i];
    }
  }
}

bool TropicalPolynomial::is_homogeneous() const {
  if (exponents_.empty()) return true;
  long d = std::accumulate(exponents_[0].begin(), exponents_[0].end(), 0L);
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [d](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L) == d; });
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables) : text_(text), variables_(variables) {}

  TropicalPolynomial parse(std::optional<Convention> expected) {
    skip_ws();
    size_t kw_pos = pos_;
    std::string kw = identifier();
    Convention conv;
    if (kw == "min") conv = Convention::Min;
    else if (kw == "max") conv = Convention::Max;
    else throw ParseError("expected 'min(' or 'max('", kw_pos);
    if (expected && *expected != conv) {
      throw ParseError("keyword '" + kw + "' contradicts the requested " + std::string(to_string(*expected)) +
                       " convention", kw_pos);
    }
    convention_ = conv;
    expect('(');
    skip_ws();
    if (peek() == ')') throw ParseError("empty term list", pos_);

    std::vector<Exponent> rows;
    Vec coeffs;
    while (true) {
      auto [row, c] = term();
      rows.push_back(std::move(row));
      coeffs.push_back(std::move(c));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return TropicalPolynomial(conv, std::move(rows), std::move(coeffs), variables_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier() {
    size_t start = pos_;
    if (!ident_start(peek())) return {};
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rat number() {
    size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    }
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    try {
      return parse_rat(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number '" + std::string(text_.substr(start, pos_ - start)) + "'", start);
    }
  }

  // One summand: a product of numeric factors and at most one variable power.
  void summand(int sign, Exponent& row, Rat& coeff) {
    Rat factor = sign;
    std::optional<size_t> var;
    long power = 1;
    size_t start = pos_;
    while (true) {
      skip_ws();
      size_t at = pos_;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        factor *= number();
      } else if (ident_start(c)) {
        std::string name = identifier();
        if (name == "min" || name == "max") {
          throw ParseError(name == to_string(convention_) ? "nested '" + name + "' is not supported"
                                                          : "cannot mix min and max in one expression",
                           at);
        }
        auto it = std::find(variables_.begin(), variables_.end(), name);
        if (it == variables_.end()) throw ParseError("unknown variable '" + name + "'", at);
        if (var) throw ParseError("a term cannot multiply two variables", at);
        var = static_cast<size_t>(it - variables_.begin());
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          size_t pow_at = pos_;
          if (peek() == '-') throw ParseError("negative exponent", pow_at);
          Rat p = number();
          if (p.get_den() != 1 || !p.get_num().fits_slong_p()) throw ParseError("exponent must be an integer", pow_at);
          power = p.get_num().get_si();
        }
      } else {
        throw ParseError("expected a number or a variable", at);
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!var) {
      coeff += factor;
      return;
    }
    Rat e = factor * power;
    if (sgn(e) < 0) throw ParseError("negative exponent", start);
    if (e.get_den() != 1 || !e.get_num().fits_slong_p()) throw ParseError("exponent must be an integer", start);
    row[*var] += e.get_num().get_si();
  }

  std::pair<Exponent, Rat> term() {
    Exponent row(variables_.size(), 0);
    Rat coeff = 0;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    summand(sign, row, coeff);
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      summand(c == '-' ? -1 : 1, row, coeff);
    }
    return {std::move(row), std::move(coeff)};
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  Convention convention_ = Convention::Min;
  size_t pos_ = 0;
};

}  // namespace

TropicalPolynomial parse_tropical_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                             std::optional<Convention> convention) {
  if (variables.empty()) throw ParseError("no variables given", 0);
  return Parser(text, variables).parse(convention);
}

std::vector<std::string> collect_variables(std::string_view text) {
  std::set<std::string> names;
  for (size_t i = 0; i < text.size();) {
    if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (name != "min" && name != "max") names.insert(name);
      i = j;
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

std::string to_string(const TropicalPolynomial& p) {
  std::string out(to_string(p.convention()));
  out += "(";
  for (size_t i = 0; i < p.num_terms(); ++i) {
    if (i) out += ",";
    std::vector<std::string> parts;
    const Rat& c = p.coefficients()[i];
    const Exponent& e = p.exponents()[i];
    bool constant = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (sgn(c) != 0 || constant) parts.push_back(to_string(c));
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      parts.push_back(e[v] == 1 ? p.variables()[v] : std::to_string(e[v]) + "*" + p.variables()[v]);
    }
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) out += "+";
      out += parts[k];
    }
  }
  return out + ")";
}

TropicalPolynomial dehomogenize(const TropicalPolynomial& p) {
  if (p.num_variables() == 0) throw PolynomialError("cannot dehomogenize a polynomial without variables");
  if (!p.is_homogeneous()) {
    std::set<long> sums;
    for (const auto& e : p.exponents()) sums.insert(std::accumulate(e.begin(), e.end(), 0L));
    std::string list;
    for (long s : sums) list += (list.empty() ? "" : ", ") + std::to_string(s);
    throw PolynomialError("polynomial is not homogeneous: monomial degrees " + list);
  }
  std::vector<Exponent> rows;
  for (const auto& e : p.exponents()) rows.emplace_back(e.begin() + 1, e.end());
  std::vector<std::string> vars(p.variables().begin() + 1, p.variables().end());
  return TropicalPolynomial(p.convention(), std::move(rows), p.coefficients(), std::move(vars));
}

Evaluation evaluate(const TropicalPolynomial& p, const Vec& x) {
  if (x.size() != p.num_variables()) {
    throw PolynomialError("point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                          std::to_string(p.num_variables()) + " variables");
  }
  if (p.num_terms() == 0) throw PolynomialError("cannot evaluate a polynomial without terms");
  Evaluation ev;
  for (size_t i = 0; i < p.num_terms(); ++i) {
    Rat v = p.coefficients()[i];
    for (size_t j = 0; j < x.size(); ++j) v += p.exponents()[i][j] * x[j];
    int c = ev.argopt.empty() ? -1 : cmp(v, ev.value);
    if (p.convention() == Convention::Max) c = -c;
    if (ev.argopt.empty() || c < 0) {
      ev.value = v;
      ev.argopt = {i};
    } else if (c == 0) {
      ev.argopt.push_back(i);
    }
  }
  return ev;
}

}  // namespace tropiscad
