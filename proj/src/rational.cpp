#include "tropiscad/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tropiscad {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rat result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rat(Integer(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s, frac_part;
    if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
      int_part = s.substr(0, dot_pos);
      frac_part = s.substr(dot_pos + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      result = Rat(mantissa, pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rat(mantissa * pow10(static_cast<unsigned long>(-scale)));
    }
  }
  result.canonicalize();
  return negative ? Rat(-result) : result;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<std::string> exact_decimal(const Rat& value, int max_digits) {
  Integer den = value.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  int digits = std::max(twos, fives);
  if (digits > max_digits) return std::nullopt;

  Integer num = value.get_num();
  bool negative = num < 0;
  if (negative) num = -num;
  Integer scaled = num * pow10(static_cast<unsigned long>(digits)) / value.get_den();
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec primitive(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, Integer(x.get_num() * (lcm_den / x.get_den())));
  if (g == 0) return v;
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(Integer(x.get_num() * (lcm_den / x.get_den()) / g));
  return out;
}

std::vector<Integer> to_integers(const Vec& integral) {
  std::vector<Integer> out;
  out.reserve(integral.size());
  for (const auto& x : integral) {
    if (x.get_den() != 1) throw std::invalid_argument("to_integers: non-integral entry");
    out.push_back(x.get_num());
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::strong_ordering compare(const Vec& a, const Vec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tropiscad
