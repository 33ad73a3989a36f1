#include "tvb/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tvb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // trim whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("sign without digits in rational literal");

  auto slash = text.find('/');
  Rational value;
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal");
    value = Rational(n) / Rational(d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
    Integer scale = 1;
    Integer f = 0;
    if (!frac.empty()) {
      f = Integer{std::string(frac)};
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    }
    value = Rational(w * scale + f) / Rational(scale);
  } else {
    if (!all_digits(text))
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    value = Rational(Integer(std::string(text)));
  }
  return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_of_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  return Rational(x);  // mpq_set_d is exact
}

RatVector parse_rational_vector(std::string_view text) {
  std::vector<Rational> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    parts.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  RatVector v(static_cast<Eigen::Index>(parts.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = parts[static_cast<size_t>(i)];
  return v;
}

}  // namespace tvb
