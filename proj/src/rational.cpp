#include "aarp/rational.hpp"

#include <cctype>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("", "malformed rational \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational value(std::string(text), 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Point& point) {
  std::string out = "(";
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (k) out += ", ";
    out += to_string(point[k]);
  }
  return out + ")";
}

Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidData("dimension mismatch in dot product");
  Rational sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

Point scaled(const Point& x, const Rational& factor) {
  Point out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * factor;
  return out;
}

Point plus(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidData("dimension mismatch");
  Point out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Point minus(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidData("dimension mismatch");
  Point out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool is_zero(const Point& x) {
  for (const auto& v : x) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace aarp
