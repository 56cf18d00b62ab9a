#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace aarp {

/// Exact rational scalar; all axiom decisions are made in this field.
using Rational = mpq_class;

/// A vector alternative (bundle, lottery).
using Point = std::vector<Rational>;

/// Parses "p", "-p", "p/q" or "-p/q" in base 10 and returns the canonical value.
/// Throws ParseError (with an empty path) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

std::string to_string(const Point& point);

Rational dot(const Point& a, const Point& b);
Point scaled(const Point& x, const Rational& factor);
Point plus(const Point& a, const Point& b);
Point minus(const Point& a, const Point& b);
bool is_zero(const Point& x);

}  // namespace aarp
