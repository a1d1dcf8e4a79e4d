#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fsigma {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, e.g. "-1/2", "3/1".
std::string rational_fraction(const Rational& r);

/// "num" when the denominator is one, otherwise "num/den".
std::string rational_text(const Rational& r);

// Comparisons against bare integers recurse forever under C++20 rewritten
// operators with this boost version, so callers go through these helpers.
inline int sign(const Rational& r) { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }
inline Rational abs(const Rational& r) { return sign(r) < 0 ? -r : r; }

} // namespace fsigma
