#include "fsigma/rational.hpp"

#include "fsigma/error.hpp"

#include <charconv>

namespace fsigma {

namespace {

std::int64_t parse_integer(std::string_view text, std::size_t offset)
{
    if (text.empty())
        throw ParseError("expected an integer", offset);
    std::size_t start = (text.front() == '+') ? 1 : 0;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("malformed integer '" + std::string(text) + "'", offset);
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, 0));
    auto num = parse_integer(text.substr(0, slash), 0);
    auto den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0)
        throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

std::string rational_fraction(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_text(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return rational_fraction(r);
}

} // namespace fsigma
