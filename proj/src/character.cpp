#include "fsigma/character.hpp"

#include "fsigma/error.hpp"

#include <charconv>

namespace fsigma {

namespace {

std::pair<std::string_view, std::string_view> split_pair(std::string_view text, const char* what)
{
    auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw ParseError(std::string("expected two comma-separated values for ") + what, 0);
    return {text.substr(0, comma), text.substr(comma + 1)};
}

std::size_t parse_size(std::string_view text, std::size_t offset)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("malformed non-negative integer '" + std::string(text) + "'", offset);
    return value;
}

} // namespace

Character parse_character(std::string_view text)
{
    auto [a, b] = split_pair(text, "a character");
    return Character{parse_rational(a), parse_rational(b)};
}

std::string character_text(const Character& c) { return rational_text(c.a) + "," + rational_text(c.b); }

Band parse_band(std::string_view text)
{
    auto [p, q] = split_pair(text, "a band");
    Band band{parse_size(p, 0), parse_size(q, p.size() + 1)};
    if (band.p < 1 || band.p > band.q)
        throw PreconditionError("band needs 1 <= p <= q");
    return band;
}

long chi0_int(const Diagram& x)
{
    return static_cast<long>(count_left(x.plus())) - static_cast<long>(count_left(x.minus()));
}

long chi1_int(const Diagram& x)
{
    return static_cast<long>(count_right(x.plus())) - static_cast<long>(count_right(x.minus()));
}

RefinedHeight refined_height(const MorseSpec& spec, const Diagram& x)
{
    return {chi(spec.character, x), spec.sign() * static_cast<long>(x.feet())};
}

std::strong_ordering refined_compare(const MorseSpec& spec, const Diagram& x, const Diagram& y)
{
    return refined_height(spec, x) <=> refined_height(spec, y);
}

Rational epsilon(const Character& c)
{
    if (c.is_zero())
        throw PreconditionError("epsilon of the zero character");
    if (is_zero(c.a))
        return abs(c.b);
    if (is_zero(c.b))
        return abs(c.a);
    return std::min(abs(c.a), abs(c.b));
}

Rational split_delta(const Character& c, std::size_t n, std::size_t i)
{
    Rational d{0};
    if (i == 0)
        d -= c.a;
    if (i + 1 == n)
        d -= c.b;
    return d;
}

Rational merge_delta(const Character& c, std::size_t n, std::size_t i)
{
    Rational d{0};
    if (i == 0)
        d += c.a;
    if (i + 2 == n)
        d += c.b;
    return d;
}

} // namespace fsigma
