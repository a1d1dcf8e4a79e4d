#pragma once

#include "fsigma/diagram.hpp"
#include "fsigma/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace fsigma {

/// χ = a·χ₀ + b·χ₁.
struct Character
{
    Rational a{0};
    Rational b{0};

    bool is_zero() const { return fsigma::is_zero(a) && fsigma::is_zero(b); }
    friend bool operator==(const Character&, const Character&) = default;
};

/// Parses "a,b" where each side is an integer or "p/q".
Character parse_character(std::string_view text);
std::string character_text(const Character& c);

/// Closed interval of admissible feet counts.
struct Band
{
    std::size_t p = 1;
    std::size_t q = 1;

    bool contains(std::size_t feet) const { return p <= feet && feet <= q; }
    friend bool operator==(const Band&, const Band&) = default;
};

Band parse_band(std::string_view text);

enum class Secondary { plus_feet, minus_feet };

struct MorseSpec
{
    Character character;
    Secondary secondary = Secondary::plus_feet;
    Band band;

    int sign() const { return secondary == Secondary::plus_feet ? 1 : -1; }
};

struct RefinedHeight
{
    Rational h;
    long s = 0;

    friend bool operator==(const RefinedHeight&, const RefinedHeight&) = default;
    friend std::strong_ordering operator<=>(const RefinedHeight& x, const RefinedHeight& y)
    {
        if (x.h != y.h)
            return x.h < y.h ? std::strong_ordering::less : std::strong_ordering::greater;
        return x.s <=> y.s;
    }
};

/// Depth of the leftmost leaf of the first tree.
inline std::size_t count_left(const BinaryForest& f) { return f.left_depth(); }
/// Depth of the rightmost leaf of the last tree.
inline std::size_t count_right(const BinaryForest& f) { return f.right_depth(); }

/// L(E₊) − L(E₋); invariant under expansion, so any representative works.
long chi0_int(const Diagram& x);
/// R(E₊) − R(E₋).
long chi1_int(const Diagram& x);
inline Rational chi0(const Diagram& x) { return Rational(chi0_int(x)); }
inline Rational chi1(const Diagram& x) { return Rational(chi1_int(x)); }

inline Rational chi(const Character& c, long chi0_value, long chi1_value)
{
    return c.a * chi0_value + c.b * chi1_value;
}
inline Rational chi(const Character& c, const Diagram& x) { return chi(c, chi0_int(x), chi1_int(x)); }

inline std::size_t feet(const Diagram& x) { return x.feet(); }

/// L(T) for a one-head diagram (T/E).
inline std::size_t L_value(const Diagram& x) { return x.minus().left_depth(); }
/// R(T) for a one-head diagram (T/E).
inline std::size_t R_value(const Diagram& x) { return x.minus().right_depth(); }

RefinedHeight refined_height(const MorseSpec& spec, const Diagram& x);
std::strong_ordering refined_compare(const MorseSpec& spec, const Diagram& x, const Diagram& y);

/// Smallest absolute value among the nonzero coefficients.
Rational epsilon(const Character& c);

/// Change of χ when foot i (0-based) of an n-foot vertex is split.
Rational split_delta(const Character& c, std::size_t n, std::size_t i);
/// Change of χ when feet i, i+1 (0-based) of an n-foot vertex are merged.
Rational merge_delta(const Character& c, std::size_t n, std::size_t i);

} // namespace fsigma
