#pragma once

#include "fsigma/tree.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fsigma {

/// A split forest over a merge forest with identified leaves: [E₋/E₊].
/// Heads are the roots of E₋, feet the roots of E₊.
class Diagram
{
public:
    /// The identity [*]/[*].
    Diagram();
    Diagram(BinaryForest minus, BinaryForest plus);

    const BinaryForest& minus() const { return minus_; }
    const BinaryForest& plus() const { return plus_; }
    std::size_t heads() const { return minus_.root_count(); }
    std::size_t feet() const { return plus_.root_count(); }
    std::size_t leaf_count() const { return minus_.leaf_count(); }

    /// Leaf indices i where leaves i, i+1 are a terminal caret on both sides.
    std::vector<std::size_t> reducible_pairs() const;
    bool is_reduced() const;
    /// Cancels the caret pair at leaves i, i+1; requires i in reducible_pairs().
    Diagram cancel(std::size_t i) const;
    /// Adds a caret pair below leaf i on both sides (an unreduced representative).
    Diagram expand(std::size_t leaf) const;

    std::string str() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    BinaryForest minus_;
    BinaryForest plus_;
};

Diagram parse_diagram(std::string_view text);
std::string render_diagram(const Diagram& d);

/// Unique reduced representative, cancelling leftmost pairs first.
Diagram reduce(const Diagram& d);
/// Reduced product; throws PreconditionError unless feet(a) == heads(b).
Diagram multiply(const Diagram& a, const Diagram& b);
Diagram inverse(const Diagram& d);
Diagram identity(std::size_t n);
/// xᵢ as a reduced one-head one-foot tree pair.
Diagram generator(std::size_t i);
/// Reflection left to right of both forests.
Diagram mirror(const Diagram& d);

/// The forest C with reduce(d1 · [C/id]) == d2, if any.
std::optional<BinaryForest> poset_leq(const Diagram& d1, const Diagram& d2);
bool is_elementary(const BinaryForest& f);

/// [Λ at root i / id]: splits foot i (0-based) of an n-foot diagram.
Diagram split_diagram(std::size_t feet, std::size_t i);
/// [id / Λ at root i]: merges feet i, i+1 (0-based) of an n-foot diagram.
Diagram merge_diagram(std::size_t feet, std::size_t i);
/// Reduced x · split_diagram(feet(x), i).
Diagram split_foot(const Diagram& x, std::size_t i);
/// Reduced x · merge_diagram(feet(x), i).
Diagram merge_feet(const Diagram& x, std::size_t i);

} // namespace fsigma

template <>
struct std::hash<fsigma::Diagram>
{
    std::size_t operator()(const fsigma::Diagram& d) const noexcept { return std::hash<std::string>{}(d.str()); }
};
