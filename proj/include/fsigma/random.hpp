#pragma once

// Seeded random diagrams for property checks.

#include "fsigma/diagram.hpp"

#include <cstddef>
#include <random>

namespace fsigma {

using Rng = std::mt19937_64;

/// A tree with exactly `carets` carets, splitting the caret budget uniformly at each node.
BinaryTree random_tree(Rng& rng, std::size_t carets);
/// A forest with `roots` trees and `leaves` leaves in total (leaves ≥ roots).
BinaryForest random_forest(Rng& rng, std::size_t roots, std::size_t leaves);
/// An unreduced diagram with the given heads and feet and at most `max_carets` carets per side.
Diagram random_diagram(Rng& rng, std::size_t heads, std::size_t feet, std::size_t max_carets);
/// Reduced one-head one-foot diagram.
Diagram random_element(Rng& rng, std::size_t max_carets);
/// Reduced one-head diagram with the given number of feet.
Diagram random_vertex(Rng& rng, std::size_t feet, std::size_t max_carets);
/// The same element with `count` random caret pairs inserted.
Diagram random_expansion(Rng& rng, const Diagram& d, std::size_t count);
/// Reduction cancelling a uniformly chosen reducible pair at every step.
Diagram random_order_reduce(Rng& rng, const Diagram& d);

} // namespace fsigma
