#include "fsigma/random.hpp"

#include "fsigma/error.hpp"

namespace fsigma {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

BinaryTree random_tree(Rng& rng, std::size_t carets)
{
    if (carets == 0)
        return BinaryTree::leaf();
    std::size_t left = uniform(rng, 0, carets - 1);
    return BinaryTree::caret(random_tree(rng, left), random_tree(rng, carets - 1 - left));
}

BinaryForest random_forest(Rng& rng, std::size_t roots, std::size_t leaves)
{
    if (roots == 0 || leaves < roots)
        throw PreconditionError("a forest needs 1 <= roots <= leaves");
    // Distribute the carets over the trees one at a time.
    std::vector<std::size_t> carets(roots, 0);
    for (std::size_t k = 0; k < leaves - roots; ++k)
        ++carets[uniform(rng, 0, roots - 1)];
    std::vector<BinaryTree> trees;
    for (auto c : carets)
        trees.push_back(random_tree(rng, c));
    return BinaryForest(std::move(trees));
}

Diagram random_diagram(Rng& rng, std::size_t heads, std::size_t feet, std::size_t max_carets)
{
    std::size_t lo = std::max(heads, feet);
    std::size_t hi = std::min(heads, feet) + max_carets;
    if (hi < lo)
        throw PreconditionError("caret budget too small for these heads and feet");
    std::size_t leaves = uniform(rng, lo, hi);
    return Diagram(random_forest(rng, heads, leaves), random_forest(rng, feet, leaves));
}

Diagram random_element(Rng& rng, std::size_t max_carets) { return reduce(random_diagram(rng, 1, 1, max_carets)); }

Diagram random_vertex(Rng& rng, std::size_t feet, std::size_t max_carets)
{
    return reduce(random_diagram(rng, 1, feet, max_carets));
}

Diagram random_expansion(Rng& rng, const Diagram& d, std::size_t count)
{
    Diagram out = d;
    for (std::size_t k = 0; k < count; ++k)
        out = out.expand(uniform(rng, 0, out.leaf_count() - 1));
    return out;
}

Diagram random_order_reduce(Rng& rng, const Diagram& d)
{
    Diagram out = d;
    for (auto pairs = out.reducible_pairs(); !pairs.empty(); pairs = out.reducible_pairs())
        out = out.cancel(pairs[uniform(rng, 0, pairs.size() - 1)]);
    return out;
}

} // namespace fsigma
