#include "fsigma/diagram.hpp"

#include "fsigma/error.hpp"

namespace fsigma {

Diagram::Diagram() : minus_(BinaryForest::trivial(1)), plus_(BinaryForest::trivial(1)) {}

Diagram::Diagram(BinaryForest minus, BinaryForest plus) : minus_(std::move(minus)), plus_(std::move(plus))
{
    if (minus_.empty() || plus_.empty())
        throw PreconditionError("diagram forests need at least one tree");
    if (minus_.leaf_count() != plus_.leaf_count())
        throw PreconditionError("leaf-count mismatch (" + std::to_string(minus_.leaf_count()) + " vs " +
                                std::to_string(plus_.leaf_count()) + ")");
}

std::vector<std::size_t> Diagram::reducible_pairs() const
{
    std::vector<std::size_t> out;
    for (auto i : minus_.terminal_carets())
        if (plus_.has_terminal_caret(i))
            out.push_back(i);
    return out;
}

bool Diagram::is_reduced() const
{
    for (auto i : minus_.terminal_carets())
        if (plus_.has_terminal_caret(i))
            return false;
    return true;
}

Diagram Diagram::cancel(std::size_t i) const
{
    if (!minus_.has_terminal_caret(i) || !plus_.has_terminal_caret(i))
        throw PreconditionError("no cancelling caret pair at leaf " + std::to_string(i));
    Diagram out = *this;
    out.minus_.contract(i);
    out.plus_.contract(i);
    return out;
}

Diagram Diagram::expand(std::size_t leaf) const
{
    Diagram out = *this;
    out.minus_.expand(leaf);
    out.plus_.expand(leaf);
    return out;
}

std::string Diagram::str() const
{
    std::string out;
    minus_.append_to(out);
    out.push_back('/');
    plus_.append_to(out);
    return out;
}

Diagram parse_diagram(std::string_view text)
{
    auto [minus, plus] = detail::parse_forest_pair(text);
    return Diagram(std::move(minus), std::move(plus));
}

std::string render_diagram(const Diagram& d) { return d.str(); }

Diagram reduce(const Diagram& d)
{
    Diagram out = d;
    // A cancellation only affects pairs at i-1, i, i+1, so rescan from just before it.
    std::size_t start = 0;
    for (;;) {
        auto carets = out.minus().terminal_carets();
        bool found = false;
        for (auto i : carets) {
            if (i + 1 < start)
                continue;
            if (out.plus().has_terminal_caret(i)) {
                out = out.cancel(i);
                start = i;
                found = true;
                break;
            }
        }
        if (!found)
            return out;
    }
}

Diagram multiply(const Diagram& a, const Diagram& b)
{
    if (a.feet() != b.heads())
        throw PreconditionError("dimension mismatch: " + std::to_string(a.feet()) + " feet vs " +
                                std::to_string(b.heads()) + " heads");
    BinaryForest common = BinaryForest::overlay(a.plus(), b.minus());
    BinaryForest below_a = a.plus().quotient(common);
    BinaryForest below_b = b.minus().quotient(common);
    return reduce(Diagram(a.minus().graft(below_a), b.plus().graft(below_b)));
}

Diagram inverse(const Diagram& d) { return Diagram(d.plus(), d.minus()); }

Diagram identity(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("identity needs n >= 1");
    return Diagram(BinaryForest::trivial(n), BinaryForest::trivial(n));
}

Diagram generator(std::size_t i)
{
    auto caret = BinaryTree::single_caret();
    auto leaf = BinaryTree::leaf();
    BinaryTree minus = BinaryTree::caret(caret, leaf);
    BinaryTree plus = BinaryTree::caret(leaf, caret);
    for (std::size_t k = 0; k < i; ++k) {
        minus = BinaryTree::caret(leaf, minus);
        plus = BinaryTree::caret(leaf, plus);
    }
    return Diagram(BinaryForest({minus}), BinaryForest({plus}));
}

Diagram mirror(const Diagram& d) { return Diagram(d.minus().mirror(), d.plus().mirror()); }

std::optional<BinaryForest> poset_leq(const Diagram& d1, const Diagram& d2)
{
    if (d1.heads() != d2.heads() || d1.feet() > d2.feet())
        return std::nullopt;
    Diagram q = multiply(inverse(d1), d2);
    if (!q.plus().is_trivial())
        return std::nullopt;
    return q.minus();
}

bool is_elementary(const BinaryForest& f) { return f.is_elementary(); }

Diagram split_diagram(std::size_t feet, std::size_t i)
{
    return Diagram(BinaryForest::elementary(feet, i), BinaryForest::trivial(feet + 1));
}

Diagram merge_diagram(std::size_t feet, std::size_t i)
{
    if (feet < 2)
        throw PreconditionError("merging needs at least two feet");
    return Diagram(BinaryForest::trivial(feet), BinaryForest::elementary(feet - 1, i));
}

Diagram split_foot(const Diagram& x, std::size_t i) { return multiply(x, split_diagram(x.feet(), i)); }

Diagram merge_feet(const Diagram& x, std::size_t i) { return multiply(x, merge_diagram(x.feet(), i)); }

} // namespace fsigma
