#pragma once

#include "fsigma/character.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fsigma {

/// Structured vertex label: vᵢ, e_{i,i+1}, a simplex of an underlying complex, or a bare index.
struct Label
{
    enum class Kind { vertex, edge, simplex, index };

    Kind kind = Kind::index;
    std::vector<int> ids;

    static Label v(int i) { return {Kind::vertex, {i}}; }
    /// e_{i,i+1}.
    static Label e(int i) { return {Kind::edge, {i, i + 1}}; }
    static Label simplex(std::vector<int> members) { return {Kind::simplex, std::move(members)}; }
    static Label index(int i) { return {Kind::index, {i}}; }

    /// "v3", "e3,4", "s{0,2}", "#7".
    std::string str() const;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

using Simplex = std::vector<int>;

/// Finite abstract simplicial complex over an ordered label set.
/// Every label is a 0-simplex; simplices are sorted index vectors into labels().
/// The downward closure is computed eagerly on construction.
class SimplicialComplex
{
public:
    SimplicialComplex() = default;
    /// Labels are sorted; generators may be any simplices on those labels.
    SimplicialComplex(std::vector<Label> labels, const std::vector<std::vector<Label>>& generators);

    static SimplicialComplex from_indices(std::vector<Label> labels, std::vector<Simplex> generators);

    const std::vector<Label>& labels() const { return labels_; }
    std::size_t vertex_count() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Simplex>& simplices(std::size_t dim) const;
    std::vector<std::size_t> f_vector() const;

    std::optional<int> index_of(const Label& l) const;
    bool contains(const std::vector<Label>& simplex) const;
    bool contains_indices(const Simplex& s) const;
    std::vector<Label> labels_of(const Simplex& s) const;
    /// Every simplex as a sorted label list, all dimensions.
    std::vector<std::vector<Label>> labelled_simplices() const;

    std::string str() const;

    /// Same labels and same simplices.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

private:
    void close();

    std::vector<Label> labels_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> by_dim_;
};

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::function<bool(const Label&)>& keep);
/// Closed star of a vertex.
SimplicialComplex star(const SimplicialComplex& k, const Label& v);
SimplicialComplex link(const SimplicialComplex& k, const std::vector<Label>& simplex);
inline SimplicialComplex link(const SimplicialComplex& k, const Label& v) { return link(k, std::vector<Label>{v}); }
/// Requires disjoint label sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, const Label& apex);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);
/// Removes every simplex containing `simplex`.
SimplicialComplex remove_open_star(const SimplicialComplex& k, const std::vector<Label>& simplex);
SimplicialComplex relabel(const SimplicialComplex& k, const std::function<Label(const Label&)>& f);
/// Boundary of the k-simplex on labels #0..#k: a (k-1)-sphere.
SimplicialComplex simplex_boundary(std::size_t k);
SimplicialComplex full_simplex(std::size_t k);
/// Two points #0, #1.
SimplicialComplex zero_sphere();

/// Label-forgetting isomorphism by backtracking over degree-compatible vertex maps.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Lₙ: v1..vn with edges e_{i,i+1}.
SimplicialComplex linear_graph(std::size_t n);
/// GM(Δ): nonempty simplices of Δ, spanning a simplex when pairwise disjoint.
SimplicialComplex general_matching_complex(const SimplicialComplex& delta);
/// M(Γ): the part of GM(Γ) spanned by edges of a graph.
SimplicialComplex matching_complex(const SimplicialComplex& graph);

/// Single-move ascending vertices and band-capped matchings at an n-foot vertex.
SimplicialComplex ascending_link_model(std::size_t n, const Character& c, Secondary secondary, const Band& band);

/// True when the move raises the refined height (Δχ, sign·Δf) above (0, 0).
bool move_ascends(const Rational& dchi, int dfeet, Secondary secondary);

} // namespace fsigma
