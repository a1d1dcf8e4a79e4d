#pragma once

// The cover of a superlevel fragment by the pieces Y_{L=i} and Y_{R=i}, its
// nerve graph, and certificates for a 4-cycle in that nerve.

#include "fsigma/fragment.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fsigma {

enum class Side { L, R };
std::string to_string(Side s);

struct CoverLabel
{
    Side side = Side::L;
    std::size_t value = 0;
    /// Component of Y_{side=value} within the fragment.
    std::size_t component = 0;

    friend bool operator==(const CoverLabel&, const CoverLabel&) = default;
    friend auto operator<=>(const CoverLabel&, const CoverLabel&) = default;
};

using SideValue = std::pair<Side, std::size_t>;

/// Labels of a cell from its maximal-feet vertex (T/E): (L, L(T)) if L(E) > 0, (R, R(T)) if R(E) > 0.
std::vector<SideValue> cover_assign(const Fragment& frag, const Cube& cell);
std::vector<SideValue> cover_assign(const Diagram& top_vertex);

class Cover
{
public:
    /// Requires a > 0, b > 0, band p ≥ 2, and χ ≥ 0 at every vertex.
    Cover(const Fragment& frag, const Character& c);

    const std::vector<CoverLabel>& nodes() const { return nodes_; }
    /// Nerve edges as sorted node-index pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    /// Nodes whose subcomplex contains vertex v.
    const std::vector<std::size_t>& nodes_at(std::size_t v) const { return vertex_nodes_[v]; }
    /// The node with this side and value containing v, or none.
    std::size_t node_of(Side side, std::size_t value, std::size_t v) const;
    bool adjacent(std::size_t a, std::size_t b) const;
    /// Labels of a cell, components included.
    std::vector<CoverLabel> labels(const Cube& cell) const;

    std::size_t cells_checked() const { return cells_checked_; }
    std::size_t unlabeled_cells() const { return unlabeled_; }
    /// Every nerve edge joins an L node to an R node.
    bool bipartite() const;

    static constexpr std::size_t none = SIZE_MAX;

private:
    const Fragment* frag_;
    std::vector<CoverLabel> nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> vertex_nodes_;
    std::size_t cells_checked_ = 0;
    std::size_t unlabeled_ = 0;
};

/// An edge path confined to the cover piece Y_{side=value}.
struct CertificatePath
{
    Side side = Side::L;
    std::size_t value = 0;
    std::vector<Diagram> vertices;
};

/// Witnesses x₁..x₄ and paths p₁₂, p₂₃, p₃₄, p₄₁ (paths[i] runs from witnesses[i] to witnesses[i+1 mod 4]).
struct CycleCertificate
{
    Character character;
    Band band{4, 7};
    std::array<Diagram, 4> witnesses;
    std::array<CertificatePath, 4> paths;
};

struct CertificateCheck
{
    std::vector<std::string> failures;
    std::size_t path_vertices = 0;
    std::size_t nerve_nodes = 0;
    std::size_t nerve_edges = 0;
    std::size_t cells_checked = 0;
    bool bipartite = false;
    bool cycle = false;

    bool ok() const { return failures.empty(); }
};

/// Replays a certificate from its diagrams alone.
CertificateCheck validate_certificate(const CycleCertificate& cert);

struct NerveSearchLimits
{
    /// Breadth-first nodes per hill-climbing step.
    std::size_t step_nodes = 200000;
    std::size_t max_steps = 2000;
};

/// Builds a 4-cycle certificate with witness values (2,2), (3,2), (3,3), (2,3); throws SearchExhausted.
CycleCertificate find_nerve_cycle(const Character& c, const NerveSearchLimits& limits = {});

} // namespace fsigma
