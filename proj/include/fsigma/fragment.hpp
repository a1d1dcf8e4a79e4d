#pragma once

// Finite pieces of the Stein–Farley complex around one-head diagrams.
//
// Vertices are reduced one-head diagrams keyed by their canonical string.
// Every cube has a unique bottom vertex (fewest feet) and is the interval
// [y, y·E] for an elementary forest E; in a fragment it is stored as
// (bottom index, mask of split feet of the bottom).

#include "fsigma/character.hpp"
#include "fsigma/complex.hpp"
#include "fsigma/homotopy.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fsigma {

/// A single split (of foot `index`) or merge (of feet index, index+1); indices are 0-based.
struct Move
{
    bool split = true;
    std::size_t index = 0;
    Diagram target;

    /// vᵢ for a split of foot i, e_{i,i+1} for a merge (1-based labels).
    Label label() const;
};

/// Neighbors of x in order: splits of feet 1..n, then merges 1..n−1, each filtered by the band.
std::vector<Move> neighbor_moves(const Diagram& x, const Band& band);
std::vector<Diagram> neighbors(const Diagram& x, const Band& band);

/// A cube above `base` given by a word over I (untouched foot), Λ (split foot) and V (merge two feet).
/// Words are stored with the ASCII letters 'I', 'L', 'V'.
struct CubeCoface
{
    Diagram base;
    std::string word;

    std::size_t dimension() const;
    /// The word with Λ written out.
    std::string word_text() const;
};

/// All words consistent with feet(x) whose cube stays inside the band, trivial word first.
std::vector<CubeCoface> cofaces(const Diagram& x, const Band& band);
/// The 2^dim vertices x·Ψ′ over subwords Ψ′, indexed by the bitmask of kept non-I letters.
std::vector<Diagram> coface_vertices(const CubeCoface& c);

/// Link of x assembled from its cofaces; labels vᵢ / e_{i,i+1} per the single moves.
SimplicialComplex link_of(const Diagram& x, const Band& band);
/// Full subcomplex of link_of on the neighbors of strictly larger refined height.
SimplicialComplex ascending_link(const Diagram& x, const MorseSpec& spec);
/// Full subcomplex of link_of on the neighbors of strictly smaller refined height.
SimplicialComplex descending_link(const Diagram& x, const MorseSpec& spec);

struct ChiFloor
{
    Character character;
    Rational threshold{0};
};

struct ExploreLimits
{
    std::size_t max_vertices = 5000;
    std::size_t max_radius = SIZE_MAX;
};

struct FragmentVertex
{
    Diagram diagram;
    std::string key;
    std::size_t feet = 0;
    long chi0 = 0;
    long chi1 = 0;
    /// χ for each registered character, in registration order.
    std::vector<Rational> chi;
    std::size_t L = 0;
    std::size_t R = 0;
    std::size_t radius = 0;
};

struct Cube
{
    std::size_t base = 0;
    std::uint32_t mask = 0;

    std::size_t dimension() const;
    friend bool operator==(const Cube&, const Cube&) = default;
};

class Fragment
{
public:
    static constexpr std::size_t none = SIZE_MAX;

    const std::vector<FragmentVertex>& vertices() const { return vertices_; }
    const FragmentVertex& vertex(std::size_t i) const { return vertices_[i]; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t find(const std::string& key) const;
    std::size_t find(const Diagram& d) const { return find(d.str()); }

    /// Pairs (i, j) with i < j, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& adjacent(std::size_t v) const { return adjacency_[v]; }
    /// Index of the vertex obtained by splitting foot s of v, or none.
    std::size_t split_target(std::size_t v, std::size_t s) const;

    /// Cubes of dimension ≥ 1, ordered by dimension, then base, then mask.
    const std::vector<Cube>& cubes() const { return cubes_; }
    /// Vertex of the cube reached by splitting the feet in `sub` ⊆ mask; none if absent.
    std::size_t cube_vertex(std::size_t base, std::uint32_t sub) const;
    /// All 2^dim vertices, indexed by the rank of the sub-mask within the cube's bits.
    std::vector<std::size_t> cube_vertices(const Cube& c) const;
    /// The face cubes (front, back) across the j-th bit of the mask.
    std::pair<Cube, Cube> cube_faces(const Cube& c, std::size_t j) const;

    // Provenance.
    std::vector<std::string> seeds;
    Band band;
    std::optional<ChiFloor> floor;
    ExploreLimits limits;
    std::vector<Character> characters;
    bool truncated = false;

    friend Fragment explore(const std::vector<Diagram>&, const Band&, const std::optional<ChiFloor>&,
                            const ExploreLimits&, const std::vector<Character>&);
    friend Fragment induced_fragment(const std::vector<Diagram>&, const Band&, const std::vector<Character>&);

private:
    std::size_t add_vertex(const Diagram& d, std::size_t radius);
    void finish();

    std::vector<FragmentVertex> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> split_to_;
    std::vector<Cube> cubes_;
};

/// Breadth-first closure of the seeds under band- and floor-respecting moves, truncated by the limits.
Fragment explore(const std::vector<Diagram>& seeds, const Band& band, const std::optional<ChiFloor>& floor,
                 const ExploreLimits& limits, const std::vector<Character>& characters = {});
/// The fragment on exactly the given vertices, with every edge and cube among them.
Fragment induced_fragment(const std::vector<Diagram>& vertices, const Band& band,
                          const std::vector<Character>& characters = {});

/// Connected components of the 1-skeleton, each sorted by key, ordered by their minimal key.
std::vector<std::vector<std::size_t>> components(const Fragment& frag);

struct MorseViolation
{
    std::size_t from = 0;
    std::size_t to = 0;
    std::string reason;
};

struct MorseReport
{
    std::size_t edges_checked = 0;
    std::size_t cubes_checked = 0;
    std::vector<MorseViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Edge gaps (|Δχ| ≥ ε, or Δχ = 0 with different feet) and unique extreme vertices per cube.
MorseReport check_morse_on_fragment(const MorseSpec& spec, const Fragment& frag);

/// Cubical cells of the fragment whose vertices all satisfy keep.
struct CubicalCells
{
    CellComplex cells;
    /// cubes_by_dim[0] holds (vertex, 0) pairs.
    std::vector<std::vector<Cube>> cubes_by_dim;
};

CubicalCells cubical_cells(const Fragment& frag, const std::function<bool(std::size_t)>& keep);
/// Marks the cells whose vertices all satisfy keep.
std::vector<std::vector<bool>> mark_cells(const Fragment& frag, const CubicalCells& cells,
                                          const std::function<bool(std::size_t)>& keep);
/// Order-complex triangulation of the kept cubes; vertex labels are #index.
SimplicialComplex subdivision(const Fragment& frag, const std::function<bool(std::size_t)>& keep);

} // namespace fsigma
