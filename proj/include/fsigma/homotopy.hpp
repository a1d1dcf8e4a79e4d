#pragma once

#include "fsigma/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fsigma {

using BigInt = boost::multiprecision::cpp_int;

/// Signed boundary entry: (index of a (k-1)-cell, coefficient).
using BoundaryEntry = std::pair<std::size_t, int>;

/// Finite cell complex given by cell counts and signed boundaries.
struct CellComplex
{
    std::vector<std::size_t> counts;
    /// boundary[k][c] lists the faces of k-cell c; boundary[0] is unused.
    std::vector<std::vector<std::vector<BoundaryEntry>>> boundary;
};

/// Sparse integer matrix stored by columns.
struct SparseMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<BoundaryEntry>> columns;
};

/// Chain groups with boundary maps ∂ₖ : Cₖ → Cₖ₋₁; ∂∂ = 0 is checked on construction.
class ChainComplex
{
public:
    explicit ChainComplex(CellComplex cells);

    std::size_t top() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    /// ∂ₖ for 1 ≤ k ≤ top(); empty for other k.
    const SparseMatrix& boundary(std::size_t k) const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> boundaries_;
};

/// Oriented by sorted vertex index (labels are sorted, so this is label order).
CellComplex cell_complex(const SimplicialComplex& k);
ChainComplex chain_complex(const SimplicialComplex& k);

/// Invariant factors d₁ | d₂ | ... of an integer matrix (nonzero diagonal of its Smith form).
std::vector<BigInt> invariant_factors(const SparseMatrix& m);

enum class Pi1 { trivial, nontrivial, inconclusive };
std::string to_string(Pi1 p);

struct HomologyReport
{
    std::vector<std::size_t> betti;
    std::vector<std::vector<BigInt>> torsion;
    bool nonempty = false;
    bool connected = false;
    Pi1 pi1 = Pi1::inconclusive;

    /// H̃₀ rank: betti₀ − 1 for a nonempty space, 0 otherwise.
    std::size_t reduced_betti0() const { return nonempty && !betti.empty() ? betti[0] - 1 : 0; }
    /// H̃ᵢ = 0 (rank and torsion).
    bool reduced_vanishes(std::size_t i) const;
};

HomologyReport homology(const ChainComplex& c);
/// Homology plus a π₁ attempt for connected complexes.
HomologyReport homology(const SimplicialComplex& k, std::size_t pi1_effort = 20000);

/// Bounded Tietze simplification of the edge-path presentation; throws PreconditionError when disconnected.
Pi1 pi1_trivial(const SimplicialComplex& k, std::size_t effort = 20000);

enum class Verdict { consistent, inconsistent };

struct ConnectivityEvidence
{
    int target = -1;
    bool nonempty = false;
    bool connected = false;
    /// Highest i with H̃ⱼ = 0 for all j ≤ i, capped at target.
    int vanishing_through = -1;
    Pi1 pi1 = Pi1::inconclusive;
    bool pi1_checked = false;
    Verdict verdict = Verdict::inconsistent;
    HomologyReport homology;
};

/// Evidence that k is (target)-connected: nonempty, connected, H̃ᵢ = 0 for i ≤ target, π₁ for target ≥ 1.
ConnectivityEvidence connectivity_evidence(const SimplicialComplex& k, int target, std::size_t pi1_effort = 20000);

/// Quotient chain complex C(K)/C(K₀); `in_sub[k][c]` marks the cells of K₀.
/// Throws PreconditionError when the marked cells are not closed under faces.
ChainComplex relative_chain_complex(const CellComplex& k, const std::vector<std::vector<bool>>& in_sub);
/// Homology of (K, K₀); every simplex of `sub` must be a simplex of k.
HomologyReport relative_homology(const SimplicialComplex& k, const SimplicialComplex& sub);

} // namespace fsigma
