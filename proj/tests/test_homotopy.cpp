#include "support/oracles.hpp"

#include "fsigma/error.hpp"
#include "fsigma/fragment.hpp"
#include "fsigma/homotopy.hpp"
#include "fsigma/random.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fsigma;

namespace {

SimplicialComplex indexed(std::size_t n, std::vector<Simplex> facets)
{
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(Label::index(static_cast<int>(i)));
    return SimplicialComplex::from_indices(labels, std::move(facets));
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t max_simplices)
{
    const std::size_t n = 3 + rng() % 5;
    std::vector<Simplex> facets;
    SimplicialComplex k = indexed(n, {});
    for (int tries = 0; tries < 20; ++tries) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (rng() % 3 == 0)
                s.push_back(static_cast<int>(i));
        if (s.empty() || s.size() > 4)
            continue;
        facets.push_back(s);
        auto candidate = indexed(n, facets);
        std::size_t total = 0;
        for (auto f : candidate.f_vector())
            total += f;
        if (total > max_simplices) {
            facets.pop_back();
            continue;
        }
        k = candidate;
    }
    return k;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> b)
{
    while (!b.empty() && b.back() == 0)
        b.pop_back();
    return b;
}

bool no_torsion(const HomologyReport& h)
{
    for (const auto& t : h.torsion)
        if (!t.empty())
            return false;
    return true;
}

Fragment small_fragment(std::uint64_t seed, std::size_t limit)
{
    Rng rng(seed);
    auto x = random_vertex(rng, 2 + seed % 2, 4);
    return explore({x}, Band{2, 5}, std::nullopt, ExploreLimits{limit, SIZE_MAX});
}

} // namespace

TEST(Homology, SimplexBoundaryChainComplex)
{
    auto c = chain_complex(simplex_boundary(2));
    EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{3, 3}));
    EXPECT_EQ(c.boundary(1).columns.size(), 3u);
    for (const auto& col : c.boundary(1).columns) {
        ASSERT_EQ(col.size(), 2u);
        EXPECT_EQ(col[0].second + col[1].second, 0);
    }
    EXPECT_EQ(chain_complex(general_matching_complex(linear_graph(3))).ranks(), (std::vector<std::size_t>{5, 5, 1}));
}

TEST(Homology, SquareCube)
{
    auto x = parse_diagram("[(*,*)]/[*,*]");
    auto frag = explore({x}, Band{2, 4}, std::nullopt, ExploreLimits{50, 2});
    auto two = std::find_if(frag.cubes().begin(), frag.cubes().end(), [](const Cube& c) { return c.dimension() == 2; });
    ASSERT_NE(two, frag.cubes().end());
    std::vector<Diagram> corners;
    for (auto v : frag.cube_vertices(*two))
        corners.push_back(frag.vertex(v).diagram);
    auto square = induced_fragment(corners, Band{2, 4});
    auto cells = cubical_cells(square, [](std::size_t) { return true; });
    ChainComplex c(cells.cells);
    EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{4, 4, 1}));
    auto h = homology(c);
    EXPECT_EQ(trimmed(h.betti), (std::vector<std::size_t>{1}));
}

TEST(Homology, BrokenBoundaryIsRejected)
{
    CellComplex bad;
    bad.counts = {2, 1, 1};
    bad.boundary = {{}, {{{0, 1}, {1, -1}}}, {{{0, 1}}}};
    EXPECT_THROW(ChainComplex{bad}, Error);
}

TEST(Homology, Spheres)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto h = homology(simplex_boundary(k + 1));
        for (std::size_t i = 0; i <= k; ++i) {
            if (i == k)
                EXPECT_FALSE(h.reduced_vanishes(i));
            else
                EXPECT_TRUE(h.reduced_vanishes(i)) << "k=" << k << " i=" << i;
        }
        EXPECT_EQ(h.betti[k], 1u);
        EXPECT_TRUE(no_torsion(h));
    }
}

TEST(Homology, MatchingComplexExamples)
{
    auto m4 = homology(matching_complex(linear_graph(4)));
    EXPECT_EQ(m4.reduced_betti0(), 1u);
    EXPECT_FALSE(m4.connected);
    auto m5 = homology(matching_complex(linear_graph(5)));
    EXPECT_TRUE(m5.connected);
    for (std::size_t i = 0; i < m5.betti.size(); ++i)
        EXPECT_TRUE(m5.reduced_vanishes(i));
}

TEST(Homology, ProjectivePlaneTorsion)
{
    auto rp2 = indexed(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5},
                           {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    auto h = homology(rp2);
    EXPECT_EQ(trimmed(h.betti), (std::vector<std::size_t>{1}));
    ASSERT_GE(h.torsion.size(), 2u);
    EXPECT_EQ(h.torsion[1], (std::vector<BigInt>{2}));
    EXPECT_FALSE(h.reduced_vanishes(1));
    EXPECT_NE(pi1_trivial(rp2), Pi1::trivial);
}

TEST(Homology, InvariantFactors)
{
    SparseMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.columns = {{{0, 2}}, {{1, 3}}};
    EXPECT_EQ(invariant_factors(m), (std::vector<BigInt>{1, 6}));
}

TEST(HomologyProperty, MatchesRationalRankOracle)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto k = random_complex(rng, 30);
        auto h = homology(k);
        EXPECT_EQ(trimmed(h.betti), trimmed(oracle::rational_betti(k))) << k.str();
        long euler = 0, alt = 0;
        auto f = k.f_vector();
        for (std::size_t i = 0; i < f.size(); ++i)
            euler += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
        for (std::size_t i = 0; i < h.betti.size(); ++i)
            alt += (i % 2 ? -1 : 1) * static_cast<long>(h.betti[i]);
        EXPECT_EQ(euler, alt);
    }
}

TEST(HomologyProperty, ConesAreAcyclic)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto k = random_complex(rng, 20);
        auto c = cone(k, Label::index(100));
        auto h = homology(c);
        EXPECT_TRUE(h.connected);
        for (std::size_t i = 0; i < h.betti.size(); ++i)
            EXPECT_TRUE(h.reduced_vanishes(i));
        EXPECT_EQ(h.pi1, Pi1::trivial);
    }
}

TEST(HomologyProperty, CubicalAgreesWithSubdivision)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto frag = small_fragment(seed, 12 + seed);
        auto keep = [](std::size_t) { return true; };
        auto cubical = homology(ChainComplex(cubical_cells(frag, keep).cells));
        auto simplicial = homology(subdivision(frag, keep), 0);
        EXPECT_EQ(trimmed(cubical.betti), trimmed(simplicial.betti)) << "seed " << seed;
        EXPECT_TRUE(no_torsion(cubical));
        EXPECT_TRUE(no_torsion(simplicial));
    }
}

TEST(Pi1, Examples)
{
    auto square = indexed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(pi1_trivial(square), Pi1::nontrivial);
    EXPECT_EQ(pi1_trivial(simplex_boundary(3)), Pi1::trivial);
    EXPECT_EQ(pi1_trivial(cone(square, Label::index(9))), Pi1::trivial);
    EXPECT_THROW(pi1_trivial(zero_sphere()), PreconditionError);
}

TEST(Connectivity, EvidenceExamples)
{
    auto m7 = connectivity_evidence(matching_complex(linear_graph(7)), 0);
    EXPECT_TRUE(m7.nonempty && m7.connected);
    EXPECT_EQ(m7.verdict, Verdict::consistent);
    auto m3 = connectivity_evidence(matching_complex(linear_graph(3)), -1);
    EXPECT_EQ(m3.verdict, Verdict::consistent);
    EXPECT_FALSE(m3.connected);
    auto gm3 = connectivity_evidence(general_matching_complex(linear_graph(3)), 0);
    EXPECT_EQ(gm3.verdict, Verdict::consistent);
    auto circle = connectivity_evidence(simplex_boundary(2), 1);
    EXPECT_EQ(circle.verdict, Verdict::inconsistent);
    EXPECT_EQ(circle.vanishing_through, 0);
    auto empty = connectivity_evidence(SimplicialComplex{}, -1);
    EXPECT_EQ(empty.verdict, Verdict::inconsistent);
}

TEST(RelativeHomology, Examples)
{
    auto sphere = simplex_boundary(3);
    auto same = relative_homology(sphere, sphere);
    for (auto b : same.betti)
        EXPECT_EQ(b, 0u);

    auto base = simplex_boundary(2);
    auto c = cone(base, Label::index(7));
    auto rel = relative_homology(c, base);
    // A cone modulo its base is a sphere one dimension up.
    EXPECT_EQ(trimmed(rel.betti), (std::vector<std::size_t>{0, 0, 1}));

    auto path = linear_graph(3);
    auto point = full_subcomplex(path, [](const Label& l) { return l == Label::v(1); });
    auto pr = relative_homology(path, point);
    for (auto b : pr.betti)
        EXPECT_EQ(b, 0u);

    auto stray = indexed(2, {{0, 1}});
    EXPECT_THROW(relative_homology(path, stray), PreconditionError);
}
