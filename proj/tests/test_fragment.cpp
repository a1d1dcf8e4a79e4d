#include "support/oracles.hpp"

#include "fsigma/error.hpp"
#include "fsigma/fragment.hpp"
#include "fsigma/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fsigma;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

const Band wide{1, 64};

} // namespace

TEST(Neighbors, CountAndOrder)
{
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 7;
        auto x = random_vertex(rng, n, 6);
        auto moves = neighbor_moves(x, wide);
        ASSERT_EQ(moves.size(), 2 * n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_TRUE(moves[j].split);
            EXPECT_EQ(moves[j].label(), Label::v(static_cast<int>(j + 1)));
            EXPECT_EQ(moves[j].target.feet(), n + 1);
            EXPECT_TRUE(poset_leq(x, moves[j].target).has_value());
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const auto& m = moves[n + j];
            EXPECT_FALSE(m.split);
            EXPECT_EQ(m.label(), Label::e(static_cast<int>(j + 1)));
            EXPECT_EQ(m.target.feet(), n - 1);
            EXPECT_TRUE(poset_leq(m.target, x).has_value());
        }
    }
}

TEST(Neighbors, BandFilters)
{
    auto x = parse_diagram("[((*,*),*)]/[*,*,*]");
    EXPECT_EQ(neighbors(x, Band{3, 3}).size(), 0u);
    EXPECT_EQ(neighbors(x, Band{3, 4}).size(), 3u);
    EXPECT_EQ(neighbors(x, Band{2, 3}).size(), 2u);
    EXPECT_THROW(neighbors(x, Band{4, 5}), PreconditionError);
}

TEST(Cofaces, CountMatchesWordRecurrence)
{
    Rng rng(2);
    for (std::size_t n = 1; n <= 8; ++n) {
        auto x = random_vertex(rng, n, n + 3);
        auto cf = cofaces(x, wide);
        EXPECT_EQ(cf.size(), oracle::coface_word_count(n)) << "feet " << n;
        EXPECT_EQ(cf.front().dimension(), 0u);
        std::set<std::string> words;
        for (const auto& c : cf) {
            words.insert(c.word);
            auto vs = coface_vertices(c);
            ASSERT_EQ(vs.size(), std::size_t{1} << c.dimension());
            std::set<std::string> distinct;
            for (const auto& v : vs)
                distinct.insert(v.str());
            EXPECT_EQ(distinct.size(), vs.size());
        }
        EXPECT_EQ(words.size(), cf.size());
    }
}

TEST(Cofaces, BandLimitsWords)
{
    auto x = parse_diagram("[((*,*),*)]/[*,*,*]");
    // Feet stay at 3: at most one split and one merge, and they must cancel in count.
    for (const auto& c : cofaces(x, Band{3, 3}))
        EXPECT_EQ(c.dimension(), 0u);
    for (const auto& c : cofaces(x, Band{2, 4})) {
        std::size_t splits = std::count(c.word.begin(), c.word.end(), 'L');
        std::size_t merges = std::count(c.word.begin(), c.word.end(), 'V');
        EXPECT_LE(splits, 1u);
        EXPECT_LE(merges, 1u);
    }
}

TEST(LinkModel, CofaceLinkEqualsGeneralMatchingComplex)
{
    Rng rng(3);
    for (std::size_t n = 2; n <= 7; ++n)
        for (int i = 0; i < 20; ++i) {
            auto x = random_vertex(rng, n, 6);
            auto lk = link_of(x, wide);
            auto gm = general_matching_complex(linear_graph(n));
            EXPECT_EQ(oracle::simplices_as_strings(lk), oracle::simplices_as_strings(gm)) << x.str();
            EXPECT_EQ(lk.f_vector(), gm.f_vector());
        }
}

TEST(LinkModel, AscendingLinkMatchesClosedForm)
{
    const std::vector<Character> chars{{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}, {Q(-1), Q(2)}, {Q(-1), Q(-1)}};
    Rng rng(4);
    for (const auto& c : chars)
        for (auto sec : {Secondary::plus_feet, Secondary::minus_feet})
            for (const Band& band : {Band{3, 4}, Band{4, 7}, Band{2, 7}}) {
                MorseSpec spec{c, sec, band};
                for (std::size_t n = band.p; n <= band.q; ++n) {
                    auto x = random_vertex(rng, n, 6);
                    auto asc = ascending_link(x, spec);
                    auto model = ascending_link_model(n, c, sec, band);
                    EXPECT_EQ(oracle::simplices_as_strings(asc), oracle::simplices_as_strings(model))
                        << character_text(c) << " n=" << n;
                    auto desc = descending_link(x, spec);
                    for (const auto& l : desc.labels())
                        EXPECT_FALSE(asc.index_of(l).has_value());
                }
            }
}

TEST(Explore, RespectsBandAndFloor)
{
    auto seed = parse_diagram("[(*,(*,(*,*)))]/[(*,*),*,*]");
    ChiFloor floor{Character{Q(1), Q(0)}, Q(0)};
    auto frag = explore({seed}, Band{3, 4}, floor, ExploreLimits{800, SIZE_MAX}, {floor.character});
    EXPECT_EQ(frag.size(), 800u);
    EXPECT_TRUE(frag.truncated);
    for (const auto& v : frag.vertices()) {
        EXPECT_TRUE(Band({3, 4}).contains(v.feet));
        EXPECT_GE(v.chi0, 0);
        EXPECT_EQ(v.chi.at(0), Rational(v.chi0));
        EXPECT_EQ(v.diagram.heads(), 1u);
        EXPECT_TRUE(v.diagram.is_reduced());
        EXPECT_EQ(v.L, L_value(v.diagram));
        EXPECT_EQ(v.R, R_value(v.diagram));
    }
    auto below = parse_diagram("[(*,(*,(*,*)))]/[*,*,*,*]");
    EXPECT_THROW(explore({below}, Band{3, 4}, floor, ExploreLimits{}), PreconditionError);
}

TEST(Explore, EdgesAreSymmetricIrreflexiveAndAdjacent)
{
    auto frag = explore({parse_diagram("[(*,*)]/[*,*]")}, Band{2, 5}, std::nullopt, ExploreLimits{500, SIZE_MAX});
    for (auto [a, b] : frag.edges()) {
        ASSERT_LT(a, b);
        const auto& va = frag.vertex(a).diagram;
        const auto& vb = frag.vertex(b).diagram;
        auto ns = neighbors(va, frag.band);
        EXPECT_NE(std::find(ns.begin(), ns.end(), vb), ns.end());
        const auto& adj = frag.adjacent(b);
        EXPECT_NE(std::find(adj.begin(), adj.end(), a), adj.end());
    }
    for (const auto& c : frag.cubes())
        for (auto v : frag.cube_vertices(c))
            EXPECT_NE(v, Fragment::none);
}

TEST(Explore, DeterministicAndMonotone)
{
    auto seed = parse_diagram("[((*,*),*)]/[*,*,*]");
    auto a = explore({seed}, Band{2, 5}, std::nullopt, ExploreLimits{300, SIZE_MAX});
    auto b = explore({seed}, Band{2, 5}, std::nullopt, ExploreLimits{300, SIZE_MAX});
    auto big = explore({seed}, Band{2, 5}, std::nullopt, ExploreLimits{900, SIZE_MAX});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.vertex(i).key, b.vertex(i).key);
        EXPECT_NE(big.find(a.vertex(i).key), Fragment::none);
    }
    EXPECT_EQ(a.edges(), b.edges());
    auto r1 = explore({seed}, Band{2, 5}, std::nullopt, ExploreLimits{100000, 1});
    EXPECT_EQ(r1.size(), 1 + neighbors(seed, Band{2, 5}).size());
}

TEST(Explore, InducedFragmentKeepsAllCubes)
{
    auto frag = explore({parse_diagram("[(*,*)]/[*,*]")}, Band{2, 4}, std::nullopt, ExploreLimits{200, SIZE_MAX});
    std::vector<Diagram> vs;
    for (const auto& v : frag.vertices())
        vs.push_back(v.diagram);
    auto again = induced_fragment(vs, Band{2, 4});
    EXPECT_EQ(again.size(), frag.size());
    EXPECT_EQ(again.edges().size(), frag.edges().size());
    EXPECT_EQ(again.cubes().size(), frag.cubes().size());
}

TEST(Components, LInvariantSplitsTheSuperlevelSet)
{
    auto l1 = parse_diagram("[(*,(*,(*,*)))]/[(*,*),*,*]");
    auto l2 = parse_diagram("[((*,(*,*)),(*,*))]/[((*,*),*),*,*]");
    ASSERT_EQ(L_value(l1), 1u);
    ASSERT_EQ(L_value(l2), 2u);
    ChiFloor floor{Character{Q(1), Q(0)}, Q(0)};
    auto frag = explore({l1, l2}, Band{3, 4}, floor, ExploreLimits{1500, SIZE_MAX});
    for (auto [a, b] : frag.edges())
        EXPECT_EQ(frag.vertex(a).L, frag.vertex(b).L);
    auto comps = components(frag);
    EXPECT_GE(comps.size(), 2u);
    std::size_t seen = 0;
    for (const auto& comp : comps)
        seen += comp.size();
    EXPECT_EQ(seen, frag.size());
}

TEST(MorseProperty, CubesHaveUniqueExtremes)
{
    for (const auto& c : {Character{Q(1), Q(1)}, Character{Q(-1), Q(2)}})
        for (auto sec : {Secondary::plus_feet, Secondary::minus_feet}) {
            MorseSpec spec{c, sec, Band{2, 5}};
            auto frag = explore({parse_diagram("[((*,*),*)]/[*,*,*]")}, spec.band, std::nullopt,
                                ExploreLimits{600, SIZE_MAX});
            for (const auto& cube : frag.cubes()) {
                auto vs = frag.cube_vertices(cube);
                std::vector<RefinedHeight> hs;
                for (auto v : vs)
                    hs.push_back(refined_height(spec, frag.vertex(v).diagram));
                auto top = *std::max_element(hs.begin(), hs.end());
                auto bottom = *std::min_element(hs.begin(), hs.end());
                EXPECT_EQ(std::count(hs.begin(), hs.end(), top), 1);
                EXPECT_EQ(std::count(hs.begin(), hs.end(), bottom), 1);
            }
            EXPECT_TRUE(check_morse_on_fragment(spec, frag).ok());
        }
}
