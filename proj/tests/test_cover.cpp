#include "fsigma/cover.hpp"
#include "fsigma/error.hpp"
#include "fsigma/serialize.hpp"
#include "fsigma/verify.hpp"

#include <gtest/gtest.h>

using namespace fsigma;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

const CycleCertificate& certificate_11()
{
    static const CycleCertificate cert = find_nerve_cycle(Character{Q(1), Q(1)});
    return cert;
}

} // namespace

TEST(Cover, AssignFromTopVertex)
{
    // E has carets over both ends, so both sides label the cell.
    auto top = parse_diagram("[(((*,*),*),(*,(*,*)))]/[(*,(*,*)),((*,*),*)]");
    ASSERT_TRUE(top.is_reduced());
    auto labels = cover_assign(top);
    ASSERT_EQ(labels.size(), 2u);
    EXPECT_EQ(labels[0], (SideValue{Side::L, 3}));
    EXPECT_EQ(labels[1], (SideValue{Side::R, 3}));

    auto left_only = parse_diagram("[((*,(*,*)),*)]/[(*,*),*,*]");
    ASSERT_TRUE(left_only.is_reduced());
    labels = cover_assign(left_only);
    ASSERT_EQ(labels.size(), 1u);
    EXPECT_EQ(labels[0], (SideValue{Side::L, 2}));

    EXPECT_TRUE(cover_assign(parse_diagram("[(*,*)]/[*,*]")).empty());
}

TEST(Cover, BalancedVertex)
{
    for (std::size_t f = 4; f <= 7; ++f) {
        auto x = balanced_vertex(f);
        EXPECT_EQ(x.feet(), f);
        EXPECT_EQ(L_value(x), 2u);
        EXPECT_EQ(R_value(x), 2u);
        EXPECT_EQ(chi0_int(x), 0);
        EXPECT_EQ(chi1_int(x), 0);
        EXPECT_TRUE(x.is_reduced());
    }
}

TEST(Cover, Preconditions)
{
    auto frag = explore({balanced_vertex(4)}, Band{4, 7}, ChiFloor{Character{Q(1), Q(1)}, Q(0)}, ExploreLimits{50, SIZE_MAX});
    EXPECT_THROW(Cover(frag, Character{Q(1), Q(0)}), PreconditionError);
    EXPECT_THROW(Cover(frag, Character{Q(-1), Q(1)}), PreconditionError);
    auto low = explore({balanced_vertex(4)}, Band{4, 7}, std::nullopt, ExploreLimits{200, SIZE_MAX});
    EXPECT_THROW(Cover(low, Character{Q(1), Q(1)}), PreconditionError);
}

TEST(Cover, NodesPartitionLabelledVertices)
{
    Character c{Q(1), Q(1)};
    auto frag = explore({balanced_vertex(5)}, Band{4, 7}, ChiFloor{c, Q(0)}, ExploreLimits{1500, SIZE_MAX});
    Cover cover(frag, c);
    EXPECT_GT(cover.cells_checked(), frag.size());
    for (std::size_t v = 0; v < frag.size(); ++v)
        for (auto node : cover.nodes_at(v)) {
            const auto& label = cover.nodes()[node];
            EXPECT_EQ(cover.node_of(label.side, label.value, v), node);
        }
    for (auto [a, b] : cover.edges()) {
        EXPECT_LT(a, b);
        EXPECT_TRUE(cover.adjacent(a, b));
        EXPECT_TRUE(cover.adjacent(b, a));
    }
    for (const auto& cell : frag.cubes())
        for (const auto& l : cover.labels(cell)) {
            auto top = frag.cube_vertex(cell.base, cell.mask);
            EXPECT_EQ(cover.node_of(l.side, l.value, top) != Cover::none, true);
        }
}

TEST(NerveCycle, CertificateForEqualWeights)
{
    const auto& cert = certificate_11();
    std::vector<std::pair<std::size_t, std::size_t>> values;
    for (const auto& w : cert.witnesses)
        values.emplace_back(L_value(w), R_value(w));
    EXPECT_EQ(values, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {3, 3}, {2, 3}}));
    auto check = validate_certificate(cert);
    EXPECT_TRUE(check.ok()) << (check.failures.empty() ? "" : check.failures.front());
    EXPECT_TRUE(check.bipartite);
    EXPECT_TRUE(check.cycle);
    EXPECT_GE(check.nerve_nodes, 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(cert.paths[i].vertices.front(), cert.witnesses[i]);
        EXPECT_EQ(cert.paths[i].vertices.back(), cert.witnesses[(i + 1) % 4]);
    }
}

TEST(NerveCycle, OtherCharacters)
{
    for (const auto& c : {Character{Q(2), Q(1)}, Character{Q(1), Q(3)}, Character{Q(1, 2), Q(5)}}) {
        auto cert = find_nerve_cycle(c);
        EXPECT_TRUE(validate_certificate(cert).ok()) << character_text(c);
    }
}

TEST(NerveCycle, RejectsCharactersOffTheOpenQuadrant)
{
    EXPECT_THROW(find_nerve_cycle(Character{Q(1), Q(0)}), PreconditionError);
    EXPECT_THROW(find_nerve_cycle(Character{Q(-1), Q(1)}), PreconditionError);
}

TEST(NerveCycle, JsonRoundTrip)
{
    const auto& cert = certificate_11();
    auto j = to_json(cert);
    EXPECT_EQ(j.at("schema"), schema_version);
    auto back = certificate_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.character, cert.character);
    EXPECT_EQ(back.band, cert.band);
    EXPECT_EQ(back.witnesses, cert.witnesses);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(back.paths[i].side, cert.paths[i].side);
        EXPECT_EQ(back.paths[i].value, cert.paths[i].value);
        EXPECT_EQ(back.paths[i].vertices, cert.paths[i].vertices);
    }
    EXPECT_TRUE(validate_certificate(back).ok());
}

TEST(NerveCycle, TamperedCertificatesFail)
{
    const auto& good = certificate_11();

    auto wrong_side = good;
    wrong_side.paths[0].side = Side::L;
    EXPECT_FALSE(validate_certificate(wrong_side).ok());

    auto wrong_value = good;
    wrong_value.paths[1].value = 4;
    EXPECT_FALSE(validate_certificate(wrong_value).ok());

    auto gap = good;
    auto& vs = gap.paths[2].vertices;
    ASSERT_GE(vs.size(), 3u);
    vs.erase(vs.begin() + 1);
    EXPECT_FALSE(validate_certificate(gap).ok());

    auto swapped = good;
    std::swap(swapped.witnesses[0], swapped.witnesses[2]);
    EXPECT_FALSE(validate_certificate(swapped).ok());

    auto zero = good;
    zero.character = Character{Q(0), Q(1)};
    EXPECT_FALSE(validate_certificate(zero).ok());
}

TEST(NerveCycle, MalformedJsonIsAnError)
{
    auto j = to_json(certificate_11());
    j["paths"].erase(0);
    EXPECT_THROW(certificate_from_json(j), Error);
    auto k = to_json(certificate_11());
    k["witnesses"][0]["diagram"] = "[(*,*]/[*,*]";
    EXPECT_THROW(certificate_from_json(k), ParseError);
}
