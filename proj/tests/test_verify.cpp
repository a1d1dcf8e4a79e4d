#include "fsigma/error.hpp"
#include "fsigma/serialize.hpp"
#include "fsigma/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fsigma;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

} // namespace

TEST(Claims, RegistryIsCompleteAndUnique)
{
    std::set<std::string> ids;
    for (const auto& c : claims()) {
        EXPECT_FALSE(c.summary.empty());
        ids.insert(c.id);
    }
    EXPECT_EQ(ids.size(), claims().size());
    for (const char* id : {"diagram-calculus", "characters", "morse-property", "link-model", "matching-connectivity",
                           "long-interval-links", "nonempty-links-3-4", "l-invariant-disconnection",
                           "connected-links-4-7", "nerve-cycle", "morse-lemma-instance"})
        EXPECT_TRUE(ids.count(id)) << id;
    EXPECT_THROW(verify_claim("no-such-claim"), PreconditionError);
}

TEST(Report, VerdictCombinesChecks)
{
    VerificationReport r;
    r.claim = "x";
    EXPECT_EQ(r.verdict(), Outcome::pass);
    r.add("a", true);
    EXPECT_EQ(r.verdict(), Outcome::pass);
    r.add("b", Outcome::inconclusive);
    EXPECT_EQ(r.verdict(), Outcome::inconclusive);
    r.add("c", false);
    EXPECT_EQ(r.verdict(), Outcome::fail);
    auto j = r.to_json();
    EXPECT_EQ(j.at("schema"), schema_version);
    EXPECT_EQ(j.at("verdict"), "fail");
    EXPECT_EQ(j.at("checks").size(), 3u);
}

TEST(Report, Serialization)
{
    EXPECT_EQ(to_json(Character{Q(1, 2), Q(-3)}).dump(), R"({"a":"1/2","b":"-3/1"})");
    EXPECT_EQ(character_from_json(to_json(Character{Q(-2, 6), Q(5)})), (Character{Q(-1, 3), Q(5)}));
    EXPECT_THROW(character_from_json(Json{{"a", "1"}}), Error);
    auto m4 = to_json(matching_complex(linear_graph(4)));
    EXPECT_EQ(m4.at("vertices"), Json::array({"e1,2", "e2,3", "e3,4"}));
    EXPECT_EQ(m4.at("facets"), Json::parse("[[0,2],[1]]"));
    auto h = to_json(homology(simplex_boundary(2)));
    EXPECT_EQ(h.at("betti"), Json::parse("[1,1]"));
    EXPECT_EQ(h.at("pi1"), "nontrivial");
}

TEST(Claims, QuickRunsPass)
{
    VerifyOptions small;
    small.samples = 40;
    small.n_max = 8;
    for (const char* id : {"diagram-calculus", "characters", "link-model", "matching-connectivity",
                           "nonempty-links-3-4", "connected-links-4-7"}) {
        auto r = verify_claim(id, small);
        EXPECT_EQ(r.verdict(), Outcome::pass) << id << "\n" << r.to_json().dump(2);
    }
}

TEST(Claims, MorsePropertyOnSmallFragments)
{
    VerifyOptions o;
    o.characters = {Character{Q(1), Q(-1)}};
    o.band = Band{2, 4};
    o.limit = 400;
    auto r = verify_claim("morse-property", o);
    EXPECT_EQ(r.verdict(), Outcome::pass) << r.to_json().dump(2);
}

TEST(Claims, DeterministicReports)
{
    VerifyOptions o;
    o.samples = 30;
    o.rng_seed = 12345;
    auto a = verify_claim("characters", o).to_json();
    auto b = verify_claim("characters", o).to_json();
    EXPECT_EQ(a, b);
}

TEST(Claims, NerveCycleEmbedsCertificate)
{
    VerifyOptions o;
    o.characters = {Character{Q(1), Q(1)}};
    auto r = verify_claim("nerve-cycle", o);
    EXPECT_EQ(r.verdict(), Outcome::pass);
    auto j = r.to_json();
    ASSERT_TRUE(j.contains("artifacts"));
    ASSERT_EQ(j.at("artifacts").at("certificates").size(), 1u);
    const auto& cert = j.at("artifacts").at("certificates").at(0);
    EXPECT_TRUE(validate_certificate(certificate_from_json(cert)).ok());
}

TEST(Claims, NerveCycleRejectsBoundaryCharacters)
{
    VerifyOptions o;
    o.characters = {Character{Q(1), Q(0)}};
    EXPECT_THROW(verify_claim("nerve-cycle", o), PreconditionError);
}
