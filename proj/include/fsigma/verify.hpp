#pragma once

// Finite, replayable checks of the claims the library is built to test.

#include "fsigma/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fsigma {

enum class Outcome { pass, fail, inconclusive };
std::string to_string(Outcome o);

struct CheckResult
{
    std::string name;
    Outcome outcome = Outcome::fail;
    Json detail;
};

struct VerificationReport
{
    std::string claim;
    Json parameters = Json::object();
    Json provenance = Json::object();
    std::vector<CheckResult> checks;
    /// Large embedded objects such as certificates.
    Json artifacts = Json::object();

    void add(std::string name, bool ok, Json detail = Json::object());
    void add(std::string name, Outcome outcome, Json detail = Json::object());
    /// fail if any check failed, else inconclusive if any was, else pass.
    Outcome verdict() const;
    Json to_json() const;
};

/// Unset fields fall back to each claim's own defaults.
struct VerifyOptions
{
    std::vector<Character> characters;
    std::optional<Band> band;
    std::optional<Rational> chi_min;
    std::optional<std::size_t> limit;
    std::optional<std::size_t> radius;
    std::vector<Diagram> seeds;
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> m_max;
    std::optional<std::size_t> samples;
    std::uint64_t rng_seed = 1;
};

struct ClaimInfo
{
    std::string id;
    std::string summary;
};

const std::vector<ClaimInfo>& claims();
/// Throws PreconditionError for an unknown id or inapplicable options.
VerificationReport verify_claim(std::string_view id, const VerifyOptions& options = {});

/// One-head vertex with the given feet, L = R = 2 and χ₀ = χ₁ = 0.
Diagram balanced_vertex(std::size_t feet);

} // namespace fsigma
