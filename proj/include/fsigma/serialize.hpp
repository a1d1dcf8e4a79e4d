#pragma once

// JSON forms of the library's values. Diagrams are always embedded as strings.

#include "fsigma/cover.hpp"
#include "fsigma/fragment.hpp"
#include "fsigma/homotopy.hpp"

#include <json.hpp>

namespace fsigma {

using Json = nlohmann::ordered_json;

constexpr int schema_version = 1;

Json to_json(const Character& c);
Character character_from_json(const Json& j);
Json to_json(const Band& b);
Json to_json(const SimplicialComplex& k);
Json to_json(const HomologyReport& h);
Json to_json(const ConnectivityEvidence& e);
Json to_json(const MorseReport& r, const Fragment& frag);
/// Cubes are written as (bottom vertex, word over I and Λ).
Json to_json(const Fragment& frag);
Json to_json(const CycleCertificate& cert);
/// Throws Error on malformed input and ParseError on malformed diagrams.
CycleCertificate certificate_from_json(const Json& j);
Json to_json(const CertificateCheck& check);

} // namespace fsigma
