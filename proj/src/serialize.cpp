#include "fsigma/serialize.hpp"

#include "fsigma/error.hpp"

namespace fsigma {

Json to_json(const Character& c)
{
    return Json{{"a", rational_fraction(c.a)}, {"b", rational_fraction(c.b)}};
}

Character character_from_json(const Json& j)
{
    try {
        return Character{parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>())};
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed character: ") + e.what());
    }
}

Json to_json(const Band& b) { return Json::array({b.p, b.q}); }

Json to_json(const SimplicialComplex& k)
{
    Json labels = Json::array();
    for (const auto& l : k.labels())
        labels.push_back(l.str());
    return Json{{"vertices", labels}, {"facets", k.facets()}, {"dimension", k.dimension()}, {"f_vector", k.f_vector()}};
}

Json to_json(const HomologyReport& h)
{
    Json torsion = Json::array();
    for (const auto& t : h.torsion) {
        Json row = Json::array();
        for (const auto& d : t)
            row.push_back(d.str());
        torsion.push_back(std::move(row));
    }
    return Json{{"betti", h.betti},
                {"reduced_betti0", h.reduced_betti0()},
                {"torsion", torsion},
                {"connected", h.connected},
                {"nonempty", h.nonempty},
                {"pi1", to_string(h.pi1)}};
}

Json to_json(const ConnectivityEvidence& e)
{
    return Json{{"target", e.target},
                {"nonempty", e.nonempty},
                {"connected", e.connected},
                {"vanishing_through", e.vanishing_through},
                {"pi1", e.pi1_checked ? to_string(e.pi1) : "unchecked"},
                {"verdict", e.verdict == Verdict::consistent ? "consistent" : "inconsistent"},
                {"homology", to_json(e.homology)}};
}

Json to_json(const MorseReport& r, const Fragment& frag)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            {{"from", frag.vertex(v.from).key}, {"to", frag.vertex(v.to).key}, {"reason", v.reason}});
    return Json{{"edges_checked", r.edges_checked}, {"cubes_checked", r.cubes_checked}, {"violations", violations}};
}

Json to_json(const Fragment& frag)
{
    Json provenance{{"seeds", frag.seeds},
                    {"band", to_json(frag.band)},
                    {"max_vertices", frag.limits.max_vertices},
                    {"max_radius", frag.limits.max_radius == SIZE_MAX ? Json(nullptr) : Json(frag.limits.max_radius)},
                    {"truncated", frag.truncated}};
    if (frag.floor)
        provenance["chi_floor"] = {{"character", to_json(frag.floor->character)},
                                   {"threshold", rational_text(frag.floor->threshold)}};
    Json vertices = Json::array();
    for (const auto& v : frag.vertices()) {
        Json chi{{"chi0", v.chi0}, {"chi1", v.chi1}};
        for (std::size_t i = 0; i < frag.characters.size(); ++i)
            chi[character_text(frag.characters[i])] = rational_text(v.chi[i]);
        vertices.push_back({{"diagram", v.key}, {"feet", v.feet}, {"chi", chi}, {"L", v.L}, {"R", v.R}});
    }
    Json edges = Json::array();
    for (const auto& [i, j] : frag.edges())
        edges.push_back({i, j});
    Json cubes = Json::array();
    for (const auto& c : frag.cubes()) {
        std::string word;
        for (std::size_t s = 0; s < frag.vertex(c.base).feet; ++s)
            word += (c.mask >> s) & 1U ? "Λ" : "I";
        cubes.push_back({{"base", c.base}, {"word", word}});
    }
    return Json{{"schema", schema_version},
                {"provenance", provenance},
                {"vertices", vertices},
                {"edges", edges},
                {"cubes", cubes}};
}

namespace {

const char* const path_names[4] = {"p12", "p23", "p34", "p41"};

} // namespace

Json to_json(const CycleCertificate& cert)
{
    Json witnesses = Json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back({{"diagram", w.str()}, {"L", L_value(w)}, {"R", R_value(w)}});
    Json paths = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        Json vertices = Json::array();
        for (const auto& d : cert.paths[i].vertices)
            vertices.push_back(d.str());
        paths.push_back({{"name", path_names[i]},
                         {"label", {{"side", to_string(cert.paths[i].side)}, {"value", cert.paths[i].value}}},
                         {"vertices", vertices}});
    }
    return Json{{"schema", schema_version},
                {"character", to_json(cert.character)},
                {"band", to_json(cert.band)},
                {"witnesses", witnesses},
                {"paths", paths}};
}

CycleCertificate certificate_from_json(const Json& j)
{
    try {
        if (j.at("schema").get<int>() != schema_version)
            throw Error("unsupported certificate schema");
        CycleCertificate cert;
        cert.character = character_from_json(j.at("character"));
        cert.band = Band{j.at("band").at(0).get<std::size_t>(), j.at("band").at(1).get<std::size_t>()};
        const auto& witnesses = j.at("witnesses");
        const auto& paths = j.at("paths");
        if (witnesses.size() != 4 || paths.size() != 4)
            throw Error("a certificate has four witnesses and four paths");
        for (std::size_t i = 0; i < 4; ++i) {
            cert.witnesses[i] = parse_diagram(witnesses[i].at("diagram").get<std::string>());
            const auto& label = paths[i].at("label");
            auto side = label.at("side").get<std::string>();
            if (side != "L" && side != "R")
                throw Error("label side must be L or R");
            cert.paths[i].side = side == "L" ? Side::L : Side::R;
            cert.paths[i].value = label.at("value").get<std::size_t>();
            for (const auto& d : paths[i].at("vertices"))
                cert.paths[i].vertices.push_back(parse_diagram(d.get<std::string>()));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed certificate: ") + e.what());
    }
}

Json to_json(const CertificateCheck& check)
{
    return Json{{"ok", check.ok()},
                {"failures", check.failures},
                {"path_vertices", check.path_vertices},
                {"nerve_nodes", check.nerve_nodes},
                {"nerve_edges", check.nerve_edges},
                {"cells_checked", check.cells_checked},
                {"bipartite", check.bipartite},
                {"cycle", check.cycle}};
}

} // namespace fsigma
