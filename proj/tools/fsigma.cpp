// fsigma: diagram arithmetic, complexes, exploration and claim verification.
//
// Exit codes: 0 pass / success, 1 fail, 2 usage or input error, 3 inconclusive.

#include "fsigma/error.hpp"
#include "fsigma/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace fsigma;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct Common
{
    bool json = false;
    std::vector<std::string> chars;
    std::string band;
    std::string chi_min;
    std::size_t limit = 0;
    std::size_t radius = 0;
    std::vector<std::string> seeds;
    std::string secondary = "+f";
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Character> parse_characters(const std::vector<std::string>& texts)
{
    std::vector<Character> out;
    for (const auto& t : texts)
        out.push_back(parse_character(t));
    return out;
}

Secondary parse_secondary(const std::string& s)
{
    if (s == "+f" || s == "plus")
        return Secondary::plus_feet;
    if (s == "-f" || s == "minus")
        return Secondary::minus_feet;
    throw PreconditionError("secondary must be +f or -f");
}

int outcome_code(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return exit_pass;
    case Outcome::fail:
        return exit_fail;
    case Outcome::inconclusive:
        return exit_inconclusive;
    }
    return exit_fail;
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_complex(const SimplicialComplex& k, bool json, bool with_homology, std::optional<int> target)
{
    if (json) {
        Json j{{"schema", schema_version}, {"complex", to_json(k)}};
        if (with_homology)
            j["homology"] = to_json(homology(k));
        if (target)
            j["connectivity"] = to_json(connectivity_evidence(k, *target));
        print(j);
        return;
    }
    std::cout << "f-vector:";
    for (auto n : k.f_vector())
        std::cout << ' ' << n;
    std::cout << '\n' << k.str() << '\n';
    if (with_homology) {
        auto h = homology(k);
        std::cout << "betti:";
        for (auto b : h.betti)
            std::cout << ' ' << b;
        std::cout << "\nreduced betti0: " << h.reduced_betti0() << "\npi1: " << to_string(h.pi1) << '\n';
    }
    if (target) {
        auto ev = connectivity_evidence(k, *target);
        std::cout << *target << "-connected evidence: "
                  << (ev.verdict == Verdict::consistent ? "consistent" : "inconsistent") << '\n';
    }
}

void print_report(const VerificationReport& r, bool json)
{
    if (json) {
        print(r.to_json());
        return;
    }
    std::cout << r.claim << ": " << to_string(r.verdict()) << '\n';
    for (const auto& c : r.checks)
        std::cout << "  [" << to_string(c.outcome) << "] " << c.name << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    CLI::App app{"Split-merge diagrams, Stein-Farley fragments and character height functions"};
    app.require_subcommand(1);

    Common common;
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", common.json, "Machine-readable output"); };

    // Diagram strings look like CLI11's "[a,b]" list syntax; options that take them turn that off.
    std::vector<std::string> operands;

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduced form of a diagram");
    reduce_cmd->add_option("diagram", operands, "Diagram such as [(*,*)]/[*,*]")->required()->expected(1)->allow_extra_args(false);
    json_flag(reduce_cmd);

    auto* mul_cmd = app.add_subcommand("mul", "Reduced product of diagrams, left to right");
    // Operands are collected from the leftovers so that any number of diagrams can follow.
    mul_cmd->allow_extras();
    json_flag(mul_cmd);

    auto* inv_cmd = app.add_subcommand("inv", "Inverse diagram");
    inv_cmd->add_option("diagram", operands)->required()->expected(1)->allow_extra_args(false);
    json_flag(inv_cmd);

    auto* chi_cmd = app.add_subcommand("chi", "Character values of a diagram");
    chi_cmd->add_option("diagram", operands)->required()->expected(1)->allow_extra_args(false);
    chi_cmd->add_option("--char", common.chars, "Character a,b (integers or p/q)");
    json_flag(chi_cmd);

    std::string kind;
    std::size_t size = 0;
    bool with_homology = false;
    std::optional<int> target;
    auto* complex_cmd = app.add_subcommand("complex", "Build a simplicial complex");
    complex_cmd->add_option("kind", kind, "matching | general-matching | sphere | simplex | ascending")
        ->required()
        ->check(CLI::IsMember({"matching", "general-matching", "sphere", "simplex", "ascending"}));
    complex_cmd->add_option("--n", size, "n for L_n, sphere or simplex dimension, or feet")->required();
    complex_cmd->add_option("--char", common.chars, "Character for the ascending-link model");
    complex_cmd->add_option("--band", common.band, "Band p,q for the ascending-link model");
    complex_cmd->add_option("--secondary", common.secondary, "+f or -f");
    complex_cmd->add_flag("--homology", with_homology, "Report integral homology");
    complex_cmd->add_option("--target", target, "Report evidence for k-connectivity");
    json_flag(complex_cmd);

    bool ascending = false, descending = false;
    auto* link_cmd = app.add_subcommand("link", "Link of a vertex from its cofaces");
    link_cmd->add_option("diagram", operands)->required()->expected(1)->allow_extra_args(false);
    link_cmd->add_option("--band", common.band, "Band p,q")->required();
    link_cmd->add_option("--char", common.chars, "Character for ascending or descending links");
    link_cmd->add_option("--secondary", common.secondary, "+f or -f");
    link_cmd->add_flag("--ascending", ascending);
    link_cmd->add_flag("--descending", descending);
    link_cmd->add_flag("--homology", with_homology);
    json_flag(link_cmd);

    auto* explore_cmd = app.add_subcommand("explore", "Breadth-first fragment of the Stein-Farley complex");
    explore_cmd->add_option("--seed", common.seeds, "Seed vertex (repeatable)")->allow_extra_args(false)->required();
    explore_cmd->add_option("--band", common.band, "Band p,q")->required();
    explore_cmd->add_option("--char", common.chars, "Character for the floor and heights");
    explore_cmd->add_option("--chi-min", common.chi_min, "Keep vertices with chi >= t");
    explore_cmd->add_option("--limit", common.limit, "Maximum vertices")->default_val(5000);
    explore_cmd->add_option("--radius", common.radius, "Maximum BFS radius");
    json_flag(explore_cmd);

    std::string claim;
    bool list = false;
    std::size_t n_max = 0, m_max = 0, samples = 0;
    std::uint64_t rng_seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a claim check and report pass/fail/inconclusive");
    verify_cmd->add_option("claim", claim, "Claim id (see --list)");
    verify_cmd->add_flag("--list", list, "List claim ids");
    verify_cmd->add_option("--char", common.chars, "Character a,b (repeatable)");
    verify_cmd->add_option("--band", common.band, "Band p,q");
    verify_cmd->add_option("--chi-min", common.chi_min, "Superlevel threshold");
    verify_cmd->add_option("--limit", common.limit, "Fragment vertex limit");
    verify_cmd->add_option("--radius", common.radius, "Fragment radius limit");
    verify_cmd->add_option("--seed", common.seeds, "Seed vertex (repeatable)")->allow_extra_args(false);
    verify_cmd->add_option("--n-max", n_max, "Largest n");
    verify_cmd->add_option("--m-max", m_max, "Largest m");
    verify_cmd->add_option("--samples", samples, "Random sample size");
    verify_cmd->add_option("--rng-seed", rng_seed, "Random seed")->default_val(1);
    json_flag(verify_cmd);

    std::string cert_path;
    auto* validate_cmd = app.add_subcommand("validate-certificate", "Replay a nerve-cycle certificate");
    validate_cmd->add_option("file", cert_path, "Certificate JSON, or - for stdin")->required();
    json_flag(validate_cmd);

    auto* cycle_cmd = app.add_subcommand("find-cycle", "Search for a nerve-cycle certificate and print it");
    cycle_cmd->add_option("--char", common.chars, "Character a,b with a, b > 0")->required()->expected(1)->allow_extra_args(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const bool json = common.json;
        if (reduce_cmd->parsed() || inv_cmd->parsed()) {
            Diagram d = parse_diagram(operands.at(0));
            Diagram out = reduce_cmd->parsed() ? reduce(d) : reduce(inverse(d));
            if (json)
                print({{"schema", schema_version}, {"diagram", out.str()}, {"heads", out.heads()}, {"feet", out.feet()}});
            else
                std::cout << out.str() << '\n';
            return exit_pass;
        }
        if (mul_cmd->parsed()) {
            operands = mul_cmd->remaining();
            if (operands.size() < 2)
                throw PreconditionError("mul needs at least two diagrams");
            Diagram acc = parse_diagram(operands.at(0));
            for (std::size_t i = 1; i < operands.size(); ++i)
                acc = multiply(acc, parse_diagram(operands[i]));
            acc = reduce(acc);
            if (json)
                print({{"schema", schema_version}, {"diagram", acc.str()}, {"heads", acc.heads()}, {"feet", acc.feet()}});
            else
                std::cout << acc.str() << '\n';
            return exit_pass;
        }
        if (chi_cmd->parsed()) {
            Diagram d = parse_diagram(operands.at(0));
            auto chars = parse_characters(common.chars);
            if (json) {
                Json j{{"schema", schema_version}, {"diagram", reduce(d).str()}, {"chi0", chi0_int(d)}, {"chi1", chi1_int(d)}};
                for (const auto& c : chars)
                    j["chi"][character_text(c)] = rational_text(chi(c, d));
                print(j);
            } else if (chars.empty()) {
                std::cout << "chi0 " << chi0_int(d) << "\nchi1 " << chi1_int(d) << '\n';
            } else {
                for (const auto& c : chars)
                    std::cout << rational_text(chi(c, d)) << '\n';
            }
            return exit_pass;
        }
        if (complex_cmd->parsed()) {
            SimplicialComplex k;
            if (kind == "matching")
                k = matching_complex(linear_graph(size));
            else if (kind == "general-matching")
                k = general_matching_complex(linear_graph(size));
            else if (kind == "sphere")
                k = simplex_boundary(size + 1);
            else if (kind == "simplex")
                k = full_simplex(size);
            else {
                if (common.chars.size() != 1 || common.band.empty())
                    throw PreconditionError("ascending needs one --char and --band");
                k = ascending_link_model(size, parse_character(common.chars[0]), parse_secondary(common.secondary),
                                         parse_band(common.band));
            }
            print_complex(k, json, with_homology, target);
            return exit_pass;
        }
        if (link_cmd->parsed()) {
            Diagram x = reduce(parse_diagram(operands.at(0)));
            Band band = parse_band(common.band);
            SimplicialComplex k;
            if (ascending || descending) {
                if (common.chars.size() != 1)
                    throw PreconditionError("ascending and descending links need one --char");
                MorseSpec spec{parse_character(common.chars[0]), parse_secondary(common.secondary), band};
                k = ascending ? ascending_link(x, spec) : descending_link(x, spec);
            } else {
                k = link_of(x, band);
            }
            print_complex(k, json, with_homology, std::nullopt);
            return exit_pass;
        }
        if (explore_cmd->parsed()) {
            std::vector<Diagram> seeds;
            for (const auto& s : common.seeds)
                seeds.push_back(reduce(parse_diagram(s)));
            auto chars = parse_characters(common.chars);
            std::optional<ChiFloor> floor;
            if (!common.chi_min.empty()) {
                if (chars.empty())
                    throw PreconditionError("--chi-min needs --char");
                floor = ChiFloor{chars.front(), parse_rational(common.chi_min)};
            }
            ExploreLimits limits;
            limits.max_vertices = common.limit;
            if (explore_cmd->count("--radius") > 0)
                limits.max_radius = common.radius;
            Fragment frag = explore(seeds, parse_band(common.band), floor, limits, chars);
            if (json) {
                print(to_json(frag));
            } else {
                std::cout << "vertices " << frag.size() << "\nedges " << frag.edges().size() << "\ncubes "
                          << frag.cubes().size() << "\ncomponents " << components(frag).size() << "\ntruncated "
                          << (frag.truncated ? "yes" : "no") << '\n';
            }
            return exit_pass;
        }
        if (verify_cmd->parsed()) {
            if (list) {
                for (const auto& c : claims())
                    std::cout << c.id << "  " << c.summary << '\n';
                return exit_pass;
            }
            if (claim.empty())
                throw PreconditionError("verify needs a claim id (see verify --list)");
            VerifyOptions options;
            options.characters = parse_characters(common.chars);
            if (!common.band.empty())
                options.band = parse_band(common.band);
            if (!common.chi_min.empty())
                options.chi_min = parse_rational(common.chi_min);
            if (verify_cmd->count("--limit") > 0)
                options.limit = common.limit;
            if (verify_cmd->count("--radius") > 0)
                options.radius = common.radius;
            for (const auto& s : common.seeds)
                options.seeds.push_back(reduce(parse_diagram(s)));
            if (verify_cmd->count("--n-max") > 0)
                options.n_max = n_max;
            if (verify_cmd->count("--m-max") > 0)
                options.m_max = m_max;
            if (verify_cmd->count("--samples") > 0)
                options.samples = samples;
            options.rng_seed = rng_seed;
            auto report = verify_claim(claim, options);
            print_report(report, json);
            return outcome_code(report.verdict());
        }
        if (validate_cmd->parsed()) {
            Json j;
            try {
                j = Json::parse(read_input(cert_path));
            } catch (const nlohmann::json::parse_error& e) {
                throw Error(std::string("certificate is not JSON: ") + e.what());
            }
            auto check = validate_certificate(certificate_from_json(j));
            if (json) {
                print(to_json(check));
            } else {
                std::cout << (check.ok() ? "valid" : "invalid") << '\n';
                for (const auto& f : check.failures)
                    std::cout << "  " << f << '\n';
            }
            return check.ok() ? exit_pass : exit_fail;
        }
        if (cycle_cmd->parsed()) {
            try {
                print(to_json(find_nerve_cycle(parse_character(common.chars.at(0)))));
            } catch (const SearchExhausted& e) {
                std::cerr << "fsigma: " << e.what() << '\n';
                return exit_inconclusive;
            }
            return exit_pass;
        }
    } catch (const Error& e) {
        std::cerr << "fsigma: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
