#include "fsigma/verify.hpp"

#include "fsigma/error.hpp"
#include "fsigma/random.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fsigma {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::inconclusive:
        return "inconclusive";
    }
    return "fail";
}

void VerificationReport::add(std::string name, bool ok, Json detail)
{
    add(std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(detail));
}

void VerificationReport::add(std::string name, Outcome outcome, Json detail)
{
    checks.push_back(CheckResult{std::move(name), outcome, std::move(detail)});
}

Outcome VerificationReport::verdict() const
{
    Outcome out = Outcome::pass;
    for (const auto& c : checks) {
        if (c.outcome == Outcome::fail)
            return Outcome::fail;
        if (c.outcome == Outcome::inconclusive)
            out = Outcome::inconclusive;
    }
    return out;
}

Json VerificationReport::to_json() const
{
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back({{"name", c.name}, {"outcome", fsigma::to_string(c.outcome)}, {"detail", c.detail}});
    Json out{{"schema", schema_version},
             {"claim", claim},
             {"verdict", fsigma::to_string(verdict())},
             {"parameters", parameters},
             {"provenance", provenance},
             {"checks", list}};
    if (!artifacts.empty())
        out["artifacts"] = artifacts;
    return out;
}

Diagram balanced_vertex(std::size_t feet)
{
    if (feet < 2)
        throw PreconditionError("balanced_vertex needs at least two feet");
    using T = BinaryTree;
    T tree = T::caret(T::caret(T::leaf(), T::single_caret()), T::caret(T::left_vine(feet - 1), T::leaf()));
    std::vector<T> plus{T::left_vine(2)};
    for (std::size_t i = 0; i + 2 < feet; ++i)
        plus.push_back(T::leaf());
    plus.push_back(T::right_vine(2));
    return reduce(Diagram(BinaryForest({tree}), BinaryForest(std::move(plus))));
}

namespace {

using Report = VerificationReport;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Json characters_json(const std::vector<Character>& cs)
{
    Json out = Json::array();
    for (const auto& c : cs)
        out.push_back(character_text(c));
    return out;
}

std::vector<Character> characters_or(const VerifyOptions& o, std::vector<Character> fallback)
{
    return o.characters.empty() ? fallback : o.characters;
}

ExploreLimits limits_of(const VerifyOptions& o, std::size_t default_limit)
{
    ExploreLimits l;
    l.max_vertices = o.limit.value_or(default_limit);
    l.max_radius = o.radius.value_or(SIZE_MAX);
    return l;
}

Json fragment_provenance(const Fragment& frag)
{
    Json j = to_json(frag).at("provenance");
    j["vertices"] = frag.size();
    j["edges"] = frag.edges().size();
    j["cubes"] = frag.cubes().size();
    return j;
}

// Up to `count` vertex indices spread evenly over the fragment, optionally filtered.
std::vector<std::size_t> spread(const Fragment& frag, std::size_t count,
                                const std::function<bool(std::size_t)>& keep = {})
{
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < frag.size(); ++v)
        if (!keep || keep(v))
            pool.push_back(v);
    if (pool.size() <= count)
        return pool;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(pool[i * pool.size() / count]);
    return out;
}

bool is_cone_on(const SimplicialComplex& k, const Label& apex)
{
    auto idx = k.index_of(apex);
    if (!idx)
        return false;
    return std::all_of(k.facets().begin(), k.facets().end(),
                       [&](const Simplex& f) { return std::binary_search(f.begin(), f.end(), *idx); });
}

bool fully_acyclic(const HomologyReport& h)
{
    if (!h.nonempty)
        return false;
    for (std::size_t i = 0; i < h.betti.size(); ++i)
        if (!h.reduced_vanishes(i))
            return false;
    return true;
}

Json homology_brief(const HomologyReport& h)
{
    return Json{{"betti", h.betti}, {"pi1", to_string(h.pi1)}};
}

// ---------------------------------------------------------------- diagram calculus

Report diagram_calculus(const VerifyOptions& o)
{
    Report r;
    std::size_t samples = o.samples.value_or(1000);
    std::size_t triples = std::max<std::size_t>(1, samples / 2);
    const std::size_t max_carets = 20;
    r.parameters = {{"samples", samples}, {"triples", triples}, {"max_carets", max_carets}, {"rng_seed", o.rng_seed}};
    Rng rng(o.rng_seed);

    std::size_t bad_confluence = 0, bad_expansion = 0;
    Json example = nullptr;
    for (std::size_t k = 0; k < samples; ++k) {
        Diagram d = random_diagram(rng, uniform(rng, 1, 3), uniform(rng, 1, 3), max_carets);
        Diagram canon = reduce(d);
        bool ok = canon.is_reduced();
        for (int t = 0; t < 4; ++t)
            ok = ok && random_order_reduce(rng, d) == canon;
        if (!ok) {
            ++bad_confluence;
            if (example.is_null())
                example = d.str();
        }
        if (reduce(random_expansion(rng, canon, uniform(rng, 1, 4))) != canon)
            ++bad_expansion;
    }
    r.add("confluence of random reduction orders", bad_confluence == 0,
          {{"diagrams", samples}, {"failures", bad_confluence}, {"first_failure", example}});
    r.add("expansion then reduction is the identity", bad_expansion == 0,
          {{"diagrams", samples}, {"failures", bad_expansion}});

    std::size_t bad_assoc = 0, bad_inverse = 0;
    for (std::size_t k = 0; k < triples; ++k) {
        std::size_t n0 = uniform(rng, 1, 3), n1 = uniform(rng, 1, 3), n2 = uniform(rng, 1, 3),
                    n3 = uniform(rng, 1, 3);
        Diagram a = random_diagram(rng, n0, n1, max_carets);
        Diagram b = random_diagram(rng, n1, n2, max_carets);
        Diagram c = random_diagram(rng, n2, n3, max_carets);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            ++bad_assoc;
        if (multiply(a, inverse(a)) != identity(n0))
            ++bad_inverse;
    }
    r.add("associativity on composable triples", bad_assoc == 0, {{"triples", triples}, {"failures", bad_assoc}});
    r.add("inverses", bad_inverse == 0, {{"diagrams", triples}, {"failures", bad_inverse}});

    Json broken = Json::array();
    std::size_t relations = 0;
    for (std::size_t i = 0; i <= 6; ++i)
        for (std::size_t j = i + 1; j <= 6; ++j) {
            ++relations;
            if (multiply(generator(j), generator(i)) != multiply(generator(i), generator(j + 1)))
                broken.push_back({i, j});
        }
    r.add("x_j x_i = x_i x_(j+1) for 0 <= i < j <= 6", broken.empty(),
          {{"relations", relations}, {"broken", broken}});
    return r;
}

// ---------------------------------------------------------------- characters

Character random_character(Rng& rng)
{
    auto part = [&] {
        long num = static_cast<long>(uniform(rng, 1, 9)) * (uniform(rng, 0, 1) ? 1 : -1);
        return Rational(num, static_cast<long>(uniform(rng, 1, 5)));
    };
    return Character{part(), part()};
}

Report characters_claim(const VerifyOptions& o)
{
    Report r;
    std::size_t samples = o.samples.value_or(500);
    std::size_t vertices = std::max<std::size_t>(1, samples * 2 / 5);
    r.parameters = {{"samples", samples}, {"vertices", vertices}, {"rng_seed", o.rng_seed}};
    Rng rng(o.rng_seed);

    std::size_t bad_hom = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        Diagram g = random_element(rng, 12), h = random_element(rng, 12);
        Diagram gh = multiply(g, h);
        if (chi0_int(gh) != chi0_int(g) + chi0_int(h) || chi1_int(gh) != chi1_int(g) + chi1_int(h))
            ++bad_hom;
    }
    r.add("chi0 and chi1 are homomorphisms", bad_hom == 0, {{"pairs", samples}, {"failures", bad_hom}});

    std::size_t bad_inv = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        Diagram g = random_diagram(rng, 1, uniform(rng, 1, 4), 12);
        Diagram e = random_expansion(rng, g, uniform(rng, 1, 5));
        if (chi0_int(e) != chi0_int(reduce(g)) || chi1_int(e) != chi1_int(reduce(g)))
            ++bad_inv;
    }
    r.add("invariance under unreduced representatives", bad_inv == 0,
          {{"expansions", samples}, {"failures", bad_inv}});

    std::size_t bad_delta = 0, moves = 0;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < vertices; ++k) {
        std::size_t n = uniform(rng, 2, 7);
        Diagram x = random_vertex(rng, n, 12);
        Character c = random_character(rng);
        Rational here = chi(c, x);
        for (std::size_t i = 0; i < n; ++i, ++moves) {
            Diagram y = split_foot(x, i);
            if (chi(c, y) - here != split_delta(c, n, i))
                ++bad_delta;
            long d0 = chi0_int(y) - chi0_int(x), d1 = chi1_int(y) - chi1_int(x);
            if (d0 == -1 && d1 == 0)
                seen.insert("split:-a");
            if (d0 == 0 && d1 == -1)
                seen.insert("split:-b");
            if (d0 == 0 && d1 == 0)
                seen.insert("split:0");
        }
        for (std::size_t i = 0; i + 1 < n; ++i, ++moves) {
            Diagram y = merge_feet(x, i);
            if (chi(c, y) - here != merge_delta(c, n, i))
                ++bad_delta;
            long d0 = chi0_int(y) - chi0_int(x), d1 = chi1_int(y) - chi1_int(x);
            if (d0 == 1 && d1 == 0)
                seen.insert("merge:+a");
            if (d0 == 0 && d1 == 1)
                seen.insert("merge:+b");
            if (d0 == 0 && d1 == 0)
                seen.insert("merge:0");
        }
    }
    r.add("edge-move deltas match the predicted values", bad_delta == 0,
          {{"vertices", vertices}, {"moves", moves}, {"failures", bad_delta}});
    r.add("all six move deltas occur", seen.size() == 6, {{"observed", Json(std::vector<std::string>(seen.begin(), seen.end()))}});
    return r;
}

// ---------------------------------------------------------------- Morse property

Report morse_property(const VerifyOptions& o)
{
    Report r;
    auto chars = characters_or(o, {{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {Rational(1, 2), Rational(-1, 3)}});
    std::vector<Band> bands = o.band ? std::vector<Band>{*o.band} : std::vector<Band>{{2, 5}, {3, 4}, {4, 7}};
    auto limits = limits_of(o, 5000);
    Json band_list = Json::array();
    for (const auto& b : bands)
        band_list.push_back(to_json(b));
    r.parameters = {{"characters", characters_json(chars)}, {"bands", band_list}, {"limit", limits.max_vertices}};
    r.provenance["fragments"] = Json::array();

    for (const auto& band : bands) {
        std::vector<Diagram> seeds = o.seeds;
        if (seeds.empty())
            seeds.push_back(balanced_vertex(std::max<std::size_t>(band.p, 2)));
        Fragment frag = explore(seeds, band, std::nullopt, limits, chars);
        r.provenance["fragments"].push_back(fragment_provenance(frag));
        for (const auto& c : chars)
            for (auto secondary : {Secondary::plus_feet, Secondary::minus_feet}) {
                auto report = check_morse_on_fragment(MorseSpec{c, secondary, band}, frag);
                Json detail = to_json(report, frag);
                detail["vertices"] = frag.size();
                auto& listed = detail["violations"];
                while (listed.size() > 5)
                    listed.erase(listed.size() - 1);
                r.add("chi=" + character_text(c) + " " + (secondary == Secondary::plus_feet ? "+f" : "-f") +
                          " band [" + std::to_string(band.p) + "," + std::to_string(band.q) + "]",
                      report.ok() && report.edges_checked > 0, std::move(detail));
            }
    }
    return r;
}

// ---------------------------------------------------------------- link model

Report link_model(const VerifyOptions& o)
{
    Report r;
    std::size_t samples = o.samples.value_or(20);
    std::size_t n_max = o.n_max.value_or(7);
    r.parameters = {{"vertices_per_feet", samples}, {"feet", {2, n_max}}, {"rng_seed", o.rng_seed}};
    Rng rng(o.rng_seed);
    for (std::size_t n = 2; n <= n_max; ++n) {
        SimplicialComplex gm = general_matching_complex(linear_graph(n));
        std::size_t equal = 0;
        Json mismatch = nullptr;
        for (std::size_t k = 0; k < samples; ++k) {
            Diagram x = random_vertex(rng, n, 10);
            SimplicialComplex lk = link_of(x, Band{1, 2 * n});
            if (lk == gm && lk.f_vector() == gm.f_vector())
                ++equal;
            else if (mismatch.is_null())
                mismatch = {{"vertex", x.str()}, {"f_vector", lk.f_vector()}};
        }
        r.add("feet " + std::to_string(n) + ": link equals GM(L" + std::to_string(n) + ")", equal == samples,
              {{"vertices", samples}, {"equal", equal}, {"f_vector", gm.f_vector()}, {"first_mismatch", mismatch}});
    }
    return r;
}

// ---------------------------------------------------------------- matching complexes

int matching_bound(std::size_t n) { return static_cast<int>((n - 2) / 3) - 1; }

Report matching_connectivity(const VerifyOptions& o)
{
    Report r;
    std::size_t n_max = o.n_max.value_or(11);
    r.parameters = {{"n", {2, n_max}}};
    for (std::size_t n = 2; n <= n_max; ++n) {
        SimplicialComplex m = matching_complex(linear_graph(n));
        int k = matching_bound(n);
        auto ev = connectivity_evidence(m, k);
        Json detail = to_json(ev);
        detail.erase("homology");
        detail["betti"] = ev.homology.betti;
        detail["f_vector"] = m.f_vector();
        std::string tag = "M(L" + std::to_string(n) + ")";
        r.add(tag + " is " + std::to_string(k) + "-connected", ev.verdict == Verdict::consistent, detail);
        if (n >= 8)
            r.add(tag + " pi1 trivial", ev.connected && pi1_trivial(m) == Pi1::trivial);
        if (n == 4)
            r.add("M(L4) is disconnected", ev.nonempty && !ev.connected, {{"betti", ev.homology.betti}});
        if (n == 5)
            r.add("M(L5) is connected", ev.connected, {{"betti", ev.homology.betti}});
    }
    for (std::size_t n = 5; n <= n_max; ++n) {
        SimplicialComplex m = matching_complex(linear_graph(n));
        auto a = star(m, Label::e(static_cast<int>(n) - 1));
        auto b = star(m, Label::e(static_cast<int>(n) - 2));
        auto meet = complex_intersection(a, b);
        auto smaller = matching_complex(linear_graph(n - 3));
        bool ok = complex_union(a, b) == m && isomorphic(meet, smaller);
        r.add("M(L" + std::to_string(n) + ") = st(e" + std::to_string(n - 1) + "," + std::to_string(n) + ") u st(e" +
                  std::to_string(n - 2) + "," + std::to_string(n - 1) + "), meet ~ M(L" + std::to_string(n - 3) + ")",
              ok, {{"meet_f_vector", meet.f_vector()}, {"expected_f_vector", smaller.f_vector()}});
    }
    return r;
}

// ---------------------------------------------------------------- long interval

std::vector<Character> long_interval_characters(const VerifyOptions& o, Report& r)
{
    auto chars = characters_or(o, {{-1, 0}, {-1, 1}, {-2, 3}, {-1, -1}});
    std::vector<Character> out;
    for (const auto& c : chars) {
        if (sign(c.a) >= 0 && sign(c.b) >= 0)
            throw PreconditionError("the long interval needs a < 0 or b < 0; got " + character_text(c));
        // By the left-right symmetry the smaller coefficient may be taken as a.
        if (c.b < c.a) {
            r.provenance["mirrored"].push_back(character_text(c));
            out.push_back(Character{c.b, c.a});
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Report long_interval_links(const VerifyOptions& o)
{
    Report r;
    auto chars = long_interval_characters(o, r);
    std::size_t m_max = o.m_max.value_or(2);
    r.parameters = {{"characters", characters_json(chars)}, {"m", {1, m_max}}, {"secondary", "-f"}};
    for (std::size_t m = 1; m <= m_max; ++m) {
        const std::size_t n = 3 * m + 4;
        const Band band{2, n};
        for (const auto& c : chars) {
            std::string base = "m=" + std::to_string(m) + " chi=" + character_text(c);
            for (std::size_t f = 2; f <= n; ++f) {
                std::string tag = base + " feet " + std::to_string(f);
                auto asc = ascending_link_model(f, c, Secondary::minus_feet, band);
                auto ev = connectivity_evidence(asc, static_cast<int>(m) - 1);
                Json detail{{"f_vector", asc.f_vector()}, {"homology", homology_brief(ev.homology)}};
                Outcome outcome = ev.verdict == Verdict::consistent ? Outcome::pass : Outcome::fail;
                r.add(tag + ": " + std::to_string(m - 1) + "-connected", outcome, detail);

                const bool b_negative = sign(c.b) < 0;
                if (f < n - 1 || (f == n - 1 && !b_negative)) {
                    auto h = homology(asc);
                    r.add(tag + ": cone on v1", is_cone_on(asc, Label::v(1)) && fully_acyclic(h) && h.pi1 == Pi1::trivial,
                          homology_brief(h));
                } else if (f == n - 1) {
                    auto wider = ascending_link_model(f, c, Secondary::minus_feet, Band{2, n + 1});
                    std::vector<Label> edge{Label::v(1), Label::v(static_cast<int>(n) - 1)};
                    bool has_edge = wider.contains(edge);
                    bool removed = has_edge && remove_open_star(wider, edge) == asc;
                    bool link_ok = false;
                    Json rel = nullptr;
                    if (has_edge) {
                        auto lk = link(wider, edge);
                        link_ok = isomorphic(lk, matching_complex(linear_graph(n - 3)));
                        SimplicialComplex ends({edge[0], edge[1]}, {});
                        auto relative = join(ends, lk);
                        auto rev = connectivity_evidence(relative, static_cast<int>((n - 5) / 3));
                        link_ok = link_ok && rev.verdict == Verdict::consistent;
                        rel = {{"f_vector", relative.f_vector()}, {"homology", homology_brief(rev.homology)}};
                    }
                    auto hw = homology(wider);
                    bool wider_cone = is_cone_on(wider, Label::v(1)) && fully_acyclic(hw);
                    r.add(tag + ": obtained from a cone by removing {v1,v" + std::to_string(n - 1) + "}",
                          has_edge && removed && link_ok && wider_cone,
                          {{"wider_cone", wider_cone}, {"open_star_removed", removed}, {"relative_link", rel}});
                } else {
                    std::size_t k = sign(c.b) >= 0 ? n - 1 : n - 2;
                    r.add(tag + ": isomorphic to M(L" + std::to_string(k) + ")",
                          isomorphic(asc, matching_complex(linear_graph(k))));
                }
            }
        }
    }
    return r;
}

Report long_interval_sigma(const VerifyOptions& o)
{
    Report r;
    auto chars = long_interval_characters(o, r);
    std::size_t m_max = o.m_max.value_or(3);
    r.parameters = {{"characters", characters_json(chars)}, {"m", {1, m_max}}, {"secondary", "-f"}};
    for (std::size_t m = 1; m <= m_max; ++m) {
        const std::size_t n = 3 * m + 4;
        for (const auto& c : chars) {
            std::size_t consistent = 0, inconclusive_pi1 = 0;
            Json failures = Json::array();
            for (std::size_t f = 2; f <= n; ++f) {
                auto asc = ascending_link_model(f, c, Secondary::minus_feet, Band{2, n});
                auto ev = connectivity_evidence(asc, static_cast<int>(m) - 1);
                if (ev.verdict == Verdict::consistent)
                    ++consistent;
                else
                    failures.push_back(f);
                if (ev.pi1_checked && ev.pi1 == Pi1::inconclusive)
                    ++inconclusive_pi1;
            }
            Json detail{{"band", {2, n}}, {"feet_checked", n - 1}, {"consistent", consistent}, {"failing_feet", failures},
                        {"pi1_inconclusive", inconclusive_pi1}};
            r.add("m=" + std::to_string(m) + " chi=" + character_text(c) + ": every ascending link is " +
                      std::to_string(m - 1) + "-connected",
                  failures.empty() ? (inconclusive_pi1 > 0 && m >= 2 ? Outcome::inconclusive : Outcome::pass)
                                   : Outcome::fail,
                  detail);
        }
    }
    return r;
}

// ---------------------------------------------------------------- explored cross-checks

void cross_check_links(Report& r, const Fragment& frag, const MorseSpec& spec, const std::vector<std::size_t>& sample,
                       bool need_connected, const std::string& tag)
{
    std::size_t agree = 0, good = 0;
    Json first = nullptr;
    for (auto v : sample) {
        const Diagram& x = frag.vertex(v).diagram;
        auto asc = ascending_link(x, spec);
        auto model = ascending_link_model(x.feet(), spec.character, spec.secondary, spec.band);
        if (asc == model)
            ++agree;
        else if (first.is_null())
            first = x.str();
        bool ok = !asc.empty();
        if (need_connected && ok)
            ok = homology(asc, 0).connected;
        good += ok ? 1 : 0;
    }
    r.add(tag + ": explored vertices agree with the model", agree == sample.size() && !sample.empty(),
          {{"vertices", sample.size()}, {"agree", agree}, {"first_mismatch", first}});
    r.add(tag + (need_connected ? ": explored ascending links connected" : ": explored ascending links nonempty"),
          good == sample.size() && !sample.empty(), {{"vertices", sample.size()}, {"good", good}});
}

const Diagram& seed_l1()
{
    static const Diagram d = parse_diagram("[(*,(*,(*,*)))]/[(*,*),*,*]");
    return d;
}

const Diagram& seed_l2()
{
    static const Diagram d = parse_diagram("[((*,(*,*)),(*,*))]/[((*,*),*),*,*]");
    return d;
}

Report nonempty_links_3_4(const VerifyOptions& o)
{
    Report r;
    auto chars = characters_or(o, {{1, 0}, {0, 1}});
    Band band = o.band.value_or(Band{3, 4});
    std::size_t samples = o.samples.value_or(50);
    auto limits = limits_of(o, 2000);
    r.parameters = {{"characters", characters_json(chars)}, {"band", to_json(band)}, {"secondary", "+f"},
                    {"explored_vertices_per_character", samples}};
    r.provenance["fragments"] = Json::array();
    for (const auto& c : chars) {
        MorseSpec spec{c, Secondary::plus_feet, band};
        for (std::size_t f = band.p; f <= band.q; ++f) {
            auto asc = ascending_link_model(f, c, Secondary::plus_feet, band);
            r.add("chi=" + character_text(c) + " feet " + std::to_string(f) + ": model nonempty", !asc.empty(),
                  {{"labels", to_json(asc).at("vertices")}});
        }
        std::vector<Diagram> seeds = o.seeds;
        if (seeds.empty())
            seeds = {seed_l1(), seed_l2()};
        Fragment frag = explore(seeds, band, std::nullopt, limits, {c});
        r.provenance["fragments"].push_back(fragment_provenance(frag));
        cross_check_links(r, frag, spec, spread(frag, samples), false, "chi=" + character_text(c));
    }
    return r;
}

Report connected_links_4_7(const VerifyOptions& o)
{
    Report r;
    auto chars = characters_or(o, {{1, 1}, {2, 1}, {1, 3}});
    for (const auto& c : chars)
        if (sign(c.a) <= 0 || sign(c.b) <= 0)
            throw PreconditionError("connected-links-4-7 needs a > 0 and b > 0; got " + character_text(c));
    Band band = o.band.value_or(Band{4, 7});
    std::size_t samples = o.samples.value_or(10);
    auto limits = limits_of(o, 1000);
    Rational floor = o.chi_min.value_or(Rational(0));
    r.parameters = {{"characters", characters_json(chars)}, {"band", to_json(band)}, {"secondary", "+f"},
                    {"explored_vertices_per_feet", samples}, {"chi_min", rational_text(floor)}};
    r.provenance["fragments"] = Json::array();
    for (const auto& c : chars) {
        MorseSpec spec{c, Secondary::plus_feet, band};
        for (std::size_t f = band.p; f <= band.q; ++f) {
            auto asc = ascending_link_model(f, c, Secondary::plus_feet, band);
            auto h = homology(asc, 0);
            r.add("chi=" + character_text(c) + " feet " + std::to_string(f) + ": model connected",
                  h.nonempty && h.connected, {{"f_vector", asc.f_vector()}, {"betti", h.betti}});
        }
        std::vector<Diagram> seeds = o.seeds;
        if (seeds.empty())
            seeds.push_back(balanced_vertex(band.p));
        Fragment frag = explore(seeds, band, ChiFloor{c, floor}, limits, {c});
        r.provenance["fragments"].push_back(fragment_provenance(frag));
        std::vector<std::size_t> sample;
        for (std::size_t f = band.p; f <= band.q; ++f) {
            auto part = spread(frag, samples, [&](std::size_t v) { return frag.vertex(v).feet == f; });
            sample.insert(sample.end(), part.begin(), part.end());
        }
        cross_check_links(r, frag, spec, sample, true, "chi=" + character_text(c));
    }
    return r;
}

// ---------------------------------------------------------------- L invariant

Report l_invariant_disconnection(const VerifyOptions& o)
{
    Report r;
    Character c = o.characters.empty() ? Character{1, 0} : o.characters.front();
    if (!(sign(c.a) > 0 && is_zero(c.b)))
        throw PreconditionError("l-invariant-disconnection needs a character (a, 0) with a > 0");
    Band band = o.band.value_or(Band{3, 4});
    Rational floor = o.chi_min.value_or(Rational(0));
    auto limits = limits_of(o, 5000);
    std::vector<Diagram> seeds = o.seeds.empty() ? std::vector<Diagram>{seed_l1(), seed_l2()} : o.seeds;
    Json seed_list = Json::array();
    for (const auto& s : seeds)
        seed_list.push_back({{"diagram", s.str()}, {"L", L_value(s)}, {"chi0", chi0_int(s)}});
    r.parameters = {{"character", character_text(c)}, {"band", to_json(band)}, {"chi_min", rational_text(floor)},
                    {"limit", limits.max_vertices}, {"seeds", seed_list}};

    Fragment frag = explore(seeds, band, ChiFloor{c, floor}, limits, {c});
    r.provenance["fragment"] = fragment_provenance(frag);

    std::set<std::size_t> seed_values;
    for (const auto& s : seeds)
        seed_values.insert(L_value(s));
    r.add("seeds carry different L values", seed_values.size() >= 2, {{"values", Json(std::vector<std::size_t>(seed_values.begin(), seed_values.end()))}});

    std::size_t violations = 0;
    Json first = nullptr;
    for (const auto& [i, j] : frag.edges())
        if (frag.vertex(i).L != frag.vertex(j).L) {
            ++violations;
            if (first.is_null())
                first = {frag.vertex(i).key, frag.vertex(j).key};
        }
    r.add("every edge preserves L", violations == 0 && !frag.edges().empty(),
          {{"edges", frag.edges().size()}, {"violations", violations}, {"first_violation", first}});

    std::size_t low = 0;
    for (const auto& v : frag.vertices())
        if (v.L < 1)
            ++low;
    r.add("every vertex has L >= 1", low == 0, {{"vertices", frag.size()}, {"violations", low}});

    auto comps = components(frag);
    std::map<std::size_t, std::size_t> comp_of;
    for (std::size_t k = 0; k < comps.size(); ++k)
        for (auto v : comps[k])
            comp_of[v] = k;
    std::set<std::size_t> seed_comps;
    for (const auto& s : seeds)
        seed_comps.insert(comp_of.at(frag.find(s)));
    Json sizes = Json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(comps.size(), 10); ++k)
        sizes.push_back({{"L", frag.vertex(comps[k].front()).L}, {"size", comps[k].size()}});
    r.add("at least two components", comps.size() >= 2, {{"components", comps.size()}, {"largest_first", sizes}});
    r.add("seeds lie in distinct components", seed_comps.size() == seeds.size(),
          {{"seed_components", seed_comps.size()}});
    return r;
}

// ---------------------------------------------------------------- nerve cycle

Report nerve_cycle(const VerifyOptions& o)
{
    Report r;
    auto chars = characters_or(o, {{1, 1}});
    auto limits = limits_of(o, 2000);
    r.parameters = {{"characters", characters_json(chars)}, {"band", {4, 7}}, {"fragment_limit", limits.max_vertices}};
    r.artifacts["certificates"] = Json::array();
    for (const auto& c : chars) {
        std::string tag = "chi=" + character_text(c);
        if (sign(c.a) <= 0 || sign(c.b) <= 0)
            throw PreconditionError("nerve-cycle needs a > 0 and b > 0; got " + character_text(c));
        CycleCertificate cert;
        try {
            cert = find_nerve_cycle(c);
        } catch (const SearchExhausted& e) {
            r.add(tag + ": certificate search", Outcome::inconclusive, {{"reason", e.what()}});
            continue;
        }
        r.artifacts["certificates"].push_back(to_json(cert));
        auto check = validate_certificate(cert);
        r.add(tag + ": certificate replays", check.ok(), to_json(check));

        const std::array<std::pair<std::size_t, std::size_t>, 4> expected{{{2, 2}, {3, 2}, {3, 3}, {2, 3}}};
        bool values = true;
        Json seen = Json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            auto lr = std::pair(L_value(cert.witnesses[i]), R_value(cert.witnesses[i]));
            values = values && lr == expected[i];
            seen.push_back({lr.first, lr.second});
        }
        r.add(tag + ": witness (L,R) values (2,2),(3,2),(3,3),(2,3)", values, {{"values", seen}});

        Fragment frag = explore({cert.witnesses.begin(), cert.witnesses.end()}, cert.band, ChiFloor{c, Rational(0)},
                                limits, {c});
        Cover cover(frag, c);
        r.provenance["fragments"].push_back(fragment_provenance(frag));
        r.add(tag + ": nerve of an explored fragment is bipartite with every cell labelled",
              cover.bipartite() && cover.unlabeled_cells() == 0,
              {{"cells", cover.cells_checked()}, {"nodes", cover.nodes().size()}, {"edges", cover.edges().size()}});
    }
    return r;
}

// ---------------------------------------------------------------- Morse lemma instance

Report morse_lemma_instance(const VerifyOptions& o)
{
    Report r;
    Character c = o.characters.empty() ? Character{1, 0} : o.characters.front();
    Band band = o.band.value_or(Band{3, 5});
    Rational t = o.chi_min.value_or(Rational(0));
    auto limits = limits_of(o, 3000);
    std::vector<Diagram> seeds = o.seeds.empty() ? std::vector<Diagram>{seed_l1()} : o.seeds;
    MorseSpec spec{c, Secondary::plus_feet, band};
    r.parameters = {{"character", character_text(c)}, {"band", to_json(band)}, {"slab", {rational_text(t), rational_text(t + 2)}},
                    {"subcomplex", {rational_text(t), rational_text(t + 1)}}, {"limit", limits.max_vertices}};

    Fragment frag = explore(seeds, band, ChiFloor{c, t}, limits, {c});
    r.provenance["fragment"] = fragment_provenance(frag);

    std::vector<bool> accepted(frag.size(), false);
    std::vector<std::size_t> candidates;
    std::size_t base = 0;
    for (std::size_t v = 0; v < frag.size(); ++v) {
        Rational h = frag.vertex(v).chi[0];
        if (h <= t + 1) {
            accepted[v] = true;
            ++base;
        } else if (h <= t + 2) {
            candidates.push_back(v);
        }
    }
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t x, std::size_t y) {
        auto hx = refined_height(spec, frag.vertex(x).diagram), hy = refined_height(spec, frag.vertex(y).diagram);
        if (hx != hy)
            return hx < hy;
        return frag.vertex(x).key < frag.vertex(y).key;
    });

    std::vector<std::vector<std::size_t>> cubes_at(frag.size());
    for (std::size_t k = 0; k < frag.cubes().size(); ++k)
        for (auto v : frag.cube_vertices(frag.cubes()[k]))
            cubes_at[v].push_back(k);

    // Add slab vertices in increasing height, keeping those whose descending link in the
    // current complex is nonempty and connected.
    std::size_t kept = 0, rejected = 0;
    for (auto v : candidates) {
        std::set<int> link_vertices;
        std::vector<std::vector<Label>> simplices;
        for (auto k : cubes_at[v]) {
            auto verts = frag.cube_vertices(frag.cubes()[k]);
            if (!std::all_of(verts.begin(), verts.end(), [&](std::size_t u) { return u == v || accepted[u]; }))
                continue;
            std::size_t at = std::find(verts.begin(), verts.end(), v) - verts.begin();
            std::vector<Label> simplex;
            for (std::size_t bit = 1; bit < verts.size(); bit <<= 1)
                simplex.push_back(Label::index(static_cast<int>(verts[at ^ bit])));
            std::sort(simplex.begin(), simplex.end());
            simplices.push_back(std::move(simplex));
        }
        std::set<Label> labels;
        for (const auto& s : simplices)
            labels.insert(s.begin(), s.end());
        SimplicialComplex lk(std::vector<Label>(labels.begin(), labels.end()), simplices);
        if (!lk.empty() && homology(lk, 0).connected) {
            accepted[v] = true;
            ++kept;
        } else {
            ++rejected;
        }
    }

    auto in_sub = [&](std::size_t v) { return accepted[v] && frag.vertex(v).chi[0] <= t + 1; };
    auto cells = cubical_cells(frag, [&](std::size_t v) { return accepted[v]; });
    auto marks = mark_cells(frag, cells, in_sub);
    auto rel = homology(relative_chain_complex(cells.cells, marks));
    auto vanishes = [&](std::size_t i) {
        return i >= rel.betti.size() || (rel.betti[i] == 0 && (i >= rel.torsion.size() || rel.torsion[i].empty()));
    };
    Json counts = Json::array();
    for (auto n : cells.cells.counts)
        counts.push_back(n);
    r.add("slab vertices added with connected descending links", kept > 0 && base > 0,
          {{"subcomplex_vertices", base}, {"added", kept}, {"not_added", rejected}, {"cells", counts}});
    r.add("relative H0 vanishes", vanishes(0), {{"betti", rel.betti}});
    r.add("relative H1 vanishes", vanishes(1), {{"betti", rel.betti}});
    return r;
}

using ClaimFn = Report (*)(const VerifyOptions&);

struct ClaimEntry
{
    ClaimInfo info;
    ClaimFn fn;
};

const std::vector<ClaimEntry>& registry()
{
    static const std::vector<ClaimEntry> entries{
        {{"diagram-calculus", "confluent reduction, associativity, inverses, generator relations"}, diagram_calculus},
        {{"characters", "chi0/chi1 homomorphisms, representative invariance, edge deltas"}, characters_claim},
        {{"morse-property", "(chi, +-f) separates every edge of explored banded fragments"}, morse_property},
        {{"link-model", "coface-derived links equal GM(Ln)"}, link_model},
        {{"matching-connectivity", "connectivity of M(Ln) and its star decomposition"}, matching_connectivity},
        {{"long-interval-links", "(chi,-f)-ascending links for a < 0 with their cone structure"}, long_interval_links},
        {{"long-interval-sigma", "(m-1)-connected ascending links in X_{2<=f<=3m+4} for each m"}, long_interval_sigma},
        {{"nonempty-links-3-4", "(chi,f)-ascending links in X_{3<=f<=4} are nonempty"}, nonempty_links_3_4},
        {{"l-invariant-disconnection", "L is constant on edges of X_{3<=f<=4}^{0<=chi0}, which is disconnected"},
         l_invariant_disconnection},
        {{"connected-links-4-7", "(chi,f)-ascending links in X_{4<=f<=7} are connected"}, connected_links_4_7},
        {{"nerve-cycle", "4-cycle certificate in the nerve of the L/R cover"}, nerve_cycle},
        {{"morse-lemma-instance", "relative H0 = H1 = 0 across a slab with connected descending links"},
         morse_lemma_instance},
    };
    return entries;
}

} // namespace

const std::vector<ClaimInfo>& claims()
{
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

VerificationReport verify_claim(std::string_view id, const VerifyOptions& options)
{
    for (const auto& e : registry())
        if (e.info.id == id) {
            Report r = e.fn(options);
            r.claim = e.info.id;
            return r;
        }
    throw PreconditionError("unknown claim '" + std::string(id) + "'");
}

} // namespace fsigma
