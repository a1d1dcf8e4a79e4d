#include "fsigma/complex.hpp"

#include "fsigma/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace fsigma {

namespace {

bool is_subset(const Simplex& small, const Simplex& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Maximal elements of a family of sorted index vectors.
std::vector<Simplex> maximal_only(std::vector<Simplex> family)
{
    std::sort(family.begin(), family.end(), [](const Simplex& x, const Simplex& y) {
        if (x.size() != y.size())
            return x.size() > y.size();
        return x < y;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Simplex> out;
    for (auto& s : family) {
        bool covered = false;
        for (const auto& f : out) {
            if (f.size() > s.size() && is_subset(s, f)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tags a simplex of a base complex as a GM vertex: singletons keep their label,
/// consecutive v-pairs become e-labels, anything else becomes a simplex label.
Label gm_label(const SimplicialComplex& delta, const Simplex& s)
{
    const auto& labels = delta.labels();
    if (s.size() == 1)
        return labels[s[0]];
    if (s.size() == 2 && labels[s[0]].kind == Label::Kind::vertex && labels[s[1]].kind == Label::Kind::vertex &&
        labels[s[1]].ids[0] == labels[s[0]].ids[0] + 1)
        return Label::e(labels[s[0]].ids[0]);
    return Label::simplex(s);
}

/// Maximal pairwise-disjoint families drawn from `pieces`; accept() vets each family.
template <typename Accept>
void disjoint_families(const std::vector<std::uint64_t>& pieces, Accept accept,
                       std::vector<std::vector<int>>& out)
{
    std::vector<int> chosen;
    auto extendable = [&](std::uint64_t used) {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i] & used)
                continue;
            if (std::find(chosen.begin(), chosen.end(), static_cast<int>(i)) != chosen.end())
                continue;
            chosen.push_back(static_cast<int>(i));
            bool ok = accept(chosen);
            chosen.pop_back();
            if (ok)
                return true;
        }
        return false;
    };
    auto dfs = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (!chosen.empty() && !extendable(used))
            out.push_back(chosen);
        for (std::size_t i = from; i < pieces.size(); ++i) {
            if (pieces[i] & used)
                continue;
            chosen.push_back(static_cast<int>(i));
            if (accept(chosen))
                self(self, i + 1, used | pieces[i]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);
}

} // namespace

std::string Label::str() const
{
    switch (kind) {
    case Kind::vertex:
        return "v" + std::to_string(ids[0]);
    case Kind::edge:
        return "e" + std::to_string(ids[0]) + "," + std::to_string(ids[1]);
    case Kind::simplex: {
        std::string out = "s{";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(ids[i]);
        }
        return out + "}";
    }
    case Kind::index:
        return "#" + std::to_string(ids[0]);
    }
    return "?";
}

SimplicialComplex::SimplicialComplex(std::vector<Label> labels, const std::vector<std::vector<Label>>& generators)
{
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    labels_ = std::move(labels);
    std::vector<Simplex> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        Simplex s;
        for (const auto& l : g) {
            auto idx = index_of(l);
            if (!idx)
                throw PreconditionError("simplex uses unknown label " + l.str());
            s.push_back(*idx);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty())
            gens.push_back(std::move(s));
    }
    facets_ = std::move(gens);
    close();
}

SimplicialComplex SimplicialComplex::from_indices(std::vector<Label> labels, std::vector<Simplex> generators)
{
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw PreconditionError("labels must be sorted and distinct");
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    for (auto& s : generators) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int v : s)
            if (v < 0 || static_cast<std::size_t>(v) >= k.labels_.size())
                throw PreconditionError("simplex index out of range");
    }
    std::erase_if(generators, [](const Simplex& s) { return s.empty(); });
    k.facets_ = std::move(generators);
    k.close();
    return k;
}

void SimplicialComplex::close()
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        facets_.push_back({static_cast<int>(i)});
    facets_ = maximal_only(std::move(facets_));
    std::vector<std::set<Simplex>> dims;
    for (const auto& f : facets_) {
        if (dims.size() < f.size())
            dims.resize(f.size());
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex s;
            for (std::size_t b = 0; b < n; ++b)
                if (mask >> b & 1)
                    s.push_back(f[b]);
            dims[s.size() - 1].insert(std::move(s));
        }
    }
    by_dim_.clear();
    for (auto& d : dims)
        by_dim_.emplace_back(d.begin(), d.end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t dim) const
{
    static const std::vector<Simplex> none;
    return dim < by_dim_.size() ? by_dim_[dim] : none;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> out;
    for (const auto& d : by_dim_)
        out.push_back(d.size());
    return out;
}

std::optional<int> SimplicialComplex::index_of(const Label& l) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || !(*it == l))
        return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

bool SimplicialComplex::contains_indices(const Simplex& s) const
{
    if (s.empty())
        return true;
    if (s.size() > by_dim_.size())
        return false;
    const auto& d = by_dim_[s.size() - 1];
    return std::binary_search(d.begin(), d.end(), s);
}

bool SimplicialComplex::contains(const std::vector<Label>& simplex) const
{
    Simplex s;
    for (const auto& l : simplex) {
        auto idx = index_of(l);
        if (!idx)
            return false;
        s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return contains_indices(s);
}

std::vector<Label> SimplicialComplex::labels_of(const Simplex& s) const
{
    std::vector<Label> out;
    out.reserve(s.size());
    for (int i : s)
        out.push_back(labels_[i]);
    return out;
}

std::vector<std::vector<Label>> SimplicialComplex::labelled_simplices() const
{
    std::vector<std::vector<Label>> out;
    for (const auto& d : by_dim_)
        for (const auto& s : d)
            out.push_back(labels_of(s));
    return out;
}

std::string SimplicialComplex::str() const
{
    std::string out;
    for (const auto& f : facets_) {
        if (!out.empty())
            out += " ";
        out += "{";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                out += ",";
            out += labels_[f[i]].str();
        }
        out += "}";
    }
    return out.empty() ? "{}" : out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::function<bool(const Label&)>& keep)
{
    std::vector<Label> labels;
    for (const auto& l : k.labels())
        if (keep(l))
            labels.push_back(l);
    std::vector<std::vector<Label>> gens;
    for (const auto& f : k.facets()) {
        std::vector<Label> part;
        for (int v : f)
            if (keep(k.labels()[v]))
                part.push_back(k.labels()[v]);
        if (!part.empty())
            gens.push_back(std::move(part));
    }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex star(const SimplicialComplex& k, const Label& v)
{
    auto idx = k.index_of(v);
    if (!idx)
        throw PreconditionError("vertex " + v.str() + " not in complex");
    std::set<Label> labels;
    std::vector<std::vector<Label>> gens;
    for (const auto& f : k.facets()) {
        if (!std::binary_search(f.begin(), f.end(), *idx))
            continue;
        gens.push_back(k.labels_of(f));
        labels.insert(gens.back().begin(), gens.back().end());
    }
    return SimplicialComplex({labels.begin(), labels.end()}, gens);
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<Label>& simplex)
{
    if (!k.contains(simplex))
        throw PreconditionError("simplex not in complex");
    Simplex s;
    for (const auto& l : simplex)
        s.push_back(*k.index_of(l));
    std::sort(s.begin(), s.end());
    std::set<Label> labels;
    std::vector<std::vector<Label>> gens;
    for (const auto& f : k.facets()) {
        if (!is_subset(s, f))
            continue;
        std::vector<Label> rest;
        for (int v : f)
            if (!std::binary_search(s.begin(), s.end(), v))
                rest.push_back(k.labels()[v]);
        if (rest.empty())
            continue;
        labels.insert(rest.begin(), rest.end());
        gens.push_back(std::move(rest));
    }
    return SimplicialComplex({labels.begin(), labels.end()}, gens);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (const auto& l : b.labels())
        if (a.index_of(l))
            throw PreconditionError("join needs disjoint label sets; shared " + l.str());
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    std::vector<Label> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<std::vector<Label>> gens;
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) {
            auto g = a.labels_of(fa);
            auto h = b.labels_of(fb);
            g.insert(g.end(), h.begin(), h.end());
            gens.push_back(std::move(g));
        }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex cone(const SimplicialComplex& k, const Label& apex)
{
    return join(k, SimplicialComplex({apex}, {}));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<Label> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<std::vector<Label>> gens;
    for (const auto& f : a.facets())
        gens.push_back(a.labels_of(f));
    for (const auto& f : b.facets())
        gens.push_back(b.labels_of(f));
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<Label> labels;
    for (const auto& l : a.labels())
        if (b.index_of(l))
            labels.push_back(l);
    std::vector<std::vector<Label>> gens;
    for (std::size_t d = 1; d <= static_cast<std::size_t>(std::max(a.dimension(), 0)); ++d)
        for (const auto& s : a.simplices(d)) {
            auto ls = a.labels_of(s);
            if (b.contains(ls))
                gens.push_back(std::move(ls));
        }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex remove_open_star(const SimplicialComplex& k, const std::vector<Label>& simplex)
{
    if (!k.contains(simplex))
        throw PreconditionError("simplex not in complex");
    Simplex s;
    for (const auto& l : simplex)
        s.push_back(*k.index_of(l));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Label> labels;
    std::vector<std::vector<Label>> gens;
    for (std::size_t d = 0; d <= static_cast<std::size_t>(std::max(k.dimension(), 0)); ++d)
        for (const auto& t : k.simplices(d)) {
            if (is_subset(s, t))
                continue;
            if (d == 0)
                labels.push_back(k.labels()[t[0]]);
            else
                gens.push_back(k.labels_of(t));
        }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::function<Label(const Label&)>& f)
{
    std::vector<Label> labels;
    for (const auto& l : k.labels())
        labels.push_back(f(l));
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("relabelling is not injective");
    std::vector<std::vector<Label>> gens;
    for (const auto& fc : k.facets()) {
        std::vector<Label> g;
        for (int v : fc)
            g.push_back(labels[v]);
        gens.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex simplex_boundary(std::size_t k)
{
    std::vector<Label> labels;
    for (std::size_t i = 0; i <= k; ++i)
        labels.push_back(Label::index(static_cast<int>(i)));
    std::vector<std::vector<Label>> gens;
    if (k >= 1)
        for (std::size_t skip = 0; skip <= k; ++skip) {
            std::vector<Label> g;
            for (std::size_t i = 0; i <= k; ++i)
                if (i != skip)
                    g.push_back(labels[i]);
            gens.push_back(std::move(g));
        }
    return SimplicialComplex(labels, gens);
}

SimplicialComplex full_simplex(std::size_t k)
{
    std::vector<Label> labels;
    for (std::size_t i = 0; i <= k; ++i)
        labels.push_back(Label::index(static_cast<int>(i)));
    return SimplicialComplex(labels, {labels});
}

SimplicialComplex zero_sphere() { return simplex_boundary(1); }

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.f_vector() != b.f_vector())
        return false;
    const std::size_t n = a.vertex_count();
    const int top = std::max(a.dimension(), 0);
    // Per-vertex profile: number of simplices of each dimension containing it.
    auto profile = [top](const SimplicialComplex& k) {
        std::vector<std::vector<std::size_t>> p(k.vertex_count(), std::vector<std::size_t>(top + 1, 0));
        for (int d = 0; d <= top; ++d)
            for (const auto& s : k.simplices(d))
                for (int v : s)
                    ++p[v][d];
        return p;
    };
    auto pa = profile(a);
    auto pb = profile(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    // Simplices of a grouped by their largest vertex in the search order.
    std::vector<int> order;
    {
        std::vector<bool> seen(n, false);
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : a.simplices(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            seen[s] = true;
            std::size_t head = order.size();
            order.push_back(static_cast<int>(s));
            while (head < order.size()) {
                int u = order[head++];
                for (int w : adj[u])
                    if (!seen[w]) {
                        seen[w] = true;
                        order.push_back(w);
                    }
            }
        }
    }
    std::vector<int> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = static_cast<int>(i);
    std::vector<std::vector<Simplex>> closing(n);
    for (int d = 1; d <= top; ++d)
        for (const auto& s : a.simplices(d)) {
            int last = *std::max_element(s.begin(), s.end(), [&](int x, int y) { return position[x] < position[y]; });
            closing[position[last]].push_back(s);
        }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n)
            return true;
        int u = order[depth];
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || pa[u] != pb[w])
                continue;
            image[u] = static_cast<int>(w);
            bool ok = true;
            for (const auto& s : closing[depth]) {
                Simplex t;
                for (int v : s)
                    t.push_back(image[v]);
                std::sort(t.begin(), t.end());
                if (!b.contains_indices(t)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = true;
                if (self(self, depth + 1))
                    return true;
                used[w] = false;
            }
            image[u] = -1;
        }
        return false;
    };
    return search(search, 0);
}

SimplicialComplex linear_graph(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("linear graph needs n >= 1");
    std::vector<Label> labels;
    std::vector<std::vector<Label>> gens;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(Label::v(static_cast<int>(i)));
    for (std::size_t i = 1; i < n; ++i)
        gens.push_back({Label::v(static_cast<int>(i)), Label::v(static_cast<int>(i + 1))});
    return SimplicialComplex(labels, gens);
}

namespace {

SimplicialComplex matching_of(const SimplicialComplex& delta, bool edges_only)
{
    if (delta.vertex_count() > 64)
        throw PreconditionError("matching complexes are limited to 64 base vertices");
    std::vector<Simplex> pieces;
    std::vector<std::uint64_t> masks;
    for (std::size_t d = edges_only ? 1 : 0; d <= static_cast<std::size_t>(std::max(delta.dimension(), 0)); ++d) {
        if (edges_only && d > 1)
            break;
        for (const auto& s : delta.simplices(d)) {
            std::uint64_t m = 0;
            for (int v : s)
                m |= std::uint64_t{1} << v;
            pieces.push_back(s);
            masks.push_back(m);
        }
    }
    std::vector<Label> labels;
    for (const auto& s : pieces)
        labels.push_back(gm_label(delta, s));
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("base labels collide with derived matching labels");
    }
    std::vector<std::vector<int>> families;
    disjoint_families(masks, [](const std::vector<int>&) { return true; }, families);
    std::vector<std::vector<Label>> gens;
    for (const auto& fam : families) {
        std::vector<Label> g;
        for (int i : fam)
            g.push_back(labels[i]);
        gens.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(labels), gens);
}

} // namespace

SimplicialComplex general_matching_complex(const SimplicialComplex& delta) { return matching_of(delta, false); }

SimplicialComplex matching_complex(const SimplicialComplex& graph)
{
    if (graph.dimension() > 1)
        throw PreconditionError("matching complex needs a graph");
    return matching_of(graph, true);
}

bool move_ascends(const Rational& dchi, int dfeet, Secondary secondary)
{
    if (!is_zero(dchi))
        return sign(dchi) > 0;
    int s = secondary == Secondary::plus_feet ? dfeet : -dfeet;
    return s > 0;
}

SimplicialComplex ascending_link_model(std::size_t n, const Character& c, Secondary secondary, const Band& band)
{
    if (!band.contains(n))
        throw PreconditionError("feet " + std::to_string(n) + " outside band [" + std::to_string(band.p) + "," +
                                std::to_string(band.q) + "]");
    const std::size_t split_cap = band.q - n;
    const std::size_t merge_cap = n - band.p;
    struct Move
    {
        Label label;
        std::uint64_t mask;
        bool split;
    };
    std::vector<Move> moves;
    for (std::size_t i = 0; i < n; ++i)
        if (split_cap >= 1 && move_ascends(split_delta(c, n, i), +1, secondary))
            moves.push_back({Label::v(static_cast<int>(i + 1)), std::uint64_t{1} << i, true});
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (merge_cap >= 1 && move_ascends(merge_delta(c, n, i), -1, secondary))
            moves.push_back({Label::e(static_cast<int>(i + 1)), std::uint64_t{3} << i, false});
    std::vector<std::uint64_t> masks;
    std::vector<Label> labels;
    for (const auto& m : moves) {
        masks.push_back(m.mask);
        labels.push_back(m.label);
    }
    auto within_caps = [&](const std::vector<int>& fam) {
        std::size_t splits = 0, merges = 0;
        for (int i : fam)
            (moves[i].split ? splits : merges) += 1;
        return splits <= split_cap && merges <= merge_cap;
    };
    std::vector<std::vector<int>> families;
    disjoint_families(masks, within_caps, families);
    std::vector<std::vector<Label>> gens;
    for (const auto& fam : families) {
        std::vector<Label> g;
        for (int i : fam)
            g.push_back(labels[i]);
        gens.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(labels), gens);
}

} // namespace fsigma
