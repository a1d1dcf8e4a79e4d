#include "fsigma/fragment.hpp"

#include "fsigma/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace fsigma {

namespace {

void require_in_band(const Diagram& x, const Band& band)
{
    if (x.heads() != 1)
        throw PreconditionError("complex vertices have exactly one head: " + x.str());
    if (!band.contains(x.feet()))
        throw PreconditionError("vertex " + x.str() + " has " + std::to_string(x.feet()) + " feet, outside band [" +
                                std::to_string(band.p) + "," + std::to_string(band.q) + "]");
}

/// [E₋/E₊] realising a coface word over the feet of its base.
Diagram word_diagram(const std::string& word)
{
    std::vector<BinaryTree> minus, plus;
    const auto leaf = BinaryTree::leaf();
    const auto caret = BinaryTree::single_caret();
    for (char c : word) {
        switch (c) {
        case 'I':
            minus.push_back(leaf);
            plus.push_back(leaf);
            break;
        case 'L':
            minus.push_back(caret);
            plus.push_back(leaf);
            plus.push_back(leaf);
            break;
        case 'V':
            minus.push_back(leaf);
            minus.push_back(leaf);
            plus.push_back(caret);
            break;
        default:
            throw PreconditionError(std::string("unknown coface letter '") + c + "'");
        }
    }
    return Diagram(BinaryForest(std::move(minus)), BinaryForest(std::move(plus)));
}

std::size_t word_feet(const std::string& word)
{
    std::size_t n = 0;
    for (char c : word)
        n += c == 'V' ? 2 : 1;
    return n;
}

/// Feet range of the cube: merges lower it, splits raise it.
bool word_in_band(const std::string& word, std::size_t feet, const Band& band)
{
    auto splits = static_cast<std::size_t>(std::count(word.begin(), word.end(), 'L'));
    auto merges = static_cast<std::size_t>(std::count(word.begin(), word.end(), 'V'));
    return feet >= merges && band.contains(feet - merges) && band.contains(feet + splits);
}

void enumerate_words(std::size_t feet, std::size_t pos, std::string& word, std::vector<std::string>& out)
{
    if (pos == feet) {
        out.push_back(word);
        return;
    }
    for (char c : {'I', 'L', 'V'}) {
        if (c == 'V' && pos + 1 >= feet)
            continue;
        word.push_back(c);
        enumerate_words(feet, pos + (c == 'V' ? 2 : 1), word, out);
        word.pop_back();
    }
}

/// No single I can become Λ, and no adjacent I I can become V, without leaving the band.
bool word_is_maximal(const std::string& word, std::size_t feet, const Band& band)
{
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 'I')
            continue;
        std::string up = word;
        up[i] = 'L';
        if (word_in_band(up, feet, band))
            return false;
        if (i + 1 < word.size() && word[i + 1] == 'I') {
            std::string merged = word.substr(0, i) + "V" + word.substr(i + 2);
            if (word_in_band(merged, feet, band))
                return false;
        }
    }
    return true;
}

SimplicialComplex link_subcomplex(const Diagram& x, const MorseSpec& spec, bool ascending)
{
    require_in_band(x, spec.band);
    auto here = refined_height(spec, x);
    std::map<Label, RefinedHeight> heights;
    for (const auto& m : neighbor_moves(x, spec.band))
        heights[m.label()] = refined_height(spec, m.target);
    return full_subcomplex(link_of(x, spec.band), [&](const Label& l) {
        auto h = heights.at(l);
        return ascending ? here < h : h < here;
    });
}

std::uint64_t cube_key(std::size_t base, std::uint32_t mask) { return (static_cast<std::uint64_t>(base) << 32) | mask; }

std::vector<std::size_t> mask_bits(std::uint32_t mask)
{
    std::vector<std::size_t> bits;
    for (std::size_t b = 0; b < 32; ++b)
        if (mask >> b & 1U)
            bits.push_back(b);
    return bits;
}

} // namespace

// ---------------------------------------------------------------- moves

Label Move::label() const
{
    return split ? Label::v(static_cast<int>(index + 1)) : Label::e(static_cast<int>(index + 1));
}

std::vector<Move> neighbor_moves(const Diagram& x, const Band& band)
{
    require_in_band(x, band);
    std::vector<Move> out;
    const std::size_t n = x.feet();
    if (n + 1 <= band.q)
        for (std::size_t i = 0; i < n; ++i)
            out.push_back({true, i, split_foot(x, i)});
    if (n >= 2 && n - 1 >= band.p)
        for (std::size_t i = 0; i + 1 < n; ++i)
            out.push_back({false, i, merge_feet(x, i)});
    return out;
}

std::vector<Diagram> neighbors(const Diagram& x, const Band& band)
{
    std::vector<Diagram> out;
    for (auto& m : neighbor_moves(x, band))
        out.push_back(std::move(m.target));
    return out;
}

// --------------------------------------------------------------- cofaces

std::size_t CubeCoface::dimension() const
{
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](char c) { return c != 'I'; }));
}

std::string CubeCoface::word_text() const
{
    std::string out;
    for (char c : word) {
        if (c == 'L')
            out += "Λ";
        else
            out.push_back(c);
    }
    return out;
}

std::vector<CubeCoface> cofaces(const Diagram& x, const Band& band)
{
    require_in_band(x, band);
    std::vector<std::string> words;
    std::string scratch;
    enumerate_words(x.feet(), 0, scratch, words);
    std::vector<CubeCoface> out;
    for (auto& w : words)
        if (word_in_band(w, x.feet(), band))
            out.push_back({x, std::move(w)});
    return out;
}

std::vector<Diagram> coface_vertices(const CubeCoface& c)
{
    if (word_feet(c.word) != c.base.feet())
        throw PreconditionError("word '" + c.word + "' does not match " + std::to_string(c.base.feet()) + " feet");
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < c.word.size(); ++i)
        if (c.word[i] != 'I')
            letters.push_back(i);
    const std::size_t k = letters.size();
    std::vector<Diagram> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t sub = 0; sub < (std::size_t{1} << k); ++sub) {
        std::string w;
        for (std::size_t i = 0, j = 0; i < c.word.size(); ++i) {
            bool is_letter = j < k && letters[j] == i;
            bool kept = is_letter && (sub >> j & 1U);
            if (is_letter)
                ++j;
            if (!is_letter || kept)
                w.push_back(c.word[i]);
            else if (c.word[i] == 'V')
                w += "II";
            else
                w.push_back('I');
        }
        out.push_back(multiply(c.base, word_diagram(w)));
    }
    return out;
}

SimplicialComplex link_of(const Diagram& x, const Band& band)
{
    require_in_band(x, band);
    std::map<std::string, Label> by_key;
    std::vector<Label> labels;
    for (const auto& m : neighbor_moves(x, band)) {
        labels.push_back(m.label());
        by_key.emplace(m.target.str(), m.label());
    }
    std::vector<std::vector<Label>> generators;
    for (const auto& c : cofaces(x, band)) {
        const std::size_t dim = c.dimension();
        if (dim == 0 || !word_is_maximal(c.word, x.feet(), band))
            continue;
        auto verts = coface_vertices(c);
        std::set<std::string> distinct;
        for (const auto& v : verts)
            distinct.insert(v.str());
        if (distinct.size() != verts.size())
            throw Error("coface " + c.word_text() + " at " + x.str() + " has coincident vertices");
        std::vector<Label> simplex;
        for (std::size_t j = 0; j < dim; ++j) {
            auto it = by_key.find(verts[std::size_t{1} << j].str());
            if (it == by_key.end())
                throw Error("coface vertex is not a single-move neighbor of " + x.str());
            simplex.push_back(it->second);
        }
        generators.push_back(std::move(simplex));
    }
    return SimplicialComplex(std::move(labels), generators);
}

SimplicialComplex ascending_link(const Diagram& x, const MorseSpec& spec) { return link_subcomplex(x, spec, true); }

SimplicialComplex descending_link(const Diagram& x, const MorseSpec& spec) { return link_subcomplex(x, spec, false); }

// -------------------------------------------------------------- fragments

std::size_t Cube::dimension() const { return static_cast<std::size_t>(std::popcount(mask)); }

std::size_t Fragment::find(const std::string& key) const
{
    auto it = index_.find(key);
    return it == index_.end() ? none : it->second;
}

std::size_t Fragment::split_target(std::size_t v, std::size_t s) const
{
    return s < split_to_[v].size() ? split_to_[v][s] : none;
}

std::size_t Fragment::cube_vertex(std::size_t base, std::uint32_t sub) const
{
    std::size_t w = base;
    for (int b = 31; b >= 0 && w != none; --b)
        if (sub >> b & 1U)
            w = split_target(w, static_cast<std::size_t>(b));
    return w;
}

std::vector<std::size_t> Fragment::cube_vertices(const Cube& c) const
{
    auto bits = mask_bits(c.mask);
    std::vector<std::size_t> out;
    out.reserve(std::size_t{1} << bits.size());
    for (std::size_t r = 0; r < (std::size_t{1} << bits.size()); ++r) {
        std::uint32_t sub = 0;
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (r >> j & 1U)
                sub |= 1U << bits[j];
        out.push_back(cube_vertex(c.base, sub));
    }
    return out;
}

std::pair<Cube, Cube> Fragment::cube_faces(const Cube& c, std::size_t j) const
{
    auto bits = mask_bits(c.mask);
    const std::size_t s = bits.at(j);
    std::uint32_t rest = c.mask & ~(1U << s);
    std::uint32_t low = rest & ((1U << s) - 1U);
    std::uint32_t high = rest & ~((1U << s) - 1U);
    Cube front{c.base, rest};
    Cube back{split_target(c.base, s), low | (high << 1)};
    return {front, back};
}

std::size_t Fragment::add_vertex(const Diagram& d, std::size_t radius)
{
    FragmentVertex v;
    v.diagram = d;
    v.key = d.str();
    v.feet = d.feet();
    v.chi0 = chi0_int(d);
    v.chi1 = chi1_int(d);
    for (const auto& c : characters)
        v.chi.push_back(chi(c, v.chi0, v.chi1));
    v.L = L_value(d);
    v.R = R_value(d);
    v.radius = radius;
    index_.emplace(v.key, vertices_.size());
    vertices_.push_back(std::move(v));
    return vertices_.size() - 1;
}

void Fragment::finish()
{
    const std::size_t n = vertices_.size();
    split_to_.assign(n, {});
    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t v = 0; v < n; ++v) {
        split_to_[v].assign(vertices_[v].feet, none);
        for (const auto& m : neighbor_moves(vertices_[v].diagram, band)) {
            std::size_t t = find(m.target.str());
            if (t == none)
                continue;
            if (m.split)
                split_to_[v][m.index] = t;
            edge_set.emplace(std::min(v, t), std::max(v, t));
        }
    }
    edges_.assign(edge_set.begin(), edge_set.end());
    adjacency_.assign(n, {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    cubes_.clear();
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t feet = vertices_[v].feet;
        if (feet >= 20)
            throw PreconditionError("cube enumeration is limited to fewer than 20 feet");
        const std::uint32_t full = 1U << feet;
        std::vector<std::size_t> vert(full, none);
        std::vector<bool> valid(full, false);
        vert[0] = v;
        valid[0] = true;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::uint32_t lowbit = mask & (~mask + 1U);
            std::size_t prev = vert[mask ^ lowbit];
            if (prev == none)
                continue;
            vert[mask] = split_target(prev, static_cast<std::size_t>(std::countr_zero(lowbit)));
            if (vert[mask] == none)
                continue;
            bool ok = true;
            for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1U)
                ok = valid[mask ^ (rest & (~rest + 1U))];
            valid[mask] = ok;
            if (ok)
                cubes_.push_back({v, mask});
        }
    }
    std::stable_sort(cubes_.begin(), cubes_.end(), [](const Cube& a, const Cube& b) {
        if (a.dimension() != b.dimension())
            return a.dimension() < b.dimension();
        if (a.base != b.base)
            return a.base < b.base;
        return a.mask < b.mask;
    });
}

Fragment explore(const std::vector<Diagram>& seeds, const Band& band, const std::optional<ChiFloor>& floor,
                 const ExploreLimits& limits, const std::vector<Character>& characters)
{
    Fragment f;
    f.band = band;
    f.floor = floor;
    f.limits = limits;
    f.characters = characters;
    auto passes_floor = [&](const Diagram& d) {
        return !floor || !(chi(floor->character, d) < floor->threshold);
    };
    std::deque<std::size_t> queue;
    for (const auto& s : seeds) {
        Diagram d = reduce(s);
        require_in_band(d, band);
        if (!passes_floor(d))
            throw PreconditionError("seed " + d.str() + " is below the height floor");
        f.seeds.push_back(d.str());
        if (f.find(d.str()) != Fragment::none)
            continue;
        if (f.size() >= limits.max_vertices) {
            f.truncated = true;
            continue;
        }
        queue.push_back(f.add_vertex(d, 0));
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (f.vertices_[v].radius >= limits.max_radius)
            continue;
        const std::size_t radius = f.vertices_[v].radius;
        for (const auto& m : neighbor_moves(f.vertices_[v].diagram, band)) {
            if (!passes_floor(m.target))
                continue;
            if (f.find(m.target.str()) != Fragment::none)
                continue;
            if (f.size() >= limits.max_vertices) {
                f.truncated = true;
                continue;
            }
            queue.push_back(f.add_vertex(m.target, radius + 1));
        }
    }
    f.finish();
    return f;
}

Fragment induced_fragment(const std::vector<Diagram>& vertices, const Band& band,
                          const std::vector<Character>& characters)
{
    Fragment f;
    f.band = band;
    f.characters = characters;
    f.limits.max_vertices = vertices.size();
    for (const auto& s : vertices) {
        Diagram d = reduce(s);
        require_in_band(d, band);
        f.seeds.push_back(d.str());
        if (f.find(d.str()) == Fragment::none)
            f.add_vertex(d, 0);
    }
    f.finish();
    return f;
}

std::vector<std::vector<std::size_t>> components(const Fragment& frag)
{
    const std::size_t n = frag.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : frag.edges())
        parent[root(a)] = root(b);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v)
        groups[root(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return frag.vertex(a).key < frag.vertex(b).key; });
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return frag.vertex(a.front()).key < frag.vertex(b.front()).key;
    });
    return out;
}

MorseReport check_morse_on_fragment(const MorseSpec& spec, const Fragment& frag)
{
    for (const auto& v : frag.vertices())
        if (!spec.band.contains(v.feet))
            throw PreconditionError("fragment vertex " + v.key + " lies outside the Morse band");
    const Rational eps = epsilon(spec.character);
    auto height = [&](std::size_t i) {
        const auto& v = frag.vertex(i);
        return RefinedHeight{chi(spec.character, v.chi0, v.chi1), spec.sign() * static_cast<long>(v.feet)};
    };
    MorseReport report;
    for (auto [a, b] : frag.edges()) {
        ++report.edges_checked;
        Rational d = abs(height(a).h - height(b).h);
        bool gap = !(d < eps);
        bool tie_broken = is_zero(d) && frag.vertex(a).feet != frag.vertex(b).feet;
        if (!gap && !tie_broken)
            report.violations.push_back({a, b, "height difference " + rational_text(d) + " below epsilon"});
    }
    for (const auto& c : frag.cubes()) {
        ++report.cubes_checked;
        auto verts = frag.cube_vertices(c);
        std::vector<RefinedHeight> hs;
        for (auto v : verts)
            hs.push_back(height(v));
        auto top = *std::max_element(hs.begin(), hs.end());
        auto bottom = *std::min_element(hs.begin(), hs.end());
        if (std::count(hs.begin(), hs.end(), top) != 1)
            report.violations.push_back({c.base, verts.back(), "cube without a unique highest vertex"});
        if (std::count(hs.begin(), hs.end(), bottom) != 1)
            report.violations.push_back({c.base, verts.back(), "cube without a unique lowest vertex"});
    }
    return report;
}

// ------------------------------------------------------------ cell structure

CubicalCells cubical_cells(const Fragment& frag, const std::function<bool(std::size_t)>& keep)
{
    CubicalCells out;
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;
    auto add = [&](std::size_t dim, const Cube& c) {
        if (out.cubes_by_dim.size() <= dim) {
            out.cubes_by_dim.resize(dim + 1);
            index.resize(dim + 1);
        }
        index[dim].emplace(cube_key(c.base, c.mask), out.cubes_by_dim[dim].size());
        out.cubes_by_dim[dim].push_back(c);
    };
    for (std::size_t v = 0; v < frag.size(); ++v)
        if (keep(v))
            add(0, {v, 0});
    for (const auto& c : frag.cubes()) {
        auto verts = frag.cube_vertices(c);
        if (std::all_of(verts.begin(), verts.end(), keep))
            add(c.dimension(), c);
    }
    const std::size_t dims = out.cubes_by_dim.size();
    out.cells.counts.resize(dims);
    out.cells.boundary.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        out.cells.counts[d] = out.cubes_by_dim[d].size();
        if (d == 0)
            continue;
        for (const auto& c : out.cubes_by_dim[d]) {
            std::vector<BoundaryEntry> col;
            for (std::size_t j = 0; j < d; ++j) {
                auto [front, back] = frag.cube_faces(c, j);
                int sign = j % 2 == 0 ? 1 : -1;
                col.emplace_back(index[d - 1].at(cube_key(back.base, back.mask)), sign);
                col.emplace_back(index[d - 1].at(cube_key(front.base, front.mask)), -sign);
            }
            out.cells.boundary[d].push_back(std::move(col));
        }
    }
    return out;
}

std::vector<std::vector<bool>> mark_cells(const Fragment& frag, const CubicalCells& cells,
                                          const std::function<bool(std::size_t)>& keep)
{
    std::vector<std::vector<bool>> marks(cells.cubes_by_dim.size());
    for (std::size_t d = 0; d < cells.cubes_by_dim.size(); ++d)
        for (const auto& c : cells.cubes_by_dim[d]) {
            if (d == 0) {
                marks[d].push_back(keep(c.base));
                continue;
            }
            auto verts = frag.cube_vertices(c);
            marks[d].push_back(std::all_of(verts.begin(), verts.end(), keep));
        }
    return marks;
}

SimplicialComplex subdivision(const Fragment& frag, const std::function<bool(std::size_t)>& keep)
{
    std::vector<Label> labels;
    for (std::size_t v = 0; v < frag.size(); ++v)
        if (keep(v))
            labels.push_back(Label::index(static_cast<int>(v)));
    std::vector<std::vector<Label>> generators;
    for (const auto& c : frag.cubes()) {
        auto verts = frag.cube_vertices(c);
        if (!std::all_of(verts.begin(), verts.end(), keep))
            continue;
        // Chains ∅ ⊂ {b₁} ⊂ {b₁,b₂} ⊂ ... over every ordering of the cube's bits.
        std::vector<std::size_t> order(c.dimension());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<Label> simplex;
            std::size_t r = 0;
            simplex.push_back(Label::index(static_cast<int>(verts[r])));
            for (auto j : order) {
                r |= std::size_t{1} << j;
                simplex.push_back(Label::index(static_cast<int>(verts[r])));
            }
            generators.push_back(std::move(simplex));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex(std::move(labels), generators);
}

} // namespace fsigma
