#include "fsigma/cover.hpp"

#include "fsigma/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace fsigma {

std::string to_string(Side s) { return s == Side::L ? "L" : "R"; }

std::vector<SideValue> cover_assign(const Diagram& top)
{
    std::vector<SideValue> out;
    if (count_left(top.plus()) > 0)
        out.emplace_back(Side::L, L_value(top));
    if (count_right(top.plus()) > 0)
        out.emplace_back(Side::R, R_value(top));
    return out;
}

std::vector<SideValue> cover_assign(const Fragment& frag, const Cube& cell)
{
    std::size_t top = frag.cube_vertex(cell.base, cell.mask);
    if (top == Fragment::none)
        throw PreconditionError("cell is not contained in the fragment");
    return cover_assign(frag.vertex(top).diagram);
}

namespace {

struct Dsu
{
    std::unordered_map<std::size_t, std::size_t> parent;

    std::size_t find(std::size_t x)
    {
        auto it = parent.try_emplace(x, x).first;
        if (it->second == x)
            return x;
        std::size_t root = find(it->second);
        parent[x] = root;
        return root;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

} // namespace

Cover::Cover(const Fragment& frag, const Character& c) : frag_(&frag)
{
    if (sign(c.a) <= 0 || sign(c.b) <= 0)
        throw PreconditionError("the cover needs a character with a > 0 and b > 0");
    if (frag.band.p < 2)
        throw PreconditionError("the cover needs a band with at least two feet");
    for (const auto& v : frag.vertices())
        if (sign(chi(c, v.diagram)) < 0)
            throw PreconditionError("vertex " + v.key + " lies below χ = 0");

    std::map<SideValue, Dsu> pieces;
    auto visit = [&](const Cube& cell) {
        ++cells_checked_;
        auto sides = cover_assign(frag, cell);
        if (sides.empty()) {
            ++unlabeled_;
            return;
        }
        auto verts = frag.cube_vertices(cell);
        for (const auto& sv : sides) {
            auto& dsu = pieces[sv];
            for (auto v : verts)
                dsu.unite(v, verts.front());
        }
    };
    for (std::size_t v = 0; v < frag.size(); ++v)
        visit(Cube{v, 0});
    for (const auto& cube : frag.cubes())
        visit(cube);

    // Components per label, numbered by their minimal vertex key.
    vertex_nodes_.assign(frag.size(), {});
    for (auto& [sv, dsu] : pieces) {
        std::map<std::size_t, std::vector<std::size_t>> groups;
        std::vector<std::size_t> members;
        for (const auto& entry : dsu.parent)
            members.push_back(entry.first);
        for (auto v : members)
            groups[dsu.find(v)].push_back(v);
        std::vector<std::pair<std::string, std::vector<std::size_t>>> ordered;
        for (auto& [root, vs] : groups) {
            std::string least = frag.vertex(vs.front()).key;
            for (auto v : vs)
                least = std::min(least, frag.vertex(v).key);
            ordered.emplace_back(std::move(least), std::move(vs));
        }
        std::sort(ordered.begin(), ordered.end());
        for (std::size_t k = 0; k < ordered.size(); ++k) {
            std::size_t node = nodes_.size();
            nodes_.push_back(CoverLabel{sv.first, sv.second, k});
            for (auto v : ordered[k].second)
                vertex_nodes_[v].push_back(node);
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto& at : vertex_nodes_) {
        std::sort(at.begin(), at.end());
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t j = i + 1; j < at.size(); ++j)
                edges.emplace(at[i], at[j]);
    }
    edges_.assign(edges.begin(), edges.end());
}

std::size_t Cover::node_of(Side side, std::size_t value, std::size_t v) const
{
    if (v >= vertex_nodes_.size())
        return none;
    for (auto n : vertex_nodes_[v])
        if (nodes_[n].side == side && nodes_[n].value == value)
            return n;
    return none;
}

bool Cover::adjacent(std::size_t a, std::size_t b) const
{
    auto key = std::minmax(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair<std::size_t, std::size_t>(key));
}

std::vector<CoverLabel> Cover::labels(const Cube& cell) const
{
    std::vector<CoverLabel> out;
    for (const auto& [side, value] : cover_assign(*frag_, cell))
        out.push_back(nodes_[node_of(side, value, cell.base)]);
    return out;
}

bool Cover::bipartite() const
{
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const auto& e) { return nodes_[e.first].side != nodes_[e.second].side; });
}

namespace {

const char* const path_names[4] = {"p12", "p23", "p34", "p41"};

std::size_t side_value(Side side, const Diagram& x) { return side == Side::L ? L_value(x) : R_value(x); }

bool carries(const Diagram& top, Side side, std::size_t value)
{
    auto sides = cover_assign(top);
    return std::find(sides.begin(), sides.end(), SideValue{side, value}) != sides.end();
}

} // namespace

CertificateCheck validate_certificate(const CycleCertificate& cert)
{
    CertificateCheck out;
    auto fail = [&](std::string message) { out.failures.push_back(std::move(message)); };
    const auto& c = cert.character;
    if (sign(c.a) <= 0 || sign(c.b) <= 0)
        fail("character needs a > 0 and b > 0");
    if (cert.band.p < 2 || cert.band.p > cert.band.q)
        fail("band must satisfy 2 <= p <= q");
    if (!out.ok())
        return out;

    std::vector<Diagram> all;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& path = cert.paths[i];
        std::string tag = std::string(path_names[i]) + " (" + to_string(path.side) + "=" + std::to_string(path.value) + ")";
        if (path.vertices.empty()) {
            fail(tag + ": empty path");
            continue;
        }
        if (path.vertices.front() != cert.witnesses[i])
            fail(tag + ": does not start at x" + std::to_string(i + 1));
        if (path.vertices.back() != cert.witnesses[(i + 1) % 4])
            fail(tag + ": does not end at x" + std::to_string((i + 1) % 4 + 1));
        for (std::size_t k = 0; k < path.vertices.size(); ++k) {
            const auto& x = path.vertices[k];
            std::string where = tag + " vertex " + std::to_string(k);
            if (x.heads() != 1 || !x.is_reduced()) {
                fail(where + ": not a reduced one-head diagram");
                continue;
            }
            if (!cert.band.contains(x.feet()))
                fail(where + ": outside the band");
            if (sign(chi(c, x)) < 0)
                fail(where + ": below χ = 0");
            if (side_value(path.side, x) != path.value)
                fail(where + ": wrong " + to_string(path.side) + " value");
            all.push_back(x);
        }
        if (path.vertices.size() == 1 && !carries(path.vertices[0], path.side, path.value))
            fail(tag + ": single vertex does not carry the label");
        for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
            const auto& u = path.vertices[k];
            const auto& w = path.vertices[k + 1];
            if (u.heads() != 1 || w.heads() != 1 || !cert.band.contains(u.feet()) || !cert.band.contains(w.feet()))
                continue;
            auto near = neighbors(u, cert.band);
            if (std::find(near.begin(), near.end(), w) == near.end()) {
                fail(tag + " step " + std::to_string(k) + ": not an edge");
                continue;
            }
            const Diagram& top = u.feet() > w.feet() ? u : w;
            if (!carries(top, path.side, path.value))
                fail(tag + " step " + std::to_string(k) + ": edge lacks the label");
        }
    }
    for (std::size_t i = 0; i < 4; ++i)
        if (cert.paths[i].side == cert.paths[(i + 1) % 4].side)
            fail("labels do not alternate sides");
    for (std::size_t i = 0; i < 2; ++i)
        if (cert.paths[i].value == cert.paths[i + 2].value)
            fail("opposite labels " + std::string(path_names[i]) + " and " + path_names[i + 2] + " coincide");
    if (!out.ok())
        return out;

    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    out.path_vertices = all.size();
    Fragment frag = induced_fragment(all, cert.band, {c});
    std::optional<Cover> cover;
    try {
        cover.emplace(frag, c);
    } catch (const PreconditionError& e) {
        fail(e.what());
        return out;
    }
    out.nerve_nodes = cover->nodes().size();
    out.nerve_edges = cover->edges().size();
    out.cells_checked = cover->cells_checked();
    if (cover->unlabeled_cells() > 0)
        fail(std::to_string(cover->unlabeled_cells()) + " cells carry no label");
    out.bipartite = cover->bipartite();
    if (!out.bipartite)
        fail("nerve is not bipartite");

    std::array<std::size_t, 4> node{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& path = cert.paths[i];
        node[i] = cover->node_of(path.side, path.value, frag.find(path.vertices.front()));
        for (const auto& x : path.vertices)
            if (node[i] == Cover::none || cover->node_of(path.side, path.value, frag.find(x)) != node[i]) {
                fail(std::string(path_names[i]) + ": path leaves its cover component");
                break;
            }
    }
    if (!out.ok())
        return out;
    std::set<std::size_t> distinct(node.begin(), node.end());
    bool cycle = distinct.size() == 4;
    for (std::size_t i = 0; i < 4; ++i)
        cycle = cycle && cover->adjacent(node[i], node[(i + 1) % 4]);
    out.cycle = cycle;
    if (!cycle)
        fail("the four labels do not form a 4-cycle in the nerve");
    return out;
}

namespace {

// One-head diagrams whose root has the left part ℓ and the right part ρ: [(Tℓ,Tρ) / Eℓ Eρ].
Diagram combine(const Diagram& l, const Diagram& r)
{
    return Diagram(BinaryForest({BinaryTree::caret(l.minus()[0], r.minus()[0])}), l.plus().concat(r.plus()));
}

// [(*, right vine d) / left vine d, *]: χ₀ = d − 1, L = 1, feet 2.
Diagram start_piece(long k)
{
    auto d = static_cast<std::size_t>(k + 1);
    return Diagram(BinaryForest({BinaryTree::caret(BinaryTree::leaf(), BinaryTree::right_vine(d))}),
                   BinaryForest({BinaryTree::left_vine(d), BinaryTree::leaf()}));
}

long ceil_div(const Rational& r)
{
    long q = static_cast<long>(r.numerator() / r.denominator());
    if (q * r.denominator() < r.numerator())
        ++q;
    return q;
}

constexpr Band piece_band{2, 5};
constexpr long piece_floor = -2;

long piece_cost(const Diagram& l, long k)
{
    long depth = static_cast<long>(L_value(l));
    if (depth != 2)
        return 1000 * std::abs(2 - depth) + 10 * static_cast<long>(count_left(l.plus()));
    long feet = static_cast<long>(l.feet());
    return 10 * std::max(0L, k - chi0_int(l)) + std::abs(feet - 2);
}

// Enforced hill climbing over left pieces: breadth-first from the current piece
// until a strictly cheaper one appears, then restart from it.
std::vector<Diagram> climb(const Diagram& start, long k, const NerveSearchLimits& limits)
{
    std::vector<Diagram> path{start};
    long cost = piece_cost(start, k);
    for (std::size_t step = 0; cost > 0; ++step) {
        if (step >= limits.max_steps)
            throw SearchExhausted("hill climbing exceeded " + std::to_string(limits.max_steps) + " steps");
        std::unordered_map<Diagram, Diagram> parent;
        std::deque<Diagram> queue{path.back()};
        parent.emplace(path.back(), path.back());
        std::optional<Diagram> better;
        while (!queue.empty() && !better) {
            Diagram cur = std::move(queue.front());
            queue.pop_front();
            for (auto& next : neighbors(cur, piece_band)) {
                if (chi0_int(next) < piece_floor || parent.count(next))
                    continue;
                parent.emplace(next, cur);
                if (piece_cost(next, k) < cost) {
                    better = next;
                    break;
                }
                if (parent.size() >= limits.step_nodes)
                    throw SearchExhausted("hill-climbing step exceeded " + std::to_string(limits.step_nodes) +
                                          " nodes");
                queue.push_back(std::move(next));
            }
        }
        if (!better)
            throw SearchExhausted("hill climbing reached a dead end");
        std::vector<Diagram> segment;
        for (Diagram d = *better; d != path.back(); d = parent.at(d))
            segment.push_back(d);
        path.insert(path.end(), segment.rbegin(), segment.rend());
        cost = piece_cost(path.back(), k);
    }
    return path;
}

} // namespace

CycleCertificate find_nerve_cycle(const Character& c, const NerveSearchLimits& limits)
{
    if (sign(c.a) <= 0 || sign(c.b) <= 0)
        throw PreconditionError("find_nerve_cycle needs a > 0 and b > 0");
    // Along a path changing one side, the other side contributes at least −3 to its χ-coordinate.
    long k_left = ceil_div(Rational(1) + Rational(3) * c.b / c.a);
    long k_right = ceil_div(Rational(1) + Rational(3) * c.a / c.b);

    std::vector<Diagram> alpha = climb(start_piece(k_left), k_left, limits);
    std::vector<Diagram> beta;
    for (const auto& d : climb(start_piece(k_right), k_right, limits))
        beta.push_back(mirror(d));
    const Diagram& l_a = alpha.front();
    const Diagram& l_b = alpha.back();
    const Diagram& r_2 = beta.front();
    const Diagram& r_3 = beta.back();

    CycleCertificate cert;
    cert.character = c;
    cert.witnesses = {combine(l_a, r_2), combine(l_b, r_2), combine(l_b, r_3), combine(l_a, r_3)};
    auto lift_left = [](const std::vector<Diagram>& ls, const Diagram& r) {
        std::vector<Diagram> out;
        for (const auto& l : ls)
            out.push_back(combine(l, r));
        return out;
    };
    auto lift_right = [](const Diagram& l, const std::vector<Diagram>& rs) {
        std::vector<Diagram> out;
        for (const auto& r : rs)
            out.push_back(combine(l, r));
        return out;
    };
    cert.paths[0] = {Side::R, 2, lift_left(alpha, r_2)};
    cert.paths[1] = {Side::L, 3, lift_right(l_b, beta)};
    std::vector<Diagram> alpha_back(alpha.rbegin(), alpha.rend());
    std::vector<Diagram> beta_back(beta.rbegin(), beta.rend());
    cert.paths[2] = {Side::R, 3, lift_left(alpha_back, r_3)};
    cert.paths[3] = {Side::L, 2, lift_right(l_a, beta_back)};

    auto check = validate_certificate(cert);
    if (!check.ok())
        throw SearchExhausted("constructed certificate failed validation: " + check.failures.front());
    return cert;
}

} // namespace fsigma
