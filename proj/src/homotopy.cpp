#include "fsigma/homotopy.hpp"

#include "fsigma/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fsigma {

namespace {

// ------------------------------------------------------------- Smith form

struct Elimination
{
    std::vector<std::map<std::size_t, BigInt>> rows;
    std::vector<std::set<std::size_t>> cols;
};

/// Clears unit pivots greedily; returns how many were removed (each an invariant factor 1).
std::size_t eliminate_units(Elimination& m)
{
    std::size_t removed = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            if (m.cols[c].empty())
                continue;
            std::size_t best = SIZE_MAX;
            std::size_t best_size = SIZE_MAX;
            for (auto r : m.cols[c]) {
                const auto& v = m.rows[r].at(c);
                if ((v == 1 || v == -1) && m.rows[r].size() < best_size) {
                    best = r;
                    best_size = m.rows[r].size();
                }
            }
            if (best == SIZE_MAX)
                continue;
            const std::size_t r = best;
            const BigInt pivot = m.rows[r].at(c);
            std::vector<std::size_t> others(m.cols[c].begin(), m.cols[c].end());
            const auto pivot_row = m.rows[r];
            for (auto i : others) {
                if (i == r)
                    continue;
                const BigInt factor = m.rows[i].at(c) * pivot;
                for (const auto& [j, v] : pivot_row) {
                    auto& row = m.rows[i];
                    auto it = row.find(j);
                    if (it == row.end()) {
                        row.emplace(j, -factor * v);
                        m.cols[j].insert(i);
                    } else {
                        it->second -= factor * v;
                        if (it->second == 0) {
                            row.erase(it);
                            m.cols[j].erase(i);
                        }
                    }
                }
            }
            for (const auto& [j, v] : pivot_row)
                m.cols[j].erase(r);
            m.rows[r].clear();
            ++removed;
            progress = true;
        }
    }
    return removed;
}

/// Diagonalises a dense matrix by repeated minimal-pivot division.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a)
{
    std::vector<BigInt> diag;
    const std::size_t nr = a.size();
    const std::size_t nc = nr ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // Smallest nonzero entry in the trailing block.
        std::size_t pr = nr, pc = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (a[i][j] != 0 && (pr == nr || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == nr)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0)
                    continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < nc; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0)
                    continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < nr; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

// ---------------------------------------------------------- presentations

using Word = std::vector<int>;

void free_reduce(Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    w.assign(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word invert(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (auto& x : out)
        x = -x;
    return out;
}

/// Tietze moves on ⟨gens | relators⟩; true when every generator is eliminated.
bool collapses(std::size_t gens, std::vector<Word> relators, std::size_t effort)
{
    std::vector<bool> alive(gens, true);
    std::size_t remaining = gens;
    const std::size_t length_cap = 400000;
    while (remaining > 0 && effort-- > 0) {
        for (auto& r : relators)
            free_reduce(r);
        std::erase_if(relators, [](const Word& r) { return r.empty(); });
        // Occurrence counts per generator per relator.
        std::size_t best_rel = SIZE_MAX, best_gen = 0, best_len = SIZE_MAX;
        for (std::size_t ri = 0; ri < relators.size(); ++ri) {
            const auto& r = relators[ri];
            if (r.size() >= best_len)
                continue;
            std::map<int, int> count;
            for (int x : r)
                ++count[std::abs(x) - 1];
            for (auto [g, k] : count)
                if (k == 1) {
                    best_rel = ri;
                    best_gen = static_cast<std::size_t>(g);
                    best_len = r.size();
                    break;
                }
        }
        if (best_rel == SIZE_MAX)
            return false;
        // Rotate so the generator comes first: r = g·w gives g = w⁻¹, r = g⁻¹·w gives g = w.
        Word r = relators[best_rel];
        auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) - 1 == static_cast<int>(best_gen); });
        std::rotate(r.begin(), pos, r.end());
        const int eps = r.front() > 0 ? 1 : -1;
        Word w(r.begin() + 1, r.end());
        Word value = eps > 0 ? invert(w) : w;
        Word value_inv = invert(value);
        relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(best_rel));
        std::size_t total = 0;
        for (auto& rel : relators) {
            Word out;
            for (int x : rel) {
                if (std::abs(x) - 1 != static_cast<int>(best_gen)) {
                    out.push_back(x);
                    continue;
                }
                const Word& piece = x > 0 ? value : value_inv;
                out.insert(out.end(), piece.begin(), piece.end());
            }
            rel = std::move(out);
            total += rel.size();
        }
        alive[best_gen] = false;
        --remaining;
        if (total > length_cap)
            return false;
    }
    return remaining == 0;
}

std::size_t component_count(const SimplicialComplex& k)
{
    std::vector<std::size_t> parent(k.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : k.simplices(1))
        parent[find(e[0])] = find(e[1]);
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i)
            ++n;
    return n;
}

} // namespace

std::string to_string(Pi1 p)
{
    switch (p) {
    case Pi1::trivial:
        return "trivial";
    case Pi1::nontrivial:
        return "nontrivial";
    case Pi1::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

ChainComplex::ChainComplex(CellComplex cells) : ranks_(std::move(cells.counts))
{
    boundaries_.resize(ranks_.size());
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        SparseMatrix m;
        m.rows = ranks_[k - 1];
        m.cols = ranks_[k];
        m.columns = std::move(cells.boundary.at(k));
        if (m.columns.size() != m.cols)
            throw PreconditionError("boundary list size does not match the cell count");
        for (const auto& col : m.columns)
            for (const auto& [r, v] : col)
                if (r >= m.rows)
                    throw PreconditionError("boundary refers to a missing cell");
        boundaries_[k] = std::move(m);
    }
    // ∂ₖ₋₁ ∘ ∂ₖ = 0, column by column.
    for (std::size_t k = 2; k < ranks_.size(); ++k) {
        const auto& outer = boundaries_[k - 1];
        for (const auto& col : boundaries_[k].columns) {
            std::map<std::size_t, long> acc;
            for (const auto& [face, v] : col)
                for (const auto& [ff, w] : outer.columns[face])
                    acc[ff] += static_cast<long>(v) * w;
            for (const auto& [ff, total] : acc)
                if (total != 0)
                    throw Error("boundary of a boundary is nonzero in dimension " + std::to_string(k));
        }
    }
}

const SparseMatrix& ChainComplex::boundary(std::size_t k) const
{
    static const SparseMatrix none;
    return (k >= 1 && k < boundaries_.size()) ? boundaries_[k] : none;
}

CellComplex cell_complex(const SimplicialComplex& k)
{
    CellComplex cells;
    if (k.empty())
        return cells;
    const auto top = static_cast<std::size_t>(k.dimension());
    cells.counts.resize(top + 1);
    cells.boundary.resize(top + 1);
    for (std::size_t d = 0; d <= top; ++d) {
        const auto& simplices = k.simplices(d);
        cells.counts[d] = simplices.size();
        if (d == 0)
            continue;
        const auto& faces = k.simplices(d - 1);
        auto& out = cells.boundary[d];
        out.reserve(simplices.size());
        for (const auto& s : simplices) {
            std::vector<BoundaryEntry> col;
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex f;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != j)
                        f.push_back(s[i]);
                auto it = std::lower_bound(faces.begin(), faces.end(), f);
                col.emplace_back(static_cast<std::size_t>(it - faces.begin()), j % 2 == 0 ? 1 : -1);
            }
            out.push_back(std::move(col));
        }
    }
    return cells;
}

ChainComplex chain_complex(const SimplicialComplex& k) { return ChainComplex(cell_complex(k)); }

std::vector<BigInt> invariant_factors(const SparseMatrix& m)
{
    Elimination e;
    e.rows.resize(m.rows);
    e.cols.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) {
            if (v == 0)
                continue;
            auto& slot = e.rows[r][c];
            slot += v;
            if (slot == 0)
                e.rows[r].erase(c);
        }
    for (std::size_t r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : e.rows[r])
            e.cols[c].insert(r);
    std::size_t units = eliminate_units(e);

    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < m.rows; ++r)
        if (!e.rows[r].empty())
            live_rows.push_back(r);
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!e.cols[c].empty())
            live_cols.push_back(c);
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : e.rows[live_rows[i]]) {
            auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
            dense[i][static_cast<std::size_t>(j)] = v;
        }
    std::vector<BigInt> factors(units, BigInt(1));
    auto rest = dense_diagonal(std::move(dense));
    factors.insert(factors.end(), rest.begin(), rest.end());
    // Normalise the diagonal into a divisibility chain.
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[j] % factors[i] == 0)
                continue;
            BigInt g = boost::multiprecision::gcd(factors[i], factors[j]);
            BigInt l = factors[i] / g * factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    return factors;
}

bool HomologyReport::reduced_vanishes(std::size_t i) const
{
    if (i == 0)
        return reduced_betti0() == 0 && (torsion.empty() || torsion[0].empty());
    if (i >= betti.size())
        return true;
    return betti[i] == 0 && torsion[i].empty();
}

HomologyReport homology(const ChainComplex& c)
{
    HomologyReport report;
    const auto& ranks = c.ranks();
    const std::size_t n = ranks.size();
    std::vector<std::vector<BigInt>> factors(n + 1);
    for (std::size_t k = 1; k < n; ++k)
        factors[k] = invariant_factors(c.boundary(k));
    report.betti.resize(n);
    report.torsion.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t rank_out = factors[k].size();
        std::size_t rank_in = factors[k + 1].size();
        report.betti[k] = ranks[k] - rank_out - rank_in;
        for (const auto& f : factors[k + 1])
            if (f > 1)
                report.torsion[k].push_back(f);
    }
    report.nonempty = n > 0 && ranks[0] > 0;
    report.connected = report.nonempty && report.betti[0] == 1;
    if (report.connected && n > 1 && (report.betti[1] > 0 || !report.torsion[1].empty()))
        report.pi1 = Pi1::nontrivial;
    return report;
}

Pi1 pi1_trivial(const SimplicialComplex& k, std::size_t effort)
{
    if (k.empty() || component_count(k) != 1)
        throw PreconditionError("pi1 needs a connected nonempty complex");
    const std::size_t n = k.vertex_count();
    const auto& edges = k.simplices(1);
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e][0]].emplace_back(edges[e][1], e);
        adj[edges[e][1]].emplace_back(edges[e][0], e);
    }
    // Spanning tree rooted at a vertex of maximal degree, so cones collapse at once.
    std::size_t root = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (adj[v].size() > adj[root].size())
            root = v;
    std::vector<bool> tree_edge(edges.size(), false), seen(n, false);
    std::queue<std::size_t> queue;
    queue.push(root);
    seen[root] = true;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto [w, e] : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                tree_edge[e] = true;
                queue.push(w);
            }
    }
    std::vector<int> generator(edges.size(), 0);
    std::size_t gens = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!tree_edge[e])
            generator[e] = static_cast<int>(++gens);
    if (gens == 0)
        return Pi1::trivial;
    auto edge_index = [&](int a, int b) {
        Simplex s{std::min(a, b), std::max(a, b)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), s) - edges.begin());
    };
    std::vector<Word> relators;
    for (const auto& t : k.simplices(2)) {
        // Boundary a→b→c→a with edges oriented low to high: ab · bc · (ac)⁻¹.
        Word w;
        if (int g = generator[edge_index(t[0], t[1])])
            w.push_back(g);
        if (int g = generator[edge_index(t[1], t[2])])
            w.push_back(g);
        if (int g = generator[edge_index(t[0], t[2])])
            w.push_back(-g);
        if (!w.empty())
            relators.push_back(std::move(w));
    }
    if (collapses(gens, std::move(relators), effort))
        return Pi1::trivial;
    auto h = homology(k, 0);
    if (h.betti.size() > 1 && (h.betti[1] > 0 || !h.torsion[1].empty()))
        return Pi1::nontrivial;
    return Pi1::inconclusive;
}

HomologyReport homology(const SimplicialComplex& k, std::size_t pi1_effort)
{
    auto report = homology(chain_complex(k));
    if (report.connected && report.pi1 != Pi1::nontrivial && pi1_effort > 0)
        report.pi1 = pi1_trivial(k, pi1_effort);
    if (report.nonempty && report.connected != (component_count(k) == 1))
        throw Error("betti0 disagrees with the 1-skeleton component count");
    return report;
}

ConnectivityEvidence connectivity_evidence(const SimplicialComplex& k, int target, std::size_t pi1_effort)
{
    if (target < -1)
        throw PreconditionError("connectivity target must be at least -1");
    ConnectivityEvidence ev;
    ev.target = target;
    ev.homology = homology(k, target >= 1 ? pi1_effort : 0);
    ev.nonempty = ev.homology.nonempty;
    ev.connected = ev.homology.connected;
    bool ok = ev.nonempty;
    if (ev.nonempty) {
        ev.vanishing_through = -1;
        for (int i = 0; i <= target; ++i) {
            if (!ev.homology.reduced_vanishes(static_cast<std::size_t>(i)))
                break;
            ev.vanishing_through = i;
        }
        ok = ok && ev.vanishing_through == target;
    }
    if (target >= 0)
        ok = ok && ev.connected;
    if (target >= 1 && ev.connected) {
        ev.pi1_checked = true;
        ev.pi1 = ev.homology.pi1;
        ok = ok && ev.pi1 != Pi1::nontrivial;
    }
    ev.verdict = ok ? Verdict::consistent : Verdict::inconsistent;
    return ev;
}

ChainComplex relative_chain_complex(const CellComplex& k, const std::vector<std::vector<bool>>& in_sub)
{
    const std::size_t dims = k.counts.size();
    if (in_sub.size() != dims)
        throw PreconditionError("subcomplex marks do not match the complex");
    for (std::size_t d = 1; d < dims; ++d)
        for (std::size_t c = 0; c < k.counts[d]; ++c)
            if (in_sub[d][c])
                for (const auto& [f, v] : k.boundary[d][c])
                    if (!in_sub[d - 1][f])
                        throw PreconditionError("marked cells are not a subcomplex");
    CellComplex q;
    q.counts.resize(dims);
    q.boundary.resize(dims);
    std::vector<std::vector<std::size_t>> index(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        index[d].assign(k.counts[d], SIZE_MAX);
        for (std::size_t c = 0; c < k.counts[d]; ++c)
            if (!in_sub[d][c])
                index[d][c] = q.counts[d]++;
    }
    for (std::size_t d = 1; d < dims; ++d)
        for (std::size_t c = 0; c < k.counts[d]; ++c) {
            if (in_sub[d][c])
                continue;
            std::vector<BoundaryEntry> col;
            for (const auto& [f, v] : k.boundary[d][c])
                if (!in_sub[d - 1][f])
                    col.emplace_back(index[d - 1][f], v);
            q.boundary[d].push_back(std::move(col));
        }
    while (!q.counts.empty() && q.counts.back() == 0) {
        q.counts.pop_back();
        q.boundary.pop_back();
    }
    return ChainComplex(std::move(q));
}

HomologyReport relative_homology(const SimplicialComplex& k, const SimplicialComplex& sub)
{
    auto cells = cell_complex(k);
    std::vector<std::vector<bool>> marks(cells.counts.size());
    for (std::size_t d = 0; d < cells.counts.size(); ++d) {
        marks[d].assign(cells.counts[d], false);
        for (std::size_t c = 0; c < cells.counts[d]; ++c)
            marks[d][c] = sub.contains(k.labels_of(k.simplices(d)[c]));
    }
    std::size_t marked = 0;
    for (const auto& m : marks)
        marked += static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
    std::size_t total = 0;
    for (auto count : sub.f_vector())
        total += count;
    if (marked != total)
        throw PreconditionError("second complex is not a subcomplex of the first");
    auto report = homology(relative_chain_complex(cells, marks));
    report.pi1 = Pi1::inconclusive;
    return report;
}

} // namespace fsigma
