#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms; inputs are taken from diagram strings and
// simplex lists only.

#include "fsigma/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- PL model

/// Affine piece [x0, x1] → [y0, y1].
struct Piece
{
    Q x0, x1, y0, y1;
    Q slope() const { return (y1 - y0) / (x1 - x0); }
    friend bool operator==(const Piece&, const Piece&) = default;
};

/// A piecewise-affine bijection [0, heads) → [0, feet), pieces sorted and maximal.
using PL = std::vector<Piece>;

namespace detail {

inline void tree_intervals(std::string_view s, std::size_t& pos, const Q& lo, const Q& hi, std::vector<std::pair<Q, Q>>& out)
{
    if (s[pos] == '*') {
        ++pos;
        out.emplace_back(lo, hi);
        return;
    }
    if (s[pos] != '(')
        throw std::runtime_error("oracle: bad tree");
    ++pos;
    Q mid = (lo + hi) / 2;
    tree_intervals(s, pos, lo, mid, out);
    if (s[pos] != ',')
        throw std::runtime_error("oracle: expected ,");
    ++pos;
    tree_intervals(s, pos, mid, hi, out);
    if (s[pos] != ')')
        throw std::runtime_error("oracle: expected )");
    ++pos;
}

/// Leaf intervals of a bracketed forest "[t0,t1,...]"; tree j lives in [j, j+1].
inline std::vector<std::pair<Q, Q>> forest_intervals(std::string_view s, std::size_t& roots)
{
    std::vector<std::pair<Q, Q>> out;
    std::size_t pos = 1;
    roots = 0;
    while (true) {
        tree_intervals(s, pos, Q(roots), Q(roots + 1), out);
        ++roots;
        if (s[pos] == ']')
            break;
        ++pos;
    }
    return out;
}

inline PL canonical(PL pieces)
{
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.x0 < b.x0; });
    PL out;
    for (auto& p : pieces) {
        if (!out.empty()) {
            auto& last = out.back();
            if (last.x1 == p.x0 && last.y1 == p.y0 && last.slope() == p.slope()) {
                last.x1 = p.x1;
                last.y1 = p.y1;
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

} // namespace detail

/// The map sending the i-th leaf interval of the split forest to the i-th leaf interval of the merge forest.
inline PL pl_map(const std::string& diagram)
{
    std::string s;
    for (char c : diagram)
        if (c != ' ')
            s.push_back(c);
    auto slash = s.find("]/[");
    if (slash == std::string::npos)
        throw std::runtime_error("oracle: bad diagram");
    std::size_t heads = 0, feet = 0;
    auto top = detail::forest_intervals(std::string_view(s).substr(0, slash + 1), heads);
    auto bottom = detail::forest_intervals(std::string_view(s).substr(slash + 2), feet);
    if (top.size() != bottom.size())
        throw std::runtime_error("oracle: leaf mismatch");
    PL pieces;
    for (std::size_t i = 0; i < top.size(); ++i)
        pieces.push_back({top[i].first, top[i].second, bottom[i].first, bottom[i].second});
    return detail::canonical(std::move(pieces));
}

/// First f, then g.
inline PL compose(const PL& f, const PL& g)
{
    PL out;
    for (const auto& p : f)
        for (const auto& q : g) {
            Q lo = std::max(p.y0, q.x0), hi = std::min(p.y1, q.x1);
            if (!(lo < hi))
                continue;
            auto pre = [&](const Q& y) { return p.x0 + (y - p.y0) / p.slope(); };
            auto img = [&](const Q& y) { return q.y0 + (y - q.x0) * q.slope(); };
            out.push_back({pre(lo), pre(hi), img(lo), img(hi)});
        }
    return detail::canonical(std::move(out));
}

/// log₂ of a power of two.
inline long log2_exact(const Q& r)
{
    auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    long k = 0;
    while (num > 1) {
        if (num % 2 != 0)
            throw std::runtime_error("oracle: slope is not a power of two");
        num /= 2;
        ++k;
    }
    while (den > 1) {
        if (den % 2 != 0)
            throw std::runtime_error("oracle: slope is not a power of two");
        den /= 2;
        --k;
    }
    return k;
}

/// χ₀ = −log₂ of the slope at 0.
inline long chi0(const PL& f) { return -log2_exact(f.front().slope()); }
/// χ₁ = −log₂ of the slope at the right end.
inline long chi1(const PL& f) { return -log2_exact(f.back().slope()); }

// ---------------------------------------------------------------- homology by rational rank

inline std::size_t rank(std::vector<std::vector<Q>> m)
{
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Rational Betti numbers from the simplex lists, boundary signs (−1)^i on sorted vertices.
inline std::vector<std::size_t> rational_betti(const std::vector<std::vector<fsigma::Simplex>>& by_dim)
{
    std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
    for (std::size_t k = 1; k < by_dim.size(); ++k) {
        std::map<fsigma::Simplex, std::size_t> row;
        for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i)
            row[by_dim[k - 1][i]] = i;
        std::vector<std::vector<Q>> m(by_dim[k - 1].size(), std::vector<Q>(by_dim[k].size(), Q(0)));
        for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
            const auto& s = by_dim[k][c];
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto face = s;
                face.erase(face.begin() + static_cast<long>(i));
                m[row.at(face)][c] = (i % 2 == 0) ? 1 : -1;
            }
        }
        ranks[k] = rank(std::move(m));
    }
    std::vector<std::size_t> betti;
    for (std::size_t k = 0; k < by_dim.size(); ++k)
        betti.push_back(by_dim[k].size() - ranks[k] - ranks[k + 1]);
    return betti;
}

inline std::vector<std::size_t> rational_betti(const fsigma::SimplicialComplex& k)
{
    std::vector<std::vector<fsigma::Simplex>> by_dim;
    for (int d = 0; d <= k.dimension(); ++d)
        by_dim.push_back(k.simplices(static_cast<std::size_t>(d)));
    return rational_betti(by_dim);
}

// ---------------------------------------------------------------- matching complexes by enumeration

/// Every simplex of GM(Lₙ) as sorted label strings ("v3", "e3,4"), by brute force over subsets.
inline std::set<std::vector<std::string>> gm_simplices(std::size_t n, bool edges_only = false)
{
    struct Element
    {
        std::string name;
        std::uint32_t support;
    };
    std::vector<Element> elements;
    if (!edges_only)
        for (std::size_t i = 1; i <= n; ++i)
            elements.push_back({"v" + std::to_string(i), 1U << (i - 1)});
    for (std::size_t i = 1; i < n; ++i)
        elements.push_back({"e" + std::to_string(i) + "," + std::to_string(i + 1), 3U << (i - 1)});
    std::set<std::vector<std::string>> out;
    const std::size_t m = elements.size();
    for (std::uint64_t subset = 1; subset < (1ULL << m); ++subset) {
        std::uint32_t used = 0;
        bool ok = true;
        std::vector<std::string> names;
        for (std::size_t j = 0; j < m && ok; ++j)
            if ((subset >> j) & 1U) {
                ok = (used & elements[j].support) == 0;
                used |= elements[j].support;
                names.push_back(elements[j].name);
            }
        if (ok) {
            std::sort(names.begin(), names.end());
            out.insert(names);
        }
    }
    return out;
}

inline std::set<std::vector<std::string>> simplices_as_strings(const fsigma::SimplicialComplex& k)
{
    std::set<std::vector<std::string>> out;
    for (const auto& s : k.labelled_simplices()) {
        std::vector<std::string> names;
        for (const auto& l : s)
            names.push_back(l.str());
        std::sort(names.begin(), names.end());
        out.insert(names);
    }
    return out;
}

/// Words over {I, Λ, V} with #I + #Λ + 2#V = n.
inline std::size_t coface_word_count(std::size_t n)
{
    std::size_t a = 1, b = 2; // n = 0, 1
    if (n == 0)
        return a;
    for (std::size_t k = 2; k <= n; ++k) {
        std::size_t c = 2 * b + a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace oracle
