#include "fsigma/tree.hpp"

#include "fsigma/error.hpp"

namespace fsigma {

namespace {

using Code = std::vector<std::uint8_t>;

/// One past the end of the subtree starting at `pos`.
std::size_t subtree_end(std::span<const std::uint8_t> code, std::size_t pos)
{
    std::size_t open = 1;
    while (open > 0) {
        if (code[pos++] == 1)
            ++open;
        else
            --open;
    }
    return pos;
}

/// Position of the `leaf`-th zero in the code.
std::size_t leaf_position(std::span<const std::uint8_t> code, std::size_t leaf)
{
    for (std::size_t p = 0; p < code.size(); ++p)
        if (code[p] == 0 && leaf-- == 0)
            return p;
    throw PreconditionError("leaf index out of range");
}

void mirror_into(std::span<const std::uint8_t> code, std::size_t pos, Code& out)
{
    if (code[pos] == 0) {
        out.push_back(0);
        return;
    }
    std::size_t left_end = subtree_end(code, pos + 1);
    out.push_back(1);
    mirror_into(code, left_end, out);
    mirror_into(code, pos + 1, out);
}

/// Overlays subtrees a[pa..) and b[pb..); returns the end positions through pa, pb.
void overlay_into(std::span<const std::uint8_t> a, std::size_t& pa, std::span<const std::uint8_t> b,
                  std::size_t& pb, Code& out)
{
    if (a[pa] == 0) {
        std::size_t end = subtree_end(b, pb);
        out.insert(out.end(), b.begin() + pb, b.begin() + end);
        ++pa;
        pb = end;
        return;
    }
    if (b[pb] == 0) {
        std::size_t end = subtree_end(a, pa);
        out.insert(out.end(), a.begin() + pa, a.begin() + end);
        pa = end;
        ++pb;
        return;
    }
    out.push_back(1);
    ++pa;
    ++pb;
    overlay_into(a, pa, b, pb, out);
    overlay_into(a, pa, b, pb, out);
}

/// Walks coarse[pc..) against finer[pf..), collecting the pieces below coarse leaves.
bool quotient_into(std::span<const std::uint8_t> coarse, std::size_t& pc, std::span<const std::uint8_t> finer,
                   std::size_t& pf, std::vector<BinaryTree>* pieces)
{
    if (coarse[pc] == 0) {
        std::size_t end = subtree_end(finer, pf);
        if (pieces)
            pieces->push_back(BinaryTree::from_code(Code(finer.begin() + pf, finer.begin() + end)));
        ++pc;
        pf = end;
        return true;
    }
    if (finer[pf] == 0)
        return false;
    ++pc;
    ++pf;
    return quotient_into(coarse, pc, finer, pf, pieces) && quotient_into(coarse, pc, finer, pf, pieces);
}

struct Cursor
{
    std::string_view text;
    std::size_t pos = 0;

    void skip_space()
    {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }

    void expect(char c)
    {
        skip_space();
        if (pos >= text.size())
            throw ParseError(std::string("expected '") + c + "' but input ended", pos);
        if (text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' but found '" + text[pos] + "'", pos);
        ++pos;
    }

    char peek()
    {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    void tree(Code& out)
    {
        char c = peek();
        if (c == '*') {
            ++pos;
            out.push_back(0);
            return;
        }
        if (c == '(') {
            ++pos;
            out.push_back(1);
            tree(out);
            expect(',');
            tree(out);
            expect(')');
            return;
        }
        if (c == '\0')
            throw ParseError("expected a tree but input ended", pos);
        throw ParseError(std::string("expected '*' or '(' but found '") + c + "'", pos);
    }

    BinaryForest forest()
    {
        expect('[');
        std::vector<BinaryTree> trees;
        if (peek() == ']')
            throw ParseError("a forest needs at least one tree", pos);
        for (;;) {
            Code code;
            tree(code);
            trees.push_back(BinaryTree::from_code(std::move(code)));
            if (peek() == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
        return BinaryForest(std::move(trees));
    }

    void finish()
    {
        skip_space();
        if (pos != text.size())
            throw ParseError("unexpected trailing input", pos);
    }
};

} // namespace

// ---------------------------------------------------------------- BinaryTree

BinaryTree::BinaryTree() : code_{0} {}

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right)
{
    BinaryTree t;
    t.code_.clear();
    t.code_.reserve(1 + left.code_.size() + right.code_.size());
    t.code_.push_back(1);
    t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
    t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
    return t;
}

BinaryTree BinaryTree::left_vine(std::size_t depth)
{
    // ((..(*,*),*)..,*): depth ones, then alternating leaves.
    Code code(depth, 1);
    code.push_back(0);
    for (std::size_t i = 0; i < depth; ++i)
        code.push_back(0);
    return from_code(std::move(code));
}

BinaryTree BinaryTree::right_vine(std::size_t depth)
{
    Code code;
    for (std::size_t i = 0; i < depth; ++i) {
        code.push_back(1);
        code.push_back(0);
    }
    code.push_back(0);
    return from_code(std::move(code));
}

BinaryTree BinaryTree::from_code(std::vector<std::uint8_t> code)
{
    std::size_t open = 1;
    for (std::size_t p = 0; p < code.size(); ++p) {
        if (open == 0)
            throw PreconditionError("malformed tree code");
        if (code[p] == 1)
            ++open;
        else
            --open;
    }
    if (code.empty() || open != 0)
        throw PreconditionError("malformed tree code");
    BinaryTree t;
    t.code_ = std::move(code);
    return t;
}

std::size_t BinaryTree::left_depth() const
{
    std::size_t d = 0;
    while (code_[d] == 1)
        ++d;
    return d;
}

std::size_t BinaryTree::right_depth() const
{
    std::size_t d = 0;
    std::size_t pos = 0;
    while (code_[pos] == 1) {
        pos = subtree_end(code_, pos + 1);
        ++d;
    }
    return d;
}

BinaryTree BinaryTree::left() const
{
    if (is_leaf())
        throw PreconditionError("a leaf has no left subtree");
    std::size_t end = subtree_end(code_, 1);
    return from_code(Code(code_.begin() + 1, code_.begin() + end));
}

BinaryTree BinaryTree::right() const
{
    if (is_leaf())
        throw PreconditionError("a leaf has no right subtree");
    std::size_t end = subtree_end(code_, 1);
    return from_code(Code(code_.begin() + end, code_.end()));
}

BinaryTree BinaryTree::mirror() const
{
    Code out;
    out.reserve(code_.size());
    mirror_into(code_, 0, out);
    return from_code(std::move(out));
}

std::vector<std::size_t> BinaryTree::terminal_carets() const
{
    std::vector<std::size_t> out;
    std::size_t leaf = 0;
    for (std::size_t p = 0; p < code_.size(); ++p) {
        if (code_[p] == 0) {
            ++leaf;
            continue;
        }
        if (p + 2 < code_.size() && code_[p + 1] == 0 && code_[p + 2] == 0)
            out.push_back(leaf);
    }
    return out;
}

bool BinaryTree::has_terminal_caret(std::size_t first_leaf) const
{
    if (first_leaf + 1 >= leaf_count())
        return false;
    std::size_t p = leaf_position(code_, first_leaf);
    return p > 0 && code_[p - 1] == 1 && code_[p + 1] == 0;
}

void BinaryTree::contract(std::size_t first_leaf)
{
    if (!has_terminal_caret(first_leaf))
        throw PreconditionError("no terminal caret at leaf " + std::to_string(first_leaf));
    std::size_t p = leaf_position(code_, first_leaf);
    code_.erase(code_.begin() + static_cast<std::ptrdiff_t>(p), code_.begin() + static_cast<std::ptrdiff_t>(p + 2));
    code_[p - 1] = 0;
}

void BinaryTree::expand(std::size_t leaf)
{
    std::size_t p = leaf_position(code_, leaf);
    code_[p] = 1;
    code_.insert(code_.begin() + static_cast<std::ptrdiff_t>(p + 1), 2, 0);
}

BinaryTree BinaryTree::graft(std::span<const BinaryTree> pieces) const
{
    if (pieces.size() != leaf_count())
        throw PreconditionError("graft needs one piece per leaf");
    Code out;
    std::size_t k = 0;
    for (auto bit : code_) {
        if (bit == 1)
            out.push_back(1);
        else {
            auto piece = pieces[k++].code();
            out.insert(out.end(), piece.begin(), piece.end());
        }
    }
    return from_code(std::move(out));
}

BinaryTree BinaryTree::overlay(const BinaryTree& a, const BinaryTree& b)
{
    Code out;
    std::size_t pa = 0, pb = 0;
    overlay_into(a.code_, pa, b.code_, pb, out);
    return from_code(std::move(out));
}

std::vector<BinaryTree> BinaryTree::quotient(const BinaryTree& finer) const
{
    std::vector<BinaryTree> pieces;
    std::size_t pc = 0, pf = 0;
    if (!quotient_into(code_, pc, finer.code_, pf, &pieces))
        throw PreconditionError("tree is not a prefix of the finer tree");
    return pieces;
}

bool BinaryTree::is_prefix_of(const BinaryTree& finer) const
{
    std::size_t pc = 0, pf = 0;
    return quotient_into(code_, pc, finer.code_, pf, nullptr);
}

void BinaryTree::append_to(std::string& out) const
{
    // Preorder walk with an explicit stack of pending separators.
    std::vector<char> pending;
    for (auto bit : code_) {
        if (bit == 1) {
            out.push_back('(');
            pending.push_back(')');
            pending.push_back(',');
            continue;
        }
        out.push_back('*');
        while (!pending.empty()) {
            char c = pending.back();
            pending.pop_back();
            out.push_back(c);
            if (c == ',')
                break;
        }
    }
}

std::string BinaryTree::str() const
{
    std::string out;
    append_to(out);
    return out;
}

// -------------------------------------------------------------- BinaryForest

BinaryForest::BinaryForest(std::vector<BinaryTree> trees) : trees_(std::move(trees))
{
    if (trees_.empty())
        throw PreconditionError("a forest needs at least one tree");
    for (const auto& t : trees_)
        leaves_ += t.leaf_count();
}

BinaryForest BinaryForest::trivial(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("a forest needs at least one tree");
    return BinaryForest(std::vector<BinaryTree>(n));
}

BinaryForest BinaryForest::elementary(std::size_t roots, std::size_t position)
{
    if (position >= roots)
        throw PreconditionError("caret position out of range");
    std::vector<BinaryTree> trees(roots);
    trees[position] = BinaryTree::single_caret();
    return BinaryForest(std::move(trees));
}

std::size_t BinaryForest::left_depth() const { return trees_.front().left_depth(); }

std::size_t BinaryForest::right_depth() const { return trees_.back().right_depth(); }

bool BinaryForest::is_elementary() const
{
    for (const auto& t : trees_)
        if (t.caret_count() > 1)
            return false;
    return true;
}

std::pair<std::size_t, std::size_t> BinaryForest::locate(std::size_t leaf) const
{
    for (std::size_t t = 0; t < trees_.size(); ++t) {
        if (leaf < trees_[t].leaf_count())
            return {t, leaf};
        leaf -= trees_[t].leaf_count();
    }
    throw PreconditionError("leaf index out of range");
}

std::vector<std::size_t> BinaryForest::terminal_carets() const
{
    std::vector<std::size_t> out;
    std::size_t offset = 0;
    for (const auto& t : trees_) {
        for (auto i : t.terminal_carets())
            out.push_back(offset + i);
        offset += t.leaf_count();
    }
    return out;
}

bool BinaryForest::has_terminal_caret(std::size_t first_leaf) const
{
    if (first_leaf + 1 >= leaves_)
        return false;
    auto [t, local] = locate(first_leaf);
    return trees_[t].has_terminal_caret(local);
}

void BinaryForest::contract(std::size_t first_leaf)
{
    auto [t, local] = locate(first_leaf);
    trees_[t].contract(local);
    --leaves_;
}

void BinaryForest::expand(std::size_t leaf)
{
    auto [t, local] = locate(leaf);
    trees_[t].expand(local);
    ++leaves_;
}

BinaryForest BinaryForest::graft(std::span<const BinaryTree> pieces) const
{
    if (pieces.size() != leaves_)
        throw PreconditionError("graft needs one piece per leaf");
    std::vector<BinaryTree> out;
    out.reserve(trees_.size());
    std::size_t offset = 0;
    for (const auto& t : trees_) {
        out.push_back(t.graft(pieces.subspan(offset, t.leaf_count())));
        offset += t.leaf_count();
    }
    return BinaryForest(std::move(out));
}

BinaryForest BinaryForest::overlay(const BinaryForest& a, const BinaryForest& b)
{
    if (a.root_count() != b.root_count())
        throw PreconditionError("overlay needs equal root counts (" + std::to_string(a.root_count()) + " vs " +
                                std::to_string(b.root_count()) + ")");
    std::vector<BinaryTree> out;
    out.reserve(a.root_count());
    for (std::size_t i = 0; i < a.root_count(); ++i)
        out.push_back(BinaryTree::overlay(a.trees_[i], b.trees_[i]));
    return BinaryForest(std::move(out));
}

BinaryForest BinaryForest::quotient(const BinaryForest& finer) const
{
    if (root_count() != finer.root_count())
        throw PreconditionError("quotient needs equal root counts");
    std::vector<BinaryTree> pieces;
    pieces.reserve(finer.leaf_count());
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        auto part = trees_[i].quotient(finer.trees_[i]);
        pieces.insert(pieces.end(), part.begin(), part.end());
    }
    return BinaryForest(std::move(pieces));
}

BinaryForest BinaryForest::mirror() const
{
    std::vector<BinaryTree> out;
    out.reserve(trees_.size());
    for (auto it = trees_.rbegin(); it != trees_.rend(); ++it)
        out.push_back(it->mirror());
    return BinaryForest(std::move(out));
}

BinaryForest BinaryForest::concat(const BinaryForest& other) const
{
    std::vector<BinaryTree> out = trees_;
    out.insert(out.end(), other.trees_.begin(), other.trees_.end());
    return BinaryForest(std::move(out));
}

void BinaryForest::append_to(std::string& out) const
{
    out.push_back('[');
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i)
            out.push_back(',');
        trees_[i].append_to(out);
    }
    out.push_back(']');
}

std::string BinaryForest::str() const
{
    std::string out;
    append_to(out);
    return out;
}

// ------------------------------------------------------------------- parsing

BinaryTree parse_tree(std::string_view text)
{
    Cursor c{text};
    Code code;
    c.tree(code);
    c.finish();
    return BinaryTree::from_code(std::move(code));
}

BinaryForest parse_forest(std::string_view text)
{
    Cursor c{text};
    auto f = c.forest();
    c.finish();
    return f;
}

namespace detail {

std::pair<BinaryForest, BinaryForest> parse_forest_pair(std::string_view text)
{
    Cursor c{text};
    auto minus = c.forest();
    c.expect('/');
    std::size_t plus_pos = c.pos;
    auto plus = c.forest();
    c.finish();
    if (minus.leaf_count() != plus.leaf_count())
        throw ParseError("leaf-count mismatch (" + std::to_string(minus.leaf_count()) + " vs " +
                             std::to_string(plus.leaf_count()) + ")",
                         plus_pos);
    return {std::move(minus), std::move(plus)};
}

} // namespace detail

} // namespace fsigma
