#pragma once

// Rooted ordered binary trees and finite sequences of them.
//
// A tree is stored as its preorder shape code: 1 for a caret, 0 for a leaf.
// "(*,(*,*))" is 1 0 1 0 0. Two consecutive leaves i, i+1 form a terminal
// caret exactly when the code contains the substring 1 0 0 with the first 0
// being leaf i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fsigma {

class BinaryTree
{
public:
    /// The trivial tree (a single leaf).
    BinaryTree();

    static BinaryTree leaf() { return {}; }
    static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);
    /// Single caret, the tree written Λ.
    static BinaryTree single_caret() { return caret(leaf(), leaf()); }
    /// Carets descending to the left: depth d gives d+1 leaves.
    static BinaryTree left_vine(std::size_t depth);
    /// Carets descending to the right: depth d gives d+1 leaves.
    static BinaryTree right_vine(std::size_t depth);
    static BinaryTree from_code(std::vector<std::uint8_t> code);

    bool is_leaf() const { return code_.size() == 1; }
    std::size_t leaf_count() const { return (code_.size() + 1) / 2; }
    std::size_t caret_count() const { return code_.size() / 2; }

    /// Number of carets above the leftmost leaf.
    std::size_t left_depth() const;
    /// Number of carets above the rightmost leaf.
    std::size_t right_depth() const;

    BinaryTree left() const;
    BinaryTree right() const;
    BinaryTree mirror() const;

    /// Leaf indices i (0-based) such that leaves i and i+1 hang from a common caret.
    std::vector<std::size_t> terminal_carets() const;
    bool has_terminal_caret(std::size_t first_leaf) const;
    /// Replaces the terminal caret over leaves i, i+1 by a single leaf.
    void contract(std::size_t first_leaf);
    /// Replaces leaf i by a single caret.
    void expand(std::size_t leaf);

    /// Replaces leaf k by pieces[k]; requires pieces.size() == leaf_count().
    BinaryTree graft(std::span<const BinaryTree> pieces) const;
    /// Smallest tree containing both as rooted subtrees.
    static BinaryTree overlay(const BinaryTree& a, const BinaryTree& b);
    /// For this ⊆ finer, the trees hanging below each of this tree's leaves inside finer.
    std::vector<BinaryTree> quotient(const BinaryTree& finer) const;
    bool is_prefix_of(const BinaryTree& finer) const;

    std::span<const std::uint8_t> code() const { return code_; }
    std::string str() const;
    void append_to(std::string& out) const;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

private:
    std::vector<std::uint8_t> code_;
};

class BinaryForest
{
public:
    BinaryForest() = default;
    explicit BinaryForest(std::vector<BinaryTree> trees);

    /// idₙ: n single-leaf trees.
    static BinaryForest trivial(std::size_t n);
    /// n - 1 leaves and one caret at root position `position` (0-based), n roots in total.
    static BinaryForest elementary(std::size_t roots, std::size_t position);

    std::size_t root_count() const { return trees_.size(); }
    std::size_t leaf_count() const { return leaves_; }
    std::size_t caret_count() const { return leaves_ - trees_.size(); }
    bool empty() const { return trees_.empty(); }

    const std::vector<BinaryTree>& trees() const { return trees_; }
    const BinaryTree& operator[](std::size_t i) const { return trees_[i]; }

    /// Depth of the leftmost leaf of the first tree (L of the forest).
    std::size_t left_depth() const;
    /// Depth of the rightmost leaf of the last tree (R of the forest).
    std::size_t right_depth() const;

    bool is_trivial() const { return leaves_ == trees_.size(); }
    /// Every tree is a leaf or a single caret.
    bool is_elementary() const;

    /// Global leaf indices i with leaves i, i+1 forming a terminal caret of one tree.
    std::vector<std::size_t> terminal_carets() const;
    bool has_terminal_caret(std::size_t first_leaf) const;
    void contract(std::size_t first_leaf);
    void expand(std::size_t leaf);

    /// Replaces global leaf k by pieces[k].
    BinaryForest graft(std::span<const BinaryTree> pieces) const;
    BinaryForest graft(const BinaryForest& pieces) const { return graft(pieces.trees()); }
    /// Tree-by-tree overlay; both forests must have the same root count.
    static BinaryForest overlay(const BinaryForest& a, const BinaryForest& b);
    /// For this ⊆ finer, the forest G with graft(G) == finer.
    BinaryForest quotient(const BinaryForest& finer) const;

    BinaryForest mirror() const;
    BinaryForest concat(const BinaryForest& other) const;

    std::string str() const;
    void append_to(std::string& out) const;

    friend bool operator==(const BinaryForest& a, const BinaryForest& b) { return a.trees_ == b.trees_; }
    friend auto operator<=>(const BinaryForest& a, const BinaryForest& b) { return a.trees_ <=> b.trees_; }

private:
    /// (tree index, local leaf index) for a global leaf index.
    std::pair<std::size_t, std::size_t> locate(std::size_t leaf) const;

    std::vector<BinaryTree> trees_;
    std::size_t leaves_ = 0;
};

BinaryTree parse_tree(std::string_view text);
BinaryForest parse_forest(std::string_view text);

namespace detail {
/// "Forest / Forest" with equal leaf counts; shared by the diagram parser.
std::pair<BinaryForest, BinaryForest> parse_forest_pair(std::string_view text);
} // namespace detail

} // namespace fsigma
