#include "fsigma/error.hpp"
#include "fsigma/random.hpp"
#include "fsigma/tree.hpp"

#include <gtest/gtest.h>

using namespace fsigma;

TEST(Tree, ParseAndRender)
{
    for (const char* text : {"*", "(*,*)", "((*,*),*)", "(*,((*,*),(*,*)))"})
        EXPECT_EQ(parse_tree(text).str(), text);
    EXPECT_EQ(parse_tree(" ( * , * ) ").str(), "(*,*)");
}

TEST(Tree, ParseErrorsReportPosition)
{
    try {
        parse_tree("(*,*");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_tree("(*;*)"), ParseError);
    EXPECT_THROW(parse_tree("(*,*)*"), ParseError);
    EXPECT_THROW(parse_forest("[]"), ParseError);
}

TEST(Tree, Counts)
{
    auto t = parse_tree("((*,*),(*,(*,*)))");
    EXPECT_EQ(t.leaf_count(), 5u);
    EXPECT_EQ(t.caret_count(), 4u);
    EXPECT_EQ(t.left_depth(), 2u);
    EXPECT_EQ(t.right_depth(), 3u);
    EXPECT_EQ(t.left().str(), "(*,*)");
    EXPECT_EQ(t.right().str(), "(*,(*,*))");
}

TEST(Tree, Vines)
{
    EXPECT_EQ(BinaryTree::left_vine(0).str(), "*");
    EXPECT_EQ(BinaryTree::left_vine(2).str(), "((*,*),*)");
    EXPECT_EQ(BinaryTree::right_vine(2).str(), "(*,(*,*))");
    EXPECT_EQ(BinaryTree::left_vine(5).left_depth(), 5u);
    EXPECT_EQ(BinaryTree::right_vine(5).right_depth(), 5u);
}

TEST(Tree, TerminalCaretsAndContraction)
{
    auto t = parse_tree("((*,*),(*,(*,*)))");
    EXPECT_EQ(t.terminal_carets(), (std::vector<std::size_t>{0, 3}));
    t.contract(3);
    EXPECT_EQ(t.str(), "((*,*),(*,*))");
    t.expand(0);
    EXPECT_EQ(t.str(), "(((*,*),*),(*,*))");
}

TEST(Tree, MirrorIsAnInvolution)
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto t = random_tree(rng, 12);
        EXPECT_EQ(t.mirror().mirror(), t);
        EXPECT_EQ(t.mirror().left_depth(), t.right_depth());
    }
}

TEST(Tree, OverlayQuotientGraft)
{
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto a = random_tree(rng, 8), b = random_tree(rng, 8);
        auto c = BinaryTree::overlay(a, b);
        ASSERT_TRUE(a.is_prefix_of(c));
        ASSERT_TRUE(b.is_prefix_of(c));
        EXPECT_EQ(a.graft(a.quotient(c)), c);
        EXPECT_EQ(b.graft(b.quotient(c)), c);
        EXPECT_EQ(BinaryTree::overlay(a, a), a);
        EXPECT_EQ(BinaryTree::overlay(a, b), BinaryTree::overlay(b, a));
    }
}

TEST(Forest, DepthsAndElementary)
{
    auto f = parse_forest("[((*,*),*)]");
    EXPECT_EQ(f.left_depth(), 2u);
    EXPECT_EQ(f.right_depth(), 1u);
    EXPECT_EQ(BinaryForest::trivial(3).left_depth(), 0u);
    auto g = parse_forest("[*,(*,*)]");
    EXPECT_EQ(g.left_depth(), 0u);
    EXPECT_EQ(g.right_depth(), 1u);

    EXPECT_TRUE(parse_forest("[*,(*,*),*]").is_elementary());
    EXPECT_FALSE(parse_forest("[((*,*),*)]").is_elementary());
    EXPECT_TRUE(BinaryForest::trivial(4).is_elementary());
    EXPECT_EQ(BinaryForest::elementary(3, 1).str(), "[*,(*,*),*]");
}

TEST(Forest, GlobalLeafIndexing)
{
    auto f = parse_forest("[(*,*),((*,*),*)]");
    EXPECT_EQ(f.leaf_count(), 5u);
    EXPECT_EQ(f.terminal_carets(), (std::vector<std::size_t>{0, 2}));
    EXPECT_FALSE(f.has_terminal_caret(1));
    f.contract(2);
    EXPECT_EQ(f.str(), "[(*,*),(*,*)]");
    f.expand(0);
    EXPECT_EQ(f.str(), "[((*,*),*),(*,*)]");
}

TEST(Forest, GraftQuotientRoundTrip)
{
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        auto coarse = random_forest(rng, 3, 7);
        std::vector<BinaryTree> pieces;
        for (std::size_t k = 0; k < coarse.leaf_count(); ++k)
            pieces.push_back(random_tree(rng, 2));
        auto fine = coarse.graft(pieces);
        EXPECT_EQ(coarse.quotient(fine).trees(), pieces);
    }
}
