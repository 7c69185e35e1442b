#include "liecon/constants.hpp"
#include "liecon/hall.hpp"
#include "liecon/text.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace liecon;

namespace {

std::vector<std::string> texts(const std::vector<HallWord>& words) {
    std::vector<std::string> out;
    for (HallWord w : words) out.push_back(w.to_string());
    return out;
}

HallWord word(std::string_view text) { return *as_hall_word(parse_monomial(text)); }

}  // namespace

TEST(HallOrder, LettersAndFoliage) {
    const HallWord x = HallWord::letter(Letter::x);
    const HallWord y = HallWord::letter(Letter::y);
    EXPECT_LT(x, y);
    EXPECT_EQ(word("[y,x]"), word("[y,x]"));
    EXPECT_LT(word("[y,x,x]"), word("[y,x,y]"));
    EXPECT_EQ(word("[y,x,x,y]").foliage(), "yxxy");
}

TEST(HallOrder, TotalOrderOnEachDegree) {
    for (int d = 1; d <= 8; ++d) {
        const auto& basis = hall_basis(d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(hall_compare_structural(basis[i], basis[i]), std::strong_ordering::equal);
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                // Sorted and strictly increasing under both comparisons: antisymmetry and trichotomy.
                EXPECT_EQ(basis[i] <=> basis[j], std::strong_ordering::less);
                EXPECT_EQ(basis[j] <=> basis[i], std::strong_ordering::greater);
                EXPECT_EQ(hall_compare_structural(basis[i], basis[j]), std::strong_ordering::less);
            }
        }
        // Transitivity over a sample of triples.
        for (std::size_t i = 0; i + 2 < basis.size(); i += 3) {
            EXPECT_LT(basis[i], basis[i + 1]);
            EXPECT_LT(basis[i + 1], basis[i + 2]);
            EXPECT_LT(basis[i], basis[i + 2]);
        }
    }
}

TEST(HallBasis, SmallDegrees) {
    EXPECT_EQ(texts(hall_basis(1)), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(texts(hall_basis(2)), (std::vector<std::string>{"[y,x]"}));
    EXPECT_EQ(texts(hall_basis(4)), (std::vector<std::string>{"[y,x,x,x]", "[y,x,x,y]", "[y,x,y,y]"}));
}

TEST(HallBasis, Multidegree) {
    EXPECT_EQ(texts(hall_basis_multidegree({2, 1})), (std::vector<std::string>{"[y,x,x]"}));
    EXPECT_EQ(texts(hall_basis_multidegree({3, 2})), (std::vector<std::string>{"[y,x,x,x,y]", "[y,x,x,[y,x]]"}));
    EXPECT_TRUE(hall_basis_multidegree({0, 2}).empty());
    EXPECT_TRUE(hall_basis_multidegree({5, 0}).empty());
}

TEST(HallBasis, RejectsBadDegrees) {
    EXPECT_THROW(hall_basis(0), std::invalid_argument);
    EXPECT_THROW(hall_basis(kMaxHallDegree + 1), std::invalid_argument);
    EXPECT_THROW(hall_basis_multidegree({0, 0}), std::invalid_argument);
}

TEST(HallBasis, WordInvariants) {
    for (int d = 2; d <= 9; ++d) {
        for (HallWord w : hall_basis(d)) {
            ASSERT_FALSE(w.is_letter());
            EXPECT_GT(w.left(), w.right());
            if (!w.left().is_letter()) {
                EXPECT_LE(w.left().right(), w.right());
            }
            EXPECT_EQ(w.degree(), d);
            EXPECT_EQ(static_cast<int>(w.foliage().size()), d);
            EXPECT_EQ(w.multidegree().total(), d);
            EXPECT_EQ(w.left().multidegree() + w.right().multidegree(), w.multidegree());
            EXPECT_EQ(hall_basis(d)[w.rank()], w);
            EXPECT_EQ(find_hall_pair(w.left(), w.right()), w);
        }
    }
}

TEST(HallBasis, WittOracle) {
    for (int d = 1; d <= 12; ++d) {
        EXPECT_EQ(Integer(hall_basis(d).size()), witt_dim(d)) << "degree " << d;
        for (int a = 0; a <= d; ++a) {
            const MultiDegree md{a, d - a};
            EXPECT_EQ(Integer(hall_basis_multidegree(md).size()), witt_dim(md)) << md;
        }
    }
}

TEST(HallBasis, StableAcrossCalls) {
    const auto first = texts(hall_basis(7));
    const auto again = texts(hall_basis(7));
    EXPECT_EQ(first, again);
}

TEST(IsBasic, Examples) {
    EXPECT_TRUE(is_basic(parse_monomial("[y,x]")));
    EXPECT_FALSE(is_basic(parse_monomial("[x,y]")));
    EXPECT_FALSE(is_basic(parse_monomial("[[y,x,y],x]")));
    EXPECT_FALSE(is_basic(parse_monomial("[y,y]")));
    EXPECT_TRUE(is_basic(parse_monomial("[[y,x,y],[y,x,x]]")));
    EXPECT_TRUE(is_basic(parse_monomial("[y,x,x,[y,x]]")));
    EXPECT_TRUE(is_basic(parse_monomial("x")));
}

TEST(IsBasic, AgreesWithEnumeration) {
    for (int d = 1; d <= 7; ++d) {
        for (HallWord w : hall_basis(d)) {
            const auto back = as_hall_word(BracketTree::from_word(w));
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, w);
        }
    }
}

TEST(HallWord, TextForm) {
    EXPECT_EQ(word("[[y,x,y],[y,x,x]]").to_string(), "[y,x,y,[y,x,x]]");
    EXPECT_EQ(word("[[y,x,x],[y,x]]").to_string(), "[y,x,x,[y,x]]");
    EXPECT_EQ(BracketTree::from_word(word("[y,x,x,y]")).to_string(), "[y,x,x,y]");
}

TEST(MultiDegree, Listing) {
    const std::vector<MultiDegree> expected{{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0},
                                            {0, 3}, {1, 2}, {2, 1}, {3, 0}};
    EXPECT_EQ(multidegrees_up_to(3), expected);
}

namespace {

std::vector<BracketTree> all_trees(int degree) {
    if (degree == 1) return {BracketTree::leaf(Letter::x), BracketTree::leaf(Letter::y)};
    std::vector<BracketTree> out;
    for (int left = 1; left < degree; ++left) {
        for (const auto& l : all_trees(left)) {
            for (const auto& r : all_trees(degree - left)) out.push_back(BracketTree::node(l, r));
        }
    }
    return out;
}

}  // namespace

TEST(IsBasic, ExhaustiveCountMatchesBasis) {
    for (int d = 1; d <= 6; ++d) {
        std::size_t basic = 0;
        for (const auto& t : all_trees(d)) {
            if (const auto w = as_hall_word(t)) {
                ++basic;
                EXPECT_EQ(BracketTree::from_word(*w), t);
            }
        }
        EXPECT_EQ(basic, hall_basis(d).size()) << "degree " << d;
    }
}
