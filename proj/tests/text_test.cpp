#include "liecon/text.hpp"

#include "support/assoc_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecon;

TEST(Parse, LeftNormedShorthand) {
    const BracketTree t = parse_monomial("[y,x,x,y]");
    const BracketTree expected = BracketTree::node(
        BracketTree::node(BracketTree::node(BracketTree::leaf(Letter::y), BracketTree::leaf(Letter::x)),
                          BracketTree::leaf(Letter::x)),
        BracketTree::leaf(Letter::y));
    EXPECT_EQ(t, expected);
    EXPECT_EQ(parse("[y,x,x,y]"), normalize(expected));
}

TEST(Parse, LinearCombination) {
    const LiePoly p = parse("3/2*[y,x] - [y,x,x]");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.terms()[0].word.to_string(), "[y,x]");
    EXPECT_EQ(p.terms()[0].coeff, Scalar(3, 2));
    EXPECT_EQ(p.terms()[1].word.to_string(), "[y,x,x]");
    EXPECT_EQ(p.terms()[1].coeff, -1);
}

TEST(Parse, NestedHallWord) {
    const LiePoly p = parse("[[y,x,y],[y,x,x]]");
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.terms()[0].coeff, 1);
    EXPECT_EQ(p.terms()[0].word.to_string(), "[y,x,y,[y,x,x]]");
}

TEST(Parse, WhitespaceSignsAndZero) {
    EXPECT_EQ(parse("  [ y , x ]  +  -2 * [y,x]"), parse("-[y,x]"));
    EXPECT_EQ(parse("-[y,x]"), -parse("[y,x]"));
    EXPECT_TRUE(parse(" 0 ").is_zero());
    EXPECT_EQ(parse("-3/6*x"), Scalar(-1, 2) * parse("x"));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("[y,z]"), ParseError);
    EXPECT_THROW(parse("[y]"), ParseError);
    EXPECT_THROW(parse("[y,x"), ParseError);
    EXPECT_THROW(parse("3/*[y,x]"), ParseError);
    EXPECT_THROW(parse("3/0*[y,x]"), ParseError);
    EXPECT_THROW(parse("3[y,x]"), ParseError);
    EXPECT_THROW(parse("[y,x] [y,x]"), ParseError);
    EXPECT_THROW(parse("x +"), ParseError);
    EXPECT_THROW(parse_monomial("2*[y,x]"), ParseError);
}

TEST(Parse, ErrorPositions) {
    try {
        parse("[y,x] + [y,q]");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 11u);
        EXPECT_NE(std::string(e.what()).find("unknown letter"), std::string::npos);
    }
    try {
        parse("1/*x");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("malformed rational"), std::string::npos);
    }
}

TEST(Format, Examples) {
    EXPECT_EQ(format(parse("3/2*[y,x] - [y,x,x]")), "3/2*[y,x] - [y,x,x]");
    EXPECT_EQ(format(parse("-[y,x] + x")), "x - [y,x]");
    EXPECT_EQ(format(parse("[x,y]")), "-[y,x]");
    EXPECT_EQ(format(LiePoly{}), "0");
}

TEST(Format, RoundTrip) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        LiePoly p = oracle::random_poly(rng, 7, 5);
        p *= rational(std::uniform_int_distribution<int>(-7, 7)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
        ASSERT_EQ(parse(format(p)), p) << format(p);
    }
}

TEST(Json, WordForm) {
    const auto w = *as_hall_word(parse_monomial("[y,x,x]"));
    EXPECT_EQ(word_to_json(w), nlohmann::json::parse(R"([["y","x"],"x"])"));
}

TEST(Json, LiePolyRoundTrip) {
    const LiePoly p = parse("3/2*[y,x] - [y,x,y,[y,x,x]]");
    const auto j = to_json(p);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["coeff"], "3/2");
    EXPECT_EQ(j[0]["word"], nlohmann::json::parse(R"(["y","x"])"));
    EXPECT_EQ(lie_poly_from_json(j), p);
    EXPECT_EQ(lie_poly_from_json(nlohmann::json::parse(R"([{"coeff":"1","word":["x","y"]}])")), -parse("[y,x]"));
    EXPECT_THROW(lie_poly_from_json(nlohmann::json::parse(R"([{"coeff":"1","word":"z"}])")), std::invalid_argument);
}

TEST(Scalar, Parse) {
    EXPECT_EQ(parse_scalar("-4/6"), Scalar(-2, 3));
    EXPECT_EQ(format_scalar(rational(6, 4)), "3/2");
    EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
}
