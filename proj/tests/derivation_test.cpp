#include "liecon/derivation.hpp"
#include "liecon/text.hpp"

#include "support/assoc_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecon;

namespace {

LiePoly p(std::string_view text) { return parse(text); }

// delta on the associative side: a derivation of words, y -> x, x -> 0.
oracle::AssocPoly assoc_delta(const oracle::AssocPoly& a) {
    oracle::AssocPoly out;
    for (const auto& [w, c] : a) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 'y') continue;
            std::string v = w;
            v[i] = 'x';
            oracle::add_into(out, {{v, c}}, Scalar(1));
        }
    }
    return out;
}

}  // namespace

TEST(Delta, Examples) {
    EXPECT_EQ(delta(p("y")), p("x"));
    EXPECT_TRUE(delta(p("x")).is_zero());
    EXPECT_TRUE(delta(p("[y,x]")).is_zero());
    EXPECT_EQ(delta(p("[y,x,y]")), p("[y,x,x]"));
    EXPECT_EQ(delta(p("[y,x,y,y]")), p("[y,x,x,y] + [y,x,y,x]"));
    EXPECT_EQ(delta(p("[y,x,y,y]")), 2 * p("[y,x,x,y]"));
}

TEST(DeltaPower, Examples) {
    EXPECT_TRUE(delta_power(p("[y,x,y]"), 2).is_zero());
    EXPECT_TRUE(delta_power(p("y"), 2).is_zero());
    EXPECT_EQ(delta_power(p("[y,x,y]"), 0), p("[y,x,y]"));
    EXPECT_THROW(delta_power(p("y"), -1), std::invalid_argument);
}

TEST(Delta, AgreesWithAssociativeDerivation) {
    for (int d = 1; d <= 8; ++d) {
        for (HallWord w : hall_basis(d)) {
            ASSERT_EQ(oracle::embed(delta_word(w)), assoc_delta(oracle::embed(w))) << w;
        }
    }
}

TEST(Delta, LeibnizOnRandomPolynomials) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const LiePoly a = oracle::random_poly(rng, 6, 3);
        const LiePoly b = oracle::random_poly(rng, 6, 3);
        if (a.max_degree() + b.max_degree() > 12) continue;
        ASSERT_EQ(delta(bracket(a, b)), bracket(delta(a), b) + bracket(a, delta(b)));
    }
}

TEST(LeibnizExpand, Examples) {
    const auto word = [](std::string_view text) { return *as_hall_word(parse_monomial(text)); };
    EXPECT_TRUE(leibniz_expand(word("[y,x]"), 1).is_zero());
    EXPECT_TRUE(leibniz_expand(word("[[y,x,x],[y,x]]"), 3).is_zero());
    EXPECT_EQ(leibniz_expand(word("[y,x,y]"), 1), p("[y,x,x]"));
    EXPECT_THROW(leibniz_expand(HallWord::letter(Letter::y), 1), std::invalid_argument);
    EXPECT_THROW(leibniz_expand(word("[y,x]"), 0), std::invalid_argument);
}

TEST(LeibnizExpand, EqualsIteratedDelta) {
    for (int d = 2; d <= 7; ++d) {
        for (HallWord w : hall_basis(d)) {
            for (int n = 1; n <= 7; ++n) ASSERT_EQ(leibniz_expand(w, n), delta_power(LiePoly(w), n)) << w << " n=" << n;
        }
    }
}

TEST(Delta, GradingAction) {
    std::mt19937 rng(31);
    for (int d = 1; d <= 8; ++d) {
        for (int b = 0; b <= d; ++b) {
            const MultiDegree md{d - b, b};
            const LiePoly f = oracle::random_homogeneous(rng, md);
            if (f.is_zero()) continue;
            const LiePoly g = delta(f);
            if (b == 0) {
                EXPECT_TRUE(g.is_zero());
            } else if (!g.is_zero()) {
                EXPECT_EQ(*g.multidegree(), (MultiDegree{d - b + 1, b - 1}));
            }
        }
    }
}

TEST(NilpotencyIndex, Examples) {
    EXPECT_EQ(nilpotency_index(p("x")), 1);
    EXPECT_EQ(nilpotency_index(p("y")), 2);
    EXPECT_EQ(nilpotency_index(p("[y,x,y]")), 2);
    EXPECT_EQ(nilpotency_index(p("[y,x,y,y]")), 3);
    EXPECT_THROW(nilpotency_index(LiePoly{}), std::invalid_argument);
}

TEST(NilpotencyIndex, BoundedByDegY) {
    std::mt19937 rng(37);
    for (int d = 1; d <= 9; ++d) {
        for (int b = 0; b <= d; ++b) {
            const LiePoly f = oracle::random_homogeneous(rng, {d - b, b});
            if (f.is_zero()) continue;
            const int n = nilpotency_index(f);
            EXPECT_LE(n, b + 1);
            EXPECT_FALSE(delta_power(f, n - 1).is_zero());
            EXPECT_TRUE(delta_power(f, n).is_zero());
        }
    }
}
