#include "liecon/subalgebra.hpp"
#include "liecon/derivation.hpp"
#include "liecon/text.hpp"
#include "liecon/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace liecon;

namespace {

LiePoly p(std::string_view text) { return parse(text); }

// Left-normed commutators [g1, ..., gr] of generators span the generated subalgebra.
std::map<MultiDegree, std::vector<LiePoly>> left_normed_span(const std::vector<LiePoly>& gens, int bound) {
    std::map<MultiDegree, std::vector<LiePoly>> out;
    std::vector<LiePoly> frontier;
    for (const auto& g : gens) {
        if (g.is_zero() || g.max_degree() > bound) continue;
        frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<LiePoly> next;
        for (const auto& f : frontier) {
            out[*f.multidegree()].push_back(f);
            for (const auto& g : gens) {
                if (g.is_zero() || f.max_degree() + g.max_degree() > bound) continue;
                LiePoly h = bracket(f, g);
                if (!h.is_zero()) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::size_t span_dim(MultiDegree md, const std::vector<LiePoly>& elements) {
    const auto& basis = hall_basis_multidegree(md);
    std::vector<RationalVector> vs;
    for (const auto& e : elements) vs.push_back(coordinates(e, basis));
    return row_space_basis(vs, basis.size()).size();
}

}  // namespace

TEST(GradedClosure, SingleLetter) {
    const std::vector<LiePoly> gens{p("x")};
    const auto s = graded_closure(gens, 3);
    ASSERT_EQ(s.components.size(), 1u);
    EXPECT_EQ(s.components[0].md, (MultiDegree{1, 0}));
    EXPECT_EQ(s.dim({2, 0}), 0u);
}

TEST(GradedClosure, Examples) {
    const std::vector<LiePoly> gens{p("x"), p("[y,x]")};
    const auto s = graded_closure(gens, 7);
    EXPECT_EQ(s.dim({3, 2}), 1u);
    EXPECT_EQ(s.find({3, 2})->elements[0], p("[[y,x,x],[y,x]]"));
    EXPECT_EQ(s.dim({3, 3}), 0u);
    EXPECT_EQ(s.dim({4, 3}), 1u);
    EXPECT_EQ(s.dim({5, 2}), 2u);

    const std::vector<LiePoly> more{p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")};
    const auto t = graded_closure(more, 7);
    EXPECT_EQ(t.dim({3, 3}), 1u);
    EXPECT_EQ(t.dim({4, 3}), 2u);
}

TEST(GradedClosure, AgreesWithLeftNormedSpan) {
    const std::vector<std::vector<LiePoly>> families{
        {p("x"), p("[y,x]")},
        {p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")},
        {p("y"), p("[y,x]")},
        {p("x"), p("y")},
        {p("[y,x,y]"), p("x - x")},
    };
    for (const auto& gens : families) {
        const auto s = graded_closure(gens, 7);
        const auto oracle = left_normed_span(gens, 7);
        for (MultiDegree md : multidegrees_up_to(7)) {
            const auto it = oracle.find(md);
            const std::size_t expected = it == oracle.end() ? 0 : span_dim(md, it->second);
            EXPECT_EQ(s.dim(md), expected) << md;
        }
    }
}

TEST(GradedClosure, FullAlgebraFromLetters) {
    const std::vector<LiePoly> gens{p("x"), p("y")};
    const auto s = graded_closure(gens, 6);
    for (MultiDegree md : multidegrees_up_to(6)) EXPECT_EQ(s.dim(md), hall_basis_multidegree(md).size()) << md;
}

TEST(GradedClosure, ClosedUnderBracket) {
    const std::vector<LiePoly> gens{p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")};
    const auto s = graded_closure(gens, 8, 3);
    for (const auto& c1 : s.components) {
        for (const auto& c2 : s.components) {
            if (c1.md.total() + c2.md.total() > 8) continue;
            const MultiDegree md = c1.md + c2.md;
            const auto* target = s.find(md);
            for (const auto& u : c1.elements) {
                for (const auto& v : c2.elements) {
                    const LiePoly w = bracket(u, v);
                    if (w.is_zero()) continue;
                    ASSERT_NE(target, nullptr) << md;
                    ASSERT_TRUE(in_span(target->basis, coordinates(w, hall_basis_multidegree(md))).has_value()) << md;
                }
            }
        }
    }
}

TEST(GradedClosure, BasisIsReducedAndConsistent) {
    const std::vector<LiePoly> gens{p("x"), p("[y,x]")};
    const auto s = graded_closure(gens, 8);
    for (const auto& c : s.components) {
        ASSERT_EQ(c.basis.size(), c.elements.size());
        EXPECT_EQ(row_space_basis(c.basis, hall_basis_multidegree(c.md).size()), c.basis);
        for (std::size_t i = 0; i < c.basis.size(); ++i) {
            EXPECT_EQ(from_coordinates(c.basis[i], hall_basis_multidegree(c.md)), c.elements[i]);
        }
    }
    const auto t = graded_closure(gens, 8, 4);
    EXPECT_EQ(to_json(s), to_json(t));
}

TEST(GradedClosure, Errors) {
    const std::vector<LiePoly> inhomogeneous{p("x + [y,x]")};
    EXPECT_THROW(graded_closure(inhomogeneous, 4), std::invalid_argument);
    const std::vector<LiePoly> too_big{p("[y,x,x,x]")};
    EXPECT_THROW(graded_closure(too_big, 3), std::invalid_argument);
    const std::vector<LiePoly> fine{p("x")};
    EXPECT_THROW(graded_closure(fine, 0), std::invalid_argument);
}

TEST(Membership, LettersAndFirstCommutator) {
    const std::vector<LiePoly> gens{p("x"), p("[y,x]")};
    const auto report = membership_report(graded_closure(gens, 7), constants_up_to(7));
    EXPECT_FALSE(report.contained());
    for (int d = 1; d <= 5; ++d) EXPECT_TRUE(report.contained_in_degree(d)) << d;
    EXPECT_EQ(report.failures(), (std::vector<MultiDegree>{{3, 3}, {4, 3}}));

    const auto* c33 = report.find({3, 3});
    ASSERT_NE(c33, nullptr);
    EXPECT_EQ(c33->kernel_dim, 1u);
    EXPECT_EQ(c33->subalgebra_dim, 0u);
    EXPECT_EQ(c33->intersection_dim, 0u);
    ASSERT_TRUE(c33->counterexample.has_value());
    EXPECT_TRUE(delta(*c33->counterexample).is_zero());

    const auto* c43 = report.find({4, 3});
    EXPECT_EQ(c43->kernel_dim, 2u);
    EXPECT_EQ(c43->intersection_dim, 1u);
}

TEST(Membership, AddingTheDegreeSixGenerator) {
    const std::vector<LiePoly> gens{p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")};
    const auto report = membership_report(graded_closure(gens, 7), constants_up_to(7));
    EXPECT_TRUE(report.contained());
    EXPECT_TRUE(report.failures().empty());
}

TEST(Membership, MonotoneInGenerators) {
    const std::vector<LiePoly> small{p("x"), p("[y,x]")};
    const std::vector<LiePoly> large{p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")};
    const auto k = constants_up_to(8);
    const auto a = membership_report(graded_closure(small, 8), k);
    const auto b = membership_report(graded_closure(large, 8), k);
    ASSERT_EQ(a.components.size(), b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        EXPECT_LE(a.components[i].intersection_dim, b.components[i].intersection_dim);
        if (a.components[i].contained) {
            EXPECT_TRUE(b.components[i].contained);
        }
    }
}

TEST(Membership, IntersectionBounds) {
    const std::vector<LiePoly> gens{p("y"), p("[y,x]")};
    const auto report = membership_report(graded_closure(gens, 6), constants_up_to(6));
    for (const auto& c : report.components) {
        EXPECT_LE(c.intersection_dim, std::min(c.kernel_dim, c.subalgebra_dim));
        EXPECT_EQ(c.contained, c.intersection_dim == c.kernel_dim);
        EXPECT_EQ(c.counterexample.has_value(), !c.contained);
    }
    EXPECT_FALSE(report.find({1, 0})->contained);
}

TEST(Membership, Errors) {
    const std::vector<LiePoly> gens{p("x")};
    EXPECT_THROW(membership_report(graded_closure(gens, 3), constants_up_to(5)), std::invalid_argument);
}

TEST(Conjecture, SmallDegrees) {
    const auto two = conjecture_check(2, PseudoDetShape::all);
    EXPECT_TRUE(two.report.contained());
    EXPECT_EQ(two.pseudodets.size(), 1u);

    const auto seven = conjecture_check(7, PseudoDetShape::all, 4);
    EXPECT_TRUE(seven.report.contained());
    const auto seven_k0 = conjecture_check(7, PseudoDetShape::k0_only);
    EXPECT_TRUE(seven_k0.report.contained());

    EXPECT_THROW(conjecture_check(1, PseudoDetShape::all), std::invalid_argument);
}

TEST(Conjecture, JsonDeterministic) {
    const auto a = conjecture_check(6, PseudoDetShape::all, 1);
    const auto b = conjecture_check(6, PseudoDetShape::all, 3);
    EXPECT_EQ(to_json(a), to_json(b));
    const auto j = to_json(a);
    EXPECT_EQ(j["max_degree"], 6);
    EXPECT_EQ(j["report"]["contained"], true);
    EXPECT_TRUE(j.contains("caveat"));
}

TEST(DegY3Family, GeneratesTheDegY3Constants) {
    for (int n = 4; n <= 9; ++n) {
        std::vector<LiePoly> gens{p("x"), p("[y,x]")};
        for (auto& g : deg_y3_generators(n)) {
            EXPECT_TRUE(delta(g).is_zero()) << format(g);
            gens.push_back(std::move(g));
        }
        const auto report = membership_report(graded_closure(gens, n), constants_up_to(n));
        const auto* c = report.find({n - 3, 3});
        ASSERT_NE(c, nullptr);
        EXPECT_TRUE(c->contained) << n;
    }
}
