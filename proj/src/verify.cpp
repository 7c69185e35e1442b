#include "liecon/verify.hpp"

#include "liecon/derivation.hpp"
#include "liecon/subalgebra.hpp"
#include "liecon/text.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace liecon {

namespace {

BracketTree leaf_x() { return BracketTree::leaf(Letter::x); }
BracketTree leaf_y() { return BracketTree::leaf(Letter::y); }

void append_x(std::vector<BracketTree>& elements, int count) {
    for (int i = 0; i < count; ++i) elements.push_back(leaf_x());
}

// [y, x^n] as a tree; y itself when n == 0.
BracketTree y_then_x(int n) {
    std::vector<BracketTree> e{leaf_y()};
    append_x(e, n);
    return BracketTree::left_normed(std::move(e));
}

Integer binomial(int n, int k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::string list_multidegrees(const std::vector<MultiDegree>& mds) {
    std::ostringstream os;
    for (std::size_t i = 0; i < mds.size(); ++i) os << (i ? " " : "") << mds[i];
    return os.str();
}

LiePoly p(std::string_view text) { return parse(text); }

ReproductionCheck check_binomial_identity() {
    ReproductionCheck c{"binomial expansion of [y,x,x^a,y,x^b] for 0 <= a <= 4, 1 <= b <= 4", true, ""};
    int cases = 0;
    for (int a = 0; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            ++cases;
            if (!binomial_identity_defect(a, b).is_zero()) {
                c.passed = false;
                c.detail += "fails at a=" + std::to_string(a) + " b=" + std::to_string(b) + "; ";
            }
        }
    }
    if (c.passed) c.detail = std::to_string(cases) + " cases";
    return c;
}

ReproductionCheck check_containment(std::string name, std::vector<LiePoly> generators, int bound,
                                    int only_degree = 0) {
    ReproductionCheck c{std::move(name), true, ""};
    const auto closure = graded_closure(generators, bound);
    const auto report = membership_report(closure, constants_up_to(bound));
    std::vector<MultiDegree> failures;
    for (const auto& comp : report.components) {
        if (only_degree != 0 && comp.md.total() != only_degree) continue;
        if (!comp.contained) failures.push_back(comp.md);
    }
    c.passed = failures.empty();
    c.detail = c.passed ? "contained through degree " + std::to_string(bound)
                        : "not contained at " + list_multidegrees(failures);
    return c;
}

ReproductionCheck check_deg_y2() {
    constexpr int bound = 9;
    ReproductionCheck c{"deg_y = 2 constants lie in the subalgebra generated by x, [y,x]", true, ""};
    const std::vector<LiePoly> gens{p("x"), p("[y,x]")};
    const auto report = membership_report(graded_closure(gens, bound), constants_up_to(bound));
    std::vector<MultiDegree> failures;
    for (const auto& comp : report.components) {
        if (comp.md.deg_y == 2 && !comp.contained) failures.push_back(comp.md);
    }
    c.passed = failures.empty();
    c.detail = c.passed ? "checked (a,2) for a + 2 <= " + std::to_string(bound)
                        : "not contained at " + list_multidegrees(failures);
    return c;
}

ReproductionCheck check_degree7_iff() {
    ReproductionCheck c{
        "degree 7 constants are exactly the degree 7 part of <x, [y,x], [y,x,x,x,[y,x,y]] - [y,x,x,y,[y,x,x]]>",
        true, ""};
    const std::vector<LiePoly> gens{p("x"), p("[y,x]"), p("[y,x,x,x,[y,x,y]] - [y,x,x,y,[y,x,x]]")};
    const auto closure = graded_closure(gens, 7);
    const auto report = membership_report(closure, constants_up_to(7));
    for (const auto& comp : report.components) {
        if (comp.md.total() != 7) continue;
        // K in S and S in K: both dimensions equal the intersection.
        if (!comp.contained || comp.intersection_dim != comp.subalgebra_dim) {
            c.passed = false;
            std::ostringstream os;
            os << comp.md << " ker " << comp.kernel_dim << " sub " << comp.subalgebra_dim << " cap "
               << comp.intersection_dim << "; ";
            c.detail += os.str();
        }
    }
    if (c.passed) c.detail = "equal at every multidegree of degree 7";
    return c;
}

ReproductionCheck check_non_membership() {
    ReproductionCheck c{"[[y,x,y],[y,x,x]] is outside the subalgebra generated by x, [y,x]", true, ""};
    const std::vector<LiePoly> gens{p("x"), p("[y,x]")};
    const auto report = membership_report(graded_closure(gens, 7), constants_up_to(7));
    std::vector<MultiDegree> failures;
    for (const auto& comp : report.components) {
        if (comp.md.total() >= 6 && !comp.contained) failures.push_back(comp.md);
    }
    const std::vector<MultiDegree> expected{{3, 3}, {4, 3}};
    c.passed = failures == expected;
    c.detail = "degrees 6-7 not contained at " + list_multidegrees(failures);
    return c;
}

ReproductionCheck check_dimension_table() {
    ReproductionCheck c{"kernel dimensions through degree 7", true, ""};
    const std::map<MultiDegree, std::size_t> expected{
        {{1, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}, {{4, 1}, 1}, {{3, 2}, 1}, {{5, 1}, 1},
        {{4, 2}, 1}, {{3, 3}, 1}, {{6, 1}, 1}, {{5, 2}, 2}, {{4, 3}, 2}};
    const auto report = constants_up_to(7);
    for (const auto& comp : report.components) {
        const auto it = expected.find(comp.md);
        const std::size_t want = it == expected.end() ? 0 : it->second;
        if (comp.dim() != want) {
            c.passed = false;
            std::ostringstream os;
            os << comp.md << " has " << comp.dim() << " expected " << want << "; ";
            c.detail += os.str();
        }
    }
    if (c.passed) c.detail = "(6,1):1 (5,2):2 (4,3):2 in degree 7, all lower degrees match";
    return c;
}

ReproductionCheck check_generators() {
    ReproductionCheck c{"kernel bases at (3,3) and (4,3) span the listed constants", true, ""};
    const std::vector<LiePoly> at33{p("[[y,x,y],[y,x,x]]")};
    const std::vector<LiePoly> at43{p("[[y,x,x],[y,x],[y,x]]"), p("[[y,x,x,y],[y,x,x]] - [[y,x,x,x],[y,x,y]]")};
    const bool ok33 = same_span(kernel_basis({3, 3}), at33);
    const bool ok43 = same_span(kernel_basis({4, 3}), at43);
    c.passed = ok33 && ok43;
    c.detail = std::string("(3,3) ") + (ok33 ? "equal" : "differ") + ", (4,3) " + (ok43 ? "equal" : "differ");
    return c;
}

ReproductionCheck check_bracket_with_x() {
    ReproductionCheck c{"[[y,x,x,y],[y,x,x]] - [[y,x,x,x],[y,x,y]] = [[[y,x,y],[y,x,x]],x]", true, ""};
    const LiePoly lhs = p("[[y,x,x,y],[y,x,x]] - [[y,x,x,x],[y,x,y]]");
    const LiePoly rhs = p("[[[y,x,y],[y,x,x]],x]");
    c.passed = lhs == rhs;
    c.detail = format(lhs) + (c.passed ? " == " : " != ") + format(rhs);
    return c;
}

ReproductionCheck check_deg_y3_family() {
    constexpr int max_n = 9;
    ReproductionCheck c{"deg_y = 3 constants of degree n lie in <x, [y,x], deg_y3 family(n)>", true, ""};
    for (int n = 4; n <= max_n; ++n) {
        std::vector<LiePoly> gens{p("x"), p("[y,x]")};
        for (auto& g : deg_y3_generators(n)) gens.push_back(std::move(g));
        const auto closure = graded_closure(gens, n);
        const MultiDegree md{n - 3, 3};
        const auto kernel = kernel_basis(md);
        const auto* comp = closure.find(md);
        for (const auto& k : kernel) {
            const auto& words = hall_basis_multidegree(md);
            if (comp == nullptr || !in_span(comp->basis, coordinates(k, words))) {
                c.passed = false;
                c.detail += "fails at n=" + std::to_string(n) + "; ";
                break;
            }
        }
    }
    if (c.passed) c.detail = "checked 4 <= n <= " + std::to_string(max_n);
    return c;
}

}  // namespace

LiePoly binomial_identity_defect(int a, int b) {
    if (a < 0 || b < 1) throw std::invalid_argument("binomial identity needs a >= 0 and b >= 1");
    std::vector<ScaledTree> terms;
    {
        std::vector<BracketTree> e{leaf_y(), leaf_x()};
        append_x(e, a);
        e.push_back(leaf_y());
        append_x(e, b);
        terms.push_back({Scalar(1), BracketTree::left_normed(std::move(e))});
    }
    {
        std::vector<BracketTree> e{leaf_y(), leaf_x()};
        append_x(e, a + b);
        e.push_back(leaf_y());
        terms.push_back({Scalar(-1), BracketTree::left_normed(std::move(e))});
    }
    for (int i = 0; i < b; ++i) {
        std::vector<BracketTree> e{leaf_y(), leaf_x()};
        append_x(e, a + i);
        e.push_back(y_then_x(b - i));
        terms.push_back({Scalar(-binomial(b, i)), BracketTree::left_normed(std::move(e))});
    }
    return normalize(terms);
}

std::vector<LiePoly> deg_y3_generators(int n) {
    std::vector<LiePoly> out;
    for (int k = (n - 1) / 2; k <= n - 4; ++k) {
        if (k < 1) continue;
        std::vector<BracketTree> first{leaf_y()};
        append_x(first, k);
        {
            std::vector<BracketTree> inner{leaf_y()};
            append_x(inner, n - 3 - k);
            inner.push_back(leaf_y());
            first.push_back(BracketTree::left_normed(std::move(inner)));
        }
        std::vector<BracketTree> second{leaf_y()};
        append_x(second, k - 1);
        second.push_back(leaf_y());
        second.push_back(y_then_x(n - 2 - k));
        const std::vector<ScaledTree> terms{{Scalar(1), BracketTree::left_normed(std::move(first))},
                                            {Scalar(-1), BracketTree::left_normed(std::move(second))}};
        out.push_back(normalize(terms));
    }
    return out;
}

bool same_span(std::span<const LiePoly> a, std::span<const LiePoly> b) {
    std::optional<MultiDegree> md;
    for (const auto* family : {&a, &b}) {
        for (const auto& q : *family) {
            if (q.is_zero()) continue;
            const auto m = q.multidegree();
            if (!m || (md && *m != *md)) throw std::invalid_argument("same_span needs one common multidegree");
            md = m;
        }
    }
    if (!md) return true;
    const auto& words = hall_basis_multidegree(*md);
    std::vector<RationalVector> va;
    std::vector<RationalVector> vb;
    for (const auto& q : a) va.push_back(coordinates(q, words));
    for (const auto& q : b) vb.push_back(coordinates(q, words));
    return row_space_basis(va, words.size()) == row_space_basis(vb, words.size());
}

std::vector<ReproductionCheck> reproduction_checks() {
    std::vector<ReproductionCheck> out;
    out.push_back(check_binomial_identity());
    out.push_back(check_deg_y2());
    out.push_back(check_containment("degree <= 5 constants lie in <x, [y,x]>", {p("x"), p("[y,x]")}, 5));
    out.push_back(check_containment("degree 6 constants lie in <x, [y,x], [y,x,y,[y,x,x]]>",
                                    {p("x"), p("[y,x]"), p("[y,x,y,[y,x,x]]")}, 6, 6));
    out.push_back(check_degree7_iff());
    out.push_back(check_deg_y3_family());
    out.push_back(check_containment("degree <= 7 constants lie in <x, [y,x], [[y,x,y],[y,x,x]]>",
                                    {p("x"), p("[y,x]"), p("[[y,x,y],[y,x,x]]")}, 7));
    out.push_back(check_non_membership());
    out.push_back(check_dimension_table());
    out.push_back(check_generators());
    out.push_back(check_bracket_with_x());
    return out;
}

nlohmann::json to_json(const ReproductionCheck& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

}  // namespace liecon
