#pragma once

#include "liecon/constants.hpp"
#include "liecon/lie_poly.hpp"
#include "liecon/linalg.hpp"
#include "liecon/pseudodet.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liecon {

/// One multihomogeneous piece of a graded subalgebra.
struct SubalgebraComponent {
    MultiDegree md;
    /// Nonzero RREF rows in Hall coordinates of hall_basis_multidegree(md).
    std::vector<RationalVector> basis;
    /// The same rows as Lie polynomials.
    std::vector<LiePoly> elements;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Lie subalgebra generated by homogeneous elements, truncated at a total degree bound.
struct GradedSubalgebra {
    int bound = 0;
    std::vector<LiePoly> generators;
    std::vector<SubalgebraComponent> components;  // nonzero components, ordered by (total degree, deg_x)

    [[nodiscard]] const SubalgebraComponent* find(MultiDegree md) const;
    [[nodiscard]] std::size_t dim(MultiDegree md) const;
};

/// Degree-by-degree span closure. Component d is spanned by the generators of
/// degree d together with [u, v] for u, v spanning components of degrees i + j = d.
/// Zero generators are ignored. Throws std::invalid_argument for an inhomogeneous
/// generator, a generator of degree above `bound`, or bound < 1.
GradedSubalgebra graded_closure(std::span<const LiePoly> generators, int bound, int jobs = 1);

struct ContainmentComponent {
    MultiDegree md;
    std::size_t kernel_dim = 0;
    std::size_t subalgebra_dim = 0;
    std::size_t intersection_dim = 0;
    bool contained = true;
    /// First kernel basis vector outside the subalgebra, when not contained.
    std::optional<LiePoly> counterexample;
};

struct ContainmentReport {
    int max_degree = 0;
    std::vector<ContainmentComponent> components;  // every (a, b) with 1 <= a + b <= max_degree

    [[nodiscard]] bool contained() const;
    [[nodiscard]] bool contained_in_degree(int degree) const;
    [[nodiscard]] const ContainmentComponent* find(MultiDegree md) const;
    /// Multidegrees that are not contained, in report order.
    [[nodiscard]] std::vector<MultiDegree> failures() const;
};

/// Exact per-multidegree test of K subset of S. Throws std::invalid_argument when
/// S.bound < K.max_degree.
ContainmentReport membership_report(const GradedSubalgebra& s, const KernelReport& k);

inline constexpr const char* kConjectureCaveat =
    "Generators here are x and the constant pseudodeterminant values only. The family of constants "
    "[f, g] with delta^(r-1)(f) = alpha * delta^(k-1)(g) ranging over arbitrary polynomials f, g is not "
    "enumerated, so a non-contained multidegree at degree 8 or above does not by itself refute the "
    "conjecture that the constants are generated by that larger family.";

struct ConjectureResult {
    int max_degree = 0;
    PseudoDetShape shape = PseudoDetShape::all;
    std::vector<PseudoDet> pseudodets;
    ContainmentReport report;
};

/// Closure of {x} and the constant pseudodeterminant values against the kernel,
/// up to max_degree. Throws std::invalid_argument for max_degree < 2.
ConjectureResult conjecture_check(int max_degree, PseudoDetShape shape, int jobs = 1);

nlohmann::json to_json(const GradedSubalgebra& s);
nlohmann::json to_json(const ContainmentReport& r);
nlohmann::json to_json(const ConjectureResult& r);
std::string format_table(const GradedSubalgebra& s);
std::string format_table(const ContainmentReport& r);

std::string to_string(PseudoDetShape shape);

}  // namespace liecon
