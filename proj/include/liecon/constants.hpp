#pragma once

#include "liecon/hall.hpp"
#include "liecon/lie_poly.hpp"
#include "liecon/linalg.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liecon {

/// Coordinates of p in the given ordered basis. Throws std::invalid_argument if p
/// has a term outside the basis.
RationalVector coordinates(const LiePoly& p, std::span<const HallWord> basis);
LiePoly from_coordinates(const RationalVector& v, std::span<const HallWord> basis);

/// Matrix of delta restricted to the (a, b) component, in Hall bases.
struct DeltaMatrix {
    MultiDegree source;
    /// source + (1, -1); absent when source.deg_y == 0, where delta vanishes identically.
    std::optional<MultiDegree> target;
    std::vector<HallWord> columns;  // hall_basis_multidegree(source)
    std::vector<HallWord> rows;     // hall_basis_multidegree(target), empty without a target
    RationalMatrix matrix;

    [[nodiscard]] bool identically_zero() const { return !target.has_value(); }
};

DeltaMatrix delta_matrix(MultiDegree md);

/// Basis of ker(delta) in the (a, b) component. Each element has primitive
/// integer coefficients with its Hall-first coefficient positive.
std::vector<LiePoly> kernel_basis(MultiDegree md);

struct KernelComponent {
    MultiDegree md;
    std::size_t component_dim = 0;  // dim L_(a,b)
    std::vector<LiePoly> basis;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

struct KernelReport {
    int max_degree = 0;
    std::vector<KernelComponent> components;  // every (a, b) with 1 <= a + b <= max_degree

    [[nodiscard]] const KernelComponent* find(MultiDegree md) const;
    /// Kernel dimension; 0 for multidegrees outside the report.
    [[nodiscard]] std::size_t dim(MultiDegree md) const;
};

/// Kernel bases of every component up to total degree n, solved on up to `jobs` threads.
KernelReport constants_up_to(int n, int jobs = 1);

/// Basis of {g in L_(a,b) : [g, x] + [delta(g), y] = 0}.
std::vector<LiePoly> bracket_relation_solutions(MultiDegree md);

/// Multigraded Witt dimension (1/n) sum_{e | gcd(a,b)} mu(e) (n/e)! / ((a/e)! (b/e)!).
Integer witt_dim(MultiDegree md);
/// Graded Witt dimension of L_d for rank 2: (1/d) sum_{e | d} mu(e) 2^{d/e}.
Integer witt_dim(int degree);

nlohmann::json to_json(const KernelReport& report);
std::string format_table(const KernelReport& report);

}  // namespace liecon
