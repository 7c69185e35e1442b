#pragma once

#include "liecon/hall.hpp"
#include "liecon/lie_poly.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liecon {

/// U^{(m,k)}_{A,B} = [delta^m(A), delta^k(B)] - [delta^k(A), delta^m(B)].
LiePoly pseudodet_value(HallWord a, HallWord b, int m, int k);

/// A pseudodeterminant in canonical orientation m >= k.
///
/// `value` is always the value that was requested; when the request had m < k the
/// factors and degrees are swapped and `sign` is -1, so that
/// value == sign * pseudodet_value(a, b, m, k).
struct PseudoDet {
    HallWord a;
    HallWord b;
    int m = 0;
    int k = 0;
    int sign = 1;
    LiePoly value;
};

/// Throws std::invalid_argument for negative m or k.
PseudoDet make_pseudodet(HallWord a, HallWord b, int m, int k);

/// delta(U^{(m,k-1)}) == U^{(m,k)} + U^{(m+1,k-1)}. Throws std::invalid_argument for k < 1 or m < 0.
bool check_delta_recurrence(HallWord a, HallWord b, int m, int k);

struct WeightedPair {
    HallWord a;
    HallWord b;
    Scalar coeff;

    friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

/// Writes [p, delta^k(p)] as a combination of degree-(k, 0) pseudodeterminants:
/// for p = sum_i alpha_i M_i the pairs are (M_i, M_j, -alpha_i alpha_j) for i < j
/// and (M_i, M_i, -alpha_i^2 / 2). Throws std::invalid_argument for p = 0 or k < 1.
std::vector<WeightedPair> decompose_bracket_power(const LiePoly& p, int k);

/// sum coeff * U^{(k,0)}_{a,b} over the pairs.
LiePoly evaluate_decomposition(std::span<const WeightedPair> pairs, int k);

enum class PseudoDetShape { all, k0_only };

/// Nonzero pseudodeterminants over Hall words with deg(A) + deg(B) <= max_degree
/// whose value is a constant. Within each multidegree the kept values are
/// linearly independent. Ordered by (total degree, deg_x) of the value, then
/// by enumeration order of (A, B, m, k). Throws std::invalid_argument for max_degree < 2.
std::vector<PseudoDet> enumerate_constant_pseudodets(int max_degree, PseudoDetShape shape, int jobs = 1);

enum class MonomialClass { both_factors_constant, one_factor_constant, neither_factor_constant };

std::string to_string(MonomialClass c);

/// Structure of a constant Hall monomial M = [A, B].
struct MonomialAnalysis {
    HallWord monomial;
    HallWord a;
    HallWord b;
    int r = 0;  // least r with delta^r(A) = 0
    int s = 0;  // least s with delta^s(B) = 0
    MonomialClass kind = MonomialClass::both_factors_constant;
    /// neither_factor_constant: delta^{r-1}(A) == alpha * delta^{s-1}(B).
    std::optional<Scalar> alpha;
    /// one_factor_constant: delta(C) == beta * D for the non-constant factor C and constant factor D.
    std::optional<Scalar> beta;
    /// one_factor_constant: M == pseudodet_coeff * U^{(1,0)}_{C,C}.
    std::optional<HallWord> pseudodet_word;
    std::optional<Scalar> pseudodet_coeff;
    /// The relation for the class was checked by exact evaluation.
    bool verified = false;
};

/// Throws std::invalid_argument if M is a letter or delta(M) != 0.
MonomialAnalysis analyze_constant_monomial(HallWord monomial);

/// Analyses every Hall word of degree 2..max_degree that is a constant.
std::vector<MonomialAnalysis> scan_constant_monomials(int max_degree);

nlohmann::json to_json(const PseudoDet& u);
nlohmann::json to_json(const MonomialAnalysis& a);

}  // namespace liecon
