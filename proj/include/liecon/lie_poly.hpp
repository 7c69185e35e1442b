#pragma once

#include "liecon/hall.hpp"
#include "liecon/scalar.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace liecon {

struct Term {
    HallWord word;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free Lie algebra L(x, y) written in the Hall basis.
///
/// Terms are kept sorted by Hall order with no zero coefficients, so two
/// values are equal exactly when their term lists are equal.
class LiePoly {
public:
    LiePoly() = default;
    LiePoly(HallWord word);  // NOLINT(google-explicit-constructor)
    LiePoly(HallWord word, Scalar coeff);

    /// Builds from an arbitrary (possibly unsorted, repeated, zero) term list.
    static LiePoly from_terms(std::vector<Term> terms);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Scalar coeff(HallWord word) const;

    /// Multidegree shared by all terms, or nullopt if zero or inhomogeneous.
    [[nodiscard]] std::optional<MultiDegree> multidegree() const;
    [[nodiscard]] bool is_homogeneous() const { return multidegree().has_value(); }
    /// Highest total degree among the terms; 0 for the zero polynomial.
    [[nodiscard]] int max_degree() const;

    /// Splits into multihomogeneous parts, ordered by (total degree, deg_x).
    [[nodiscard]] std::vector<LiePoly> homogeneous_parts() const;

    LiePoly& operator+=(const LiePoly& other);
    LiePoly& operator-=(const LiePoly& other);
    LiePoly& operator*=(const Scalar& factor);

    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
    friend LiePoly operator-(LiePoly a) { return a *= Scalar(-1); }
    friend LiePoly operator*(const Scalar& c, LiePoly a) { return a *= c; }
    friend LiePoly operator*(LiePoly a, const Scalar& c) { return a *= c; }

    friend bool operator==(const LiePoly&, const LiePoly&) = default;

private:
    friend class LiePolyBuilder;
    std::vector<Term> terms_;
};

/// Accumulates scaled terms before producing a canonical LiePoly.
class LiePolyBuilder {
public:
    void add(HallWord word, const Scalar& coeff);
    void add(const LiePoly& poly, const Scalar& factor = Scalar(1));
    [[nodiscard]] LiePoly build() &&;

private:
    std::map<HallWord, Scalar> acc_;
};

/// Normalized [u, v] for Hall words u, v. Results are memoized process-wide.
const LiePoly& bracket_words(HallWord u, HallWord v);

/// Normalized [p, q], extended bilinearly.
LiePoly bracket(const LiePoly& p, const LiePoly& q);

/// Normal form of a bracket monomial.
LiePoly normalize(const BracketTree& tree);

/// Normal form of a linear combination of bracket monomials.
struct ScaledTree {
    Scalar coeff;
    BracketTree tree;
};
LiePoly normalize(std::span<const ScaledTree> combination);

/// Left-normed product [p1, p2, ..., pn] of already-normalized elements.
LiePoly left_normed(std::span<const LiePoly> elements);

/// Number of memoized Hall-pair products; exposed for diagnostics.
std::size_t bracket_cache_size();

}  // namespace liecon
