#pragma once

// Independent evaluator: the free Lie algebra embeds in the free associative
// algebra on {x, y} via [a, b] -> ab - ba. Two Lie elements are equal iff their
// images are equal, so this checks the Hall-basis rewriting without using it.

#include "liecon/hall.hpp"
#include "liecon/lie_poly.hpp"

#include <map>
#include <random>
#include <string>
#include <unordered_map>

namespace oracle {

using liecon::BracketTree;
using liecon::HallWord;
using liecon::LiePoly;
using liecon::Scalar;

using AssocPoly = std::map<std::string, Scalar>;

inline void add_into(AssocPoly& acc, const AssocPoly& p, const Scalar& factor) {
    for (const auto& [w, c] : p) {
        Scalar& slot = acc[w];
        slot += c * factor;
        if (slot == 0) acc.erase(w);
    }
}

inline AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            add_into(out, AssocPoly{{u + v, cu * cv}}, Scalar(1));
            add_into(out, AssocPoly{{v + u, cu * cv}}, Scalar(-1));
        }
    }
    return out;
}

inline AssocPoly letter(liecon::Letter l) { return {{std::string(1, liecon::letter_char(l)), Scalar(1)}}; }

inline AssocPoly embed(const BracketTree& t) {
    if (t.is_leaf()) return letter(t.letter());
    return commutator(embed(t.left()), embed(t.right()));
}

inline const AssocPoly& embed(HallWord w) {
    static thread_local std::unordered_map<std::uint32_t, AssocPoly> memo;
    if (auto it = memo.find(w.id()); it != memo.end()) return it->second;
    AssocPoly value = w.is_letter() ? letter(w.as_letter()) : commutator(embed(w.left()), embed(w.right()));
    return memo.emplace(w.id(), std::move(value)).first->second;
}

inline AssocPoly embed(const LiePoly& p) {
    AssocPoly out;
    for (const auto& [w, c] : p.terms()) add_into(out, embed(w), c);
    return out;
}

/// Uniform random binary bracket tree with exactly `degree` leaves.
inline BracketTree random_tree(std::mt19937& rng, int degree) {
    if (degree == 1) {
        return BracketTree::leaf(std::bernoulli_distribution(0.5)(rng) ? liecon::Letter::y : liecon::Letter::x);
    }
    const int left = std::uniform_int_distribution<int>(1, degree - 1)(rng);
    return BracketTree::node(random_tree(rng, left), random_tree(rng, degree - left));
}

/// Random combination of up to `terms` Hall words of degree 1..max_degree with small integer coefficients.
inline LiePoly random_poly(std::mt19937& rng, int max_degree, int terms = 4) {
    liecon::LiePolyBuilder b;
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) {
        const auto& basis = liecon::hall_basis(deg(rng));
        const auto w = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        b.add(w, Scalar(coeff(rng)));
    }
    return std::move(b).build();
}

/// Random nonzero element of the given multidegree, or zero when the component is empty.
inline LiePoly random_homogeneous(std::mt19937& rng, liecon::MultiDegree md) {
    liecon::LiePolyBuilder b;
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (HallWord w : liecon::hall_basis_multidegree(md)) b.add(w, Scalar(coeff(rng)));
    return std::move(b).build();
}

}  // namespace oracle
