#pragma once

#include "liecon/lie_poly.hpp"

namespace liecon {

/// The derivation of L(x, y) with x -> 0 and y -> x.
///
/// On a Hall word [u, v] it is evaluated by the Leibniz rule
/// delta([u, v]) = [delta(u), v] + [u, delta(v)] and then normalized. Values on
/// Hall words are memoized process-wide; everything else is linear extension.
const LiePoly& delta_word(HallWord word);

LiePoly delta(const LiePoly& p);

/// n-fold application; delta_power(p, 0) == p. Throws std::invalid_argument for n < 0.
LiePoly delta_power(const LiePoly& p, int n);

/// sum_{i=0}^{n} C(n, i) [delta^{n-i}(left), delta^i(right)] for word = [left, right].
/// Equal to delta_power(word, n); kept as a separate evaluation route.
/// Throws std::invalid_argument for a letter or n < 1.
LiePoly leibniz_expand(HallWord word, int n);

/// Least n >= 1 with delta^n(p) = 0. Throws std::invalid_argument for p = 0.
int nilpotency_index(const LiePoly& p);

}  // namespace liecon
