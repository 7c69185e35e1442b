#pragma once

#include "liecon/constants.hpp"
#include "liecon/lie_poly.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace liecon {

/// [y,x,x^a,y,x^b] - [y,x,x^(a+b),y] - sum_{i<b} C(b,i) [y,x,x^(a+i),[y,x^(b-i)]].
/// Zero for every a >= 0, b >= 1. Throws std::invalid_argument outside that range.
LiePoly binomial_identity_defect(int a, int b);

/// [y,x^k,[y,x^(n-3-k),y]] - [y,x^(k-1),y,[y,x^(n-2-k)]] for ceil((n-2)/2) <= k <= n-4:
/// together with x and [y,x] these generate the deg_y = 3 constants of degree n.
std::vector<LiePoly> deg_y3_generators(int n);

/// Span equality of two families of homogeneous elements of the same multidegree.
bool same_span(std::span<const LiePoly> a, std::span<const LiePoly> b);

struct ReproductionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Known small-degree results about the constants, each re-derived by computation.
std::vector<ReproductionCheck> reproduction_checks();

nlohmann::json to_json(const ReproductionCheck& c);

}  // namespace liecon
