#include "liecon/pseudodet.hpp"

#include "liecon/constants.hpp"
#include "liecon/derivation.hpp"
#include "liecon/linalg.hpp"
#include "liecon/parallel.hpp"
#include "liecon/text.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace liecon {

namespace {

LiePoly pseudodet_from_powers(const std::vector<LiePoly>& pa, const std::vector<LiePoly>& pb, int m, int k) {
    auto power = [](const std::vector<LiePoly>& powers, int n) -> LiePoly {
        return n < static_cast<int>(powers.size()) ? powers[static_cast<std::size_t>(n)] : LiePoly{};
    };
    return bracket(power(pa, m), power(pb, k)) - bracket(power(pa, k), power(pb, m));
}

// delta^0(w), delta^1(w), ... up to the last nonzero power.
std::vector<LiePoly> nonzero_powers(HallWord w) {
    std::vector<LiePoly> out{LiePoly(w)};
    while (true) {
        LiePoly next = delta(out.back());
        if (next.is_zero()) break;
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

LiePoly pseudodet_value(HallWord a, HallWord b, int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("pseudodeterminant degrees must be non-negative");
    const LiePoly pa(a);
    const LiePoly pb(b);
    return bracket(delta_power(pa, m), delta_power(pb, k)) - bracket(delta_power(pa, k), delta_power(pb, m));
}

PseudoDet make_pseudodet(HallWord a, HallWord b, int m, int k) {
    PseudoDet u{a, b, m, k, 1, pseudodet_value(a, b, m, k)};
    if (m < k) {
        // U^{(m,k)}_{A,B} = -U^{(k,m)}_{B,A}
        u.a = b;
        u.b = a;
        u.m = k;
        u.k = m;
        u.sign = -1;
    }
    return u;
}

bool check_delta_recurrence(HallWord a, HallWord b, int m, int k) {
    if (k < 1 || m < 0) throw std::invalid_argument("recurrence check needs k >= 1 and m >= 0");
    const LiePoly lhs = delta(pseudodet_value(a, b, m, k - 1));
    const LiePoly rhs = pseudodet_value(a, b, m, k) + pseudodet_value(a, b, m + 1, k - 1);
    return lhs == rhs;
}

std::vector<WeightedPair> decompose_bracket_power(const LiePoly& p, int k) {
    if (p.is_zero()) throw std::invalid_argument("cannot decompose [p, delta^k(p)] for p = 0");
    if (k < 1) throw std::invalid_argument("decomposition power must be positive");
    std::vector<WeightedPair> out;
    const auto terms = p.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            out.push_back({terms[i].word, terms[j].word, -(terms[i].coeff * terms[j].coeff)});
        }
    }
    for (const auto& t : terms) out.push_back({t.word, t.word, Scalar(-(t.coeff * t.coeff) / 2)});
    return out;
}

LiePoly evaluate_decomposition(std::span<const WeightedPair> pairs, int k) {
    LiePolyBuilder builder;
    for (const auto& [a, b, coeff] : pairs) builder.add(pseudodet_value(a, b, k, 0), coeff);
    return std::move(builder).build();
}

std::vector<PseudoDet> enumerate_constant_pseudodets(int max_degree, PseudoDetShape shape, int jobs) {
    if (max_degree < 2) throw std::invalid_argument("pseudodeterminant enumeration needs max_degree >= 2");
    ensure_hall_degree(max_degree);

    std::vector<HallWord> words;
    for (int d = 1; d < max_degree; ++d) {
        const auto& level = hall_basis(d);
        words.insert(words.end(), level.begin(), level.end());
    }
    std::vector<std::vector<LiePoly>> powers(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t i) { powers[i] = nonzero_powers(words[i]); });

    // U^{(m,k)}_{A,B} is symmetric in A and B, so unordered pairs suffice.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            if (words[i].degree() + words[j].degree() <= max_degree) pairs.emplace_back(i, j);
        }
    }

    std::vector<std::vector<PseudoDet>> found(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        const auto& pa = powers[i];
        const auto& pb = powers[j];
        // Powers at or beyond both nilpotency indices vanish.
        const int m_max = static_cast<int>(std::max(pa.size(), pb.size())) - 1;
        for (int m = 1; m <= m_max; ++m) {
            const int k_max = shape == PseudoDetShape::k0_only ? 0 : m - 1;
            for (int k = 0; k <= k_max; ++k) {
                LiePoly value = pseudodet_from_powers(pa, pb, m, k);
                if (value.is_zero() || !delta(value).is_zero()) continue;
                found[p].push_back({words[i], words[j], m, k, 1, std::move(value)});
            }
        }
    });

    // Serial reduction: keep each value only if it is independent of what was kept before.
    std::map<std::pair<int, int>, std::vector<PseudoDet>> by_md;
    std::map<std::pair<int, int>, std::vector<RationalVector>> spans;
    for (auto& batch : found) {
        for (auto& u : batch) {
            const MultiDegree md = *u.value.multidegree();
            const std::pair<int, int> key{md.total(), md.deg_x};
            const auto& basis = hall_basis_multidegree(md);
            RationalVector coords = coordinates(u.value, basis);
            auto& kept = spans[key];
            if (!kept.empty() && in_span(kept, coords)) continue;
            kept.push_back(std::move(coords));
            by_md[key].push_back(std::move(u));
        }
    }
    std::vector<PseudoDet> out;
    for (auto& [key, list] : by_md) {
        for (auto& u : list) out.push_back(std::move(u));
    }
    return out;
}

std::string to_string(MonomialClass c) {
    switch (c) {
        case MonomialClass::both_factors_constant:
            return "both-factors-constant";
        case MonomialClass::one_factor_constant:
            return "one-factor-constant";
        case MonomialClass::neither_factor_constant:
            return "neither-factor-constant";
    }
    return "unknown";
}

namespace {

// The scalar c with p == c * q, if any. q must be nonzero.
std::optional<Scalar> proportionality(const LiePoly& p, const LiePoly& q) {
    const auto& lead = q.terms().front();
    Scalar c = p.coeff(lead.word) / lead.coeff;
    if (c == 0 || p != c * q) return std::nullopt;
    return c;
}

}  // namespace

MonomialAnalysis analyze_constant_monomial(HallWord monomial) {
    if (monomial.is_letter()) throw std::invalid_argument("monomial analysis needs a bracket, got a letter");
    if (!delta_word(monomial).is_zero()) {
        throw std::invalid_argument(monomial.to_string() + " is not a constant");
    }
    MonomialAnalysis out{monomial,     monomial.left(), monomial.right(), 0, 0, MonomialClass::both_factors_constant,
                         std::nullopt, std::nullopt,    std::nullopt,     std::nullopt, false};
    const LiePoly a(out.a);
    const LiePoly b(out.b);
    out.r = nilpotency_index(a);
    out.s = nilpotency_index(b);

    if (out.r == 1 && out.s == 1) {
        out.kind = MonomialClass::both_factors_constant;
        out.verified = true;
        return out;
    }
    if (out.r == 1 || out.s == 1) {
        out.kind = MonomialClass::one_factor_constant;
        const bool a_constant = out.r == 1;
        const HallWord varying = a_constant ? out.b : out.a;
        const LiePoly constant_factor(a_constant ? out.a : out.b);
        out.beta = proportionality(delta_word(varying), constant_factor);
        if (!out.beta) return out;
        // [A, B] with delta(B) = beta A gives M = (1 / (2 beta)) U_{B,B};
        // [A, B] with delta(A) = beta B gives M = -(1 / (2 beta)) U_{A,A}.
        Scalar coeff = 1 / (2 * *out.beta);
        if (!a_constant) coeff = -coeff;
        out.pseudodet_word = varying;
        out.pseudodet_coeff = coeff;
        out.verified = LiePoly(monomial) == coeff * pseudodet_value(varying, varying, 1, 0);
        return out;
    }
    out.kind = MonomialClass::neither_factor_constant;
    const LiePoly top_a = delta_power(a, out.r - 1);
    const LiePoly top_b = delta_power(b, out.s - 1);
    out.alpha = proportionality(top_a, top_b);
    out.verified = out.alpha.has_value();
    return out;
}

std::vector<MonomialAnalysis> scan_constant_monomials(int max_degree) {
    std::vector<MonomialAnalysis> out;
    for (int d = 2; d <= max_degree; ++d) {
        for (HallWord w : hall_basis(d)) {
            if (delta_word(w).is_zero()) out.push_back(analyze_constant_monomial(w));
        }
    }
    return out;
}

nlohmann::json to_json(const PseudoDet& u) {
    return {{"A", word_to_json(u.a)}, {"B", word_to_json(u.b)}, {"m", u.m},
            {"k", u.k},               {"sign", u.sign},          {"value", to_json(u.value)}};
}

nlohmann::json to_json(const MonomialAnalysis& a) {
    nlohmann::json j = {{"monomial", word_to_json(a.monomial)},
                        {"text", a.monomial.to_string()},
                        {"A", word_to_json(a.a)},
                        {"B", word_to_json(a.b)},
                        {"r", a.r},
                        {"s", a.s},
                        {"class", to_string(a.kind)},
                        {"verified", a.verified}};
    if (a.alpha) j["alpha"] = format_scalar(*a.alpha);
    if (a.beta) j["beta"] = format_scalar(*a.beta);
    if (a.pseudodet_word) j["pseudodet_word"] = word_to_json(*a.pseudodet_word);
    if (a.pseudodet_coeff) j["pseudodet_coeff"] = format_scalar(*a.pseudodet_coeff);
    return j;
}

}  // namespace liecon
