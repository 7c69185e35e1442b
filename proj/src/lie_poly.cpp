#include "liecon/lie_poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace liecon {

LiePoly::LiePoly(HallWord word) : terms_{{word, Scalar(1)}} {}

LiePoly::LiePoly(HallWord word, Scalar coeff) {
    if (coeff != 0) terms_.push_back({word, std::move(coeff)});
}

LiePoly LiePoly::from_terms(std::vector<Term> terms) {
    LiePolyBuilder builder;
    for (auto& t : terms) builder.add(t.word, t.coeff);
    return std::move(builder).build();
}

Scalar LiePoly::coeff(HallWord word) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const Term& t, HallWord w) { return t.word < w; });
    if (it != terms_.end() && it->word == word) return it->coeff;
    return Scalar(0);
}

std::optional<MultiDegree> LiePoly::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    const MultiDegree md = terms_.front().word.multidegree();
    for (const auto& t : terms_) {
        if (t.word.multidegree() != md) return std::nullopt;
    }
    return md;
}

int LiePoly::max_degree() const { return terms_.empty() ? 0 : terms_.back().word.degree(); }

std::vector<LiePoly> LiePoly::homogeneous_parts() const {
    std::map<std::pair<int, int>, LiePoly> parts;
    for (const auto& t : terms_) {
        const auto md = t.word.multidegree();
        // Terms arrive in Hall order, so appending keeps each part sorted.
        parts[{md.total(), md.deg_x}].terms_.push_back(t);
    }
    std::vector<LiePoly> out;
    out.reserve(parts.size());
    for (auto& [key, part] : parts) out.push_back(std::move(part));
    return out;
}

namespace {

std::vector<Term> merge_scaled(const std::vector<Term>& a, std::span<const Term> b, const Scalar& factor) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->word < ib->word)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->word < ia->word) {
            out.push_back({ib->word, ib->coeff * factor});
            ++ib;
        } else {
            Scalar c = ia->coeff + ib->coeff * factor;
            if (c != 0) out.push_back({ia->word, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

LiePoly& LiePoly::operator+=(const LiePoly& other) {
    terms_ = merge_scaled(terms_, other.terms_, Scalar(1));
    return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& other) {
    terms_ = merge_scaled(terms_, other.terms_, Scalar(-1));
    return *this;
}

LiePoly& LiePoly::operator*=(const Scalar& factor) {
    if (factor == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coeff *= factor;
    }
    return *this;
}

void LiePolyBuilder::add(HallWord word, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = acc_.try_emplace(word, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc_.erase(it);
    }
}

void LiePolyBuilder::add(const LiePoly& poly, const Scalar& factor) {
    if (factor == 0) return;
    for (const auto& t : poly.terms()) add(t.word, t.coeff * factor);
}

LiePoly LiePolyBuilder::build() && {
    // Keys of acc_ are sorted and zero entries are erased as they cancel.
    LiePoly out;
    out.terms_.reserve(acc_.size());
    for (auto& [word, coeff] : acc_) out.terms_.push_back({word, std::move(coeff)});
    acc_.clear();
    return out;
}

namespace {

// Memo table for products of Hall word pairs. Entries are heap-allocated so
// references returned to callers stay valid while the table grows.
class ProductCache {
public:
    const LiePoly* find(std::uint64_t key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : it->second.get();
    }

    const LiePoly& insert(std::uint64_t key, LiePoly value) {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, nullptr);
        if (inserted) it->second = std::make_unique<const LiePoly>(std::move(value));
        return *it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, std::unique_ptr<const LiePoly>> table_;
};

ProductCache& product_cache() {
    static ProductCache cache;
    return cache;
}

const LiePoly& zero_poly() {
    static const LiePoly zero;
    return zero;
}

const LiePoly& product(HallWord u, HallWord v, int depth);

// [u, v] for Hall words by collection: antisymmetry for u <= v, direct lookup
// when the pair is basic, and otherwise
//   [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]]   (u2 > v).
LiePoly compute_product(HallWord u, HallWord v, int depth) {
    const int degree = u.degree() + v.degree();
    if (depth > 64 * degree) {
        throw std::logic_error("bracket normalization exceeded its work bound at " + u.to_string() +
                               ", " + v.to_string());
    }
    if (u < v) return -product(v, u, depth + 1);
    if (auto w = find_hall_pair(u, v)) return LiePoly(*w);

    const HallWord u1 = u.left();
    const HallWord u2 = u.right();
    LiePolyBuilder builder;
    for (const auto& t : product(u1, v, depth + 1).terms()) builder.add(product(t.word, u2, depth + 1), t.coeff);
    for (const auto& t : product(u2, v, depth + 1).terms()) builder.add(product(u1, t.word, depth + 1), t.coeff);
    return std::move(builder).build();
}

const LiePoly& product(HallWord u, HallWord v, int depth) {
    if (u == v) return zero_poly();
    const std::uint64_t key = (static_cast<std::uint64_t>(u.id()) << 32) | v.id();
    auto& cache = product_cache();
    if (const LiePoly* hit = cache.find(key)) return *hit;
    return cache.insert(key, compute_product(u, v, depth));
}

}  // namespace

const LiePoly& bracket_words(HallWord u, HallWord v) { return product(u, v, 0); }

LiePoly bracket(const LiePoly& p, const LiePoly& q) {
    LiePolyBuilder builder;
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) builder.add(bracket_words(a.word, b.word), a.coeff * b.coeff);
    }
    return std::move(builder).build();
}

LiePoly normalize(const BracketTree& tree) {
    if (tree.is_leaf()) return LiePoly(HallWord::letter(tree.letter()));
    if (auto w = as_hall_word(tree)) return LiePoly(*w);
    return bracket(normalize(tree.left()), normalize(tree.right()));
}

LiePoly normalize(std::span<const ScaledTree> combination) {
    LiePolyBuilder builder;
    for (const auto& [coeff, tree] : combination) builder.add(normalize(tree), coeff);
    return std::move(builder).build();
}

LiePoly left_normed(std::span<const LiePoly> elements) {
    if (elements.empty()) throw std::invalid_argument("left-normed product needs at least one element");
    LiePoly acc = elements.front();
    for (std::size_t i = 1; i < elements.size(); ++i) acc = bracket(acc, elements[i]);
    return acc;
}

std::size_t bracket_cache_size() { return product_cache().size(); }

}  // namespace liecon
