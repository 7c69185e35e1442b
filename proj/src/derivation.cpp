#include "liecon/derivation.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace liecon {

namespace {

class DeltaCache {
public:
    const LiePoly* find(HallWord word) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(word.id());
        return it == table_.end() ? nullptr : it->second.get();
    }

    const LiePoly& insert(HallWord word, LiePoly value) {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(word.id(), nullptr);
        if (inserted) it->second = std::make_unique<const LiePoly>(std::move(value));
        return *it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint32_t, std::unique_ptr<const LiePoly>> table_;
};

DeltaCache& delta_cache() {
    static DeltaCache cache;
    return cache;
}

LiePoly compute_delta(HallWord word) {
    if (word.is_letter()) {
        if (word.as_letter() == Letter::x) return {};
        return LiePoly(HallWord::letter(Letter::x));
    }
    const LiePoly left(word.left());
    const LiePoly right(word.right());
    LiePoly out = bracket(delta_word(word.left()), right);
    out += bracket(left, delta_word(word.right()));
    return out;
}

}  // namespace

const LiePoly& delta_word(HallWord word) {
    auto& cache = delta_cache();
    if (const LiePoly* hit = cache.find(word)) return *hit;
    return cache.insert(word, compute_delta(word));
}

LiePoly delta(const LiePoly& p) {
    LiePolyBuilder builder;
    for (const auto& [word, coeff] : p.terms()) builder.add(delta_word(word), coeff);
    return std::move(builder).build();
}

LiePoly delta_power(const LiePoly& p, int n) {
    if (n < 0) throw std::invalid_argument("delta power must be non-negative");
    LiePoly out = p;
    for (int i = 0; i < n && !out.is_zero(); ++i) out = delta(out);
    return out;
}

LiePoly leibniz_expand(HallWord word, int n) {
    if (word.is_letter()) throw std::invalid_argument("Leibniz expansion needs a bracket, got a letter");
    if (n < 1) throw std::invalid_argument("Leibniz expansion order must be positive");
    const LiePoly a(word.left());
    const LiePoly b(word.right());
    LiePolyBuilder builder;
    Integer binom = 1;
    for (int i = 0; i <= n; ++i) {
        builder.add(bracket(delta_power(a, n - i), delta_power(b, i)), Scalar(binom));
        binom = binom * (n - i) / (i + 1);
    }
    return std::move(builder).build();
}

int nilpotency_index(const LiePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("nilpotency index of zero is undefined");
    int n = 0;
    LiePoly cur = p;
    while (!cur.is_zero()) {
        cur = delta(cur);
        ++n;
    }
    return n;
}

}  // namespace liecon
