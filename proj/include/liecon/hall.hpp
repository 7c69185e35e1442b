#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace liecon {

enum class Letter : std::uint8_t { x = 0, y = 1 };

char letter_char(Letter letter);

/// Bidegree (deg_x, deg_y) of a homogeneous element.
struct MultiDegree {
    int deg_x = 0;
    int deg_y = 0;

    [[nodiscard]] int total() const { return deg_x + deg_y; }

    friend MultiDegree operator+(MultiDegree a, MultiDegree b) {
        return {a.deg_x + b.deg_x, a.deg_y + b.deg_y};
    }
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

std::ostream& operator<<(std::ostream& os, MultiDegree md);

/// Every multidegree of total degree 1..max_degree, ordered by (total degree, deg_x).
std::vector<MultiDegree> multidegrees_up_to(int max_degree);

namespace detail {
struct HallNode;
}

/// Handle to an interned Hall basis word.
///
/// Words are owned by a process-wide registry and never freed, so handles are
/// trivially copyable and compare in O(1). Ordering is degree first, then
/// foliage lexicographically with x < y, then left factor, then right factor.
class HallWord {
public:
    [[nodiscard]] static HallWord letter(Letter letter);

    [[nodiscard]] bool is_letter() const;
    /// Precondition: is_letter().
    [[nodiscard]] Letter as_letter() const;
    /// Precondition: !is_letter().
    [[nodiscard]] HallWord left() const;
    [[nodiscard]] HallWord right() const;

    [[nodiscard]] int degree() const;
    [[nodiscard]] MultiDegree multidegree() const;
    /// The word with all brackets erased, e.g. "yxxy".
    [[nodiscard]] const std::string& foliage() const;
    /// Dense id, unique across all interned words.
    [[nodiscard]] std::uint32_t id() const;
    /// Position inside hall_basis(degree()).
    [[nodiscard]] std::uint32_t rank() const;

    friend bool operator==(HallWord a, HallWord b) { return a.node_ == b.node_; }
    friend std::strong_ordering operator<=>(HallWord a, HallWord b);

    /// Left-normed text form, e.g. "[y,x,y,[y,x,x]]".
    [[nodiscard]] std::string to_string() const;

private:
    friend class HallRegistry;
    explicit HallWord(const detail::HallNode* node) : node_(node) {}
    const detail::HallNode* node_;
};

std::ostream& operator<<(std::ostream& os, HallWord word);

/// Largest degree for which the registry will build basis tables.
inline constexpr int kMaxHallDegree = 20;

/// All basic words of degree exactly `degree`, in Hall order. Throws std::invalid_argument for degree < 1
/// or degree > kMaxHallDegree.
const std::vector<HallWord>& hall_basis(int degree);

/// Basic words of the given bidegree, in Hall order. Throws std::invalid_argument when total() < 1.
const std::vector<HallWord>& hall_basis_multidegree(MultiDegree md);

/// Builds all tables up to `degree`. Subsequent reads of those degrees never mutate the registry.
void ensure_hall_degree(int degree);

/// The Hall word [left, right], if that pair is basic.
std::optional<HallWord> find_hall_pair(HallWord left, HallWord right);

/// Full comparison by the recursive order definition, independent of the cached ranks.
/// Used to sort each degree when it is built.
std::strong_ordering hall_compare_structural(HallWord a, HallWord b);

/// Arbitrary binary bracket tree over {x, y}.
class BracketTree {
public:
    static BracketTree leaf(Letter letter);
    static BracketTree node(BracketTree left, BracketTree right);
    static BracketTree from_word(HallWord word);
    /// [e1, e2, ..., en] = [[...[e1, e2], ...], en]. Requires at least one element.
    static BracketTree left_normed(std::vector<BracketTree> elements);

    [[nodiscard]] bool is_leaf() const { return !children_; }
    [[nodiscard]] Letter letter() const { return letter_; }
    [[nodiscard]] const BracketTree& left() const { return children_->first; }
    [[nodiscard]] const BracketTree& right() const { return children_->second; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] MultiDegree multidegree() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BracketTree& a, const BracketTree& b);

private:
    Letter letter_ = Letter::x;
    std::shared_ptr<const std::pair<BracketTree, BracketTree>> children_;
};

/// The Hall word equal to `tree` as a bracket monomial, if `tree` satisfies the basic-word axioms.
std::optional<HallWord> as_hall_word(const BracketTree& tree);

inline bool is_basic(const BracketTree& tree) { return as_hall_word(tree).has_value(); }

}  // namespace liecon

template <>
struct std::hash<liecon::HallWord> {
    std::size_t operator()(liecon::HallWord word) const noexcept { return word.id(); }
};
