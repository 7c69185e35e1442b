#include "liecon/hall.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace liecon {

namespace detail {

struct HallNode {
    Letter letter = Letter::x;
    const HallNode* left = nullptr;
    const HallNode* right = nullptr;
    int degree = 1;
    MultiDegree md;
    std::string foliage;
    std::uint32_t id = 0;
    std::uint32_t rank = 0;
};

}  // namespace detail

char letter_char(Letter letter) { return letter == Letter::x ? 'x' : 'y'; }

std::ostream& operator<<(std::ostream& os, MultiDegree md) {
    return os << '(' << md.deg_x << ',' << md.deg_y << ')';
}

std::vector<MultiDegree> multidegrees_up_to(int max_degree) {
    std::vector<MultiDegree> out;
    for (int d = 1; d <= max_degree; ++d) {
        for (int a = 0; a <= d; ++a) out.push_back({a, d - a});
    }
    return out;
}

namespace {

std::uint64_t pair_key(std::uint32_t left, std::uint32_t right) {
    return (static_cast<std::uint64_t>(left) << 32) | right;
}

}  // namespace

// Tables for degree d are written once, under the mutex, before built_ is raised to d.
// Readers that observe built_ >= d (acquire) read those tables without locking.
class HallRegistry {
public:
    static HallRegistry& instance() {
        static HallRegistry registry;
        return registry;
    }

    void ensure(int degree) {
        if (degree < 1 || degree > kMaxHallDegree) {
            throw std::invalid_argument("Hall basis degree must be in [1, " +
                                        std::to_string(kMaxHallDegree) + "], got " +
                                        std::to_string(degree));
        }
        if (built_.load(std::memory_order_acquire) >= degree) return;
        std::lock_guard lock(mutex_);
        for (int d = built_.load(std::memory_order_relaxed) + 1; d <= degree; ++d) {
            build_degree(d);
            built_.store(d, std::memory_order_release);
        }
    }

    const std::vector<HallWord>& basis(int degree) {
        ensure(degree);
        return by_degree_[degree];
    }

    const std::vector<HallWord>& basis(MultiDegree md) {
        if (md.deg_x < 0 || md.deg_y < 0 || md.total() < 1) {
            throw std::invalid_argument("multidegree must be non-negative with positive total degree");
        }
        ensure(md.total());
        return by_md_[md.total()][md.deg_x];
    }

    std::optional<HallWord> find(HallWord left, HallWord right) {
        const int d = left.degree() + right.degree();
        if (d > kMaxHallDegree) {
            throw std::invalid_argument("bracket exceeds the maximum supported degree " +
                                        std::to_string(kMaxHallDegree));
        }
        ensure(d);
        const auto& table = pairs_[d];
        if (auto it = table.find(pair_key(left.id(), right.id())); it != table.end()) {
            return HallWord(it->second);
        }
        return std::nullopt;
    }

    HallWord letter(Letter l) { return HallWord(letters_[static_cast<int>(l)]); }

private:
    HallRegistry()
        : by_degree_(kMaxHallDegree + 1), by_md_(kMaxHallDegree + 1), pairs_(kMaxHallDegree + 1) {
        for (Letter l : {Letter::x, Letter::y}) {
            auto& node = nodes_.emplace_back();
            node.letter = l;
            node.degree = 1;
            node.md = l == Letter::x ? MultiDegree{1, 0} : MultiDegree{0, 1};
            node.foliage = std::string(1, letter_char(l));
            node.id = static_cast<std::uint32_t>(nodes_.size() - 1);
            node.rank = static_cast<std::uint32_t>(l);
            letters_[static_cast<int>(l)] = &node;
            by_degree_[1].push_back(HallWord(&node));
        }
        by_md_[1] = {{HallWord(letters_[1])}, {HallWord(letters_[0])}};
        built_.store(1, std::memory_order_release);
    }

    void build_degree(int d) {
        std::vector<detail::HallNode*> fresh;
        for (int du = d - 1; du * 2 >= d; --du) {
            const int dv = d - du;
            for (HallWord u : by_degree_[du]) {
                for (HallWord v : by_degree_[dv]) {
                    // u > v; degree-first order makes this automatic when du > dv.
                    if (du == dv && u.rank() <= v.rank()) continue;
                    if (!u.is_letter() && u.right() > v) continue;
                    auto& node = nodes_.emplace_back();
                    node.left = u.node_;
                    node.right = v.node_;
                    node.degree = d;
                    node.md = u.multidegree() + v.multidegree();
                    node.foliage = u.foliage() + v.foliage();
                    node.id = static_cast<std::uint32_t>(nodes_.size() - 1);
                    fresh.push_back(&node);
                }
            }
        }
        std::sort(fresh.begin(), fresh.end(), [](const detail::HallNode* a, const detail::HallNode* b) {
            return hall_compare_structural(HallWord(a), HallWord(b)) < 0;
        });
        auto& level = by_degree_[d];
        auto& by_x = by_md_[d];
        by_x.assign(d + 1, {});
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            fresh[i]->rank = static_cast<std::uint32_t>(i);
            HallWord w(fresh[i]);
            level.push_back(w);
            by_x[w.multidegree().deg_x].push_back(w);
            pairs_[d].emplace(pair_key(w.left().id(), w.right().id()), fresh[i]);
        }
    }

    std::mutex mutex_;
    std::atomic<int> built_{0};
    std::deque<detail::HallNode> nodes_;
    const detail::HallNode* letters_[2] = {nullptr, nullptr};
    std::vector<std::vector<HallWord>> by_degree_;
    std::vector<std::vector<std::vector<HallWord>>> by_md_;  // [degree][deg_x]
    std::vector<std::unordered_map<std::uint64_t, const detail::HallNode*>> pairs_;
};

HallWord HallWord::letter(Letter letter) { return HallRegistry::instance().letter(letter); }

bool HallWord::is_letter() const { return node_->left == nullptr; }
Letter HallWord::as_letter() const { return node_->letter; }
HallWord HallWord::left() const { return HallWord(node_->left); }
HallWord HallWord::right() const { return HallWord(node_->right); }
int HallWord::degree() const { return node_->degree; }
MultiDegree HallWord::multidegree() const { return node_->md; }
const std::string& HallWord::foliage() const { return node_->foliage; }
std::uint32_t HallWord::id() const { return node_->id; }
std::uint32_t HallWord::rank() const { return node_->rank; }

std::strong_ordering operator<=>(HallWord a, HallWord b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.rank() <=> b.rank();
}

std::strong_ordering hall_compare_structural(HallWord a, HallWord b) {
    if (a == b) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.foliage().compare(b.foliage()); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Equal foliage and degree: letters only tie with themselves.
    if (a.is_letter() != b.is_letter()) {
        return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = hall_compare_structural(a.left(), b.left()); c != 0) return c;
    return hall_compare_structural(a.right(), b.right());
}

namespace {

// Collects the left spine of a bracket structure: [[[a,b],c],d] -> a, b, c, d.
template <typename T, typename IsLeaf, typename Left, typename Right, typename Leaf>
std::string spine_text(const T& root, IsLeaf is_leaf, Left left, Right right, Leaf leaf) {
    if (is_leaf(root)) return std::string(1, letter_char(leaf(root)));
    std::vector<const T*> trailing;
    const T* cur = &root;
    while (!is_leaf(*cur)) {
        trailing.push_back(&right(*cur));
        cur = &left(*cur);
    }
    std::string out = "[";
    out += letter_char(leaf(*cur));
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
        out += ',';
        out += spine_text(**it, is_leaf, left, right, leaf);
    }
    out += ']';
    return out;
}

}  // namespace

std::string HallWord::to_string() const {
    // HallWord accessors return by value, so walk with an explicit stack of handles.
    if (is_letter()) return std::string(1, letter_char(as_letter()));
    std::vector<HallWord> trailing;
    HallWord cur = *this;
    while (!cur.is_letter()) {
        trailing.push_back(cur.right());
        cur = cur.left();
    }
    std::string out = "[";
    out += letter_char(cur.as_letter());
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
        out += ',';
        out += it->to_string();
    }
    out += ']';
    return out;
}

std::ostream& operator<<(std::ostream& os, HallWord word) { return os << word.to_string(); }

const std::vector<HallWord>& hall_basis(int degree) { return HallRegistry::instance().basis(degree); }

const std::vector<HallWord>& hall_basis_multidegree(MultiDegree md) {
    return HallRegistry::instance().basis(md);
}

void ensure_hall_degree(int degree) { HallRegistry::instance().ensure(degree); }

std::optional<HallWord> find_hall_pair(HallWord left, HallWord right) {
    return HallRegistry::instance().find(left, right);
}

BracketTree BracketTree::leaf(Letter letter) {
    BracketTree t;
    t.letter_ = letter;
    return t;
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
    BracketTree t;
    t.children_ = std::make_shared<const std::pair<BracketTree, BracketTree>>(std::move(left), std::move(right));
    return t;
}

BracketTree BracketTree::from_word(HallWord word) {
    if (word.is_letter()) return leaf(word.as_letter());
    return node(from_word(word.left()), from_word(word.right()));
}

BracketTree BracketTree::left_normed(std::vector<BracketTree> elements) {
    if (elements.empty()) throw std::invalid_argument("left-normed bracket needs at least one element");
    BracketTree acc = std::move(elements.front());
    for (std::size_t i = 1; i < elements.size(); ++i) acc = node(std::move(acc), std::move(elements[i]));
    return acc;
}

int BracketTree::degree() const { return is_leaf() ? 1 : left().degree() + right().degree(); }

MultiDegree BracketTree::multidegree() const {
    if (is_leaf()) return letter_ == Letter::x ? MultiDegree{1, 0} : MultiDegree{0, 1};
    return left().multidegree() + right().multidegree();
}

std::string BracketTree::to_string() const {
    return spine_text(
        *this, [](const BracketTree& t) { return t.is_leaf(); },
        [](const BracketTree& t) -> const BracketTree& { return t.left(); },
        [](const BracketTree& t) -> const BracketTree& { return t.right(); },
        [](const BracketTree& t) { return t.letter(); });
}

bool operator==(const BracketTree& a, const BracketTree& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.letter() == b.letter();
    return a.left() == b.left() && a.right() == b.right();
}

std::optional<HallWord> as_hall_word(const BracketTree& tree) {
    if (tree.is_leaf()) return HallWord::letter(tree.letter());
    auto left = as_hall_word(tree.left());
    if (!left) return std::nullopt;
    auto right = as_hall_word(tree.right());
    if (!right) return std::nullopt;
    return find_hall_pair(*left, *right);
}

}  // namespace liecon
