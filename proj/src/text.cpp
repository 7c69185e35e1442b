#include "liecon/text.hpp"

#include <cctype>

namespace liecon {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<ScaledTree> expression() {
        skip_ws();
        if (rest_is_zero()) return {};
        std::vector<ScaledTree> out;
        Scalar sign(1);
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        out.push_back(term(sign));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+', '-' or end of input");
            ++pos_;
            out.push_back(term(Scalar(op == '-' ? -1 : 1)));
        }
        return out;
    }

    BracketTree single_monomial() {
        skip_ws();
        BracketTree t = monomial();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool rest_is_zero() const {
        std::string_view rest = text_.substr(pos_);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
        return rest == "0";
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    ScaledTree term(Scalar sign) {
        skip_ws();
        Scalar coeff(1);
        const bool negative_literal = peek() == '-';
        if (negative_literal || std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            if (negative_literal) ++pos_;
            std::string literal = (negative_literal ? "-" : "") + digits();
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational: expected denominator");
                literal += "/" + digits();
            }
            try {
                coeff = parse_scalar(literal);
            } catch (const std::invalid_argument& e) {
                throw ParseError(start, e.what());
            }
            expect('*');
        }
        skip_ws();
        BracketTree t = monomial();
        return {coeff * sign, std::move(t)};
    }

    BracketTree monomial() {
        skip_ws();
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return BracketTree::leaf(Letter::x);
        }
        if (c == 'y') {
            ++pos_;
            return BracketTree::leaf(Letter::y);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown letter '") + c + "'");
        if (c != '[') fail(at_end() ? "unexpected end of input" : "expected a letter or '['");
        ++pos_;
        std::vector<BracketTree> elements;
        elements.push_back(monomial());
        while (true) {
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                elements.push_back(monomial());
            } else if (peek() == ']') {
                ++pos_;
                break;
            } else {
                fail("expected ',' or ']'");
            }
        }
        if (elements.size() < 2) fail("a bracket needs at least two elements");
        return BracketTree::left_normed(std::move(elements));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ScaledTree> parse_terms(std::string_view text) { return Parser(text).expression(); }

LiePoly parse(std::string_view text) {
    const auto terms = parse_terms(text);
    return normalize(terms);
}

BracketTree parse_monomial(std::string_view text) { return Parser(text).single_monomial(); }

std::string format(const LiePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Scalar magnitude = abs(coeff);
        if (magnitude != 1) out += format_scalar(magnitude) + "*";
        out += word.to_string();
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LiePoly& p) { return os << format(p); }

nlohmann::json word_to_json(HallWord word) {
    if (word.is_letter()) return std::string(1, letter_char(word.as_letter()));
    return nlohmann::json::array({word_to_json(word.left()), word_to_json(word.right())});
}

nlohmann::json tree_to_json(const BracketTree& tree) {
    if (tree.is_leaf()) return std::string(1, letter_char(tree.letter()));
    return nlohmann::json::array({tree_to_json(tree.left()), tree_to_json(tree.right())});
}

BracketTree tree_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "x") return BracketTree::leaf(Letter::x);
        if (s == "y") return BracketTree::leaf(Letter::y);
        throw std::invalid_argument("unknown letter '" + s + "' in JSON word");
    }
    if (j.is_array() && j.size() == 2) return BracketTree::node(tree_from_json(j[0]), tree_from_json(j[1]));
    throw std::invalid_argument("JSON word must be a letter string or a two-element array");
}

nlohmann::json to_json(const LiePoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [word, coeff] : p.terms()) {
        out.push_back({{"coeff", format_scalar(coeff)}, {"word", word_to_json(word)}});
    }
    return out;
}

LiePoly lie_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("LiePoly JSON must be an array");
    std::vector<ScaledTree> terms;
    for (const auto& item : j) {
        terms.push_back({parse_scalar(item.at("coeff").get<std::string>()), tree_from_json(item.at("word"))});
    }
    return normalize(terms);
}

}  // namespace liecon
