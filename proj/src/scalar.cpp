#include "liecon/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace liecon {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Scalar rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

}  // namespace liecon
