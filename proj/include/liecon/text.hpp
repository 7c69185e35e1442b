#pragma once

#include "liecon/hall.hpp"
#include "liecon/lie_poly.hpp"

#include <json.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liecon {

/// Raised for malformed expression text; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the expression grammar
///
///     expression := term (('+'|'-') term)*
///     term       := rational '*' monomial | monomial
///     rational   := ['-'] digits ['/' digits]
///     monomial   := letter | '[' element (',' element)+ ']'
///     element    := letter | monomial
///
/// into its unnormalized terms. A leading sign before the first term and the
/// lone expression "0" (the empty sum) are also accepted.
std::vector<ScaledTree> parse_terms(std::string_view text);

/// parse_terms followed by normalization.
LiePoly parse(std::string_view text);

/// A single bracket monomial with no coefficient, e.g. "[y,x,y]".
BracketTree parse_monomial(std::string_view text);

/// Text form using left-normed shorthand, e.g. "3/2*[y,x] - [y,x,x]"; "0" for zero.
std::string format(const LiePoly& p);

/// Writes format(p).
std::ostream& operator<<(std::ostream& os, const LiePoly& p);

nlohmann::json word_to_json(HallWord word);
nlohmann::json tree_to_json(const BracketTree& tree);
BracketTree tree_from_json(const nlohmann::json& j);

/// [{"coeff": "p/q", "word": <nested tree>}, ...] in Hall order.
nlohmann::json to_json(const LiePoly& p);
LiePoly lie_poly_from_json(const nlohmann::json& j);

}  // namespace liecon
