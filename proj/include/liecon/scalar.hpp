#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liecon {

/// Exact rational scalar. Always kept in canonical form (reduced, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
Scalar rational(long num, long den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

}  // namespace liecon
