#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rttkit {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from a raw numerator /
/// denominator pair must go through make_scalar().
using Scalar = mpq_class;

/// num/den in lowest terms. Throws DomainError when den == 0.
Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", "p" or "-p/q" (arbitrary precision). Throws DomainError.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" text; the denominator is always written, so 2 -> "2/1".
std::string to_string(const Scalar& value);

/// Joins values as "[a, b, c]" using to_string().
std::string to_string(const std::vector<Scalar>& values);

}  // namespace rttkit
