#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cobham {

// Unbounded integer used for every interval endpoint and set element.
using BigInt = boost::multiprecision::cpp_int;

// Parses a nonnegative decimal literal. Throws Error(InvalidArgument) on
// anything else (signs, whitespace, empty input).
BigInt parse_natural(std::string_view text);

// Full decimal rendering, never scientific notation.
std::string to_decimal(const BigInt& value);

BigInt power(std::uint64_t base, std::uint64_t exponent);

} // namespace cobham
