#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace runsym {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

/// n! / (k_1! k_2! ... k_j!) with n = sum of the parts.
BigInt multinomial(std::span<const int> parts);

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed base-10 integer. Throws Error(ParseError).
BigInt parse_decimal(std::string_view text);

}  // namespace runsym
