#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace abcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Binomial coefficient; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses a non-negative or negative decimal integer; throws ParseError.
BigInt parse_decimal(const std::string& s);

} // namespace abcodes
