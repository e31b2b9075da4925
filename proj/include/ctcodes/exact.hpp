#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt power(const BigInt& base, std::uint64_t exponent);
BigInt factorial(std::uint64_t n);

/// Overflow-checked binomial for budget arithmetic; saturates at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);
/// Overflow-checked power; saturates at UINT64_MAX.
std::uint64_t power_u64(std::uint64_t base, std::uint64_t exponent);

bool is_integral(const Rational& r);
std::string to_string(const BigInt& v);
/// "p/q", or "p" when integral.
std::string to_string(const Rational& r);
/// Inverse of to_string; std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace ctc
