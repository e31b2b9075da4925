#include "ctcodes/exact.hpp"

#include <limits>
#include <stdexcept>

namespace ctc {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt b = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return b.convert_to<std::uint64_t>();
}

std::uint64_t power_u64(std::uint64_t base, std::uint64_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("bad integer '" + text + "'");
  BigInt v(text.substr(i));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace ctc
