#include "ctcodes/spectra.hpp"

#include "ctcodes/errors.hpp"

namespace ctc {

BigInt krawtchouk(int m, int q, int k, int x) {
  if (m < 0 || q < 2) throw DomainError("krawtchouk needs m >= 0, q >= 2");
  if (k < 0 || k > m || x < 0 || x > m) throw DomainError("krawtchouk needs 0 <= k, x <= m");
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(m - x, k - j) * power(q - 1, static_cast<std::uint64_t>(k - j));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

std::vector<Rational> macwilliams_transform(const std::vector<Rational>& a, int q) {
  if (a.empty()) throw DomainError("distance distribution is empty");
  const int m = static_cast<int>(a.size()) - 1;
  std::vector<Rational> out(a.size(), Rational(0));
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i <= m; ++i)
      if (a[static_cast<std::size_t>(i)] != 0)
        out[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(i)] * Rational(krawtchouk(m, q, k, i));
  return out;
}

std::vector<Rational> macwilliams_transform(const DistanceDistribution& a, int q) {
  return macwilliams_transform(a.values, q);
}

bool sphere_packing_ok(int m, int q, int delta, const BigInt& size) {
  if (delta < 1) throw DomainError("sphere packing needs delta >= 1");
  BigInt ball = 0;
  for (int i = 0; i <= (delta - 1) / 2 && i <= m; ++i) ball += binomial(m, i) * power(q - 1, static_cast<std::uint64_t>(i));
  return size * ball <= power(q, static_cast<std::uint64_t>(m));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> prime_power_decomposition(std::uint64_t r) {
  if (r < 2) return {0, 0};
  std::uint64_t p = 2;
  while (r % p != 0) ++p;
  std::uint64_t f = 0;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) return {0, 0};
  return {p, f};
}

bool affine_bound_holds(int r, int n, int q) {
  if (r < 2 || !is_prime(static_cast<std::uint64_t>(r))) throw DomainError("affine bound needs r prime");
  if (n < 1 || q < 2) throw DomainError("affine bound needs n >= 1, q >= 2");
  const BigInt m = power(r, static_cast<std::uint64_t>(n));
  if (m > 4096) return false;  // 2^m already exceeds r^(n^2+2n) here
  return power(q, m.convert_to<std::uint64_t>()) <= power(r, static_cast<std::uint64_t>(n * n + 2 * n));
}

bool affine_bound_feasible(int r, int n, int q) {
  if (!affine_bound_holds(r, n, q)) return false;
  const BigInt m = power(r, static_cast<std::uint64_t>(n));
  if (q == 2) return m >= 10;
  if (q == 3) return m >= 8 && m <= 24;
  return false;
}

BigInt gl_order(int n, int r) {
  if (n < 1 || prime_power_decomposition(static_cast<std::uint64_t>(r)).first == 0)
    throw DomainError("GL(n,r) needs n >= 1 and r a prime power");
  const BigInt rn = power(r, static_cast<std::uint64_t>(n));
  BigInt order = 1;
  for (int i = 0; i < n; ++i) order *= rn - power(r, static_cast<std::uint64_t>(i));
  return order;
}

BigInt pgammal_order(int n, int r) {
  const auto [p, f] = prime_power_decomposition(static_cast<std::uint64_t>(r));
  if (p == 0) throw DomainError("PGammaL(n,r) needs r a prime power");
  return gl_order(n, r) / (r - 1) * f;
}

namespace {

BigInt projective_length(int n, int r) {
  if (n < 2 || prime_power_decomposition(static_cast<std::uint64_t>(r)).first == 0)
    throw DomainError("PSL bound needs n >= 2 and r a prime power");
  return (power(r, static_cast<std::uint64_t>(n)) - 1) / (r - 1);
}

}  // namespace

bool psl_bound_holds(int n, int r) {
  const BigInt m = projective_length(n, r);
  if (m > 100000) return false;
  return power(2, m.convert_to<std::uint64_t>()) <= power(r, static_cast<std::uint64_t>(n * n + n));
}

bool psl_bound_feasible(int n, int r, int q) {
  if (q != 2) throw DomainError("PSL bound is stated for q = 2");
  const BigInt m = projective_length(n, r);
  if (m < 10) return false;
  if (m > 100000) return false;
  return power(2, m.convert_to<std::uint64_t>()) <= (m + 1) * pgammal_order(n, r);
}

}  // namespace ctc
