#pragma once

#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/hamming.hpp"

namespace ctc {

/// K_k(x) = sum_j (-1)^j C(x,j) C(m-x,k-j) (q-1)^(k-j). DomainError unless 0 <= k, x <= m.
BigInt krawtchouk(int m, int q, int k, int x);

/// a'_k = sum_i a_i K_k(i), k = 0..m, with m = a.size() - 1.
std::vector<Rational> macwilliams_transform(const std::vector<Rational>& a, int q);
std::vector<Rational> macwilliams_transform(const DistanceDistribution& a, int q);

/// size * sum_{i <= floor((delta-1)/2)} C(m,i)(q-1)^i <= q^m.
bool sphere_packing_ok(int m, int q, int delta, const BigInt& size);

bool is_prime(std::uint64_t n);
/// Returns (p, f) with r = p^f, or (0, 0) when r is not a prime power.
std::pair<std::uint64_t, std::uint64_t> prime_power_decomposition(std::uint64_t r);

/// q^(r^n) <= r^(n^2+2n). DomainError unless r is prime.
bool affine_bound_holds(int r, int n, int q);
/// affine_bound_holds restricted to the admissible lengths m = r^n:
/// m >= 10 for q = 2, 8 <= m <= 24 for q = 3, nothing for q >= 4.
bool affine_bound_feasible(int r, int n, int q);

/// |GL(n,r)|, |PGammaL(n,r)| for a prime power r.
BigInt gl_order(int n, int r);
BigInt pgammal_order(int n, int r);
/// 2^m <= r^(n^2+n) with m = (r^n-1)/(r-1). DomainError unless n >= 2 and r a prime power.
bool psl_bound_holds(int n, int r);
/// 2^m <= (m+1)|PGammaL(n,r)| and m >= 10, q = 2 only.
bool psl_bound_feasible(int n, int r, int q = 2);

}  // namespace ctc
