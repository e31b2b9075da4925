#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "ctcodes/constructions.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/spectra.hpp"

using namespace ctc;

namespace {
BigInt krawtchouk_direct(int m, int q, int k, int x) {
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(m - x, k - j) * power(BigInt(q - 1), static_cast<std::uint64_t>(k - j));
    sum += (j % 2 ? -term : term);
  }
  return sum;
}
}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("Krawtchouk identities") {
    for (int m = 1; m <= 12; ++m)
      for (int q = 2; q <= 4; ++q)
        for (int k = 0; k <= m; ++k) {
          CHECK(krawtchouk(m, q, 0, k) == 1);
          CHECK(krawtchouk(m, q, k, 0) == binomial(m, k) * power(BigInt(q - 1), static_cast<std::uint64_t>(k)));
          for (int x = 0; x <= m; ++x) CHECK(krawtchouk(m, q, k, x) == krawtchouk_direct(m, q, k, x));
        }
    for (int m = 1; m <= 12; ++m)
      for (int k = 0; k <= m; ++k) CHECK(krawtchouk(m, 2, k, m) == (k % 2 ? -binomial(m, k) : binomial(m, k)));
    CHECK_THROWS_AS(krawtchouk(4, 2, 5, 0), DomainError);
  }

  TEST_CASE("MacWilliams transforms") {
    for (int m = 2; m <= 10; ++m) {
      const auto t = macwilliams_transform(distance_distribution(rep_code(m, 2)), 2);
      for (int k = 0; k <= m; ++k)
        CHECK(t[static_cast<std::size_t>(k)] == Rational(binomial(m, k) * (1 + (k % 2 ? -1 : 1))));
    }
    const auto single = macwilliams_transform(distance_distribution(Code(5, 3, {{0, 1, 2, 0, 1}})), 3);
    for (int k = 0; k <= 5; ++k) CHECK(single[static_cast<std::size_t>(k)] == Rational(krawtchouk(5, 3, k, 0)));
    // a'_0 = |C| always.
    CHECK(macwilliams_transform(distance_distribution(hamming7_code()), 2)[0] == 16);
  }

  TEST_CASE("sphere packing") {
    for (int m = 5; m <= 12; ++m) {
      const BigInt vol = 1 + m + binomial(m, 2);
      const BigInt cap = power(BigInt(2), static_cast<std::uint64_t>(m)) / vol;
      CHECK(sphere_packing_ok(m, 2, 5, cap));
      CHECK_FALSE(sphere_packing_ok(m, 2, 5, cap + 1));
    }
    CHECK(sphere_packing_ok(3, 2, 7, 1));
    CHECK_FALSE(sphere_packing_ok(10, 2, 5, 112));
    CHECK(sphere_packing_ok(7, 2, 3, 16));
  }

  TEST_CASE("primes and prime powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(27));
    CHECK(prime_power_decomposition(27) == std::pair<std::uint64_t, std::uint64_t>{3, 3});
    CHECK(prime_power_decomposition(16) == std::pair<std::uint64_t, std::uint64_t>{2, 4});
    CHECK(prime_power_decomposition(12) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
    CHECK(prime_power_decomposition(1) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  }

  TEST_CASE("group orders") {
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(2, 4) == 180);
    CHECK(pgammal_order(2, 8) == 1512);
    CHECK(pgammal_order(2, 9) == 1440);
    CHECK(pgammal_order(3, 4) == 120960);
    CHECK(pgammal_order(2, 5) == 120);
  }

  TEST_CASE("affine bound") {
    CHECK(affine_bound_feasible(2, 3, 3));
    CHECK(affine_bound_feasible(2, 4, 2));
    CHECK(affine_bound_feasible(2, 5, 2));
    CHECK_FALSE(affine_bound_feasible(3, 2, 2));
    CHECK(affine_bound_holds(3, 2, 2));
    CHECK_FALSE(affine_bound_feasible(2, 3, 4));
    CHECK_THROWS_AS(affine_bound_holds(4, 2, 2), DomainError);
  }

  TEST_CASE("linear group bound") {
    CHECK(psl_bound_feasible(4, 2));
    CHECK(psl_bound_feasible(3, 3));
    CHECK(psl_bound_feasible(3, 4));
    CHECK(psl_bound_feasible(2, 16));
    CHECK_FALSE(psl_bound_feasible(2, 17));
    CHECK_FALSE(psl_bound_feasible(2, 8));
    CHECK(psl_bound_holds(2, 17));
    CHECK_THROWS_AS(psl_bound_holds(2, 6), DomainError);
  }
}
