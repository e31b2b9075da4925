#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "ctcodes/constructions.hpp"
#include "ctcodes/designs.hpp"
#include "ctcodes/errors.hpp"

using namespace ctc;

namespace {
std::vector<PointSet> all_ksubsets(int m, int k) {
  std::vector<PointSet> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    PointSet s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) s.push_back(static_cast<Point>(i + 1));
    out.push_back(s);
  }
  return out;
}

Design psl_orbit(std::size_t which) { return Design(6, 3, psl25_on_6().orbits_on_ksubsets(3).at(which)); }
}  // namespace

TEST_SUITE("designs") {
  TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Design(4, {{1, 2}, {1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(Design(4, {{1, 5}}), DomainError);
    CHECK(Design(4, {{2, 1}}).blocks().front() == PointSet{1, 2});
  }

  TEST_CASE("t-design verdicts") {
    CHECK(is_t_design(psl_orbit(0), 2) == std::optional<std::uint64_t>(2));
    CHECK(is_t_design(psl_orbit(1), 2) == std::optional<std::uint64_t>(2));
    CHECK_FALSE(is_t_design(psl_orbit(0), 3).has_value());
    for (int m = 4; m <= 7; ++m)
      for (int k = 1; k < m; ++k)
        for (int t = 0; t <= k; ++t)
          CHECK(is_t_design(Design(m, k, all_ksubsets(m, k)), t) == oracle::binomial(m - t, k - t));
    CHECK_FALSE(is_t_design(Design(4, {{1, 2, 3}, {1, 2, 4}}), 2).has_value());
  }

  TEST_CASE("q-ary designs") {
    for (int q = 2; q <= 4; ++q) {
      std::vector<Vertex> weight2;
      for (const auto& v : oracle::all_vertices(4, q))
        if (weight(v) == 2) weight2.push_back(v);
      CHECK(qary_t_design_lambda(weight2, 2, q) == std::optional<std::uint64_t>(1));
    }
    CHECK_THROWS_AS(qary_t_design_lambda({{1, 0, 0}, {1, 1, 0}}, 1, 2), DomainError);
    CHECK_THROWS_AS(qary_t_design_lambda({}, 1, 2), DomainError);
  }

  TEST_CASE("weight classes of completely regular codes are designs") {
    // Hamming code: 0 in C, delta = 3, so each class is a 1-design.
    const Code h = hamming7_code();
    for (int k = 3; k <= 7; ++k) {
      const auto cls = weight_class(h, k);
      if (cls.empty()) continue;
      CHECK(qary_t_design_lambda(cls, 1, 2).has_value());
    }
    // RM(1,3): the weight-4 class is a 3-(8,4,1) design.
    CHECK(qary_t_design_lambda(weight_class(reed_muller8_code(), 4), 3, 2) == std::optional<std::uint64_t>(1));
  }

  TEST_CASE("intersection numbers") {
    CHECK(block_intersection_numbers(psl_orbit(0)) == std::set<int>{1, 2});
    CHECK(block_intersection_numbers(Design(4, {{1, 2}, {3, 4}})).count(0) == 1);
    CHECK_THROWS_AS(block_intersection_numbers(Design(4, {{1, 2}})), PreconditionError);
  }

  TEST_CASE("complements") {
    CHECK(complement_design(psl_orbit(0)) == psl_orbit(1));
    CHECK(complement_design(complement_design(psl_orbit(1))) == psl_orbit(1));
    CHECK(complement_design(Design(4, {{1, 2}})) == Design(4, {{3, 4}}));
  }

  TEST_CASE("orbit designs") {
    const auto s6 = orbit_design(symmetric_group(6), {1, 2, 3}, 2);
    CHECK(s6.design.size() == 20);
    CHECK(s6.lambda == std::optional<std::uint64_t>(4));
    const auto psl = orbit_design(psl25_on_6(), {1, 2, 3}, 2);
    CHECK(psl.design.size() == 10);
    CHECK(psl.lambda == std::optional<std::uint64_t>(2));
    const auto c3 = orbit_design(cyclic_group(3), {1, 2}, 1);
    CHECK(c3.design.size() == 3);
    CHECK(c3.lambda == std::optional<std::uint64_t>(2));
  }

  TEST_CASE("Fisher inequality") {
    CHECK(fisher_holds(psl_orbit(0)));
    CHECK(fisher_holds(Design(6, 3, all_ksubsets(6, 3))));
    CHECK_THROWS_AS(fisher_holds(Design(4, {{1, 2, 3}, {1, 2, 4}})), PreconditionError);
  }

  TEST_CASE("2-design parameters") {
    const auto p = two_design_params(16, 5, 4);
    CHECK(p.r == 15);
    CHECK(p.b == 48);
    CHECK(p.r_integral);
    for (int lambda = 1; lambda <= 12; ++lambda) {
      CHECK(two_design_params(16, 5, lambda).r == Rational(15 * lambda, 4));
      CHECK(two_design_params(16, 5, lambda).r_integral == (lambda % 4 == 0));
      CHECK(two_design_params(16, 8, lambda).b == Rational(30 * lambda, 7));
      CHECK(two_design_params(16, 8, lambda).b_integral == (lambda % 7 == 0));
    }
    const auto fano = two_design_params(7, 3, 1);
    CHECK(fano.r == 3);
    CHECK(fano.b == 7);
    CHECK_THROWS_AS(two_design_params(5, 5, 1), DomainError);
  }

  TEST_CASE("forced intersection counts") {
    const auto c = forced_intersection_counts(16, 5, 4, 2);
    CHECK(c.counts == std::vector<Rational>{7, 10, 30});
    CHECK(c.admissible);
  }

  TEST_CASE("design automorphisms") {
    CHECK(design_automorphism_order(psl_orbit(0)) == 60);
    CHECK(design_automorphism_order(Design(6, 3, all_ksubsets(6, 3))) == 720);
  }

  TEST_CASE("design files") {
    for (const auto& d : {psl_orbit(0), Design(5, 2, all_ksubsets(5, 2)), Design(7, 3, {{1, 2, 4}, {1, 2, 4}})}) {
      std::stringstream s;
      write_design(s, d);
      CHECK(read_design(s) == d);
    }
    std::istringstream bad("4 2\n1 9\n");
    CHECK_THROWS_AS(read_design(bad), ParseError);
  }
}
