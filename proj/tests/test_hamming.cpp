#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "ctcodes/constructions.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/hamming.hpp"

using namespace ctc;

TEST_SUITE("hamming") {
  TEST_CASE("distances and weights") {
    CHECK(hamming_distance({0, 0, 0}, {0, 0, 0}) == 0);
    CHECK(hamming_distance({0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}) == 5);
    CHECK(hamming_distance({1, 2, 0}, {1, 0, 2}) == 2);
    CHECK(weight({0, 2, 0, 1}) == 2);
    CHECK(support({0, 2, 0, 1}) == PointSet{2, 4});
    CHECK(diff_positions({1, 2, 0}, {1, 0, 2}) == PointSet{2, 3});
  }

  TEST_CASE("radix encoding is lexicographic") {
    const HammingSpace space(4, 3);
    CHECK(space.vertex_count() == 81);
    for (std::uint64_t i = 0; i < space.vertex_count(); ++i) CHECK(space.encode(space.decode(i)) == i);
    CHECK(space.decode(0) < space.decode(1));
    CHECK(space.decode(1) == Vertex{0, 0, 0, 1});
    CHECK_THROWS_AS(space.check(Vertex{0, 3, 0, 0}), DomainError);
    CHECK_THROWS_AS(space.check(Vertex{0, 0, 0}), DomainError);
  }

  TEST_CASE("minimum distance") {
    CHECK(min_distance(rep_code(6, 2)) == 6);
    CHECK(min_distance(Code(3, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
    CHECK(min_distance(Code(3, 3, {{0, 1, 0}, {0, 2, 0}, {1, 1, 1}})) == 1);
    CHECK(min_distance(rep_code(5, 3)) == 5);
    const Code single(4, 2, {{0, 1, 0, 1}});
    CHECK_FALSE(single.min_distance().has_value());
    CHECK_THROWS_AS(min_distance(single), PreconditionError);
  }

  TEST_CASE("code construction") {
    CHECK_THROWS_AS(Code(3, 2, {}), PreconditionError);
    CHECK_THROWS_AS(Code(3, 2, {{0, 2, 0}}), DomainError);
    const Code c(3, 2, {{1, 1, 1}, {0, 0, 0}, {1, 1, 1}});
    CHECK(c.size() == 2);
    CHECK(c.words().front() == Vertex{0, 0, 0});
  }

  TEST_CASE("spheres") {
    const auto s = sphere({0, 0, 0}, 1, 2);
    CHECK(s.size() == 3);
    CHECK(sphere({0, 0, 0}, 0, 2) == std::vector<Vertex>{{0, 0, 0}});
    CHECK(sphere(Vertex::zero(6), 3, 2).size() == 20);
    CHECK(sphere(Vertex::zero(5), 2, 4).size() == 10 * 9);
    for (const auto& v : sphere({1, 2, 0, 1}, 2, 3)) CHECK(hamming_distance(v, {1, 2, 0, 1}) == 2);
  }

  TEST_CASE("distance partition of repetition codes") {
    const auto rep6 = rep_code(6, 2);
    const auto& p = rep6.distance_partition();
    CHECK(p.sizes() == std::vector<std::size_t>{2, 12, 30, 20});
    CHECK(p.covering_radius() == 3);
    for (int m = 2; m <= 10; ++m) CHECK(covering_radius(rep_code(m, 2)) == m / 2);
    CHECK(covering_radius(Code(5, 2, {Vertex::zero(5)})) == 5);
  }

  TEST_CASE("full vertex set has one part") {
    std::vector<Vertex> all = oracle::all_vertices(3, 3);
    const Code c(3, 3, all);
    CHECK(c.distance_partition().sizes() == std::vector<std::size_t>{27});
    CHECK(covering_radius(c) == 0);
  }

  TEST_CASE("partition sizes and distances agree with brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const int q = 2 + static_cast<int>(rng() % 3);
      const Code code = oracle::random_code(rng, m, q, 6);
      CHECK(code.distance_partition().sizes() == oracle::partition_sizes(code));
      const auto v = oracle::random_vertex(rng, m, q);
      CHECK(distance_to_code(v, code) == oracle::distance_to_code(v, code));
    }
  }

  TEST_CASE("partition budget") {
    Limits limits;
    limits.max_vertices = 63;
    CHECK_THROWS_AS(rep_code(6, 2).distance_partition(limits), ResourceError);
  }

  TEST_CASE("distance distribution") {
    const auto a = distance_distribution(rep_code(7, 2)).values;
    REQUIRE(a.size() == 8);
    CHECK(a[0] == 1);
    CHECK(a[7] == 1);
    for (int i = 1; i < 7; ++i) CHECK(a[static_cast<std::size_t>(i)] == 0);
    const auto single = distance_distribution(Code(4, 3, {{0, 1, 2, 0}})).values;
    CHECK(single == std::vector<Rational>{1, 0, 0, 0, 0});

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const Code code = oracle::random_code(rng, 5, 3, 8);
      const auto d = distance_distribution(code).values;
      Rational sum = 0;
      for (const auto& x : d) sum += x;
      CHECK(sum == static_cast<long>(code.size()));
      CHECK(d[0] == 1);
      if (code.size() > 1)
        for (int i = 1; i < min_distance(code); ++i) CHECK(d[static_cast<std::size_t>(i)] == 0);
    }
  }

  TEST_CASE("diff sets") {
    const Code c(5, 3, {{0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {2, 2, 2, 0, 0}});
    CHECK(diff_set({0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, c) == std::vector<Vertex>{{1, 1, 1, 0, 0}, {2, 2, 2, 0, 0}});
    CHECK(diff_set({0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, c) == std::vector<Vertex>{{0, 0, 0, 0, 0}});
    const Code r = rep_code(6, 2);
    CHECK(diff_set(Vertex::zero(6), Vertex::constant(6, 1), r) == std::vector<Vertex>{Vertex::constant(6, 1)});
  }

  TEST_CASE("weight classes") {
    const Code r = rep_code(6, 2);
    CHECK(weight_class(r, 6) == std::vector<Vertex>{Vertex::constant(6, 1)});
    CHECK(weight_class(r, 3).empty());
    CHECK(weight_class(r, 0) == std::vector<Vertex>{Vertex::zero(6)});
  }

  TEST_CASE("code files") {
    std::istringstream good("# comment\n3 2\n000\n111  # trailing\n\n");
    CHECK(read_code(good) == rep_code(3, 2));
    std::istringstream bad_digit("3 2\n000\n1a1\n");
    try {
      read_code(bad_digit);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream wide("3 2\n0000\n");
    CHECK_THROWS_AS(read_code(wide), ParseError);
    std::istringstream big_symbol("3 2\n020\n");
    CHECK_THROWS_AS(read_code(big_symbol), ParseError);
    std::istringstream no_words("3 2\n");
    CHECK_THROWS_AS(read_code(no_words), ParseError);
    std::istringstream large_q("2 12\n11 0\n3 10\n");
    const Code c = read_code(large_q);
    CHECK(c.alphabet_size() == 12);
    std::stringstream out;
    write_code(out, c);
    CHECK(read_code(out) == c);
  }
}
