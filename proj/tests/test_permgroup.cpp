#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "ctcodes/constructions.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/permgroup.hpp"

using namespace ctc;

namespace {
Permutation cyc(std::size_t n, std::string_view text) { return parse_permutation(text, n, 1); }

PermGroup sym3() { return PermGroup(3, {cyc(3, "(1 2)"), cyc(3, "(1 2 3)")}); }
PermGroup c3() { return PermGroup(3, {cyc(3, "(1 2 3)")}); }
}  // namespace

TEST_SUITE("permgrp") {
  TEST_CASE("composition applies the left factor first") {
    const auto x = cyc(3, "(1 2)");
    const auto y = cyc(3, "(2 3)");
    // 0 -> 1 under x, then 1 -> 2 under y.
    CHECK((x * y)(0) == 2);
    CHECK((x * y) != (y * x));
    CHECK((x * x.inverse()).is_identity());
  }

  TEST_CASE("from_images rejects non-bijections") {
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation::from_images({0, 3}), DomainError);
  }

  TEST_CASE("cycle and image notation round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto p = oracle::random_permutation(rng, 1 + rng() % 9);
      CHECK(parse_permutation(to_cycle_string(p, 1), p.degree(), 1) == p);
      CHECK(parse_permutation(to_image_string(p, 0), 0, 0) == p);
    }
    CHECK(to_cycle_string(Permutation(4), 1) == "()");
    CHECK_THROWS_AS(parse_permutation("(1 2", 3, 1), ParseError);
    CHECK_THROWS_AS(parse_permutation("(1 1)", 3, 1), ParseError);
  }

  TEST_CASE("parity and cycles") {
    CHECK(cyc(4, "(1 2 3)").is_even());
    CHECK(cyc(4, "(1 2)(3 4)").is_even());
    CHECK_FALSE(cyc(4, "(1 2)").is_even());
    CHECK(cyc(5, "(3 5)(1 4 2)").cycles() == std::vector<std::vector<Point>>{{0, 3, 1}, {2, 4}});
  }

  TEST_CASE("orbits") {
    CHECK(c3().orbit(1) == PointSet{1, 2, 3});
    CHECK(PermGroup(4).orbit(4) == PointSet{4});
    CHECK(psl25_on_6().orbit(1) == PointSet{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(c3().orbit(4), DomainError);
  }

  TEST_CASE("orders") {
    CHECK(c3().order() == 3);
    CHECK(psl25_on_6().order() == 60);
    CHECK(pgl25_on_6().order() == 120);
    CHECK(pgl27_on_8().order() == 336);
    CHECK(pgl27_on_8().order() % 5 != 0);
    BigInt f = 1;
    for (std::size_t n = 1; n <= 8; ++n) {
      f *= n;
      CHECK(symmetric_group(n).order() == f);
      CHECK(alternating_group(n).order() == (n == 1 ? BigInt(1) : f / 2));
      CHECK(cyclic_group(n).order() == n);
    }
  }

  TEST_CASE("orders and membership agree with closure on random groups") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      std::vector<Permutation> gens;
      for (std::size_t g = 0; g < 1 + rng() % 3; ++g) gens.push_back(oracle::random_permutation(rng, n));
      const PermGroup group(n, gens);
      const auto all = oracle::closure(gens, n);
      CHECK(group.order() == all.size());
      for (int probe = 0; probe < 20; ++probe) {
        const auto p = oracle::random_permutation(rng, n);
        std::vector<std::uint32_t> images(p.images().begin(), p.images().end());
        CHECK(group.contains(p) == (all.count(images) > 0));
      }
    }
  }

  TEST_CASE("membership examples") {
    CHECK(c3().contains(cyc(3, "(1 3 2)")));
    CHECK_FALSE(c3().contains(cyc(3, "(1 2)")));
    CHECK_FALSE(psl25_on_6().contains(cyc(6, "(1 2)")));
    CHECK_THROWS_AS(c3().contains(Permutation(4)), DomainError);
  }

  TEST_CASE("point stabilizers") {
    CHECK(sym3().point_stabilizer(3).order() == 2);
    CHECK(c3().point_stabilizer(1).order() == 1);
    CHECK(psl25_on_6().point_stabilizer(1).order() == 10);
  }

  TEST_CASE("setwise stabilizers agree with brute force") {
    const auto s4 = symmetric_group(4);
    CHECK(s4.setwise_stabilizer({1, 2}).order() == 4);
    CHECK(s4.setwise_stabilizer({1, 2, 3, 4}).order() == 24);
    const auto psl = psl25_on_6();
    const auto orbit = psl.orbits_on_ksubsets(3).at(0);
    // Orbit of size 10 in a group of order 60.
    CHECK(psl.setwise_stabilizer(orbit.front()).order() == 6);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 3 + rng() % 4;
      std::vector<Permutation> gens{oracle::random_permutation(rng, n), oracle::random_permutation(rng, n)};
      PointSet subset;
      for (Point p = 1; p <= n; ++p)
        if (rng() % 2) subset.push_back(p);
      std::size_t fixed = 0;
      for (const auto& images : oracle::closure(gens, n)) {
        bool keeps = true;
        for (auto p : subset) keeps = keeps && std::binary_search(subset.begin(), subset.end(), images[p - 1] + 1);
        fixed += keeps;
      }
      CHECK(PermGroup(n, gens).setwise_stabilizer(subset).order() == fixed);
    }
  }

  TEST_CASE("setwise stabilizer respects the degree budget") {
    Limits limits;
    limits.max_setwise_degree = 5;
    CHECK_THROWS_AS(symmetric_group(6).setwise_stabilizer({1, 2}, limits), ResourceError);
  }

  TEST_CASE("orbits on k-subsets") {
    const auto psl = psl25_on_6().orbits_on_ksubsets(3);
    REQUIRE(psl.size() == 2);
    CHECK(psl[0].size() == 10);
    CHECK(psl[1].size() == 10);
    CHECK(symmetric_group(6).orbits_on_ksubsets(3).size() == 1);
    const auto c = c3().orbits_on_ksubsets(2);
    REQUIRE(c.size() == 1);
    CHECK(c[0].size() == 3);
    CHECK(pgl25_on_6().orbits_on_ksubsets(3).size() == 1);
    Limits limits;
    limits.max_subsets = 10;
    CHECK_THROWS_AS(symmetric_group(8).orbits_on_ksubsets(4, limits), ResourceError);
  }

  TEST_CASE("homogeneity and transitivity") {
    CHECK(c3().is_k_homogeneous(2));
    CHECK_FALSE(psl25_on_6().is_k_homogeneous(3));
    CHECK(symmetric_group(5).is_k_homogeneous(2));
    CHECK_FALSE(c3().is_k_transitive(2));
    CHECK(pgl25_on_6().is_k_transitive(3));
    CHECK(psl25_on_6().is_k_transitive(2));
    CHECK(c3().is_k_transitive(1));
    CHECK(alternating_group(4).is_k_homogeneous(3));
    CHECK_FALSE(alternating_group(4).is_k_transitive(3));
  }

  TEST_CASE("element enumeration") {
    CHECK(psl25_on_6().elements().size() == 60);
    Limits limits;
    limits.max_orbit = 10;
    CHECK_THROWS_AS(symmetric_group(5).elements(limits), ResourceError);
  }

  TEST_CASE("group file round trip and errors") {
    for (const auto& g : {psl25_on_6(), pgl27_on_8(), symmetric_group(5), PermGroup(3)}) {
      std::stringstream s;
      write_group(s, g);
      const auto back = read_group(s);
      CHECK(back.degree() == g.degree());
      CHECK(back.generators() == g.generators());
    }
    std::istringstream bad("degree 3\n(1 4)\n");
    CHECK_THROWS_AS(read_group(bad), ParseError);
    std::istringstream missing("(1 2)\n");
    CHECK_THROWS_AS(read_group(missing), ParseError);
  }
}
