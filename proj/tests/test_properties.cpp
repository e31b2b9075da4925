// Randomised checks with fixed seeds; each runs at least 200 cases.

#include <random>

#include "doctest.h"

#include "ctcodes/autgamma.hpp"
#include "ctcodes/constructions.hpp"
#include "ctcodes/designs.hpp"
#include "ctcodes/permgroup.hpp"
#include "ctcodes/regularity.hpp"
#include "ctcodes/spectra.hpp"
#include "oracles.hpp"

using namespace ctc;

namespace {
constexpr int kCases = 200;

WreathElement zero_fixing(std::mt19937_64& rng, int m, int q) {
  std::vector<Permutation> g;
  for (int i = 0; i < m; ++i) {
    std::vector<Point> images{0};
    const auto rest = oracle::random_permutation(rng, static_cast<std::size_t>(q - 1));
    for (int a = 0; a < q - 1; ++a) images.push_back(rest(static_cast<Point>(a)) + 1);
    g.push_back(Permutation::from_images(std::move(images)));
  }
  return WreathElement(std::move(g), oracle::random_permutation(rng, static_cast<std::size_t>(m)));
}

// Weight-k binary vertices, either random or an orbit under a random coordinate group.
std::vector<Vertex> weight_class_sample(std::mt19937_64& rng, int m, int k) {
  Vertex seed = Vertex::zero(m);
  for (int i = 0; i < k; ++i) seed.entries[static_cast<std::size_t>(i)] = 1;
  if (rng() % 2 == 0) {
    const PermGroup g(static_cast<std::size_t>(m), {oracle::random_permutation(rng, static_cast<std::size_t>(m))});
    return coordinate_group(g, 2).orbit(seed);
  }
  std::vector<Vertex> out;
  const std::size_t count = 1 + rng() % 12;
  for (std::size_t c = 0; c < count; ++c) {
    Vertex v = seed;
    for (std::size_t i = v.entries.size(); i > 1; --i) std::swap(v.entries[i - 1], v.entries[rng() % i]);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("MacWilliams transforms of real codes are non-negative") {
    std::mt19937_64 rng(101);
    for (int n = 0; n < kCases; ++n) {
      const int q = 2 + static_cast<int>(rng() % 3);
      const int m = 1 + static_cast<int>(rng() % (q == 2 ? 8 : q == 3 ? 6 : 5));
      const auto code = oracle::random_code(rng, m, q, 20);
      for (const auto& x : macwilliams_transform(distance_distribution(code), q)) CHECK(x >= 0);
    }
  }

  TEST_CASE("orbit-stabilizer") {
    std::mt19937_64 rng(202);
    for (int n = 0; n < kCases; ++n) {
      const std::size_t deg = 3 + rng() % 5;
      std::vector<Permutation> gens{oracle::random_permutation(rng, deg)};
      if (rng() % 2) gens.push_back(oracle::random_permutation(rng, deg));
      const PermGroup g(deg, gens);
      const Point p = 1 + static_cast<Point>(rng() % deg);
      CHECK(g.point_stabilizer(p).order() * g.orbit(p).size() == g.order());
      if (deg <= 6) CHECK(BigInt(oracle::closure(gens, deg).size()) == g.order());
    }
  }

  TEST_CASE("action law") {
    std::mt19937_64 rng(303);
    for (int n = 0; n < kCases; ++n) {
      const int m = 1 + static_cast<int>(rng() % 7), q = 2 + static_cast<int>(rng() % 3);
      const auto x = oracle::random_element(rng, m, q), y = oracle::random_element(rng, m, q);
      const auto v = oracle::random_vertex(rng, m, q);
      CHECK((x * y).apply(v) == y.apply(x.apply(v)));
      CHECK(x.apply(v) == oracle::act(x.alphabet_perms(), x.coord_perm(), v));
      CHECK(x.inverse().apply(x.apply(v)) == v);
      CHECK(WreathElement::from_omega(x.to_omega(), m, q) == x);
    }
  }

  TEST_CASE("supports move with the coordinate part") {
    std::mt19937_64 rng(404);
    for (int n = 0; n < kCases; ++n) {
      const int m = 1 + static_cast<int>(rng() % 8), q = 2 + static_cast<int>(rng() % 3);
      const auto x = zero_fixing(rng, m, q);
      const auto v = oracle::random_vertex(rng, m, q);
      CHECK(support_transport_check(x, v));
      CHECK(weight(x.apply(v)) == weight(v));
    }
  }

  TEST_CASE("distance, covering radius and level are invariant") {
    std::mt19937_64 rng(505);
    for (int n = 0; n < kCases; ++n) {
      const int q = 2 + static_cast<int>(rng() % 2);
      const int m = 2 + static_cast<int>(rng() % (q == 2 ? 6 : 4));
      const auto code = oracle::random_code(rng, m, q, 6);
      const auto image = apply(oracle::random_element(rng, m, q), code);
      CHECK(image.size() == code.size());
      CHECK(image.min_distance() == code.min_distance());
      CHECK(covering_radius(image) == covering_radius(code));
      const int level = s_regularity_level(code);
      CHECK(s_regularity_level(image) == level);
      CHECK(level == oracle::regularity_level(code));
    }
  }

  TEST_CASE("binary q-ary designs are support designs") {
    std::mt19937_64 rng(606);
    int designs = 0;
    for (int n = 0; n < kCases; ++n) {
      const int m = 3 + static_cast<int>(rng() % 6);
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
      const int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
      const auto members = weight_class_sample(rng, m, k);
      const auto qary = qary_t_design_lambda(members, t, 2);
      const auto design = support_design(members, m);
      const auto plain = is_t_design(design, t);
      CHECK(qary == plain);
      if (plain) {
        ++designs;
        CHECK(BigInt(design.size()) * oracle::binomial(k, t) == BigInt(*plain) * oracle::binomial(m, t));
      }
    }
    CHECK(designs > 20);
  }

  TEST_CASE("double counting on orbit designs") {
    std::mt19937_64 rng(707);
    const std::vector<PermGroup> groups{psl25_on_6(), pgl25_on_6(), pgl27_on_8(), symmetric_group(5),
                                        alternating_group(6), cyclic_group(7)};
    for (int n = 0; n < kCases; ++n) {
      const auto& g = groups[rng() % groups.size()];
      const int m = static_cast<int>(g.degree());
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
      const int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
      PointSet block;
      for (int i = 1; i <= m; ++i) block.push_back(static_cast<Point>(i));
      for (std::size_t i = block.size(); i > 1; --i) std::swap(block[i - 1], block[rng() % i]);
      block.resize(static_cast<std::size_t>(k));
      std::sort(block.begin(), block.end());
      const auto v = orbit_design(g, block, t);
      if (v.lambda)
        CHECK(BigInt(v.design.size()) * oracle::binomial(k, t) == BigInt(*v.lambda) * oracle::binomial(m, t));
      CHECK(v.lambda == is_t_design(v.design, t));
    }
  }
}
