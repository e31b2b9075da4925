#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "ctcodes/autgamma.hpp"
#include "ctcodes/constructions.hpp"
#include "ctcodes/errors.hpp"

using namespace ctc;

namespace {
Permutation swap01() { return Permutation::transposition(2, 0, 1); }
WreathElement flip(int m) { return WreathElement::diagonal(swap01(), m); }
}  // namespace

TEST_SUITE("autgamma") {
  TEST_CASE("action examples") {
    CHECK(WreathElement::identity(4, 3).apply({0, 2, 1, 1}) == Vertex{0, 2, 1, 1});
    const auto shift = WreathElement::coordinate(Permutation::transposition(3, 0, 1), 2);
    CHECK(shift.apply({1, 0, 0}) == Vertex{0, 1, 0});
    CHECK(flip(3).apply({0, 1, 0}) == Vertex{1, 0, 1});
  }

  TEST_CASE("action matches the defining formula") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const int q = 2 + static_cast<int>(rng() % 3);
      const auto x = oracle::random_element(rng, m, q);
      const auto v = oracle::random_vertex(rng, m, q);
      CHECK(x.apply(v) == oracle::act(x.alphabet_perms(), x.coord_perm(), v));
    }
  }

  TEST_CASE("product, inverse and the Omega representation") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 5);
      const int q = 2 + static_cast<int>(rng() % 3);
      const auto x = oracle::random_element(rng, m, q);
      const auto y = oracle::random_element(rng, m, q);
      CHECK((x * x.inverse()).is_identity());
      CHECK((x * y).to_omega() == x.to_omega() * y.to_omega());
      CHECK(WreathElement::from_omega(x.to_omega(), m, q) == x);
      CHECK(mu(x * y) == mu(x) * mu(y));
    }
    CHECK_THROWS_AS(WreathElement::from_omega(Permutation::transposition(4, 0, 2), 2, 2), DomainError);
  }

  TEST_CASE("mu and phi") {
    CHECK(mu(WreathElement::identity(3, 2)).is_identity());
    const auto sigma = Permutation::from_images({1, 2, 0});
    CHECK(mu(WreathElement({swap01(), Permutation(2), swap01()}, sigma)) == sigma);
    CHECK(phi(WreathElement::identity(3, 3), 2).is_identity());
    const WreathElement x({swap01(), Permutation(2), Permutation(2)}, Permutation::transposition(3, 1, 2));
    CHECK(phi(x, 1) == swap01());
    CHECK_THROWS_AS(phi(x, 2), PreconditionError);
  }

  TEST_CASE("support transport") {
    std::mt19937_64 rng(23);
    const int m = 6, q = 3;
    for (int trial = 0; trial < 100; ++trial) {
      auto x = oracle::random_element(rng, m, q);
      // Force every g_j to fix 0 so that x fixes the zero vertex.
      std::vector<Permutation> g;
      for (const auto& h : x.alphabet_perms()) {
        const Point z = h.inverse()(0);
        g.push_back(z == 0 ? h : Permutation::transposition(3, 0, z) * h);
      }
      const WreathElement fixed(g, x.coord_perm());
      REQUIRE(fixed.fixes_zero());
      CHECK(support_transport_check(fixed, oracle::random_vertex(rng, m, q)));
      CHECK(support_transport_check(fixed, Vertex::zero(m)));
    }
    CHECK_THROWS_AS(support_transport_check(flip(3), {0, 1, 0}), PreconditionError);
  }

  TEST_CASE("code automorphisms") {
    CHECK(is_code_automorphism(WreathElement::identity(5, 2), rep_code(5, 2)));
    CHECK(is_code_automorphism(flip(6), rep_code(6, 2)));
    const Code c(5, 2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}});
    CHECK_FALSE(is_code_automorphism(WreathElement::coordinate(Permutation::transposition(5, 0, 1), 2), c));
    CHECK(apply(flip(3), Code(3, 2, {{0, 0, 1}})) == Code(3, 2, {{1, 1, 0}}));
  }

  TEST_CASE("subgroup orders and membership") {
    const auto x6 = example_group(6);
    CHECK(x6.order() == 720);
    CHECK(x6.contains(flip(6) * WreathElement::coordinate(Permutation::transposition(6, 0, 1), 2)));
    CHECK_FALSE(x6.contains(flip(6)));
    CHECK_FALSE(x6.contains(WreathElement::coordinate(Permutation::transposition(6, 0, 1), 2)));
    CHECK(x6.mu_image().order() == 720);
    // Wide group: enumeration path (q*m = 40 > 32).
    const auto wide = coordinate_group(cyclic_group(10), 4);
    CHECK(wide.order() == 10);
    CHECK(wide.contains(WreathElement::coordinate(cyclic_group(10).generators().front(), 4)));
  }

  TEST_CASE("orbits agree with brute force") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
      const int m = 2 + static_cast<int>(rng() % 4);
      const int q = 2 + static_cast<int>(rng() % 2);
      std::vector<WreathElement> gens{oracle::random_element(rng, m, q)};
      if (rng() % 2) gens.push_back(oracle::random_element(rng, m, q));
      const AutSubgroup group(m, q, gens);
      const auto v = oracle::random_vertex(rng, m, q);
      const auto expected = oracle::vertex_orbit(gens, v);
      const auto got = group.orbit(v);
      CHECK(std::vector<Vertex>(expected.begin(), expected.end()) == got);
    }
  }

  TEST_CASE("kernel on entries") {
    CHECK(kernel_on_entries_trivial(coordinate_symmetric(4, 3)));
    CHECK_FALSE(kernel_on_entries_trivial(AutSubgroup(4, 2, {flip(4)})));
    for (int m = 3; m <= 8; ++m) CHECK(kernel_on_entries_trivial(example_group(m)));
    CHECK(kernel_on_entries_trivial(twisted_pgl_group()));
    CHECK_FALSE(kernel_on_entries_trivial(hamming7_group()));
  }

  TEST_CASE("stabilizers") {
    for (int m = 3; m <= 7; ++m) {
      const auto x = example_group(m);
      const auto stab = vertex_stabilizer(x, Vertex::zero(m));
      CHECK(stab.order() * 2 == x.order());
      CHECK(stab.mu_image().order() == alternating_group(static_cast<std::size_t>(m)).order());
    }
    const AutSubgroup trivial(4, 2, {});
    CHECK(vertex_stabilizer(trivial, {1, 0, 1, 0}).order() == 1);
    CHECK(vertex_stabilizer(coordinate_symmetric(3, 2), {1, 0, 0}).order() == 2);
    // Orbit-stabilizer on the entry action.
    const auto x = example_group(6);
    CHECK(entry_stabilizer(x, 1).order() * 6 == x.order());
    CHECK(entry_set_stabilizer(x, {1, 2}).order() * 15 == x.order());
  }

  TEST_CASE("induced alphabet groups") {
    const auto ex = induced_alphabet_group(example_group(6), 1);
    CHECK(ex.degree() == 2);
    CHECK(ex.order() == 2);
    CHECK(induced_alphabet_group(coordinate_symmetric(5, 3), 2).order() == 1);
  }

  TEST_CASE("normal form") {
    const Code rep = rep_code(6, 2);
    const auto n = normalize_code(rep, Vertex::constant(6, 1), Vertex::zero(6), 0);
    CHECK(n.element.apply(Vertex::constant(6, 1)) == Vertex::zero(6));
    CHECK(n.element.apply(Vertex::zero(6)) == Vertex::constant(6, 1));
    CHECK(n.image == rep);

    const Code c(5, 3, {{0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {2, 2, 2, 0, 0}});
    const auto m = normalize_code(c, {0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, 0);
    const auto& words = m.image.words();
    CHECK(std::find(words.begin(), words.end(), Vertex{0, 0, 0, 0, 0}) != words.end());
    std::set<Symbol> used;
    for (const auto& w : words) {
      if (w == Vertex::zero(5)) continue;
      CHECK(w.entries[0] == w.entries[1]);
      CHECK(w.entries[1] == w.entries[2]);
      CHECK(w.entries[3] == 0);
      CHECK(w.entries[4] == 0);
      used.insert(w.entries[0]);
    }
    CHECK(used.size() == 2);

    // Already normal: contract still met.
    const Code already(4, 2, {{0, 0, 0, 0}, {1, 1, 0, 0}});
    CHECK(normalize_code(already, {0, 0, 0, 0}, {1, 1, 0, 0}, 0).image == already);
    CHECK_THROWS(normalize_code(rep, Vertex::zero(6), Vertex::zero(6), 0));
  }

  TEST_CASE("automorphism files") {
    for (const auto& g : {example_group(6), twisted_pgl_group(), hamming7_group(), coordinate_symmetric(3, 4)}) {
      std::stringstream s;
      write_aut_group(s, g);
      const auto back = read_aut_group(s, g.length(), g.alphabet_size());
      CHECK(back.generators() == g.generators());
    }
    std::istringstream text("3 2\nsigma := (1 2 3)\ng := const (0 1)\nsigma := (1 2) | g := (0 1),(),()\n");
    const auto g = read_aut_group(text, 3, 2);
    REQUIRE(g.generators().size() == 3);
    CHECK(g.generators()[1] == flip(3));
    std::istringstream wrong_shape("4 2\nsigma := (1 2)\n");
    CHECK_THROWS_AS(read_aut_group(wrong_shape, 3, 2), DomainError);
    std::istringstream bad("sigma := (1 9)\n");
    CHECK_THROWS_AS(read_aut_group(bad, 3, 2), ParseError);
  }
}
