#include "ctcodes/constructions.hpp"

#include <algorithm>
#include <cstdint>

#include "ctcodes/errors.hpp"

namespace ctc {

Code rep_code(int m, int q) {
  if (m < 1 || q < 2) throw DomainError("repetition code needs m >= 1, q >= 2");
  std::vector<Vertex> words;
  for (int a = 0; a < q; ++a) words.push_back(Vertex::constant(m, static_cast<Symbol>(a)));
  return Code(m, q, std::move(words));
}

WreathElement diagonal_flip(int m) { return WreathElement::diagonal(Permutation::transposition(2, 0, 1), m); }

namespace {

Permutation m_cycle(int m) {
  std::vector<Point> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % m);
  return Permutation::from_images(std::move(images));
}

/// sigma itself when even, flip * sigma when odd.
WreathElement twisted(const Permutation& sigma) {
  const auto x = WreathElement::coordinate(sigma, 2);
  return sigma.is_even() ? x : diagonal_flip(static_cast<int>(sigma.degree())) * x;
}

/// A Moebius map on the projective line over F_p; point 0 is infinity, x -> x+1.
Permutation moebius(int p, int a, int b, int c, int d) {
  std::vector<Point> images(static_cast<std::size_t>(p + 1));
  auto label = [p](long long v) { return static_cast<Point>(((v % p) + p) % p + 1); };
  auto inverse = [p](long long v) {
    v = ((v % p) + p) % p;
    for (long long w = 1; w < p; ++w)
      if (v * w % p == 1) return w;
    return 0LL;
  };
  // infinity -> a/c
  images[0] = c % p == 0 ? 0 : label(a * inverse(c));
  for (long long x = 0; x < p; ++x) {
    const long long num = a * x + b;
    const long long den = ((c * x + d) % p + p) % p;
    images[static_cast<std::size_t>(x + 1)] = den == 0 ? 0 : label(num * inverse(den));
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

AutSubgroup example_group(int m) {
  if (m < 3) throw DomainError("example group needs m >= 3");
  return AutSubgroup(m, 2, {twisted(Permutation::transposition(static_cast<std::size_t>(m), 0, 1)), twisted(m_cycle(m))});
}

AutSubgroup coordinate_group(const PermGroup& group, int q) {
  std::vector<WreathElement> gens;
  for (const auto& g : group.generators()) gens.push_back(WreathElement::coordinate(g, q));
  return AutSubgroup(static_cast<int>(group.degree()), q, std::move(gens));
}

AutSubgroup coordinate_symmetric(int m, int q) { return coordinate_group(symmetric_group(static_cast<std::size_t>(m)), q); }

AutSubgroup coordinate_alternating(int m, int q) {
  return coordinate_group(alternating_group(static_cast<std::size_t>(m)), q);
}

PermGroup psl25_on_6() { return PermGroup(6, {moebius(5, 1, 1, 0, 1), moebius(5, 0, -1, 1, 0)}); }

PermGroup pgl25_on_6() {
  return PermGroup(6, {moebius(5, 1, 1, 0, 1), moebius(5, 0, -1, 1, 0), moebius(5, 2, 0, 0, 1)});
}

PermGroup pgl27_on_8() {
  return PermGroup(8, {moebius(7, 1, 1, 0, 1), moebius(7, 0, -1, 1, 0), moebius(7, 3, 0, 0, 1)});
}

AutSubgroup twisted_pgl_group() {
  const auto psl = psl25_on_6();
  std::vector<WreathElement> gens;
  for (const auto& g : psl.generators()) gens.push_back(WreathElement::coordinate(g, 2));
  gens.push_back(diagonal_flip(6) * WreathElement::coordinate(moebius(5, 2, 0, 0, 1), 2));
  return AutSubgroup(6, 2, std::move(gens));
}

std::vector<WreathElement> twisted_pgl_elements() {
  const auto psl = psl25_on_6();
  const auto pgl = pgl25_on_6();
  std::vector<WreathElement> out;
  for (const auto& h : pgl.elements()) {
    auto x = WreathElement::coordinate(h, 2);
    out.push_back(psl.contains(h) ? x : diagonal_flip(6) * x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WreathElement translation(const Vertex& word) {
  std::vector<Permutation> g;
  for (Symbol s : word.entries) {
    if (s > 1) throw DomainError("translation needs a binary word");
    g.push_back(s ? Permutation::transposition(2, 0, 1) : Permutation(2));
  }
  return WreathElement(std::move(g), Permutation(word.entries.size()));
}

namespace {

/// Multiplication by a root of x^3 + x + 1 on F_2^3 (a Singer cycle).
unsigned singer(unsigned v) { return ((v << 1) ^ ((v & 4u) ? 0b1011u : 0u)) & 7u; }
/// x_2 += x_1.
unsigned transvection(unsigned v) { return v ^ ((v & 1u) << 1); }

template <class F>
Permutation on_labels(int m, F f) {
  std::vector<Point> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = static_cast<Point>(f(static_cast<unsigned>(i)));
  return Permutation::from_images(std::move(images));
}

Code filter_space(int m, bool (*keep)(const Vertex&)) {
  const HammingSpace space(m, 2);
  std::vector<Vertex> words;
  for (std::uint64_t x = 0; x < space.vertex_count(); ++x) {
    Vertex v = space.decode(x);
    if (keep(v)) words.push_back(std::move(v));
  }
  return Code(m, 2, std::move(words));
}

AutSubgroup translations_and(const Code& code, std::vector<Permutation> coordinate_gens) {
  std::vector<WreathElement> gens;
  for (const auto& w : code.words()) gens.push_back(translation(w));
  for (const auto& s : coordinate_gens) gens.push_back(WreathElement::coordinate(s, 2));
  return AutSubgroup(code.length(), 2, std::move(gens));
}

}  // namespace

Code hamming7_code() {
  return filter_space(7, [](const Vertex& v) {
    unsigned syndrome = 0;
    for (unsigned i = 0; i < 7; ++i)
      if (v.entries[i]) syndrome ^= i + 1;
    return syndrome == 0;
  });
}

AutSubgroup hamming7_group() {
  // Entry index i carries the vector i+1.
  return translations_and(hamming7_code(), {on_labels(7, [](unsigned i) { return singer(i + 1) - 1; }),
                                            on_labels(7, [](unsigned i) { return transvection(i + 1) - 1; })});
}

Code reed_muller8_code() {
  // Affine functions x -> a.x + b on F_2^3.
  return filter_space(8, [](const Vertex& v) {
    for (unsigned a = 0; a < 8; ++a)
      for (unsigned b = 0; b < 2; ++b) {
        bool match = true;
        for (unsigned x = 0; x < 8 && match; ++x)
          match = v.entries[x] == ((static_cast<unsigned>(__builtin_popcount(a & x)) + b) & 1u);
        if (match) return true;
      }
    return false;
  });
}

AutSubgroup reed_muller8_group() {
  return translations_and(reed_muller8_code(), {on_labels(8, [](unsigned x) { return x ^ 1u; }),
                                                on_labels(8, [](unsigned x) { return x == 0 ? 0u : singer(x); }),
                                                on_labels(8, [](unsigned x) { return transvection(x); })});
}

Code punctured_hadamard11() {
  const int m = 11;
  std::vector<bool> residue(m, false);
  for (int x = 1; x < m; ++x) residue[static_cast<std::size_t>(x * x % m)] = true;
  std::vector<Vertex> words{Vertex::zero(m), Vertex::constant(m, 1)};
  for (int shift = 0; shift < m; ++shift) {
    Vertex w = Vertex::zero(m);
    Vertex c = Vertex::constant(m, 1);
    for (int i = 0; i < m; ++i)
      if (residue[static_cast<std::size_t>((i + shift) % m)]) {
        w.entries[static_cast<std::size_t>(i)] = 1;
        c.entries[static_cast<std::size_t>(i)] = 0;
      }
    words.push_back(std::move(w));
    words.push_back(std::move(c));
  }
  return Code(m, 2, std::move(words));
}

}  // namespace ctc
