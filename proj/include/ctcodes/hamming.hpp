#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/limits.hpp"
#include "ctcodes/permgroup.hpp"

namespace ctc {

using Symbol = std::uint8_t;

/// A vertex of H(m,q): an m-tuple over the alphabet {0, ..., q-1}.
struct Vertex {
  std::vector<Symbol> entries;

  Vertex() = default;
  explicit Vertex(std::vector<Symbol> e) : entries(std::move(e)) {}
  Vertex(std::initializer_list<int> e);
  static Vertex zero(int m) { return Vertex(std::vector<Symbol>(static_cast<std::size_t>(m), 0)); }
  static Vertex constant(int m, Symbol a) { return Vertex(std::vector<Symbol>(static_cast<std::size_t>(m), a)); }

  int length() const noexcept { return static_cast<int>(entries.size()); }
  Symbol operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

/// Digit string when every symbol is below 10, otherwise space separated.
std::string to_string(const Vertex& v);

/// Non-zero positions, 1-based.
PointSet support(const Vertex& v);
int weight(const Vertex& v);
/// Positions (1-based) where the two vertices differ.
PointSet diff_positions(const Vertex& a, const Vertex& b);
int hamming_distance(const Vertex& a, const Vertex& b);

/// Radix-q encoding of H(m,q) with entry 1 most significant, so numeric order
/// is lexicographic order.
class HammingSpace {
 public:
  HammingSpace(int m, int q);

  int length() const noexcept { return m_; }
  int alphabet_size() const noexcept { return q_; }
  /// q^m, saturating at UINT64_MAX.
  std::uint64_t vertex_count() const noexcept { return count_; }

  std::uint64_t encode(const Vertex& v) const;
  Vertex decode(std::uint64_t index) const;
  void check(const Vertex& v) const;

 private:
  int m_;
  int q_;
  std::uint64_t count_;
};

/// Vertices at exact distance k from `center`. Budget: C(m,k)(q-1)^k <= max_vertices.
std::vector<Vertex> sphere(const Vertex& center, int k, int q, const Limits& limits = {});

/// Distance partition {C_0, ..., C_rho}; parts hold radix codes in ascending
/// (lexicographic) order.
struct DistancePartition {
  std::vector<std::uint8_t> distance;  // indexed by radix code
  std::vector<std::vector<std::uint64_t>> parts;

  int covering_radius() const noexcept { return static_cast<int>(parts.size()) - 1; }
  std::vector<std::size_t> sizes() const;
};

/// A non-empty code in H(m,q), kept in lexicographic order without duplicates.
/// Derived invariants are computed once on first use and shared between copies.
class Code {
 public:
  /// Throws DomainError on shape violations and PreconditionError if empty.
  Code(int m, int q, std::vector<Vertex> words);

  int length() const noexcept { return space_.length(); }
  int alphabet_size() const noexcept { return space_.alphabet_size(); }
  const HammingSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Vertex>& words() const noexcept { return words_; }
  bool contains(const Vertex& v) const;

  /// Absent when |C| = 1.
  std::optional<int> min_distance() const;
  /// Multi-source breadth-first expansion; ResourceError if q^m exceeds the budget.
  const DistancePartition& distance_partition(const Limits& limits = {}) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length() == b.length() && a.alphabet_size() == b.alphabet_size() && a.words_ == b.words_;
  }

 private:
  struct Cache;
  HammingSpace space_;
  std::vector<Vertex> words_;
  std::shared_ptr<Cache> cache_;
};

/// PreconditionError when |C| < 2.
int min_distance(const Code& code);
int covering_radius(const Code& code, const Limits& limits = {});
int distance_to_code(const Vertex& v, const Code& code);

/// a_i = |{(x,y) in C x C : d(x,y) = i}| / |C|, exact.
struct DistanceDistribution {
  std::vector<Rational> values;
};
DistanceDistribution distance_distribution(const Code& code);

/// Diff(alpha, beta, C): codewords gamma with Diff(alpha,gamma) = Diff(alpha,beta).
std::vector<Vertex> diff_set(const Vertex& alpha, const Vertex& beta, const Code& code);
/// Codewords of weight k.
std::vector<Vertex> weight_class(const Code& code, int k);

/// Code file: `m q` header, then one codeword per line (contiguous digits when
/// q <= 10, otherwise space-separated symbols); `#` comments.
void write_code(std::ostream& out, const Code& code);
Code read_code(std::istream& in);

}  // namespace ctc
