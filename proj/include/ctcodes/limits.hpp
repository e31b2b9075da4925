#pragma once

#include <cstddef>
#include <cstdint>

namespace ctc {

/// Enumeration budgets. Every operation that may enumerate something large
/// takes a `Limits` and throws `ResourceError` rather than exceed it.
struct Limits {
  /// Full vertex-set enumeration (distance partitions): q^m must not exceed this.
  std::uint64_t max_vertices = std::uint64_t{1} << 24;
  /// k-subsets, ordered k-tuples and t-subsets enumerated by group and design code.
  std::uint64_t max_subsets = 1'000'000;
  /// Orbit closures on vertices and explicit group element enumeration.
  std::uint64_t max_orbit = 1'000'000;
  /// Degree cap for setwise-stabilizer backtracking.
  std::size_t max_setwise_degree = 32;
  /// Degree cap for stabilizer chains on the q*m point representation of Aut(H(m,q)).
  std::size_t max_chain_degree = 32;
  /// Free unknowns allowed in an elimination problem after equality substitution.
  std::size_t max_free_unknowns = 12;
  /// Row cap during elimination; exceeding it yields an "undecided" verdict.
  std::size_t max_elimination_rows = 200'000;
};

}  // namespace ctc
