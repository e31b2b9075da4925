#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctcodes/autgamma.hpp"
#include "ctcodes/exact.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/limits.hpp"

namespace ctc {

struct PartOrbitStatus {
  int part = 0;
  std::size_t part_size = 0;
  bool single_orbit = false;
  /// Orbit sizes in order of their least vertex; empty when C is not X-invariant.
  std::vector<std::size_t> orbit_sizes;
  /// The seed and the least vertex of the part outside its orbit.
  std::optional<std::pair<Vertex, Vertex>> split_witness;
};

struct TransitivityVerdict {
  /// Largest s with C_0..C_s single X-orbits; -1 when C_0 is not an orbit.
  int level = -1;
  int covering_radius = 0;
  bool completely_transitive = false;
  bool code_invariant = false;
  std::vector<PartOrbitStatus> parts;
};

/// Examines every part; orbits are closures of the least vertex of each part.
TransitivityVerdict transitivity(const Code& code, const AutSubgroup& group, const Limits& limits = {});
int neighbour_transitivity_level(const Code& code, const AutSubgroup& group, const Limits& limits = {});
bool is_completely_transitive(const Code& code, const AutSubgroup& group, const Limits& limits = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// For alpha the least codeword and i = 1..min(s, floor((delta-1)/2)): X_alpha
/// transitive on Gamma_i(alpha) and mu(X_alpha) i-homogeneous.
/// PreconditionError if |C| < 2 or s exceeds the verified level.
std::vector<Check> check_stabilizer_homogeneity(const Code& code, const AutSubgroup& group, int s,
                                                const Limits& limits = {});

/// X_I transitive on C. PreconditionError unless |I| <= min(level, floor((delta-1)/2)).
bool check_entry_stabilizer_transitive_on_code(const Code& code, const AutSubgroup& group, const PointSet& entries,
                                               const Limits& limits = {});

struct CountingBound {
  Rational lower;  // q^m / (m+1)
  BigInt order;
  bool holds = false;
  /// m >= 5 and X ∩ B = 1, so |X| <= m!.
  bool refinement_applies = false;
  bool refinement_holds = true;  // q <= m-2
};

/// q^m/(m+1) <= order.
bool counting_bound_holds(int m, int q, const BigInt& order);
CountingBound counting_bound(const Code& code, const AutSubgroup& group, const Limits& limits = {});
/// (m-1)^m <= (m+1)!, true exactly for m <= 4.
bool factorial_edge_holds(int m);

}  // namespace ctc
