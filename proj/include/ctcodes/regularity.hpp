#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctcodes/hamming.hpp"
#include "ctcodes/limits.hpp"

namespace ctc {

/// counts[k] = |Gamma_k(vertex) ∩ C| for k = 0..m.
struct OuterRow {
  Vertex vertex;
  std::vector<std::uint64_t> counts;
};

OuterRow outer_row(const Vertex& gamma, const Code& code);

/// Two vertices of the same part whose rows differ first at `k`.
struct RegularityWitness {
  int part = 0;
  Vertex first;
  Vertex second;
  int k = 0;
};

struct RegularityVerdict {
  /// Largest s with every part C_0..C_s sharing one row; -1 if C_0 already fails.
  int level = -1;
  int covering_radius = 0;
  bool completely_regular = false;
  /// The common row of C_i for i = 0..level.
  std::vector<std::vector<std::uint64_t>> shared_rows;
  std::optional<RegularityWitness> witness;
};

/// Stops at the first part with two distinct rows.
RegularityVerdict regularity(const Code& code, const Limits& limits = {});
int s_regularity_level(const Code& code, const Limits& limits = {});
bool is_completely_regular(const Code& code, const Limits& limits = {});

}  // namespace ctc
