#include "ctcodes/regularity.hpp"

#include "ctcodes/errors.hpp"

namespace ctc {

namespace {

std::vector<std::uint64_t> row_counts(const Vertex& gamma, const Code& code) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.length()) + 1, 0);
  for (const auto& w : code.words()) ++counts[static_cast<std::size_t>(hamming_distance(gamma, w))];
  return counts;
}

}  // namespace

OuterRow outer_row(const Vertex& gamma, const Code& code) {
  code.space().check(gamma);
  return {gamma, row_counts(gamma, code)};
}

RegularityVerdict regularity(const Code& code, const Limits& limits) {
  const auto& partition = code.distance_partition(limits);
  const auto& space = code.space();
  RegularityVerdict verdict;
  verdict.covering_radius = partition.covering_radius();
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const auto& part = partition.parts[i];
    const Vertex first = space.decode(part.front());
    const auto row = row_counts(first, code);
    for (std::size_t j = 1; j < part.size(); ++j) {
      const Vertex other = space.decode(part[j]);
      const auto r = row_counts(other, code);
      if (r == row) continue;
      std::size_t k = 0;
      while (r[k] == row[k]) ++k;
      verdict.witness = RegularityWitness{static_cast<int>(i), first, other, static_cast<int>(k)};
      return verdict;
    }
    verdict.level = static_cast<int>(i);
    verdict.shared_rows.push_back(row);
  }
  verdict.completely_regular = true;
  return verdict;
}

int s_regularity_level(const Code& code, const Limits& limits) { return regularity(code, limits).level; }

bool is_completely_regular(const Code& code, const Limits& limits) {
  return regularity(code, limits).completely_regular;
}

}  // namespace ctc
