#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/permutation.hpp"

namespace ctc::detail {

/// Incremental deterministic Schreier-Sims over 0-based points.
///
/// Base points are appended in order of need, each the smallest point moved
/// by the new strong generator, so identical generator sequences always give
/// identical chains.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  /// Adds `g`; returns false (and changes nothing) when `g` is already a member.
  bool add_generator(const Permutation& g);
  bool contains(const Permutation& g) const;
  BigInt order() const;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point p) const { return levels_[level].slot[p] >= 0; }
  /// u with base_point(level)^u == p.
  const Permutation& transversal(std::size_t level, Point p) const;
  const std::vector<Permutation>& strong_generators(std::size_t level) const { return levels_[level].gens; }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;  // point -> index into reps, -1 if outside the orbit
    std::vector<Permutation> reps;
    std::vector<Permutation> inv_reps;
  };

  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  void append_level(Point base);
  void complete(std::size_t from_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace ctc::detail
