#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/limits.hpp"
#include "ctcodes/permutation.hpp"

namespace ctc {

/// Sorted set of 1-based points.
using PointSet = std::vector<Point>;

namespace detail {
class StabilizerChain;
}

/// A permutation group given by generators, with a lazily built
/// base-and-strong-generating-set (deterministic base 1, 2, 3, ...).
///
/// Points in this interface are 1-based: {1, ..., degree}. Copies share the
/// chain, which is built once under `std::call_once`, so a group may be
/// queried from several threads.
class PermGroup {
 public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  BigInt order() const;
  /// Sifts through the chain. Throws DomainError on degree mismatch.
  bool contains(const Permutation& p) const;
  /// Base points of the chain (1-based).
  std::vector<Point> base() const;

  PointSet orbit(Point point) const;
  std::vector<PointSet> orbits() const;
  bool is_transitive() const;

  PermGroup point_stabilizer(Point point) const;
  /// {x : subset^x = subset}. Throws ResourceError above `limits.max_setwise_degree`.
  PermGroup setwise_stabilizer(const PointSet& subset, const Limits& limits = {}) const;

  /// Orbits on k-subsets; each orbit sorted, orbits ordered by first member.
  std::vector<std::vector<PointSet>> orbits_on_ksubsets(std::size_t k, const Limits& limits = {}) const;
  bool is_k_homogeneous(std::size_t k, const Limits& limits = {}) const;
  bool is_k_transitive(std::size_t k, const Limits& limits = {}) const;

  /// Every element, by closure under the generators. ResourceError above `limits.max_orbit`.
  std::vector<Permutation> elements(const Limits& limits = {}) const;

 private:
  const detail::StabilizerChain& chain() const;
  void check_point(Point point) const;

  struct ChainHolder;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainHolder> holder_;
};

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);

/// Writes `degree n` then one generator per line in 1-based cycle notation.
void write_group(std::ostream& out, const PermGroup& group);
/// Reads the group file format: first non-comment line `degree n`, then one
/// permutation per line; `#` starts a comment.
PermGroup read_group(std::istream& in);

}  // namespace ctc
