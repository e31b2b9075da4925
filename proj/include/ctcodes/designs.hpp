#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/limits.hpp"
#include "ctcodes/permgroup.hpp"

namespace ctc {

/// Blocks are sorted k-subsets of {1..points}; repeated blocks allowed.
class Design {
 public:
  /// DomainError on non-uniform block sizes or points outside 1..m.
  Design(int points, std::vector<PointSet> blocks);
  Design(int points, int block_size, std::vector<PointSet> blocks);

  int points() const noexcept { return points_; }
  int block_size() const noexcept { return k_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<PointSet>& blocks() const noexcept { return blocks_; }

  /// Multiset equality.
  friend bool operator==(const Design& a, const Design& b);

 private:
  int points_;
  int k_;
  std::vector<PointSet> blocks_;
};

/// lambda when every t-subset lies in the same number of blocks.
std::optional<std::uint64_t> is_t_design(const Design& design, int t, const Limits& limits = {});
/// lambda when every weight-t vertex is covered by the same number of members.
/// DomainError on mixed weights or an empty set.
std::optional<std::uint64_t> qary_t_design_lambda(const std::vector<Vertex>& members, int t, int q,
                                                  const Limits& limits = {});
/// Supports of weight-k vertices as blocks.
Design support_design(const std::vector<Vertex>& members, int m);

/// PreconditionError with fewer than 2 blocks.
std::set<int> block_intersection_numbers(const Design& design);
Design complement_design(const Design& design);

struct VerifiedDesign {
  Design design;
  int t = 0;
  std::optional<std::uint64_t> lambda;
};
/// The G-orbit of `block`, checked as a t-design.
VerifiedDesign orbit_design(const PermGroup& group, const PointSet& block, int t, const Limits& limits = {});

/// b >= m. PreconditionError unless the design is a 2-design with k < m.
bool fisher_holds(const Design& design, const Limits& limits = {});

struct TwoDesignParams {
  Rational r;
  Rational b;
  bool r_integral = false;
  bool b_integral = false;
};
/// r = lambda(m-1)/(k-1), b = lambda m(m-1)/(k(k-1)). DomainError unless 2 <= k < m.
TwoDesignParams two_design_params(int m, int k, const BigInt& lambda);

/// For a fixed block of a 2-(m,k,lambda) design whose other blocks meet it in
/// 0..s points (s <= 2), the forced counts n_0..n_s from
/// sum n_i = b-1, sum i n_i = k(r-1), sum C(i,2) n_i = C(k,2)(lambda-1).
struct IntersectionCounts {
  std::vector<Rational> counts;
  bool admissible = false;  // all non-negative integers
};
IntersectionCounts forced_intersection_counts(int m, int k, const BigInt& lambda, int s);

/// Order of the stabilizer of the block set in Sym(m), via the induced action
/// on k-subsets. ResourceError unless C(m,k) <= max_setwise_degree; the design must be simple.
BigInt design_automorphism_order(const Design& design, const Limits& limits = {});

/// `m k` header, then one block per line as space-separated points.
void write_design(std::ostream& out, const Design& design);
Design read_design(std::istream& in);

}  // namespace ctc
