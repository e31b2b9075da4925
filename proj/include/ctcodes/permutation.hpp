#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctc {

using Point = std::uint32_t;

/// A bijection of {0,...,n-1}, stored by images.
///
/// Composition follows the right-action convention used throughout the
/// library: `(x * y)(p) == y(x(p))`, i.e. p^(xy) = (p^x)^y. Text forms carry
/// an explicit base (1 for coordinate/point permutations, 0 for alphabet
/// permutations).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws DomainError unless `images` is a bijection of {0,...,n-1}.
  static Permutation from_images(std::vector<Point> images);
  /// Cycles are 0-based; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  static Permutation transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  /// Apply `*this` first, then `rhs`.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_even() const;
  /// Non-trivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Smallest point moved, or degree() when the identity.
  Point first_moved() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images, int /*unchecked*/) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Cycle notation with points shifted by `base`; identity prints as "()".
std::string to_cycle_string(const Permutation& p, int base);
/// Image notation "[2,3,1]" with points shifted by `base`.
std::string to_image_string(const Permutation& p, int base);

/// Parses cycle notation `(1 2 3)(4 5)`, `()` or image notation `[2,3,1]`.
/// `degree == 0` infers the degree (largest point for cycles, length for
/// images). Throws ParseError (line 0) on malformed text.
Permutation parse_permutation(std::string_view text, std::size_t degree, int base);

}  // namespace ctc
