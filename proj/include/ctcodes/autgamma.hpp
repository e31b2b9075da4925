#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

#include "ctcodes/exact.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/limits.hpp"
#include "ctcodes/permgroup.hpp"

namespace ctc {

/// An automorphism g*sigma of H(m,q): alphabet permutations g_1..g_m (on the
/// 0-based alphabet) followed by a coordinate permutation sigma (on entries).
///
/// Acting on a vertex, entry sigma(j) of the image is g_j(alpha_j); equivalently
/// entry i is alpha_{i^{sigma^-1}} moved by g_{i^{sigma^-1}}.
class WreathElement {
 public:
  WreathElement(std::vector<Permutation> alphabet_perms, Permutation coord_perm);

  static WreathElement identity(int m, int q);
  /// Pure coordinate permutation (B-part trivial).
  static WreathElement coordinate(const Permutation& sigma, int q);
  /// (h, ..., h) with trivial coordinate part.
  static WreathElement diagonal(const Permutation& h, int m);

  int length() const noexcept { return static_cast<int>(alphabet_.size()); }
  int alphabet_size() const noexcept { return static_cast<int>(alphabet_.front().degree()); }
  const std::vector<Permutation>& alphabet_perms() const noexcept { return alphabet_; }
  const Permutation& coord_perm() const noexcept { return coord_; }

  Vertex apply(const Vertex& v) const;
  /// `*this` first, then `rhs`: v^(xy) = (v^x)^y.
  WreathElement operator*(const WreathElement& rhs) const;
  WreathElement inverse() const;
  bool is_identity() const;
  bool fixes_zero() const;

  /// Action on Omega = Q x M, point (a, i) numbered (i-1)*q + a.
  Permutation to_omega() const;
  static WreathElement from_omega(const Permutation& p, int m, int q);

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;

 private:
  std::vector<Permutation> alphabet_;
  Permutation coord_;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement& x) const noexcept;
};

/// mu: g*sigma -> sigma.
Permutation mu(const WreathElement& x);
/// phi_i: g*sigma -> g_i on the stabilizer of entry i (1-based). PreconditionError if sigma moves i.
Permutation phi(const WreathElement& x, int entry);

/// supp(v^x) == supp(v)^sigma for x fixing the zero vertex; PreconditionError otherwise.
bool support_transport_check(const WreathElement& x, const Vertex& v);

/// The image code C^x.
Code apply(const WreathElement& x, const Code& code);
bool is_code_automorphism(const WreathElement& x, const Code& code);

/// X <= Aut(H(m,q)) given by generators, with its faithful representation on
/// Omega = Q x M (degree q*m) and the entry action mu(X) kept side by side.
class AutSubgroup {
 public:
  AutSubgroup(int m, int q, std::vector<WreathElement> generators);

  int length() const noexcept { return m_; }
  int alphabet_size() const noexcept { return q_; }
  const std::vector<WreathElement>& generators() const noexcept { return generators_; }
  const PermGroup& omega_group() const noexcept { return omega_; }
  const PermGroup& mu_image() const noexcept { return mu_; }

  /// |X|: stabilizer chain on Omega when q*m <= max_chain_degree, otherwise
  /// explicit enumeration bounded by max_orbit.
  BigInt order(const Limits& limits = {}) const;
  bool contains(const WreathElement& x, const Limits& limits = {}) const;
  /// Orbit of a vertex under the generators, sorted. ResourceError past max_orbit.
  std::vector<Vertex> orbit(const Vertex& v, const Limits& limits = {}) const;

 private:
  int m_;
  int q_;
  std::vector<WreathElement> generators_;
  PermGroup omega_;
  PermGroup mu_;
};

/// X^y = y^-1 X y.
AutSubgroup conjugate(const AutSubgroup& group, const WreathElement& y);

/// True iff X meets the base group trivially, i.e. |X| == |mu(X)|.
bool kernel_on_entries_trivial(const AutSubgroup& group, const Limits& limits = {});

/// X_v via Schreier generators.
AutSubgroup vertex_stabilizer(const AutSubgroup& group, const Vertex& v, const Limits& limits = {});
/// X_i = {g*sigma : i^sigma = i}, entry 1-based.
AutSubgroup entry_stabilizer(const AutSubgroup& group, int entry, const Limits& limits = {});
/// X_I, setwise stabilizer of a set of entries (1-based).
AutSubgroup entry_set_stabilizer(const AutSubgroup& group, const PointSet& entries, const Limits& limits = {});
/// X_i^Q = phi_i(X_i), a group on the q-letter alphabet (points 1..q stand for symbols 0..q-1).
PermGroup induced_alphabet_group(const AutSubgroup& group, int entry, const Limits& limits = {});

struct Normalization {
  WreathElement element;
  Code image;
};

/// Constructive normal form: for alpha, beta in C at minimum distance, returns
/// x with alpha^x = (a,...,a) and every gamma in Diff(alpha,beta,C) sent to
/// (c^delta, a^(m-delta)), c != a. Choices are lexicographically least, so the
/// output is deterministic. The result is checked before returning.
Normalization normalize_code(const Code& code, const Vertex& alpha, const Vertex& beta, Symbol a);

/// Automorphism file: optional `m q` header, then one element per line as
/// `sigma := <perm> | g := <perm>,...,<perm>` (sigma 1-based, alphabet 0-based),
/// `g := const <perm>` for diagonal elements; either half may be omitted.
void write_aut_group(std::ostream& out, const AutSubgroup& group);
AutSubgroup read_aut_group(std::istream& in, int m, int q);

}  // namespace ctc
