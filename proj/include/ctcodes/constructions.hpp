#pragma once

#include <vector>

#include "ctcodes/autgamma.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/permgroup.hpp"

namespace ctc {

/// The q constant words of length m.
Code rep_code(int m, int q);

/// (h,...,h) with h = (0 1) and trivial coordinate part, q = 2.
WreathElement diagonal_flip(int m);

/// {sigma : sigma even} ∪ {(h,...,h)sigma : sigma odd} in Aut(H(m,2)), m >= 3.
AutSubgroup example_group(int m);

/// Sym(m) / Alt(m) acting by coordinate permutations on H(m,q).
AutSubgroup coordinate_symmetric(int m, int q);
AutSubgroup coordinate_alternating(int m, int q);
/// Coordinate action of an arbitrary group on entries.
AutSubgroup coordinate_group(const PermGroup& group, int q);

/// Projective line over F_5 with labels inf -> 1, 0 -> 2, ..., 4 -> 6.
/// PSL(2,5) = <x+1, -1/x>, PGL(2,5) adds x -> 2x.
PermGroup psl25_on_6();
PermGroup pgl25_on_6();
/// Projective line over F_7 with labels inf -> 1, 0 -> 2, ..., 6 -> 8; <x+1, -1/x, 3x>.
PermGroup pgl27_on_8();

/// PSL(2,5) as coordinate elements together with the flip times x -> 2x, on H(6,2).
AutSubgroup twisted_pgl_group();
/// The 120 elements X_alpha ∪ g(H \ X_alpha), sorted.
std::vector<WreathElement> twisted_pgl_elements();

/// Translation by a binary word: g_i = (0 1) where the word is 1.
WreathElement translation(const Vertex& word);

/// The [7,4,3] Hamming code, coordinates labelled by the non-zero vectors of
/// F_2^3 (entry i is the binary expansion of i).
Code hamming7_code();
/// Translations by codewords with GL(3,2) on the coordinates (order 2688).
AutSubgroup hamming7_group();

/// First-order Reed-Muller code RM(1,3), coordinates labelled by F_2^3 (entry i is i-1).
Code reed_muller8_code();
/// Translations by codewords with AGL(3,2) on the coordinates (order 21504).
AutSubgroup reed_muller8_group();

/// Length-11 binary code of 24 words with minimum distance 5: zero, all-one,
/// the cyclic shifts of the quadratic-residue indicator mod 11 and their complements.
Code punctured_hadamard11();

}  // namespace ctc
