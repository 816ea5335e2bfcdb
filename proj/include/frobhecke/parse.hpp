#pragma once

#include <string>

#include "frobhecke/diagram.hpp"

namespace fh {

// Element grammar (shared by polynomial and wreath contexts):
//   element := [sign] term (("+"|"-") term)*
//   term    := [rational "*"] ["(" label ("|" label)* ")"] dot* cross*
//   dot     := ("x"|"X") [index] ["^" int]     (index optional when n = 1)
//   cross   := ("s"|"T") index                 (wreath context only)
// Lowercase x/s mark the degenerate variant, uppercase X/T the quantum one;
// a bare rational denotes that multiple of the unit. Indices are 1-based.
PolyElement parse_pol(const std::string& text, const FrobeniusAlgebra* A,
                      int n, Variant var);
WreathElement parse_wreath(const std::string& text, const FrobeniusAlgebra* A,
                           int n, Variant var, const Rat& z);

// Canonical serializations: terms sorted by (exponent vector, tensor word),
// permutations by (length, one-line word); every coefficient printed.
std::string pol_to_string(const PolyElement& p);
std::string wreath_to_string(const WreathElement& u);

// Object words: "[. Q1 . Q2]" with "." black and "Qr" the red labeled r.
ObjectWord parse_object_word(const std::string& text, int level);
std::string object_to_string(const ObjectWord& obj);

// Diagram words: semicolon-separated layers, bottom to top, 1-based slots:
// "xRB@2;s@1;dot@1;idot@2;tok(c)@1;s-@1".
DiagramWord parse_diagram_word(const std::string& text,
                               const FrobeniusAlgebra* A, Variant var);
std::string diagram_to_string(const DiagramWord& word,
                              const FrobeniusAlgebra* A);

// Permutations as 1-based one-line words: "w[2,1,3]".
std::string perm_to_string(const Perm& w);
std::string morphism_to_string(const Morphism& f);

}  // namespace fh
