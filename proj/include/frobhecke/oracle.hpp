#pragma once

#include <string>
#include <vector>

#include "frobhecke/category.hpp"

namespace fh {

// Polynomial representation: tokens and dots act by left multiplication,
// each crossing by the superpermutation minus the divided difference.
// Degenerate variant only; VariantMismatch otherwise.
PolyElement poly_rep_apply(const WreathElement& u, const PolyElement& v);

// Compare the representation of a claimed product against the composite of
// the representations of u and v on the separating test vectors
// b * x_1^N x_2^(2N) ... x_n^(nN) over all tensor words b, with
// N = (max dot degree of u, v, claimed) + 1.
bool product_claim_check(const WreathElement& u, const WreathElement& v,
                         const WreathElement& claimed,
                         std::string* counterexample = nullptr);

// Claim check applied to the engine's own product u*v.
bool product_oracle_check(const WreathElement& u, const WreathElement& v,
                          std::string* counterexample = nullptr);

struct RelationResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Every defining relation of the level-zero algebra, evaluated through the
// multiplication engine; names are behavioral.
std::vector<RelationResult> relation_catalog_wreath(const FrobeniusAlgebra* A,
                                                    int n, Variant var, Rat z);

// Every defining relation of the higher-level category, evaluated through
// both the transport composition and the rewriting normalizer.
std::vector<RelationResult> relation_catalog_category(const Category& cat);

}  // namespace fh
