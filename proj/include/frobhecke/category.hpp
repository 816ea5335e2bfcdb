#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobhecke/diagram.hpp"

namespace fh {

// Images of the canonical diagrams of one Hom block under the collapse map,
// with the certified-regular diagonal coefficients.
struct PhiBasis {
  std::vector<Perm> matchings;                // all of S_d, fixed order
  std::map<Perm, WreathElement> image;        // w -> image of canonical diagram
  std::map<Perm, PolyElement> diagonal;       // w -> leading coefficient h_w
};

struct CycloIsoReport {
  bool cornerKernel = false;     // round trips through black-first objects die
  bool idealLeft = false;        // Q on strand 1 times samples reduces to 0
  bool idealRight = false;       // samples times Q on strand 1 reduce to 0
  bool dimensionMatch = false;   // window dimension matches the reduced count
  bool stabilized = false;       // dimension oracle stabilized at the bound
  long quotientDim = -1;
  long expectedDim = -1;
  bool ok() const {
    return cornerKernel && idealLeft && idealRight && dimensionMatch;
  }
};

// A fixed level/strand-count sector of the higher-level category: d black
// strands, red strands labeled by the pins.
class Category {
 public:
  Category(const FrobeniusAlgebra* A, Variant var, Rat z,
           std::vector<PolyElement> pins, int d);

  const FrobeniusAlgebra* algebra() const { return A_; }
  Variant variant() const { return var_; }
  const Rat& z() const { return z_; }
  int d() const { return d_; }
  int level() const { return (int)pins_.size(); }
  const std::vector<PolyElement>& pins() const { return pins_; }

  std::vector<ObjectWord> objects() const;

  // Collapse of a diagram word into the d-strand wreath algebra: black
  // crossings to crossings, right red-black crossings to pins, decorations to
  // dots/tokens at the black index of their slot.
  WreathElement phiWord(const ObjectWord& src, const DiagramWord& word) const;
  WreathElement phi(const Morphism& f) const;

  const PhiBasis& phiBasis(const ObjectWord& src,
                           const ObjectWord& tgt) const;  // RegularityFailure

  Morphism identity(const ObjectWord& obj) const;
  Morphism basisMorphism(const ObjectWord& src, const ObjectWord& tgt,
                         const Perm& w, const PolyElement& coeff) const;

  // Transport composition: multiply the collapsed images, then extract the
  // canonical coefficients by descending length; NonComposable if the middle
  // objects disagree, DivisionFailure if extraction leaves a remainder.
  Morphism compose(const Morphism& g, const Morphism& f) const;

  // Independent rewriting normalizer for arbitrary well-typed diagram words.
  Morphism normalizeDiagram(const ObjectWord& src, const DiagramWord& word) const;

  PathElement pathUnit() const;  // sum of all identity idempotents
  PathElement pathFromMorphism(const Morphism& f) const;
  PathElement pathMultiply(const PathElement& U, const PathElement& V) const;
  PathElement pathAdd(const PathElement& U, const PathElement& V) const;
  PathElement pathScale(const PathElement& U, const Rat& c) const;
  CenterResult centerMembershipPath(const PathElement& U) const;

  // Level-one cyclotomic comparison; LevelNotOne unless exactly one pin.
  CycloIsoReport cyclotomicIso(int dimension_bound) const;

  // Direct evaluation of the polynomial representation of a diagram word
  // (degenerate only; VariantMismatch otherwise).
  PolyElement higherRepApply(const ObjectWord& src, const DiagramWord& word,
                             const PolyElement& v) const;
  PolyElement higherRepApply(const Morphism& f, const PolyElement& v) const;

 private:
  const FrobeniusAlgebra* A_;
  Variant var_;
  Rat z_;
  std::vector<PolyElement> pins_;
  int d_;
  mutable std::map<std::pair<ObjectWord, ObjectWord>, PhiBasis> cache_;

  Morphism extract(const ObjectWord& src, const ObjectWord& tgt,
                   WreathElement E) const;
};

}  // namespace fh
