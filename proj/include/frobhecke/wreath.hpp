#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobhecke/poly.hpp"

namespace fh {

// Element of the n-strand affine wreath algebra (degenerate) or its Hecke
// deformation (quantum, parameter z), stored in normal form: a finite map
// permutation -> polynomial left coefficient.
class WreathElement {
 public:
  WreathElement() = default;
  WreathElement(const FrobeniusAlgebra* A, int n, Variant var, Rat z = Rat(0));

  static WreathElement zero(const FrobeniusAlgebra* A, int n, Variant var,
                            Rat z = Rat(0));
  static WreathElement unit(const FrobeniusAlgebra* A, int n, Variant var,
                            Rat z = Rat(0));
  static WreathElement fromPol(const PolyElement& p, Rat z = Rat(0));
  static WreathElement crossing(const FrobeniusAlgebra* A, int n, Variant var,
                                int i, Rat z = Rat(0));

  const FrobeniusAlgebra* algebra() const { return A_; }
  int n() const { return n_; }
  Variant variant() const { return var_; }
  const Rat& z() const { return z_; }
  const std::map<Perm, PolyElement>& terms() const { return t_; }

  void addTerm(const Perm& w, const PolyElement& p);
  bool isZero() const { return t_.empty(); }
  bool operator==(const WreathElement& o) const;
  WreathElement operator+(const WreathElement& o) const;
  WreathElement operator-(const WreathElement& o) const;
  WreathElement scale(const Rat& c) const;

  // Left multiplication by a polynomial (exact, no correction terms).
  WreathElement lmulPol(const PolyElement& f) const;

  // Right multiplication primitives by a single generator.
  WreathElement rmulToken(int slot, const Vec& vec) const;
  WreathElement rmulDot(int slot, long e) const;  // InverseDotInDegenerate
  WreathElement rmulCrossing(int i) const;

  WreathElement multiply(const WreathElement& v) const;  // VariantMismatch

  long maxAbsDegree() const;

 private:
  const FrobeniusAlgebra* A_ = nullptr;
  int n_ = 0;
  Variant var_ = Variant::Degenerate;
  Rat z_ = Rat(0);
  std::map<Perm, PolyElement> t_;

  void requireCompatible(const WreathElement& o) const;
  // Normal form of (basis crossing word of w) * x_slot^(+-1).
  WreathElement sigmaDot(const Perm& w, int slot, int e) const;
};

struct CenterResult {
  bool accepted = false;
  std::string reason;
};
// True iff every permutation component is the identity and the polynomial
// part is symmetric and supercentral.
CenterResult center_membership(const WreathElement& u);

// Strand-wise rewriting modulo the two-sided ideal generated by Q placed on
// the first strand; Q is a one-strand polynomial, monic of degree level >= 1
// with unit leading coefficient (NotMonic otherwise).
class CyclotomicReducer {
 public:
  CyclotomicReducer(const FrobeniusAlgebra* A, int n, Variant var, Rat z,
                    const PolyElement& Q);

  int level() const { return level_; }
  const PolyElement& pin() const { return Q_; }
  WreathElement reduce(const WreathElement& u) const;  // NonTermination guard
  // Q placed on strand j (0-based) as a wreath element.
  WreathElement pinAt(int j) const;

 private:
  const FrobeniusAlgebra* A_;
  int n_;
  Variant var_;
  Rat z_;
  PolyElement Q_;
  int level_;
  std::vector<WreathElement> sub_;  // degenerate: substitute for x_j^level
  // Quantum only: inverse of (left-multiply by X_j, then reduce) on the
  // reduced window, used to clear negative exponents.
  mutable std::vector<Mat> linv_;
  std::vector<std::pair<PolyKey, Perm>> windowBasis_;

  PolyElement pinPolAt(int j) const;
  // Strand-wise rewriting; degenerate variant only (each substitution
  // strictly lowers total dot degree there).
  WreathElement reduceDegenerate(WreathElement u) const;
  // Quantum: eliminate high monomials against the ideal row space inside a
  // degree window, growing the window until the residue is reduced.
  WreathElement reduceWindow(const WreathElement& u) const;
  WreathElement reduceNonNegative(const WreathElement& u) const;
};

struct QuotientDimResult {
  long dimLow = 0;   // at degree_bound - 1
  long dimHigh = 0;  // at degree_bound
  bool stabilized = false;
};
// Brute-force dimension of the window spanned by normal-form basis elements
// modulo the two-sided ideal generated by Q on strand 1, via exact row
// reduction; BoundTooSmall is reported through stabilized=false, not thrown.
QuotientDimResult quotient_dim_oracle(const FrobeniusAlgebra* A, int n,
                                      const PolyElement& Q, Variant var, Rat z,
                                      int degree_bound);

}  // namespace fh
