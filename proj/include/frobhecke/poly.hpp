#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobhecke/frobenius.hpp"
#include "frobhecke/perm.hpp"

namespace fh {

enum class Variant { Degenerate, Quantum };

// One basis monomial b_{i_1} x ... x b_{i_n} * dots^exp.
struct PolyKey {
  std::vector<int> idx;
  std::vector<long> exp;
  auto operator<=>(const PolyKey&) const = default;
};

// Element of the n-strand dot-decorated tensor algebra over A.
// Degenerate variant: exponents in N. Quantum variant: exponents in Z.
class PolyElement {
 public:
  PolyElement() = default;
  PolyElement(const FrobeniusAlgebra* A, int n, Variant var);

  static PolyElement zero(const FrobeniusAlgebra* A, int n, Variant var);
  static PolyElement unit(const FrobeniusAlgebra* A, int n, Variant var);
  // Token: vec placed on the given strand, unit elsewhere.
  static PolyElement token(const FrobeniusAlgebra* A, int n, Variant var,
                           int slot, const Vec& vec);
  // Dot x_slot^e (0-based slot).
  static PolyElement dot(const FrobeniusAlgebra* A, int n, Variant var,
                         int slot, long e = 1);

  const FrobeniusAlgebra* algebra() const { return A_; }
  int n() const { return n_; }
  Variant variant() const { return var_; }
  const std::map<PolyKey, Rat>& terms() const { return t_; }

  void addTerm(std::vector<int> idx, std::vector<long> exp, const Rat& c);
  bool isZero() const { return t_.empty(); }
  bool operator==(const PolyElement& o) const;
  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement operator*(const PolyElement& o) const;  // MixedVariant
  PolyElement scale(const Rat& c) const;

  // Parity of a tensor word (sum of factor parities mod 2).
  int wordParity(const std::vector<int>& idx) const;
  // Full term parity: word parity plus eps * (exponent sum) in the degenerate
  // variant; dots are even in the quantum variant.
  int termParity(const PolyKey& k) const;

  // Adjacent-transposition superaction and the full superpermutation action.
  PolyElement superpermuteS(int i) const;
  PolyElement superpermute(const Perm& w) const;

  long maxAbsDegree() const;

 private:
  const FrobeniusAlgebra* A_ = nullptr;
  int n_ = 0;
  Variant var_ = Variant::Degenerate;
  std::map<PolyKey, Rat> t_;

  void requireCompatible(const PolyElement& o) const;
  void mulTermInto(PolyElement& out, const std::vector<int>& ia,
                   const std::vector<long>& ea, const std::vector<int>& ib,
                   const std::vector<long>& eb, const Rat& coef) const;
};

// t_{i,j} = sum_b (-1)^(eps*par b) b_i (b^dual)_j, 0-based slots i != j.
PolyElement teleporter(const FrobeniusAlgebra* A, int n, Variant var, int i,
                       int j);

// Divided-difference operator at crossing i (0-based), degenerate variant.
PolyElement demazure(int i, const PolyElement& f);
// Laurent analogue at crossing i, quantum variant.
PolyElement delta(int i, const PolyElement& f);

struct PinCheckResult {
  bool ok = false;
  bool inconclusive = false;  // central and even but regularity test failed
  std::string reason;
};
// Membership test for red-strand labels: every term even, every dot
// coefficient central in the base, leading (and for Laurent elements
// trailing) dot coefficient regular in A. n must be 1.
PinCheckResult pin_check(const PolyElement& f);

// Given h with regular leading slice, return g with g*h = f; NotDivisible
// if no exact quotient exists.
PolyElement exact_divide(const PolyElement& f, const PolyElement& h);

bool is_symmetric_central(const PolyElement& f);

}  // namespace fh
