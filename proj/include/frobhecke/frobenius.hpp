#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobhecke/common.hpp"
#include "frobhecke/linalg.hpp"

namespace fh {

// Raw structure data for a finite-dimensional superalgebra with trace.
struct AlgebraData {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> parity;        // 0/1 per basis element
  Vec unit;                       // coefficients of 1 in the basis
  std::vector<std::vector<Vec>> mult;  // mult[i][j][k]: b_i b_j = sum_k c b_k
  Vec trace;
};

// Validated algebra with cached bilinear-form data. Immutable.
class FrobeniusAlgebra {
 public:
  // Checks associativity, unitality, parity-additivity, trace homogeneity,
  // and form nondegeneracy; populates the caches. Throws on any failure.
  static FrobeniusAlgebra validate(const AlgebraData& raw);

  const std::string& name() const { return d_.name; }
  int dim() const { return d_.dim; }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const std::vector<int>& parity() const { return d_.parity; }
  const Vec& unit() const { return d_.unit; }
  const Vec& trace() const { return d_.trace; }
  int eps() const { return eps_; }
  bool symmetric() const { return sym_; }
  const Mat& gram() const { return gram_; }
  // Row i holds the coefficients of the left dual of b_i.
  const Mat& dual() const { return dual_; }
  const Mat& nakayama() const { return psi_; }
  const Mat& nakayamaInv() const { return psiInv_; }

  Vec basisVec(int i) const;
  Vec dualVec(int i) const;
  Vec mulVec(const Vec& a, const Vec& b) const;
  Rat trVec(const Vec& v) const;
  Vec psiVec(Vec v, long power = 1) const;
  // -1 when absent.
  int labelIndex(const std::string& lab) const;
  // Left and right multiplication both injective.
  bool isRegular(const Vec& a) const;
  std::optional<Vec> invert(const Vec& a) const;
  // -1 when mixed parity, else 0/1.
  int vecParity(const Vec& v) const;
  const AlgebraData& data() const { return d_; }

 private:
  FrobeniusAlgebra() = default;
  AlgebraData d_;
  Mat gram_, dual_, psi_, psiInv_;
  int eps_ = 0;
  bool sym_ = false;
};

struct TraceChange {
  Vec u;          // tr'(a) = tr(a u)
  int epsPrime;
  Mat psiPrime;   // automorphism for the new trace
};

// New trace for the same underlying product; u must come out homogeneous
// and invertible, else NoSolution.
TraceChange change_trace(const FrobeniusAlgebra& a, const Vec& tprime);

// Names: ground, clifford_even, clifford_odd, grassmann, group:c2,
// group:c3, group:s3.
FrobeniusAlgebra builtin_algebra(const std::string& name);

// Group algebra from a Cayley table (table[i][j] = index of g_i g_j),
// trace picking the identity coefficient. Throws BadCayleyTable.
FrobeniusAlgebra group_algebra(const std::vector<std::vector<int>>& table,
                               const std::vector<std::string>& labels,
                               const std::string& name = "group");

AlgebraData algebra_from_json_text(const std::string& text);
AlgebraData algebra_from_json_file(const std::string& path);
std::string algebra_to_json_text(const AlgebraData& d);

// "builtin:NAME" or a JSON file path.
FrobeniusAlgebra load_algebra(const std::string& spec);

}  // namespace fh
