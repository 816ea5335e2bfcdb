#pragma once

#include <optional>
#include <vector>

#include "frobhecke/common.hpp"

namespace fh {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Mat mat_identity(size_t n) {
  Mat m(n, Vec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline bool mat_is_identity(const Mat& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != Rat(i == j ? 1 : 0)) return false;
  return true;
}

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Mat> mat_inverse(Mat a);

// Solve a*x = b for square a; nullopt when singular.
std::optional<Vec> mat_solve(Mat a, Vec b);

// Row rank of an arbitrary rectangular matrix.
size_t mat_rank(Mat rows);

Mat mat_mul(const Mat& a, const Mat& b);

// Row vector times matrix: out[j] = sum_i v[i]*m[i][j].
Vec vec_mat(const Vec& v, const Mat& m);

}  // namespace fh
