#include "frobhecke/frobenius.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "frobhecke/perm.hpp"
#include "json.hpp"

namespace fh {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotAssociative: return "NotAssociative";
    case Err::NoUnit: return "NoUnit";
    case Err::ParityViolation: return "ParityViolation";
    case Err::DegenerateTrace: return "DegenerateTrace";
    case Err::InhomogeneousTrace: return "InhomogeneousTrace";
    case Err::BadCayleyTable: return "BadCayleyTable";
    case Err::NoSolution: return "NoSolution";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::MixedVariant: return "MixedVariant";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::WrongVariant: return "WrongVariant";
    case Err::VariantMismatch: return "VariantMismatch";
    case Err::InverseDotInDegenerate: return "InverseDotInDegenerate";
    case Err::NotDivisible: return "NotDivisible";
    case Err::RegularityInconclusive: return "RegularityInconclusive";
    case Err::NotMonic: return "NotMonic";
    case Err::NonTermination: return "NonTermination";
    case Err::BoundTooSmall: return "BoundTooSmall";
    case Err::IncompatibleObjects: return "IncompatibleObjects";
    case Err::RegularityFailure: return "RegularityFailure";
    case Err::NonComposable: return "NonComposable";
    case Err::DivisionFailure: return "DivisionFailure";
    case Err::IllTypedWord: return "IllTypedWord";
    case Err::LevelNotOne: return "LevelNotOne";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownLabel: return "UnknownLabel";
  }
  return "UnknownError";
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) fail(Err::SyntaxError, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(boost::multiprecision::cpp_int(s));
    }
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) fail(Err::SyntaxError, "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const FhError&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::SyntaxError, "bad rational '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- linalg

std::optional<Mat> mat_inverse(Mat a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rat(0));
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    Rat pv = a[c][c];
    for (auto& v : a[c]) v /= pv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Mat out(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::optional<Vec> mat_solve(Mat a, Vec b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    Rat pv = a[c][c];
    for (auto& v : a[c]) v /= pv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = 0; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Vec out(n);
  for (size_t i = 0; i < n; ++i) out[i] = a[i][n];
  return out;
}

size_t mat_rank(Mat rows) {
  if (rows.empty()) return 0;
  size_t rk = 0, width = rows[0].size();
  for (size_t c = 0; c < width && rk < rows.size(); ++c) {
    size_t p = rk;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rk], rows[p]);
    Rat pv = rows[rk][c];
    for (auto& v : rows[rk]) v /= pv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][c] == 0) continue;
      Rat f = rows[r][c];
      for (size_t j = 0; j < width; ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  Mat out(n, Vec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  Vec out(m[0].size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

// ---------------------------------------------------------------- perms

Perm perm_identity(int n) {
  Perm w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  return w;
}

bool perm_is_identity(const Perm& w) {
  for (int i = 0; i < (int)w.size(); ++i)
    if (w[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  Perm out(u.size());
  for (size_t k = 0; k < u.size(); ++k) out[k] = u[v[k]];
  return out;
}

Perm perm_inverse(const Perm& w) {
  Perm out(w.size());
  for (size_t k = 0; k < w.size(); ++k) out[w[k]] = (int)k;
  return out;
}

Perm perm_s(int n, int i) {
  Perm w = perm_identity(n);
  std::swap(w[i], w[i + 1]);
  return w;
}

int perm_len(const Perm& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

std::vector<int> reduced_word(const Perm& w0) {
  Perm w = w0;
  std::vector<int> rw;
  for (;;) {
    int d = -1;
    for (int i = 0; i + 1 < (int)w.size(); ++i)
      if (w[i] > w[i + 1]) { d = i; break; }
    if (d < 0) break;
    rw.push_back(d);
    std::swap(w[d], w[d + 1]);
  }
  std::reverse(rw.begin(), rw.end());
  return rw;
}

std::vector<Perm> all_perms(int n) {
  Perm w = perm_identity(n);
  std::vector<Perm> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------- algebra

FrobeniusAlgebra FrobeniusAlgebra::validate(const AlgebraData& raw) {
  if (raw.dim < 1) fail(Err::NoUnit, "dim must be at least 1");
  int m = raw.dim;
  if ((int)raw.labels.size() != m || (int)raw.parity.size() != m ||
      (int)raw.unit.size() != m || (int)raw.trace.size() != m ||
      (int)raw.mult.size() != m)
    fail(Err::SyntaxError, "algebra data sizes disagree with dim");
  for (auto& row : raw.mult) {
    if ((int)row.size() != m) fail(Err::SyntaxError, "mult table not dim x dim");
    for (auto& cell : row)
      if ((int)cell.size() != m) fail(Err::SyntaxError, "mult entry wrong length");
  }
  {
    std::set<std::string> seen(raw.labels.begin(), raw.labels.end());
    if ((int)seen.size() != m) fail(Err::SyntaxError, "duplicate basis labels");
  }
  for (int p : raw.parity)
    if (p != 0 && p != 1) fail(Err::ParityViolation, "parity entries must be 0 or 1");

  FrobeniusAlgebra A;
  A.d_ = raw;

  auto mul = [&](const Vec& a, const Vec& b) { return A.mulVec(a, b); };
  // Parity additivity of the structure constants.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (raw.mult[i][j][k] != 0 &&
            raw.parity[k] != (raw.parity[i] + raw.parity[j]) % 2)
          fail(Err::ParityViolation,
               "product of basis " + std::to_string(i) + "," + std::to_string(j) +
                   " hits wrong-parity basis " + std::to_string(k));
  // Unit.
  for (int i = 0; i < m; ++i) {
    Vec bi = A.basisVec(i);
    if (mul(raw.unit, bi) != bi || mul(bi, raw.unit) != bi)
      fail(Err::NoUnit, "declared unit fails on basis " + std::to_string(i));
  }
  // Associativity.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec l = mul(mul(A.basisVec(i), A.basisVec(j)), A.basisVec(k));
        Vec r = mul(A.basisVec(i), mul(A.basisVec(j), A.basisVec(k)));
        if (l != r)
          fail(Err::NotAssociative, "basis triple " + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k));
      }
  // Trace homogeneity.
  std::set<int> eps_set;
  for (int i = 0; i < m; ++i)
    if (raw.trace[i] != 0) eps_set.insert(raw.parity[i]);
  if (eps_set.empty()) fail(Err::DegenerateTrace, "trace is identically zero");
  if (eps_set.size() > 1)
    fail(Err::InhomogeneousTrace, "trace hits both parities");
  A.eps_ = *eps_set.begin();
  // Gram matrix and dual basis.
  A.gram_.assign(m, Vec(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      A.gram_[i][j] = A.trVec(mul(A.basisVec(i), A.basisVec(j)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (A.gram_[i][j] != 0 && (raw.parity[i] + raw.parity[j]) % 2 != A.eps_)
        fail(Err::InhomogeneousTrace,
             "pairing of basis " + std::to_string(i) + "," + std::to_string(j) +
                 " violates trace parity");
  auto inv = mat_inverse(A.gram_);
  if (!inv) fail(Err::DegenerateTrace, "pairing matrix is singular");
  A.dual_ = *inv;
  // Automorphism matrix: tr(b_i b_j) = (-1)^{p_i p_j} tr(b_j psi(b_i)).
  A.psi_.assign(m, Vec(m));
  for (int i = 0; i < m; ++i) {
    Vec rhs(m);
    for (int k = 0; k < m; ++k) {
      rhs[k] = A.gram_[i][k];
      if (raw.parity[i] && raw.parity[k]) rhs[k] = -rhs[k];
    }
    auto row = mat_solve(A.gram_, rhs);
    if (!row) fail(Err::InternalInconsistency, "twist row unsolvable");
    A.psi_[i] = *row;
  }
  auto pinv = mat_inverse(A.psi_);
  if (!pinv) fail(Err::InternalInconsistency, "twist matrix singular");
  A.psiInv_ = *pinv;
  A.sym_ = mat_is_identity(A.psi_);
  // The twist must be an even automorphism fixing the unit.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (A.psi_[i][j] != 0 && raw.parity[i] != raw.parity[j])
        fail(Err::InternalInconsistency, "twist not parity preserving");
  if (A.psiVec(raw.unit) != raw.unit)
    fail(Err::InternalInconsistency, "twist moves the unit");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec l = A.psiVec(mul(A.basisVec(i), A.basisVec(j)));
      Vec r = mul(A.psiVec(A.basisVec(i)), A.psiVec(A.basisVec(j)));
      if (l != r) fail(Err::InternalInconsistency, "twist not multiplicative");
    }
  return A;
}

Vec FrobeniusAlgebra::basisVec(int i) const {
  Vec v(d_.dim, Rat(0));
  v[i] = 1;
  return v;
}

Vec FrobeniusAlgebra::dualVec(int i) const { return dual_[i]; }

Vec FrobeniusAlgebra::mulVec(const Vec& a, const Vec& b) const {
  Vec out(d_.dim, Rat(0));
  for (int i = 0; i < d_.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_.dim; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (int k = 0; k < d_.dim; ++k)
        if (d_.mult[i][j][k] != 0) out[k] += c * d_.mult[i][j][k];
    }
  }
  return out;
}

Rat FrobeniusAlgebra::trVec(const Vec& v) const {
  Rat s(0);
  for (int i = 0; i < d_.dim; ++i) s += v[i] * d_.trace[i];
  return s;
}

Vec FrobeniusAlgebra::psiVec(Vec v, long power) const {
  const Mat& m = power >= 0 ? psi_ : psiInv_;
  for (long t = 0; t < std::abs(power); ++t) v = vec_mat(v, m);
  return v;
}

int FrobeniusAlgebra::labelIndex(const std::string& lab) const {
  for (int i = 0; i < d_.dim; ++i)
    if (d_.labels[i] == lab) return i;
  return -1;
}

bool FrobeniusAlgebra::isRegular(const Vec& a) const {
  int m = d_.dim;
  Mat left(m, Vec(m)), right(m, Vec(m));
  for (int j = 0; j < m; ++j) {
    Vec lj = mulVec(a, basisVec(j));
    Vec rj = mulVec(basisVec(j), a);
    for (int k = 0; k < m; ++k) {
      left[j][k] = lj[k];
      right[j][k] = rj[k];
    }
  }
  return mat_rank(left) == (size_t)m && mat_rank(right) == (size_t)m;
}

std::optional<Vec> FrobeniusAlgebra::invert(const Vec& a) const {
  int m = d_.dim;
  // Solve a * x = 1 columnwise, then confirm x * a = 1.
  Mat lm(m, Vec(m));
  for (int j = 0; j < m; ++j) {
    Vec col = mulVec(a, basisVec(j));
    for (int k = 0; k < m; ++k) lm[k][j] = col[k];
  }
  auto x = mat_solve(lm, d_.unit);
  if (!x) return std::nullopt;
  if (mulVec(*x, a) != d_.unit) return std::nullopt;
  return x;
}

int FrobeniusAlgebra::vecParity(const Vec& v) const {
  int p = -1;
  for (int i = 0; i < d_.dim; ++i) {
    if (v[i] == 0) continue;
    if (p < 0) p = d_.parity[i];
    else if (p != d_.parity[i]) return -1;
  }
  return p < 0 ? 0 : p;
}

TraceChange change_trace(const FrobeniusAlgebra& a, const Vec& tprime) {
  if ((int)tprime.size() != a.dim())
    fail(Err::SyntaxError, "trace vector has wrong length");
  AlgebraData d2 = a.data();
  d2.trace = tprime;
  d2.name = a.name() + "'";
  FrobeniusAlgebra b = [&] {
    try {
      return FrobeniusAlgebra::validate(d2);
    } catch (const FhError& e) {
      if (e.code == Err::InhomogeneousTrace)
        fail(Err::NoSolution, "new trace is not homogeneous");
      throw;
    }
  }();
  auto u = mat_solve(a.gram(), tprime);
  if (!u) fail(Err::NoSolution, "no intertwining element for the new trace");
  int pu = a.vecParity(*u);
  if (pu < 0) fail(Err::NoSolution, "intertwining element not homogeneous");
  if (pu != (a.eps() + b.eps()) % 2)
    fail(Err::InternalInconsistency, "intertwiner parity disagrees with traces");
  auto uinv = a.invert(*u);
  if (!uinv) fail(Err::NoSolution, "intertwining element not invertible");
  for (int i = 0; i < a.dim(); ++i)
    if (b.trVec(a.basisVec(i)) != a.trVec(a.mulVec(a.basisVec(i), *u)))
      fail(Err::InternalInconsistency, "intertwiner fails trace identity");
  // psi'(x) = (-1)^{pu * px} u psi(x) u^{-1} on basis elements.
  for (int i = 0; i < a.dim(); ++i) {
    Vec expect = a.mulVec(a.mulVec(*u, a.psiVec(a.basisVec(i))), *uinv);
    if (pu && a.parity()[i])
      for (auto& c : expect) c = -c;
    Vec got = b.psiVec(a.basisVec(i));
    if (got != expect)
      fail(Err::InternalInconsistency, "conjugation law fails for new twist");
  }
  return TraceChange{*u, b.eps(), b.nakayama()};
}

FrobeniusAlgebra group_algebra(const std::vector<std::vector<int>>& table,
                               const std::vector<std::string>& labels,
                               const std::string& name) {
  int m = (int)table.size();
  if (m < 1) fail(Err::BadCayleyTable, "empty table");
  if ((int)labels.size() != m) fail(Err::BadCayleyTable, "label count mismatch");
  for (auto& row : table) {
    if ((int)row.size() != m) fail(Err::BadCayleyTable, "table not square");
    for (int v : row)
      if (v < 0 || v >= m) fail(Err::BadCayleyTable, "entry out of range");
  }
  // Latin square.
  for (int i = 0; i < m; ++i) {
    std::set<int> r, c;
    for (int j = 0; j < m; ++j) {
      r.insert(table[i][j]);
      c.insert(table[j][i]);
    }
    if ((int)r.size() != m || (int)c.size() != m)
      fail(Err::BadCayleyTable, "row or column not a permutation");
  }
  // Identity element.
  int e = -1;
  for (int i = 0; i < m; ++i) {
    bool ok = true;
    for (int j = 0; j < m; ++j)
      if (table[i][j] != j || table[j][i] != j) { ok = false; break; }
    if (ok) { e = i; break; }
  }
  if (e < 0) fail(Err::BadCayleyTable, "no identity element");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail(Err::BadCayleyTable, "table not associative");

  AlgebraData d;
  d.name = name;
  d.dim = m;
  d.labels = labels;
  d.parity.assign(m, 0);
  d.unit.assign(m, Rat(0));
  d.unit[e] = 1;
  d.mult.assign(m, std::vector<Vec>(m, Vec(m, Rat(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) d.mult[i][j][table[i][j]] = 1;
  d.trace.assign(m, Rat(0));
  d.trace[e] = 1;
  return FrobeniusAlgebra::validate(d);
}

static AlgebraData two_dim(const std::string& name, const std::string& lab2,
                           const Rat& sq, const Rat& tr1, const Rat& tr2) {
  AlgebraData d;
  d.name = name;
  d.dim = 2;
  d.labels = {"1", lab2};
  d.parity = {0, 1};
  d.unit = {Rat(1), Rat(0)};
  d.mult.assign(2, std::vector<Vec>(2, Vec(2, Rat(0))));
  d.mult[0][0][0] = 1;
  d.mult[0][1][1] = 1;
  d.mult[1][0][1] = 1;
  d.mult[1][1][0] = sq;
  d.trace = {tr1, tr2};
  return d;
}

FrobeniusAlgebra builtin_algebra(const std::string& name) {
  if (name == "ground") {
    AlgebraData d;
    d.name = "ground";
    d.dim = 1;
    d.labels = {"1"};
    d.parity = {0};
    d.unit = {Rat(1)};
    d.mult = {{{Rat(1)}}};
    d.trace = {Rat(1)};
    return FrobeniusAlgebra::validate(d);
  }
  if (name == "clifford_even") {
    auto d = two_dim("clifford_even", "c", Rat(1), Rat(1), Rat(0));
    return FrobeniusAlgebra::validate(d);
  }
  if (name == "clifford_odd") {
    auto d = two_dim("clifford_odd", "c", Rat(1), Rat(0), Rat(1));
    return FrobeniusAlgebra::validate(d);
  }
  if (name == "grassmann") {
    auto d = two_dim("grassmann", "x", Rat(0), Rat(0), Rat(1));
    return FrobeniusAlgebra::validate(d);
  }
  if (name == "group:c2" || name == "group_c2") {
    return group_algebra({{0, 1}, {1, 0}}, {"e", "g"}, "group:c2");
  }
  if (name == "group:c3") {
    return group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "g", "g2"},
                         "group:c3");
  }
  if (name == "group:s3") {
    // Elements e, r, r2, s, sr, sr2 with r^3 = s^2 = e, r s = s r^2.
    auto mulp = [](const Perm& x, const Perm& y) { return perm_compose(x, y); };
    std::vector<Perm> els = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Perm p = mulp(els[i], els[j]);
        t[i][j] = (int)(std::find(els.begin(), els.end(), p) - els.begin());
      }
    return group_algebra(t, {"e", "r", "r2", "s", "sr", "sr2"}, "group:s3");
  }
  fail(Err::UnknownLabel, "unknown builtin algebra '" + name + "'");
}

// ---------------------------------------------------------------- JSON

static Rat json_rat(const nlohmann::json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  fail(Err::SyntaxError, "expected rational as string or integer");
}

AlgebraData algebra_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::SyntaxError, std::string("bad JSON: ") + e.what());
  }
  AlgebraData d;
  try {
    d.name = j.value("name", "algebra");
    d.dim = j.at("dim").get<int>();
    d.labels = j.at("labels").get<std::vector<std::string>>();
    d.parity = j.at("parity").get<std::vector<int>>();
    for (auto& v : j.at("unit")) d.unit.push_back(json_rat(v));
    for (auto& v : j.at("trace")) d.trace.push_back(json_rat(v));
    auto& mt = j.at("mult");
    for (auto& row : mt) {
      std::vector<Vec> r;
      for (auto& cell : row) {
        Vec c(d.dim, Rat(0));
        for (auto& pair : cell) {
          int k = pair.at(0).get<int>();
          if (k < 0 || k >= d.dim) fail(Err::SyntaxError, "mult index out of range");
          c[k] += json_rat(pair.at(1));
        }
        r.push_back(c);
      }
      d.mult.push_back(r);
    }
  } catch (const FhError&) {
    throw;
  } catch (const std::exception& e) {
    fail(Err::SyntaxError, std::string("bad algebra JSON: ") + e.what());
  }
  return d;
}

AlgebraData algebra_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::SyntaxError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json_text(ss.str());
}

std::string algebra_to_json_text(const AlgebraData& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["labels"] = d.labels;
  j["parity"] = d.parity;
  auto rats = [](const Vec& v) {
    std::vector<std::string> out;
    for (auto& r : v) out.push_back(rat_str(r));
    return out;
  };
  j["unit"] = rats(d.unit);
  j["trace"] = rats(d.trace);
  nlohmann::json mt = nlohmann::json::array();
  for (auto& row : d.mult) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& cell : row) {
      nlohmann::json c = nlohmann::json::array();
      for (int k = 0; k < (int)cell.size(); ++k)
        if (cell[k] != 0) c.push_back({k, rat_str(cell[k])});
      r.push_back(c);
    }
    mt.push_back(r);
  }
  j["mult"] = mt;
  return j.dump(1);
}

FrobeniusAlgebra load_algebra(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_algebra(spec.substr(8));
  return FrobeniusAlgebra::validate(algebra_from_json_file(spec));
}

}  // namespace fh
