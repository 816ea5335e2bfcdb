#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace fh;
using fht::builtins;
using fht::jmat;
using fht::jvec;
using fht::load_frozen;

TEST_CASE("builtin structure tables match the frozen reference") {
  auto tabs = load_frozen()["algebras"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    FrobeniusAlgebra A = builtin_algebra(name);
    auto& t = tabs[key];
    CHECK(A.labels() == t["labels"].get<std::vector<std::string>>());
    CHECK(A.parity() == t["parity"].get<std::vector<int>>());
    CHECK(A.eps() == t["eps"].get<int>());
    CHECK(A.symmetric() == t["symmetric"].get<bool>());
    CHECK(A.gram() == jmat(t["gram"]));
    CHECK(A.dual() == jmat(t["dual"]));
    CHECK(A.nakayama() == jmat(t["nakayama"]));
    CHECK(A.nakayamaInv() == jmat(t["nakayama_inv"]));
  }
}

TEST_CASE("dual basis pairs to the identity and expands every element") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    FrobeniusAlgebra A = builtin_algebra(name);
    int m = A.dim();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(A.trVec(A.mulVec(A.dualVec(i), A.basisVec(j))) ==
              Rat(i == j ? 1 : 0));
    // a = sum_b tr(b^ a) b = sum_b tr(a b) b^
    for (int i = 0; i < m; ++i) {
      Vec a = A.basisVec(i);
      Vec left(m, Rat(0)), right(m, Rat(0));
      for (int b = 0; b < m; ++b) {
        Rat cl = A.trVec(A.mulVec(A.dualVec(b), a));
        Rat cr = A.trVec(A.mulVec(a, A.basisVec(b)));
        Vec bb = A.basisVec(b), db = A.dualVec(b);
        for (int k = 0; k < m; ++k) {
          left[k] += cl * bb[k];
          right[k] += cr * db[k];
        }
      }
      CHECK(left == a);
      CHECK(right == a);
    }
  }
}

TEST_CASE("nakayama automorphism satisfies the defining trace condition") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    FrobeniusAlgebra A = builtin_algebra(name);
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        Rat lhs = A.trVec(A.mulVec(A.basisVec(i), A.basisVec(j)));
        Rat rhs = A.trVec(A.mulVec(A.basisVec(j), A.psiVec(A.basisVec(i))));
        if (A.parity()[i] && A.parity()[j]) rhs = -rhs;
        CHECK(lhs == rhs);
      }
    // The automorphism respects products.
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j)
        CHECK(A.psiVec(A.mulVec(A.basisVec(i), A.basisVec(j))) ==
              A.mulVec(A.psiVec(A.basisVec(i)), A.psiVec(A.basisVec(j))));
  }
}

TEST_CASE("double dual law: dual of the dual basis twists by the inverse automorphism") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    FrobeniusAlgebra A = builtin_algebra(name);
    int m = A.dim();
    // Gram matrix of the dual basis, then its own dual rows.
    Mat g(m, Vec(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        g[i][j] = A.trVec(A.mulVec(A.dualVec(i), A.dualVec(j)));
    auto inv = mat_inverse(g);
    REQUIRE(inv.has_value());
    for (int i = 0; i < m; ++i) {
      Vec dd(m, Rat(0));
      for (int j = 0; j < m; ++j) {
        Vec dj = A.dualVec(j);
        for (int k = 0; k < m; ++k) dd[k] += (*inv)[i][j] * dj[k];
      }
      for (int j = 0; j < m; ++j)
        CHECK(A.trVec(A.mulVec(dd, A.dualVec(j))) == Rat(i == j ? 1 : 0));
      Vec expect = A.psiVec(A.basisVec(i), -1);
      if (A.parity()[i] && A.eps() == 0)
        for (auto& c : expect) c = -c;
      CHECK(dd == expect);
    }
  }
}

TEST_CASE("change of trace on the clifford pair produces the odd generator") {
  auto t = load_frozen()["change_trace"];
  {
    auto& c = t["clifford_even_to_odd"];
    FrobeniusAlgebra A = builtin_algebra("clifford_even");
    TraceChange tc = change_trace(A, jvec(c["new_trace"]));
    CHECK(tc.u == jvec(c["u"]));
    CHECK(tc.u == A.basisVec(1));  // exactly the odd generator
    CHECK(tc.epsPrime == c["new_eps"].get<int>());
    CHECK(tc.psiPrime == jmat(c["new_nakayama"]));
  }
  {
    auto& c = t["grassmann_scaled"];
    FrobeniusAlgebra A = builtin_algebra("grassmann");
    TraceChange tc = change_trace(A, jvec(c["new_trace"]));
    CHECK(tc.u == jvec(c["u"]));
    CHECK(tc.epsPrime == c["new_eps"].get<int>());
    CHECK(tc.psiPrime == jmat(c["new_nakayama"]));
  }
}

TEST_CASE("change of trace rejects traces that are not of the stated form") {
  FrobeniusAlgebra A = builtin_algebra("clifford_even");
  Vec mixed = {Rat(1), Rat(1)};  // hits both parities
  try {
    change_trace(A, mixed);
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::NoSolution);
  }
  FrobeniusAlgebra G = builtin_algebra("grassmann");
  Vec degenerate = {Rat(1), Rat(0)};  // pairing vanishes on the generator
  try {
    change_trace(G, degenerate);
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::DegenerateTrace);
  }
  // Identity and scaling round trips.
  TraceChange same = change_trace(A, A.trace());
  CHECK(same.u == A.unit());
  Vec twice = A.trace();
  for (auto& c : twice) c *= 2;
  TraceChange scaled = change_trace(A, twice);
  Vec two = A.unit();
  for (auto& c : two) c *= 2;
  CHECK(scaled.u == two);
}

TEST_CASE("validation rejects each corrupted structure") {
  AlgebraData base = builtin_algebra("group:c3").data();

  auto expectErr = [](const AlgebraData& d, Err want) {
    try {
      FrobeniusAlgebra::validate(d);
      CHECK(false);
    } catch (const FhError& e) {
      CHECK(e.code == want);
    }
  };

  {  // g * g2 = g instead of e: associativity breaks, unit intact
    AlgebraData d = base;
    d.mult[1][2] = Vec{Rat(0), Rat(1), Rat(0)};
    expectErr(d, Err::NotAssociative);
  }
  {
    AlgebraData d = base;
    d.unit = Vec{Rat(0), Rat(1), Rat(0)};
    expectErr(d, Err::NoUnit);
  }
  {
    AlgebraData d = base;
    d.parity = {0, 1, 0};  // product of odd g with itself lands on even g2
    expectErr(d, Err::ParityViolation);
  }
  {
    AlgebraData d = base;
    d.trace = Vec{Rat(0), Rat(0), Rat(0)};
    expectErr(d, Err::DegenerateTrace);
  }
  {
    AlgebraData d = builtin_algebra("clifford_even").data();
    d.trace = Vec{Rat(1), Rat(1)};  // hits both parities
    expectErr(d, Err::InhomogeneousTrace);
  }
  {  // trace with degenerate pairing: tr == 0 on the span of g, g2
    AlgebraData d = base;
    d.trace = Vec{Rat(1), Rat(1), Rat(1)};
    expectErr(d, Err::DegenerateTrace);
  }
}

TEST_CASE("group algebra construction checks the cayley table") {
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};  // not a bijection row
  try {
    group_algebra(bad, {"e", "g"});
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::BadCayleyTable);
  }
  std::vector<std::vector<int>> col = {{0, 1}, {0, 1}};  // column repeats
  try {
    group_algebra(col, {"e", "g"});
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::BadCayleyTable);
  }
  // A loop (latin square with identity) that is not associative.
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  try {
    group_algebra(loop, {"e", "a", "b", "c", "d"});
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::BadCayleyTable);
  }
  // Identity not at index zero is still a group.
  FrobeniusAlgebra swapped = group_algebra({{1, 0}, {0, 1}}, {"g", "e"});
  CHECK(swapped.symmetric());
  FrobeniusAlgebra c2 = group_algebra({{0, 1}, {1, 0}}, {"e", "g"});
  CHECK(c2.dim() == 2);
  CHECK(c2.symmetric());
}

TEST_CASE("larger builtin group algebras validate") {
  FrobeniusAlgebra c3 = builtin_algebra("group:c3");
  CHECK(c3.dim() == 3);
  CHECK(c3.symmetric());
  FrobeniusAlgebra s3 = builtin_algebra("group:s3");
  CHECK(s3.dim() == 6);
  CHECK(s3.symmetric());
  CHECK(s3.eps() == 0);
  try {
    builtin_algebra("nonsense");
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::UnknownLabel);
  }
}

TEST_CASE("json io round trips every builtin") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    AlgebraData d = builtin_algebra(name).data();
    AlgebraData back = algebra_from_json_text(algebra_to_json_text(d));
    FrobeniusAlgebra A = FrobeniusAlgebra::validate(back);
    CHECK(A.dim() == d.dim);
    CHECK(back.labels == d.labels);
    CHECK(back.parity == d.parity);
    CHECK(back.unit == d.unit);
    CHECK(back.trace == d.trace);
    CHECK(back.mult == d.mult);
  }
  try {
    algebra_from_json_text("{ not json");
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::SyntaxError);
  }
}

TEST_CASE("file loading resolves builtin prefixes and json paths") {
  FrobeniusAlgebra A = load_algebra("builtin:clifford_odd");
  CHECK(A.eps() == 1);
  FrobeniusAlgebra B =
      load_algebra(std::string(FH_TEST_DATA) + "/clifford_even.json");
  CHECK(B.dim() == 2);
  CHECK(B.eps() == 0);
  try {
    load_algebra(std::string(FH_TEST_DATA) + "/no_such_file.json");
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(e.code == Err::SyntaxError);
  }
}

TEST_CASE("regularity and inversion agree") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    FrobeniusAlgebra A = builtin_algebra(name);
    CHECK(A.isRegular(A.unit()));
    auto inv = A.invert(A.unit());
    REQUIRE(inv.has_value());
    CHECK(*inv == A.unit());
    Vec zero(A.dim(), Rat(0));
    CHECK_FALSE(A.isRegular(zero));
    CHECK_FALSE(A.invert(zero).has_value());
  }
  FrobeniusAlgebra G = builtin_algebra("grassmann");
  CHECK_FALSE(G.isRegular(G.basisVec(1)));  // nilpotent generator
}
