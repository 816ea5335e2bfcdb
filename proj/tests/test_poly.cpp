#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace fh;
using fht::builtins;
using fht::load_frozen;

namespace {

const FrobeniusAlgebra* cached(const std::string& name) {
  static std::map<std::string, FrobeniusAlgebra> pool;
  auto it = pool.find(name);
  if (it == pool.end())
    it = pool.emplace(name, builtin_algebra(name)).first;
  return &it->second;
}

PolyElement rand_pol(Rng& rng, const FrobeniusAlgebra* A, int n, Variant var,
                     int terms, long maxExp) {
  PolyElement p = PolyElement::zero(A, n, var);
  long lo = var == Variant::Quantum ? -maxExp : 0;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(n);
    std::vector<long> exp(n);
    for (int s = 0; s < n; ++s) {
      idx[s] = (int)rng.randint(0, A->dim() - 1);
      exp[s] = rng.randint(lo, maxExp);
    }
    Rat c(rng.randint(-3, 3));
    if (c == 0) c = 1;
    p.addTerm(idx, exp, c);
  }
  return p;
}

}  // namespace

TEST_CASE("teleporters match the frozen reference strings") {
  auto t = load_frozen()["teleporters"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    CHECK(pol_to_string(teleporter(A, 2, Variant::Degenerate, 0, 1)) ==
          t[key]["t12"].get<std::string>());
    CHECK(pol_to_string(teleporter(A, 2, Variant::Degenerate, 1, 0)) ==
          t[key]["t21"].get<std::string>());
  }
}

TEST_CASE("teleporter identities hold for every builtin") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    Variant var = Variant::Degenerate;
    PolyElement t12 = teleporter(A, 2, var, 0, 1);
    PolyElement t21 = teleporter(A, 2, var, 1, 0);
    for (int b = 0; b < A->dim(); ++b) {
      CAPTURE(b);
      Vec vb = A->basisVec(b);
      PolyElement a1 = PolyElement::token(A, 2, var, 0, vb);
      PolyElement a2 = PolyElement::token(A, 2, var, 1, vb);
      PolyElement pa1 = PolyElement::token(A, 2, var, 0, A->psiVec(vb));
      PolyElement pa2 = PolyElement::token(A, 2, var, 1, A->psiVec(vb));
      Rat sg = (A->eps() && A->parity()[b]) ? Rat(-1) : Rat(1);
      CHECK(a1 * t12 == (t12 * a2).scale(sg));
      CHECK(t12 * pa1 == (a2 * t12).scale(sg));
      CHECK(t21 * a1 == (a2 * t21).scale(sg));
      CHECK(a1 * t21 == (t21 * pa2).scale(sg));
    }
  }
}

TEST_CASE("products match the frozen reference") {
  auto t = load_frozen()["pol_products"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& c : t[key]) {
      int n = c["n"].get<int>();
      PolyElement a = parse_pol(c["a"].get<std::string>(), A, n,
                                Variant::Degenerate);
      PolyElement b = parse_pol(c["b"].get<std::string>(), A, n,
                                Variant::Degenerate);
      CHECK(pol_to_string(a * b) == c["ab"].get<std::string>());
    }
  }
}

TEST_CASE("divided differences match the frozen reference") {
  auto t = load_frozen()["demazure"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& c : t[key]) {
      CAPTURE(c["input"].get<std::string>());
      PolyElement f = parse_pol(c["input"].get<std::string>(), A, 2,
                                Variant::Degenerate);
      CHECK(pol_to_string(demazure(0, f)) == c["output"].get<std::string>());
    }
  }
}

TEST_CASE("laurent divided differences match the frozen reference") {
  auto t = load_frozen()["delta"];
  for (auto& key : {std::string("ground"), std::string("group_c2")}) {
    CAPTURE(key);
    const FrobeniusAlgebra* A =
        cached(key == "ground" ? "ground" : "group:c2");
    for (auto& c : t[key]) {
      CAPTURE(c["input"].get<std::string>());
      PolyElement f =
          parse_pol(c["input"].get<std::string>(), A, 2, Variant::Quantum);
      CHECK(pol_to_string(delta(0, f)) == c["output"].get<std::string>());
    }
  }
}

TEST_CASE("divided difference generator values") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    Variant var = Variant::Degenerate;
    // On dots: x_i goes to the teleporter, x_{i+1} to its negated mirror.
    CHECK(demazure(0, PolyElement::dot(A, 2, var, 0)) ==
          teleporter(A, 2, var, 0, 1));
    CHECK(demazure(0, PolyElement::dot(A, 2, var, 1)) ==
          teleporter(A, 2, var, 1, 0).scale(Rat(-1)));
    // On pure tensors: zero.
    for (int b = 0; b < A->dim(); ++b)
      CHECK(demazure(0, PolyElement::token(A, 2, var, 0, A->basisVec(b)))
                .isZero());
    CHECK(demazure(0, PolyElement::unit(A, 2, var)).isZero());
  }
}

TEST_CASE("twisted leibniz rule holds on random splits") {
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    Variant var = Variant::Degenerate;
    Rng rng(11);
    for (int n : {2, 3})
      for (int t = 0; t < 25; ++t) {
        PolyElement f = rand_pol(rng, A, n, var, 1, 2);
        PolyElement g = rand_pol(rng, A, n, var, 1, 2);
        int i = (int)rng.randint(0, n - 2);
        CHECK(demazure(i, f * g) ==
              demazure(i, f) * g + f.superpermuteS(i) * demazure(i, g));
      }
  }
}

TEST_CASE("divided differences kill symmetric central elements") {
  auto t = load_frozen()["center_candidates"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& [cname, c] : t[key].items()) {
      if (!c["accept"].get<bool>()) continue;
      CAPTURE(cname);
      PolyElement f = parse_pol(c["elem"].get<std::string>(), A, 2,
                                Variant::Degenerate);
      REQUIRE(is_symmetric_central(f));
      CHECK(demazure(0, f).isZero());
    }
  }
}

TEST_CASE("opposite-slot pin placements have opposite divided differences") {
  // Q(x_1) + Q(x_2) is symmetric central for an admitted pin Q.
  struct Case {
    std::string alg, q;
  };
  for (auto& c : {Case{"ground", "x^2 + 1"}, Case{"clifford_even", "x^2"},
                  Case{"group:c2", "x^2 + (g) x"}}) {
    CAPTURE(c.alg);
    const FrobeniusAlgebra* A = cached(c.alg);
    PolyElement q = parse_pol(c.q, A, 1, Variant::Degenerate);
    REQUIRE(pin_check(q).ok);
    // Place on each strand of a two-strand algebra.
    PolyElement q1 = PolyElement::zero(A, 2, Variant::Degenerate);
    PolyElement q2 = PolyElement::zero(A, 2, Variant::Degenerate);
    for (auto& [k, co] : q.terms()) {
      PolyElement t1 = PolyElement::token(A, 2, Variant::Degenerate, 0,
                                          A->basisVec(k.idx[0]));
      PolyElement d1 = PolyElement::dot(A, 2, Variant::Degenerate, 0,
                                        k.exp[0]);
      q1 = q1 + (t1 * d1).scale(co);
      PolyElement t2 = PolyElement::token(A, 2, Variant::Degenerate, 1,
                                          A->basisVec(k.idx[0]));
      PolyElement d2 = PolyElement::dot(A, 2, Variant::Degenerate, 1,
                                        k.exp[0]);
      q2 = q2 + (t2 * d2).scale(co);
    }
    CHECK(is_symmetric_central(q1 + q2));
    CHECK(demazure(0, q1 + q2).isZero());
    CHECK(demazure(0, q1) == demazure(0, q2).scale(Rat(-1)));
  }
}

TEST_CASE("laurent operator generator values and skew rule") {
  const FrobeniusAlgebra* A = cached("ground");
  Variant var = Variant::Quantum;
  PolyElement X1 = PolyElement::dot(A, 2, var, 0);
  PolyElement X2 = PolyElement::dot(A, 2, var, 1);
  PolyElement X1i = PolyElement::dot(A, 2, var, 0, -1);
  PolyElement X2i = PolyElement::dot(A, 2, var, 1, -1);
  PolyElement t = teleporter(A, 2, var, 0, 1);
  CHECK(delta(0, X1) == (t * X2).scale(Rat(-1)));
  CHECK(delta(0, X2) == t * X2);
  CHECK(delta(0, X1i) == t * X1i);
  CHECK(delta(0, X2i) == (t * X1i).scale(Rat(-1)));
  CHECK(delta(0, PolyElement::unit(A, 2, var)).isZero());
  // Symmetric Laurent polynomials die.
  CHECK(delta(0, X1 * X2).isZero());
  CHECK(delta(0, X1 + X2).isZero());
  CHECK(delta(0, X1i * X2i).isZero());
}

TEST_CASE("element parsing round trips and reports precise errors") {
  Rng rng(5);
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (int t = 0; t < 30; ++t) {
      PolyElement p = rand_pol(rng, A, 2, Variant::Degenerate, 2, 3);
      CHECK(parse_pol(pol_to_string(p), A, 2, Variant::Degenerate) == p);
      PolyElement q = rand_pol(rng, A, 2, Variant::Quantum, 2, 2);
      CHECK(parse_pol(pol_to_string(q), A, 2, Variant::Quantum) == q);
    }
  }
  const FrobeniusAlgebra* A = cached("ground");
  auto expectErr = [&](const std::string& s, Variant var, Err want) {
    CAPTURE(s);
    try {
      parse_pol(s, A, 2, var);
      CHECK(false);
    } catch (const FhError& e) {
      CHECK(e.code == want);
    }
  };
  expectErr("", Variant::Degenerate, Err::SyntaxError);
  expectErr("1*(1|1", Variant::Degenerate, Err::SyntaxError);
  expectErr("1*(1|1) +", Variant::Degenerate, Err::SyntaxError);
  expectErr("2/0", Variant::Degenerate, Err::SyntaxError);
  expectErr("1*(zz|1)", Variant::Degenerate, Err::UnknownLabel);
  expectErr("1*(1)", Variant::Degenerate, Err::SyntaxError);  // arity
  expectErr("1*(1|1) x3", Variant::Degenerate, Err::IndexOutOfRange);
  expectErr("1*(1|1) X1", Variant::Degenerate, Err::VariantMismatch);
  expectErr("1*(1|1) x1", Variant::Quantum, Err::VariantMismatch);
  expectErr("1*(1|1) x1^-1", Variant::Degenerate,
            Err::InverseDotInDegenerate);
  expectErr("1*(1|1) s1", Variant::Degenerate, Err::SyntaxError);
  // Position is reported 1-based.
  try {
    parse_pol("1*(1|1) @", A, 2, Variant::Degenerate);
    CHECK(false);
  } catch (const FhError& e) {
    CHECK(std::string(e.what()).find("position 9") != std::string::npos);
  }
}

TEST_CASE("serialization is canonical") {
  const FrobeniusAlgebra* A = cached("clifford_even");
  // Term order: exponent vector first, then tensor word.
  PolyElement p = PolyElement::zero(A, 2, Variant::Degenerate);
  p.addTerm({1, 0}, {2, 0}, Rat(3));
  p.addTerm({0, 0}, {0, 1}, Rat(-1, 2));
  p.addTerm({0, 1}, {0, 1}, Rat(5));
  std::string s = pol_to_string(p);
  CHECK(s == "-1/2*(1|1) x2 + 5*(1|c) x2 + 3*(c|1) x1^2");
  CHECK(pol_to_string(parse_pol(s, A, 2, Variant::Degenerate)) == s);
  CHECK(pol_to_string(PolyElement::zero(A, 2, Variant::Degenerate)) == "0");
  CHECK(parse_pol("0", A, 2, Variant::Degenerate).isZero());
  // Bare rationals scale the unit; sign prefixes fold into the first term.
  CHECK(parse_pol("-2", A, 2, Variant::Degenerate) ==
        PolyElement::unit(A, 2, Variant::Degenerate).scale(Rat(-2)));
  CHECK(parse_pol("- 1*(1|1) + 1*(c|c)", A, 2, Variant::Degenerate) ==
        parse_pol("1*(c|c) + -1*(1|1)", A, 2, Variant::Degenerate));
  // Dots written in sequence multiply in order.
  const FrobeniusAlgebra* G = cached("grassmann");
  CHECK(parse_pol("1*(x|1) x1 x2", G, 2, Variant::Degenerate) ==
        parse_pol("1*(x|1) x1", G, 2, Variant::Degenerate) *
            PolyElement::dot(G, 2, Variant::Degenerate, 1));
}

TEST_CASE("superpermutation action is a twisted involution") {
  Rng rng(23);
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (int t = 0; t < 20; ++t) {
      PolyElement f = rand_pol(rng, A, 3, Variant::Degenerate, 2, 2);
      for (int i = 0; i < 2; ++i)
        CHECK(f.superpermuteS(i).superpermuteS(i) == f);
      // Compatibility with composition of adjacent transpositions.
      PolyElement lhs = f.superpermuteS(0).superpermuteS(1).superpermuteS(0);
      PolyElement rhs = f.superpermuteS(1).superpermuteS(0).superpermuteS(1);
      CHECK(lhs == rhs);
      // w sends slot i to slot w[i]; {2,0,1} factors as s0 then s1.
      Perm w = {2, 0, 1};
      CHECK(f.superpermute(w) ==
            f.superpermuteS(0).superpermuteS(1));
    }
  }
  // Concrete dot relocation under the direct action.
  const FrobeniusAlgebra* A = cached("ground");
  PolyElement f =
      parse_pol("x1 + 2*x2^2 + 3*x3^3", A, 3, Variant::Degenerate);
  CHECK(f.superpermute({2, 0, 1}) ==
        parse_pol("x3 + 2*x1^2 + 3*x2^3", A, 3, Variant::Degenerate));
}

TEST_CASE("pin membership check classifies candidates") {
  CHECK(pin_check(parse_pol("x^2 + 1", cached("ground"), 1,
                            Variant::Degenerate))
            .ok);
  CHECK(pin_check(parse_pol("x", cached("clifford_even"), 1,
                            Variant::Degenerate))
            .ok);
  CHECK(pin_check(parse_pol("X - 1", cached("ground"), 1, Variant::Quantum))
            .ok);
  {
    PinCheckResult r = pin_check(
        parse_pol("0", cached("ground"), 1, Variant::Degenerate));
    CHECK_FALSE(r.ok);
  }
  {  // odd term
    PinCheckResult r = pin_check(parse_pol(
        "1*(c) x^2", cached("clifford_odd"), 1, Variant::Degenerate));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.inconclusive);
  }
  {  // coefficient not central in the base
    PinCheckResult r = pin_check(parse_pol(
        "x + (s)", cached("group:s3"), 1, Variant::Degenerate));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.inconclusive);
  }
  {  // nilpotent leading coefficient: even, central, but not regular
    PinCheckResult r = pin_check(parse_pol("1*(x) x", cached("grassmann"), 1,
                                           Variant::Degenerate));
    CHECK_FALSE(r.ok);
    CHECK(r.inconclusive);
  }
  {  // quantum trailing coefficient must also be regular
    PinCheckResult r = pin_check(parse_pol("X + (g)", cached("group:c2"), 1,
                                           Variant::Quantum));
    CHECK(r.ok);
    PinCheckResult bad = pin_check(parse_pol(
        "X + (e) + (g)", cached("group:c2"), 1, Variant::Quantum));
    CHECK_FALSE(bad.ok);
    CHECK(bad.inconclusive);
  }
}

TEST_CASE("exact division recovers right quotients") {
  Rng rng(31);
  for (auto& c : {std::pair<std::string, std::string>{"ground", "x^2 + 1"},
                  {"clifford_even", "x"},
                  {"group:c2", "x^2 + (g) x"}}) {
    CAPTURE(c.first);
    const FrobeniusAlgebra* A = cached(c.first);
    PolyElement h1 = parse_pol(c.second, A, 1, Variant::Degenerate);
    // Lift h to two strands on slot 0.
    PolyElement h = PolyElement::zero(A, 2, Variant::Degenerate);
    for (auto& [k, co] : h1.terms()) {
      PolyElement t = PolyElement::token(A, 2, Variant::Degenerate, 0,
                                         A->basisVec(k.idx[0]));
      PolyElement d =
          PolyElement::dot(A, 2, Variant::Degenerate, 0, k.exp[0]);
      h = h + (t * d).scale(co);
    }
    for (int t = 0; t < 20; ++t) {
      PolyElement g = rand_pol(rng, A, 2, Variant::Degenerate, 2, 2);
      PolyElement f = g * h;
      if (f.isZero()) continue;
      CHECK(exact_divide(f, h) == g);
    }
    try {
      exact_divide(PolyElement::unit(A, 2, Variant::Degenerate) +
                       PolyElement::dot(A, 2, Variant::Degenerate, 1),
                   h);
      CHECK(false);
    } catch (const FhError& e) {
      CHECK(e.code == Err::NotDivisible);
    }
  }
}

TEST_CASE("symmetric central recognition matches the frozen verdicts") {
  auto t = load_frozen()["center_candidates"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& [cname, c] : t[key].items()) {
      CAPTURE(cname);
      PolyElement f = parse_pol(c["elem"].get<std::string>(), A, 2,
                                Variant::Degenerate);
      CHECK(is_symmetric_central(f) == c["accept"].get<bool>());
    }
  }
}
