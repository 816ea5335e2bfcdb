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

WreathElement rand_wreath(Rng& rng, const FrobeniusAlgebra* A, int n,
                          Variant var, const Rat& z) {
  WreathElement u = WreathElement::zero(A, n, var, z);
  for (int t = 0; t < 2; ++t) {
    WreathElement e =
        WreathElement::fromPol(rand_pol(rng, A, n, var, 1, 2), z);
    long len = n > 1 ? rng.randint(0, 2) : 0;
    for (long j = 0; j < len; ++j)
      e = e.rmulCrossing((int)rng.randint(0, n - 2));
    u = u + e;
  }
  return u;
}

PolyElement pp(const std::string& s, const FrobeniusAlgebra* A, int n) {
  return parse_pol(s, A, n, Variant::Degenerate);
}

WreathElement pw(const std::string& s, const FrobeniusAlgebra* A, int n) {
  return parse_wreath(s, A, n, Variant::Degenerate, Rat(0));
}

}  // namespace

TEST_CASE("crossings act by superpermutation minus divided difference") {
  const FrobeniusAlgebra* G = cached("ground");
  WreathElement s1 = WreathElement::crossing(G, 2, Variant::Degenerate, 0, Rat(0));
  CHECK(poly_rep_apply(s1, pp("x1", G, 2)) == pp("x2 - 1", G, 2));
  CHECK(poly_rep_apply(s1, pp("x2", G, 2)) == pp("x1 + 1", G, 2));
  CHECK(poly_rep_apply(s1, pp("1", G, 2)) == pp("1", G, 2));
  CHECK(poly_rep_apply(WreathElement::unit(G, 2, Variant::Degenerate, Rat(0)),
                       pp("x1^3 + 5*x2", G, 2)) == pp("x1^3 + 5*x2", G, 2));
  CHECK(poly_rep_apply(pw("x", G, 1), pp("1", G, 1)) == pp("x", G, 1));

  Rng rng(11);
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (int n : {2, 3})
      for (int i = 0; i + 1 < n; ++i)
        for (int t = 0; t < 6; ++t) {
          PolyElement f = rand_pol(rng, A, n, Variant::Degenerate, 2, 3);
          WreathElement s =
              WreathElement::crossing(A, n, Variant::Degenerate, i, Rat(0));
          CHECK(poly_rep_apply(s, f) == f.superpermuteS(i) - demazure(i, f));
        }
  }
}

TEST_CASE("the action is linear, unital, and multiplicative") {
  Rng rng(12);
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (int n : {2, 3}) {
      WreathElement one = WreathElement::unit(A, n, Variant::Degenerate, Rat(0));
      for (int t = 0; t < 8; ++t) {
        WreathElement u = rand_wreath(rng, A, n, Variant::Degenerate, Rat(0));
        WreathElement v = rand_wreath(rng, A, n, Variant::Degenerate, Rat(0));
        PolyElement f = rand_pol(rng, A, n, Variant::Degenerate, 2, 3);
        PolyElement g = rand_pol(rng, A, n, Variant::Degenerate, 2, 3);
        CHECK(poly_rep_apply(u, f + g) ==
              poly_rep_apply(u, f) + poly_rep_apply(u, g));
        CHECK(poly_rep_apply(one, f) == f);
        CHECK(poly_rep_apply(u.multiply(v), f) ==
              poly_rep_apply(u, poly_rep_apply(v, f)));
        CHECK(poly_rep_apply(WreathElement::fromPol(g), f) == g * f);
      }
    }
  }
}

TEST_CASE("frozen action vectors reproduce") {
  auto wa = load_frozen()["wreath_actions"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& c : wa[key]) {
      int n = c["n"].get<int>();
      WreathElement u = pw(c["elem"].get<std::string>(), A, n);
      PolyElement v = pp(c["vec"].get<std::string>(), A, n);
      CHECK(pol_to_string(poly_rep_apply(u, v)) == c["out"].get<std::string>());
    }
  }
}

TEST_CASE("frozen product pairs pass the oracle") {
  auto wp = load_frozen()["wreath_products"];
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (auto& c : wp[key]) {
      int n = c["n"].get<int>();
      std::string cx;
      bool ok = product_oracle_check(pw(c["a"].get<std::string>(), A, n),
                                     pw(c["b"].get<std::string>(), A, n), &cx);
      CAPTURE(cx);
      CHECK(ok);
    }
  }
}

TEST_CASE("random product pairs pass the oracle on every builtin") {
  Rng rng(13);
  for (auto& [key, name] : builtins()) {
    CAPTURE(key);
    const FrobeniusAlgebra* A = cached(name);
    for (int n : {2, 3})
      for (int t = 0; t < 8; ++t) {
        WreathElement u = rand_wreath(rng, A, n, Variant::Degenerate, Rat(0));
        WreathElement v = rand_wreath(rng, A, n, Variant::Degenerate, Rat(0));
        std::string cx;
        bool ok = product_oracle_check(u, v, &cx);
        CAPTURE(wreath_to_string(u));
        CAPTURE(wreath_to_string(v));
        CAPTURE(cx);
        CHECK(ok);
      }
  }
}

TEST_CASE("a corrupted product claim is rejected with a counterexample") {
  const FrobeniusAlgebra* G = cached("ground");
  WreathElement s1 = WreathElement::crossing(G, 2, Variant::Degenerate, 0, Rat(0));
  WreathElement x1 = pw("x1", G, 2);
  CHECK(product_claim_check(s1, x1, s1.multiply(x1)));
  std::string cx;
  // The naive swap x1*s1 forgets the divided-difference correction.
  CHECK_FALSE(product_claim_check(s1, x1, x1.multiply(s1), &cx));
  CHECK(!cx.empty());
  cx.clear();
  WreathElement one = WreathElement::unit(G, 2, Variant::Degenerate, Rat(0));
  CHECK_FALSE(product_claim_check(s1, s1, s1.multiply(s1) + one, &cx));
  CHECK(!cx.empty());

  const FrobeniusAlgebra* C = cached("clifford_even");
  WreathElement cx1 = pw("(c|1) x1", C, 2);
  WreathElement tok = pw("(c|1)", C, 2);
  // Dropping the trace-twist sign on the token is detected.
  CHECK_FALSE(product_claim_check(pw("x1", C, 2), tok,
                                  tok.multiply(pw("x1", C, 2))));
  CHECK(product_claim_check(pw("x1", C, 2), tok, cx1.scale(Rat(-1))));
}

TEST_CASE("relation catalog names are stable and every entry passes") {
  auto names = [](const std::vector<RelationResult>& rs) {
    std::vector<std::string> out;
    for (auto& r : rs) out.push_back(r.name);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };

  auto deg = relation_catalog_wreath(cached("ground"), 3,
                                     Variant::Degenerate, Rat(0));
  auto dn = names(deg);
  for (auto& s : {"crossing-involution", "braid-adjacent", "token-embedding",
                  "token-slide", "dot-slide-far", "dot-slide-near",
                  "dot-exchange", "dot-token-twist"})
    CHECK(has(dn, s));
  for (auto& r : deg) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }

  auto qu = relation_catalog_wreath(cached("group:c2"), 2, Variant::Quantum,
                                    Rat(1) / 2);
  auto qn = names(qu);
  for (auto& s : {"crossing-quadratic", "crossing-conjugates-dot",
                  "dot-slide-near", "dot-exchange", "dot-inverse",
                  "token-embedding", "token-slide"})
    CHECK(has(qn, s));
  for (auto& r : qu) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("the trace twist is handled with the documented sign") {
  // Over the even-trace Clifford algebra the dot slides past the token c by
  // twisting with the inverse trace automorphism: x * c = -c * x.
  const FrobeniusAlgebra* C = cached("clifford_even");
  CHECK(pw("x", C, 1).multiply(pw("(c)", C, 1)) == pw("-1*(c) x", C, 1));
  PolyElement f = pp("x^2 + 3*(c) x", C, 1);
  CHECK(poly_rep_apply(pw("x", C, 1).multiply(pw("(c)", C, 1)), f) ==
        poly_rep_apply(pw("x", C, 1), poly_rep_apply(pw("(c)", C, 1), f)));

  // Odd trace parity makes distinct dots anticommute.
  const FrobeniusAlgebra* Gr = cached("grassmann");
  CHECK(pw("x1", Gr, 2).multiply(pw("x2", Gr, 2)) ==
        pw("x2", Gr, 2).multiply(pw("x1", Gr, 2)).scale(Rat(-1)));
  std::string cx;
  CHECK(product_oracle_check(pw("x1", Gr, 2), pw("x2", Gr, 2), &cx));
}

TEST_CASE("higher representation spot values on one red strand") {
  const FrobeniusAlgebra* G = cached("ground");
  Category cat(G, Variant::Degenerate, Rat(0),
               {pp("x", G, 1)}, 1);
  ObjectWord blackFirst = {kBlack, 1};
  ObjectWord redFirst = {1, kBlack};
  PolyElement one = PolyElement::unit(G, 1, Variant::Degenerate);
  // A black strand crossing right over the red multiplies by the pin.
  CHECK(cat.higherRepApply(blackFirst, {{StepKind::BlackRight, 0, {}}}, one) ==
        pp("x", G, 1));
  // Crossing left leaves the vector alone.
  PolyElement v = pp("x^2 - 7", G, 1);
  CHECK(cat.higherRepApply(redFirst, {{StepKind::BlackLeft, 0, {}}}, v) == v);
  CHECK(cat.higherRepApply(blackFirst, {}, v) == v);
  // Round trip multiplies by the pin once.
  CHECK(cat.higherRepApply(blackFirst,
                           {{StepKind::BlackRight, 0, {}},
                            {StepKind::BlackLeft, 0, {}}},
                           v) == pp("x", G, 1) * v);
}

TEST_CASE("variant and context mismatches are rejected") {
  const FrobeniusAlgebra* G = cached("ground");
  WreathElement q = parse_wreath("X1 T1", G, 2, Variant::Quantum, Rat(1));
  PolyElement f = pp("x1", G, 2);
  CHECK_THROWS_WITH_AS(poly_rep_apply(q, f), doctest::Contains("degenerate"),
                       FhError);
  PolyElement qf = parse_pol("X1", G, 2, Variant::Quantum);
  CHECK_THROWS_AS(poly_rep_apply(pw("x1", G, 2), qf), FhError);
  CHECK_THROWS_AS(poly_rep_apply(pw("x1", G, 2), pp("x1", G, 3)), FhError);
  try {
    poly_rep_apply(q, f);
    FAIL("expected an error");
  } catch (const FhError& e) {
    CHECK(e.code == Err::VariantMismatch);
  }
}
