#include "frobhecke/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frobhecke/category.hpp"
#include "frobhecke/oracle.hpp"
#include "frobhecke/parse.hpp"
#include "frobhecke/report.hpp"
#include "frobhecke/session.hpp"

namespace fh {

namespace {

// Exit 1: a well-posed computation failed a mathematical law or check.
// Exit 2: the request itself was malformed or ill-typed.
int exit_code_for(Err e) {
  switch (e) {
    case Err::NotAssociative:
    case Err::NoUnit:
    case Err::ParityViolation:
    case Err::DegenerateTrace:
    case Err::InhomogeneousTrace:
    case Err::BadCayleyTable:
    case Err::NoSolution:
    case Err::InternalInconsistency:
    case Err::NotDivisible:
    case Err::RegularityInconclusive:
    case Err::RegularityFailure:
    case Err::NonTermination:
    case Err::DivisionFailure:
      return 1;
    default:
      return 2;
  }
}

std::string vec_string(const FrobeniusAlgebra& A, const Vec& v) {
  std::string s;
  for (int i = 0; i < A.dim(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += rat_str(v[i]) + "*" + A.labels()[i];
  }
  return s.empty() ? "0" : s;
}

Vec parse_vec(const FrobeniusAlgebra& A, const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(rat_parse(part));
  if ((int)v.size() != A.dim())
    fail(Err::IndexOutOfRange, "expected " + std::to_string(A.dim()) +
                                   " comma-separated coefficients");
  return v;
}

void require_variant(const Session& S, Variant want, const std::string& op) {
  if (S.variant() != want)
    fail(Err::WrongVariant,
         op + (want == Variant::Degenerate ? " requires the degenerate variant"
                                           : " requires the quantum variant"));
}

void check_cross_index(int i, int n) {
  if (i < 1 || i > n - 1)
    fail(Err::IndexOutOfRange,
         "crossing index " + std::to_string(i) + " outside 1.." +
             std::to_string(n - 1));
}

PolyElement rand_pol(Rng& rng, const FrobeniusAlgebra* A, int n, Variant var) {
  PolyElement p = PolyElement::zero(A, n, var);
  // Larger coefficient algebras get smaller sample elements so the sampled
  // checks stay interactive.
  bool big = A->dim() > 4;
  int terms = big ? 1 : (int)rng.randint(1, 2);
  long hi = big ? 1 : 2;
  long lo = var == Variant::Quantum ? -1 : 0;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(n);
    std::vector<long> exp(n);
    for (int s = 0; s < n; ++s) {
      idx[s] = (int)rng.randint(0, A->dim() - 1);
      exp[s] = rng.randint(lo, hi);
    }
    Rat c(rng.randint(-3, 3));
    if (c == 0) c = 1;
    p.addTerm(idx, exp, c);
  }
  return p;
}

WreathElement rand_wreath(Rng& rng, const FrobeniusAlgebra* A, int n,
                          Variant var, const Rat& z) {
  std::vector<Perm> perms = all_perms(n);
  WreathElement u = WreathElement::zero(A, n, var, z);
  int terms = (int)rng.randint(1, 2);
  for (int t = 0; t < terms; ++t) {
    const Perm& w = perms[rng.randint(0, (long)perms.size() - 1)];
    u.addTerm(w, rand_pol(rng, A, n, var));
  }
  return u;
}

void run_verify(const Session& S, Report& rep) {
  const FrobeniusAlgebra& A = S.algebra();
  const FrobeniusAlgebra* Ap = S.algebraPtr();
  Variant var = S.variant();
  const Rat& z = S.z();
  Rng rng(S.seed());

  rep.add("algebra-laws", true, A.name());
  rep.add("form-nondegeneracy", mat_is_identity(mat_mul(A.gram(), A.dual())));

  bool twist = true;
  for (int i = 0; i < A.dim() && twist; ++i)
    for (int k = 0; k < A.dim() && twist; ++k) {
      Rat lhs = A.trVec(A.mulVec(A.basisVec(k), A.psiVec(A.basisVec(i))));
      Rat rhs = A.trVec(A.mulVec(A.basisVec(i), A.basisVec(k)));
      if (A.parity()[i] && A.parity()[k]) rhs = -rhs;
      twist = lhs == rhs;
    }
  rep.add("trace-twist", twist);

  {
    bool ok = true;
    std::string detail;
    PolyElement t12 = teleporter(Ap, 2, var, 0, 1);
    PolyElement t21 = teleporter(Ap, 2, var, 1, 0);
    for (int b = 0; b < A.dim() && ok; ++b) {
      Vec vb = A.basisVec(b);
      PolyElement a1 = PolyElement::token(Ap, 2, var, 0, vb);
      PolyElement a2 = PolyElement::token(Ap, 2, var, 1, vb);
      PolyElement pa1 = PolyElement::token(Ap, 2, var, 0, A.psiVec(vb));
      PolyElement pa2 = PolyElement::token(Ap, 2, var, 1, A.psiVec(vb));
      Rat sg = (A.eps() && A.parity()[b]) ? Rat(-1) : Rat(1);
      ok = a1 * t12 == (t12 * a2).scale(sg) &&
           t12 * pa1 == (a2 * t12).scale(sg) &&
           t21 * a1 == (a2 * t21).scale(sg) &&
           a1 * t21 == (t21 * pa2).scale(sg);
      if (!ok) detail = "failed on " + A.labels()[b];
    }
    rep.add("teleporter-identities", ok, detail);
  }

  int nw = std::min(S.config().n, 3);
  if (nw < 2) nw = 2;
  for (const auto& r : relation_catalog_wreath(Ap, nw, var, z))
    rep.add(r.name, r.pass, r.detail);

  int assocSamples = A.dim() > 4 ? 6 : 20;
  int repSamples = A.dim() > 4 ? 4 : 15;
  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < assocSamples && ok; ++t) {
      WreathElement u = rand_wreath(rng, Ap, nw, var, z);
      WreathElement v = rand_wreath(rng, Ap, nw, var, z);
      WreathElement w = rand_wreath(rng, Ap, nw, var, z);
      ok = u.multiply(v).multiply(w) == u.multiply(v.multiply(w));
      if (!ok) detail = "triple " + std::to_string(t);
    }
    rep.add("associativity-samples", ok, detail);
  }

  if (var == Variant::Degenerate) {
    bool ok = true;
    std::string detail;
    int np = std::min(S.config().n, 2);
    if (np < 2) np = 2;
    for (int t = 0; t < repSamples && ok; ++t) {
      WreathElement u = rand_wreath(rng, Ap, np, var, z);
      WreathElement v = rand_wreath(rng, Ap, np, var, z);
      ok = product_oracle_check(u, v, &detail);
    }
    rep.add("representation-samples", ok, detail);
  } else {
    WreathElement T1 = WreathElement::crossing(Ap, 2, var, 0, z);
    WreathElement X1 = WreathElement::fromPol(
        PolyElement::dot(Ap, 2, var, 0, 1), z);
    WreathElement X2 = WreathElement::fromPol(
        PolyElement::dot(Ap, 2, var, 1, 1), z);
    rep.add("dot-conjugation", T1.multiply(X1).multiply(T1) == X2);
  }

  if (!S.pins().empty()) {
    Category cat(Ap, var, z, S.pins(), S.config().d);
    for (const auto& r : relation_catalog_category(cat))
      rep.add(r.name, r.pass, r.detail);

    bool ok = true;
    std::string detail;
    std::vector<ObjectWord> objs = cat.objects();
    std::vector<Perm> perms = all_perms(cat.d());
    for (int t = 0; t < 10 && ok; ++t) {
      const ObjectWord& a = objs[rng.randint(0, (long)objs.size() - 1)];
      const ObjectWord& b = objs[rng.randint(0, (long)objs.size() - 1)];
      const ObjectWord& c = objs[rng.randint(0, (long)objs.size() - 1)];
      Morphism f = cat.basisMorphism(
          a, b, perms[rng.randint(0, (long)perms.size() - 1)],
          rand_pol(rng, Ap, cat.d(), var));
      Morphism g = cat.basisMorphism(
          b, c, perms[rng.randint(0, (long)perms.size() - 1)],
          rand_pol(rng, Ap, cat.d(), var));
      ok = cat.phi(cat.compose(g, f)) == cat.phi(g).multiply(cat.phi(f));
      if (!ok) detail = "pair " + std::to_string(t);
    }
    rep.add("transport-functoriality", ok, detail);
  }
}

struct Opts {
  std::string algebraSpec = "builtin:ground";
  bool quantum = false;
  std::string z = "0";
  int d = 2;
  std::vector<std::string> Qs;
  uint64_t seed = 0;
  std::string format = "text";

  SessionConfig config() const {
    SessionConfig cfg;
    cfg.algebraSpec = algebraSpec;
    cfg.quantum = quantum;
    cfg.z = z;
    cfg.pinExprs = Qs;
    cfg.n = d;
    cfg.d = d;
    cfg.seed = seed;
    cfg.format = format;
    return cfg;
  }
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  Opts o;
  int code = 0;

  CLI::App app{"exact engine for affine wreath algebras over a Frobenius base"};
  app.require_subcommand(1);
  app.add_option("--algebra", o.algebraSpec, "builtin:NAME or JSON file");
  app.add_flag("--quantum", o.quantum, "quantum variant");
  app.add_option("--z", o.z, "quantum parameter (rational)");
  app.add_option("--d", o.d, "strand count");
  app.add_option("--Q", o.Qs, "red-strand label polynomial (repeatable)");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  auto sub = [&](CLI::App* parent, const std::string& name,
                 const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* alg = sub(&app, "algebra", "base algebra inspection");
  alg->require_subcommand(1);
  CLI::App* pol = sub(&app, "pol", "dot-decorated tensor polynomials");
  pol->require_subcommand(1);
  CLI::App* wr = sub(&app, "wreath", "affine wreath algebra elements");
  wr->require_subcommand(1);
  CLI::App* cat = sub(&app, "cat", "higher-level category");
  cat->require_subcommand(1);

  // algebra
  CLI::App* aValidate = sub(alg, "validate", "check all structure laws");
  aValidate->callback([&] {
    Session S(o.config());
    const FrobeniusAlgebra& A = S.algebra();
    out << "name " << A.name() << "\n";
    out << "dim " << A.dim() << "\n";
    out << "trace-parity " << A.eps() << "\n";
    out << "symmetric " << (A.symmetric() ? "yes" : "no") << "\n";
    out << "valid\n";
  });

  CLI::App* aDual = sub(alg, "dual", "print the left dual basis");
  aDual->callback([&] {
    Session S(o.config());
    const FrobeniusAlgebra& A = S.algebra();
    for (int i = 0; i < A.dim(); ++i)
      out << A.labels()[i] << "^ = " << vec_string(A, A.dualVec(i)) << "\n";
  });

  CLI::App* aNak = sub(alg, "nakayama", "print the Nakayama automorphism");
  aNak->callback([&] {
    Session S(o.config());
    const FrobeniusAlgebra& A = S.algebra();
    for (int i = 0; i < A.dim(); ++i)
      out << "psi(" << A.labels()[i]
          << ") = " << vec_string(A, A.psiVec(A.basisVec(i))) << "\n";
    out << "symmetric " << (A.symmetric() ? "yes" : "no") << "\n";
  });

  std::string traceArg;
  CLI::App* aTr = sub(alg, "change-trace", "recompute data for a new trace");
  aTr->add_option("trace", traceArg, "comma-separated trace values")
      ->required();
  aTr->callback([&] {
    Session S(o.config());
    const FrobeniusAlgebra& A = S.algebra();
    TraceChange tc = change_trace(A, parse_vec(A, traceArg));
    out << "u = " << vec_string(A, tc.u) << "\n";
    out << "trace-parity " << tc.epsPrime << "\n";
    for (int i = 0; i < A.dim(); ++i)
      out << "psi'(" << A.labels()[i]
          << ") = " << vec_string(A, tc.psiPrime[i]) << "\n";
  });

  // pol
  std::string e1, e2;
  int genIdx = 1, genIdx2 = 2;
  CLI::App* pMul = sub(pol, "mul", "multiply two polynomial elements");
  pMul->add_option("lhs", e1)->required();
  pMul->add_option("rhs", e2)->required();
  pMul->callback([&] {
    Session S(o.config());
    PolyElement a = parse_pol(e1, S.algebraPtr(), o.d, S.variant());
    PolyElement b = parse_pol(e2, S.algebraPtr(), o.d, S.variant());
    out << pol_to_string(a * b) << "\n";
  });

  CLI::App* pDem = sub(pol, "demazure", "apply the divided difference");
  pDem->add_option("i", genIdx, "crossing index (1-based)")->required();
  pDem->add_option("expr", e1)->required();
  pDem->callback([&] {
    Session S(o.config());
    require_variant(S, Variant::Degenerate, "demazure");
    check_cross_index(genIdx, o.d);
    PolyElement f = parse_pol(e1, S.algebraPtr(), o.d, S.variant());
    out << pol_to_string(demazure(genIdx - 1, f)) << "\n";
  });

  CLI::App* pDel = sub(pol, "delta", "apply the Laurent divided difference");
  pDel->add_option("i", genIdx, "crossing index (1-based)")->required();
  pDel->add_option("expr", e1)->required();
  pDel->callback([&] {
    Session S(o.config());
    require_variant(S, Variant::Quantum, "delta");
    check_cross_index(genIdx, o.d);
    PolyElement f = parse_pol(e1, S.algebraPtr(), o.d, S.variant());
    out << pol_to_string(delta(genIdx - 1, f)) << "\n";
  });

  CLI::App* pTel = sub(pol, "teleporter", "print a teleporter element");
  pTel->add_option("i", genIdx, "source strand (1-based)")->required();
  pTel->add_option("j", genIdx2, "target strand (1-based)")->required();
  pTel->callback([&] {
    Session S(o.config());
    if (genIdx < 1 || genIdx > o.d || genIdx2 < 1 || genIdx2 > o.d ||
        genIdx == genIdx2)
      fail(Err::IndexOutOfRange, "teleporter needs distinct strands in 1.." +
                                     std::to_string(o.d));
    out << pol_to_string(teleporter(S.algebraPtr(), o.d, S.variant(),
                                    genIdx - 1, genIdx2 - 1))
        << "\n";
  });

  // wreath
  CLI::App* wMul = sub(wr, "mul", "multiply two wreath elements");
  wMul->add_option("lhs", e1)->required();
  wMul->add_option("rhs", e2)->required();
  wMul->callback([&] {
    Session S(o.config());
    WreathElement a = parse_wreath(e1, S.algebraPtr(), o.d, S.variant(), S.z());
    WreathElement b = parse_wreath(e2, S.algebraPtr(), o.d, S.variant(), S.z());
    out << wreath_to_string(a.multiply(b)) << "\n";
  });

  CLI::App* wCen = sub(wr, "center", "test membership in the center");
  wCen->add_option("expr", e1)->required();
  wCen->callback([&] {
    Session S(o.config());
    WreathElement u = parse_wreath(e1, S.algebraPtr(), o.d, S.variant(), S.z());
    CenterResult r = center_membership(u);
    if (r.accepted) {
      out << "central\n";
    } else {
      out << "not central: " << r.reason << "\n";
      code = 1;
    }
  });

  CLI::App* wCyc = sub(wr, "cyclo", "reduce modulo the cyclotomic ideal");
  wCyc->add_option("expr", e1)->required();
  wCyc->callback([&] {
    Session S(o.config());
    if (S.pins().size() != 1)
      fail(Err::LevelNotOne, "cyclotomic reduction takes exactly one --Q");
    CyclotomicReducer red(S.algebraPtr(), o.d, S.variant(), S.z(),
                          S.pins()[0]);
    WreathElement u = parse_wreath(e1, S.algebraPtr(), o.d, S.variant(), S.z());
    out << wreath_to_string(red.reduce(u)) << "\n";
  });

  int boundArg = 3;
  CLI::App* wDim = sub(wr, "dim-oracle", "brute-force quotient dimension");
  wDim->add_option("bound", boundArg, "degree window bound")->required();
  wDim->callback([&] {
    Session S(o.config());
    if (S.pins().size() != 1)
      fail(Err::LevelNotOne, "the dimension oracle takes exactly one --Q");
    QuotientDimResult r = quotient_dim_oracle(S.algebraPtr(), o.d, S.pins()[0],
                                              S.variant(), S.z(), boundArg);
    out << "dim " << r.dimHigh << "\n";
    out << "dim-at-lower " << r.dimLow << "\n";
    out << "stabilized " << (r.stabilized ? "yes" : "no") << "\n";
    if (!r.stabilized) out << "warning BoundTooSmall\n";
  });

  // cat
  auto make_cat = [&](const Session& S) {
    return Category(S.algebraPtr(), S.variant(), S.z(), S.pins(),
                    S.config().d);
  };

  CLI::App* cShuf = sub(cat, "shuffles", "list the objects of the sector");
  cShuf->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    for (const ObjectWord& obj : c.objects())
      out << object_to_string(obj) << "\n";
  });

  std::string srcArg, word1, word2, src2Arg;
  CLI::App* cPhi = sub(cat, "phi", "collapse a diagram word");
  cPhi->add_option("src", srcArg, "source object")->required();
  cPhi->add_option("word", word1, "diagram word")->required();
  cPhi->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    ObjectWord src = parse_object_word(srcArg, c.level());
    DiagramWord w = parse_diagram_word(word1, S.algebraPtr(), S.variant());
    out << wreath_to_string(c.phiWord(src, w)) << "\n";
  });

  CLI::App* cNorm = sub(cat, "normalize", "rewrite a diagram word");
  cNorm->add_option("src", srcArg, "source object")->required();
  cNorm->add_option("word", word1, "diagram word")->required();
  cNorm->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    ObjectWord src = parse_object_word(srcArg, c.level());
    DiagramWord w = parse_diagram_word(word1, S.algebraPtr(), S.variant());
    out << morphism_to_string(c.normalizeDiagram(src, w)) << "\n";
  });

  CLI::App* cComp = sub(cat, "compose", "stack two diagram words");
  cComp->add_option("src", srcArg, "source object")->required();
  cComp->add_option("lower", word1, "diagram word applied first")->required();
  cComp->add_option("upper", word2, "diagram word applied second")->required();
  cComp->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    ObjectWord src = parse_object_word(srcArg, c.level());
    Morphism f = c.normalizeDiagram(
        src, parse_diagram_word(word1, S.algebraPtr(), S.variant()));
    Morphism g = c.normalizeDiagram(
        f.tgt, parse_diagram_word(word2, S.algebraPtr(), S.variant()));
    out << morphism_to_string(c.compose(g, f)) << "\n";
  });

  CLI::App* cPath = sub(cat, "path-mul", "multiply two path-algebra elements");
  cPath->add_option("src1", srcArg, "source of the first factor")->required();
  cPath->add_option("word1", word1, "first diagram word")->required();
  cPath->add_option("src2", src2Arg, "source of the second factor")->required();
  cPath->add_option("word2", word2, "second diagram word")->required();
  cPath->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    Morphism f = c.normalizeDiagram(
        parse_object_word(srcArg, c.level()),
        parse_diagram_word(word1, S.algebraPtr(), S.variant()));
    Morphism g = c.normalizeDiagram(
        parse_object_word(src2Arg, c.level()),
        parse_diagram_word(word2, S.algebraPtr(), S.variant()));
    PathElement P =
        c.pathMultiply(c.pathFromMorphism(f), c.pathFromMorphism(g));
    if (P.isZero()) {
      out << "0\n";
    } else {
      for (const auto& [key, m] : P.blocks) out << morphism_to_string(m) << "\n";
    }
  });

  CLI::App* cIso = sub(cat, "cyclo-iso", "compare against the level-one quotient");
  cIso->add_option("bound", boundArg, "degree window bound");
  cIso->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    CycloIsoReport r = c.cyclotomicIso(boundArg);
    out << "corner-kernel " << (r.cornerKernel ? "pass" : "fail") << "\n";
    out << "ideal-left " << (r.idealLeft ? "pass" : "fail") << "\n";
    out << "ideal-right " << (r.idealRight ? "pass" : "fail") << "\n";
    out << "dim " << r.quotientDim << " expected " << r.expectedDim << "\n";
    out << "stabilized " << (r.stabilized ? "yes" : "no") << "\n";
    if (!r.stabilized) out << "warning BoundTooSmall\n";
    if (!r.ok()) code = 1;
  });

  std::string objArg;
  CLI::App* cCen = sub(cat, "center", "test a polynomial for path centrality");
  cCen->add_option("expr", e1, "polynomial over the black strands")->required();
  cCen->add_option("--object", objArg, "restrict to one object");
  cCen->callback([&] {
    Session S(o.config());
    Category c = make_cat(S);
    PolyElement f = parse_pol(e1, S.algebraPtr(), c.d(), S.variant());
    Perm id = perm_identity(c.d());
    PathElement P;
    if (!objArg.empty()) {
      ObjectWord obj = parse_object_word(objArg, c.level());
      P = c.pathFromMorphism(c.basisMorphism(obj, obj, id, f));
    } else {
      P = PathElement{};
      for (const ObjectWord& obj : c.objects())
        P = c.pathAdd(P, c.pathFromMorphism(c.basisMorphism(obj, obj, id, f)));
    }
    CenterResult r = c.centerMembershipPath(P);
    if (r.accepted) {
      out << "central\n";
    } else {
      out << "not central: " << r.reason << "\n";
      code = 1;
    }
  });

  // verify
  CLI::App* ver = sub(&app, "verify", "run the full deterministic check suite");
  ver->callback([&] {
    Session S(o.config());
    Report rep;
    run_verify(S, rep);
    out << (S.jsonFormat() ? rep.renderJson(S.seed(), S.configHash())
                           : rep.renderText(S.seed(), S.configHash()));
    if (!rep.allPass()) code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e, out, err);
    return r == 0 ? 0 : 2;
  } catch (const FhError& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace fh
