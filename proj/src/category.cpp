#include "frobhecke/category.hpp"

#include <algorithm>

namespace fh {

namespace {

// One-strand polynomial expanded on strand `slot` of a d-strand context.
PolyElement expand_at(const PolyElement& q, const FrobeniusAlgebra* A, int d,
                      Variant var, int slot) {
  std::map<long, Vec> coeffs;
  for (auto& [k, c] : q.terms()) {
    auto& v = coeffs.try_emplace(k.exp[0], Vec(A->dim(), Rat(0))).first->second;
    v[k.idx[0]] += c;
  }
  PolyElement r = PolyElement::zero(A, d, var);
  for (auto& [e, v] : coeffs) {
    PolyElement piece = PolyElement::token(A, d, var, slot, v);
    if (e != 0) piece = piece * PolyElement::dot(A, d, var, slot, e);
    r = r + piece;
  }
  return r;
}

void add_coeff(std::map<Perm, PolyElement>& m, const Perm& w,
               const PolyElement& p) {
  if (p.isZero()) return;
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, p);
  } else {
    it->second = it->second + p;
    if (it->second.isZero()) m.erase(it);
  }
}

Morphism add_morphism(const Morphism& a, const Morphism& b) {
  if (a.src != b.src || a.tgt != b.tgt)
    fail(Err::NonComposable, "sum of morphisms with different endpoints");
  Morphism r = a;
  for (auto& [w, p] : b.coeffs) add_coeff(r.coeffs, w, p);
  return r;
}

}  // namespace

Category::Category(const FrobeniusAlgebra* A, Variant var, Rat z,
                   std::vector<PolyElement> pins, int d)
    : A_(A), var_(var), z_(std::move(z)), pins_(std::move(pins)), d_(d) {
  if (d < 0) fail(Err::IndexOutOfRange, "negative strand count");
  for (auto& q : pins_) {
    if (q.algebra() != A_ || q.n() != 1 || q.variant() != var_)
      fail(Err::VariantMismatch, "pin from a different context");
    PinCheckResult pc = pin_check(q);
    if (!pc.ok)
      fail(Err::RegularityInconclusive, "pin rejected: " + pc.reason);
  }
}

std::vector<ObjectWord> Category::objects() const {
  return shuffles(d_, level());
}

WreathElement Category::phiWord(const ObjectWord& src,
                                const DiagramWord& word) const {
  if (black_count(src) != d_ || !is_shuffle_word(src, d_, level()))
    fail(Err::IncompatibleObjects, "source is not an object of this sector");
  ObjectWord obj = src;
  WreathElement E = WreathElement::unit(A_, d_, var_, z_);
  for (auto& st : word) {
    ObjectWord next = apply_step(obj, st);
    WreathElement layer = WreathElement::unit(A_, d_, var_, z_);
    bool haveLayer = false;
    switch (st.kind) {
      case StepKind::Cross: {
        int k = black_index(obj, st.pos);
        layer = WreathElement::crossing(A_, d_, var_, k, z_);
        haveLayer = true;
        break;
      }
      case StepKind::CrossNeg: {
        if (var_ != Variant::Quantum)
          fail(Err::VariantMismatch,
               "inverse crossings need the quantum variant");
        int k = black_index(obj, st.pos);
        layer = WreathElement::crossing(A_, d_, var_, k, z_) -
                WreathElement::fromPol(teleporter(A_, d_, var_, k, k + 1), z_)
                    .scale(z_);
        haveLayer = true;
        break;
      }
      case StepKind::BlackRight: {
        int k = black_index(obj, st.pos);
        int r = obj[st.pos + 1];
        layer = WreathElement::fromPol(
            expand_at(pins_[r - 1], A_, d_, var_, k), z_);
        haveLayer = true;
        break;
      }
      case StepKind::BlackLeft:
        break;
      case StepKind::Dot: {
        int k = black_index(obj, st.pos);
        layer = WreathElement::fromPol(PolyElement::dot(A_, d_, var_, k, 1), z_);
        haveLayer = true;
        break;
      }
      case StepKind::InvDot: {
        if (var_ != Variant::Quantum)
          fail(Err::InverseDotInDegenerate,
               "inverse dots need the quantum variant");
        int k = black_index(obj, st.pos);
        layer =
            WreathElement::fromPol(PolyElement::dot(A_, d_, var_, k, -1), z_);
        haveLayer = true;
        break;
      }
      case StepKind::Token: {
        int k = black_index(obj, st.pos);
        if ((int)st.token.size() != A_->dim())
          fail(Err::IndexOutOfRange, "token payload size");
        layer = WreathElement::fromPol(
            PolyElement::token(A_, d_, var_, k, st.token), z_);
        haveLayer = true;
        break;
      }
    }
    if (haveLayer) E = layer.multiply(E);
    obj = next;
  }
  return E;
}

const PhiBasis& Category::phiBasis(const ObjectWord& src,
                                   const ObjectWord& tgt) const {
  auto key = std::make_pair(src, tgt);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  PhiBasis basis;
  basis.matchings = all_perms(d_);
  for (auto& w : basis.matchings) {
    DiagramWord D = canonical_diagram(src, tgt, w);
    WreathElement E = phiWord(src, D);
    // Combinatorial diagonal: one pin per right red-black crossing, placed at
    // the final index of the black strand involved.
    PolyElement h = PolyElement::unit(A_, d_, var_);
    {
      // ids: black index of the strand currently in each slot, or -(r+1) for
      // the red labeled r.
      std::vector<int> ids(src.size());
      for (size_t p = 0; p < src.size(); ++p)
        ids[p] = is_black(src[p]) ? black_index(src, (int)p) : -(src[p] + 1);
      for (auto& st : D) {
        if (st.kind == StepKind::BlackRight) {
          int j = ids[st.pos];
          int r = -ids[st.pos + 1] - 1;
          h = h * expand_at(pins_[r - 1], A_, d_, var_, w[j]);
        }
        if (st.kind == StepKind::BlackRight || st.kind == StepKind::BlackLeft ||
            st.kind == StepKind::Cross)
          std::swap(ids[st.pos], ids[st.pos + 1]);
      }
    }
    for (auto& [u, hu] : E.terms()) {
      if (u == w) {
        if (!(hu == h))
          fail(Err::RegularityFailure,
               "diagonal coefficient does not match the pin product");
      } else if (perm_len(u) >= perm_len(w)) {
        fail(Err::RegularityFailure,
             "collapse image is not triangular in length");
      }
    }
    if (E.terms().find(w) == E.terms().end() && !h.isZero())
      fail(Err::RegularityFailure, "missing diagonal coefficient");
    basis.diagonal.emplace(w, h);
    basis.image.emplace(w, std::move(E));
  }
  return cache_.emplace(key, std::move(basis)).first->second;
}

WreathElement Category::phi(const Morphism& f) const {
  const PhiBasis& B = phiBasis(f.src, f.tgt);
  WreathElement acc = WreathElement::zero(A_, d_, var_, z_);
  for (auto& [w, pol] : f.coeffs) acc = acc + B.image.at(w).lmulPol(pol);
  return acc;
}

Morphism Category::identity(const ObjectWord& obj) const {
  if (!is_shuffle_word(obj, d_, level()))
    fail(Err::IncompatibleObjects, "not an object of this sector");
  Morphism m;
  m.src = m.tgt = obj;
  m.coeffs.emplace(perm_identity(d_), PolyElement::unit(A_, d_, var_));
  return m;
}

Morphism Category::basisMorphism(const ObjectWord& src, const ObjectWord& tgt,
                                 const Perm& w,
                                 const PolyElement& coeff) const {
  if (!is_shuffle_word(src, d_, level()) || !is_shuffle_word(tgt, d_, level()))
    fail(Err::IncompatibleObjects, "not an object of this sector");
  canonical_diagram(src, tgt, w);
  if (coeff.algebra() != A_ || coeff.n() != d_ || coeff.variant() != var_)
    fail(Err::VariantMismatch, "coefficient from a different context");
  Morphism m;
  m.src = src;
  m.tgt = tgt;
  if (!coeff.isZero()) m.coeffs.emplace(w, coeff);
  return m;
}

Morphism Category::extract(const ObjectWord& src, const ObjectWord& tgt,
                           WreathElement E) const {
  const PhiBasis& B = phiBasis(src, tgt);
  std::vector<Perm> order = B.matchings;
  std::sort(order.begin(), order.end(), [](const Perm& a, const Perm& b) {
    return std::make_pair(perm_len(a), a) > std::make_pair(perm_len(b), b);
  });
  Morphism res;
  res.src = src;
  res.tgt = tgt;
  for (auto& w : order) {
    auto it = E.terms().find(w);
    if (it == E.terms().end()) continue;
    PolyElement fw(A_, d_, var_);
    try {
      fw = exact_divide(it->second, B.diagonal.at(w));
    } catch (const FhError& e) {
      if (e.code == Err::NotDivisible)
        fail(Err::DivisionFailure,
             "coefficient extraction failed: " + std::string(e.what()));
      throw;
    }
    if (fw.isZero()) continue;
    E = E - B.image.at(w).lmulPol(fw);
    res.coeffs.emplace(w, fw);
  }
  if (!E.isZero())
    fail(Err::DivisionFailure, "residue outside the canonical span");
  return res;
}

Morphism Category::compose(const Morphism& g, const Morphism& f) const {
  if (f.tgt != g.src)
    fail(Err::NonComposable, "middle objects disagree");
  WreathElement E = phi(g).multiply(phi(f));
  return extract(f.src, g.tgt, E);
}

Morphism Category::normalizeDiagram(const ObjectWord& src,
                                    const DiagramWord& word) const {
  // The canonical coefficients are unique, so the normal form of a word is
  // the extraction of its collapse; black crossings sliding past reds pick
  // up divided-difference corrections that no layer-local update sees, and
  // the extraction accounts for them uniformly.
  return extract(src, word_target(src, word), phiWord(src, word));
}

PathElement Category::pathUnit() const {
  PathElement P;
  for (auto& obj : objects()) {
    Morphism id = identity(obj);
    P.blocks.emplace(std::make_pair(obj, obj), std::move(id));
  }
  return P;
}

PathElement Category::pathFromMorphism(const Morphism& f) const {
  PathElement P;
  if (!f.isZero()) P.blocks.emplace(std::make_pair(f.src, f.tgt), f);
  return P;
}

PathElement Category::pathAdd(const PathElement& U,
                              const PathElement& V) const {
  PathElement R = U;
  for (auto& [key, m] : V.blocks) {
    auto it = R.blocks.find(key);
    if (it == R.blocks.end()) {
      R.blocks.emplace(key, m);
    } else {
      it->second = add_morphism(it->second, m);
      if (it->second.isZero()) R.blocks.erase(it);
    }
  }
  return R;
}

PathElement Category::pathScale(const PathElement& U, const Rat& c) const {
  PathElement R;
  if (c == 0) return R;
  for (auto& [key, m] : U.blocks) {
    Morphism s = m;
    for (auto& [w, p] : s.coeffs) p = p.scale(c);
    R.blocks.emplace(key, std::move(s));
  }
  return R;
}

PathElement Category::pathMultiply(const PathElement& U,
                                   const PathElement& V) const {
  // (U * V) on a block a -> c sums compose(U|b->c, V|a->b); U acts after V.
  PathElement R;
  for (auto& [ku, mu] : U.blocks)
    for (auto& [kv, mv] : V.blocks) {
      if (kv.second != ku.first) continue;
      Morphism piece = compose(mu, mv);
      if (piece.isZero()) continue;
      auto key = std::make_pair(kv.first, ku.second);
      auto it = R.blocks.find(key);
      if (it == R.blocks.end())
        R.blocks.emplace(key, std::move(piece));
      else
        it->second = add_morphism(it->second, piece);
    }
  for (auto it = R.blocks.begin(); it != R.blocks.end();)
    it = it->second.isZero() ? R.blocks.erase(it) : std::next(it);
  return R;
}

CenterResult Category::centerMembershipPath(const PathElement& U) const {
  if (U.isZero()) return {true, "zero element"};
  for (auto& [key, m] : U.blocks)
    if (key.first != key.second)
      return {false, "has an off-diagonal block"};
  const PolyElement* common = nullptr;
  for (auto& [key, m] : U.blocks) {
    if (m.coeffs.size() != 1 ||
        !perm_is_identity(m.coeffs.begin()->first))
      return {false, "a diagonal block has a non-identity matching"};
    const PolyElement& f = m.coeffs.begin()->second;
    if (!is_symmetric_central(f))
      return {false, "a diagonal coefficient is not symmetric central"};
    if (common && !(*common == f))
      return {false, "diagonal coefficients differ across objects"};
    common = &f;
  }
  if (U.blocks.size() != objects().size())
    return {false, "absent on some objects"};
  return {true, "uniform symmetric central diagonal"};
}

CycloIsoReport Category::cyclotomicIso(int dimension_bound) const {
  if (level() != 1) fail(Err::LevelNotOne, "exactly one pin required");
  CycloIsoReport rep;
  const PolyElement& Q = pins_[0];
  CyclotomicReducer red(A_, d_, var_, z_, Q);

  ObjectWord omega;
  omega.push_back(1);
  for (int i = 0; i < d_; ++i) omega.push_back(kBlack);

  // Round trips through every other object land in the ideal.
  bool corner = true;
  PolyElement unitPol = PolyElement::unit(A_, d_, var_);
  for (auto& obj : objects()) {
    if (obj == omega) continue;
    for (auto& w1 : all_perms(d_))
      for (auto& w2 : all_perms(d_)) {
        Morphism f = basisMorphism(omega, obj, w1, unitPol);
        Morphism g = basisMorphism(obj, omega, w2, unitPol);
        WreathElement u = phi(compose(g, f));
        if (!red.reduce(u).isZero()) corner = false;
      }
  }
  rep.cornerKernel = corner;

  // Ideal inclusions on a window of basis samples.
  bool left = true, right = true;
  {
    WreathElement Qw = red.pinAt(0);
    std::vector<std::vector<int>> words;
    {
      std::vector<int> cur(d_, 0);
      for (;;) {
        words.push_back(cur);
        int s = d_ - 1;
        while (s >= 0 && ++cur[s] == A_->dim()) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    std::vector<std::vector<long>> exps;
    {
      std::vector<long> cur(d_, 0);
      for (;;) {
        exps.push_back(cur);
        int s = d_ - 1;
        while (s >= 0 && ++cur[s] == red.level() + 1) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    for (auto& idx : words)
      for (auto& exp : exps)
        for (auto& w : all_perms(d_)) {
          WreathElement v(A_, d_, var_, z_);
          PolyElement p(A_, d_, var_);
          p.addTerm(idx, exp, Rat(1));
          v.addTerm(w, p);
          if (!red.reduce(Qw.multiply(v)).isZero()) left = false;
          if (!red.reduce(v.multiply(Qw)).isZero()) right = false;
        }
  }
  rep.idealLeft = left;
  rep.idealRight = right;

  QuotientDimResult qd =
      quotient_dim_oracle(A_, d_, Q, var_, z_, dimension_bound);
  rep.stabilized = qd.stabilized;
  rep.quotientDim = qd.dimHigh;
  long expected = 1;
  for (int i = 0; i < d_; ++i) expected *= (long)red.level() * A_->dim();
  for (int i = 2; i <= d_; ++i) expected *= i;
  rep.expectedDim = expected;
  rep.dimensionMatch = qd.dimHigh == expected;
  return rep;
}

PolyElement Category::higherRepApply(const ObjectWord& src,
                                     const DiagramWord& word,
                                     const PolyElement& v) const {
  if (var_ != Variant::Degenerate)
    fail(Err::VariantMismatch,
         "the polynomial representation is degenerate-only");
  if (v.algebra() != A_ || v.n() != d_ || v.variant() != var_)
    fail(Err::VariantMismatch, "vector from a different context");
  ObjectWord obj = src;
  PolyElement h = v;
  for (auto& st : word) {
    ObjectWord next = apply_step(obj, st);
    switch (st.kind) {
      case StepKind::Cross: {
        int k = black_index(obj, st.pos);
        h = h.superpermuteS(k) - demazure(k, h);
        break;
      }
      case StepKind::CrossNeg:
        fail(Err::VariantMismatch,
             "inverse crossings need the quantum variant");
      case StepKind::BlackRight: {
        int k = black_index(obj, st.pos);
        h = expand_at(pins_[obj[st.pos + 1] - 1], A_, d_, var_, k) * h;
        break;
      }
      case StepKind::BlackLeft:
        break;
      case StepKind::Dot: {
        int k = black_index(obj, st.pos);
        h = PolyElement::dot(A_, d_, var_, k, 1) * h;
        break;
      }
      case StepKind::InvDot:
        fail(Err::InverseDotInDegenerate,
             "inverse dots need the quantum variant");
      case StepKind::Token: {
        int k = black_index(obj, st.pos);
        h = PolyElement::token(A_, d_, var_, k, st.token) * h;
        break;
      }
    }
    obj = next;
  }
  return h;
}

PolyElement Category::higherRepApply(const Morphism& f,
                                     const PolyElement& v) const {
  PolyElement acc = PolyElement::zero(A_, d_, var_);
  for (auto& [w, fw] : f.coeffs) {
    DiagramWord D = canonical_diagram(f.src, f.tgt, w);
    acc = acc + fw * higherRepApply(f.src, D, v);
  }
  return acc;
}

}  // namespace fh
