#include "frobhecke/wreath.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fh {

namespace {
int mod2(long x) { return (int)(((x % 2) + 2) % 2); }
}

WreathElement::WreathElement(const FrobeniusAlgebra* A, int n, Variant var,
                             Rat z)
    : A_(A), n_(n), var_(var), z_(std::move(z)) {}

WreathElement WreathElement::zero(const FrobeniusAlgebra* A, int n,
                                  Variant var, Rat z) {
  return WreathElement(A, n, var, std::move(z));
}

WreathElement WreathElement::unit(const FrobeniusAlgebra* A, int n,
                                  Variant var, Rat z) {
  WreathElement r(A, n, var, std::move(z));
  r.addTerm(perm_identity(n), PolyElement::unit(A, n, var));
  return r;
}

WreathElement WreathElement::fromPol(const PolyElement& p, Rat z) {
  WreathElement r(p.algebra(), p.n(), p.variant(), std::move(z));
  r.addTerm(perm_identity(p.n()), p);
  return r;
}

WreathElement WreathElement::crossing(const FrobeniusAlgebra* A, int n,
                                      Variant var, int i, Rat z) {
  if (i < 0 || i + 1 >= n) fail(Err::IndexOutOfRange, "crossing index");
  WreathElement r(A, n, var, std::move(z));
  r.addTerm(perm_s(n, i), PolyElement::unit(A, n, var));
  return r;
}

void WreathElement::addTerm(const Perm& w, const PolyElement& p) {
  if ((int)w.size() != n_ || p.n() != n_ || p.algebra() != A_ ||
      p.variant() != var_)
    fail(Err::VariantMismatch, "term from a different wreath context");
  if (p.isZero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, p);
  } else {
    it->second = it->second + p;
    if (it->second.isZero()) t_.erase(it);
  }
}

void WreathElement::requireCompatible(const WreathElement& o) const {
  if (A_ != o.A_ || n_ != o.n_ || var_ != o.var_ || z_ != o.z_)
    fail(Err::VariantMismatch, "operands from different wreath contexts");
}

bool WreathElement::operator==(const WreathElement& o) const {
  return A_ == o.A_ && n_ == o.n_ && var_ == o.var_ && z_ == o.z_ &&
         t_ == o.t_;
}

WreathElement WreathElement::operator+(const WreathElement& o) const {
  requireCompatible(o);
  WreathElement r = *this;
  for (auto& [w, p] : o.t_) r.addTerm(w, p);
  return r;
}

WreathElement WreathElement::operator-(const WreathElement& o) const {
  requireCompatible(o);
  WreathElement r = *this;
  for (auto& [w, p] : o.t_) r.addTerm(w, p.scale(Rat(-1)));
  return r;
}

WreathElement WreathElement::scale(const Rat& c) const {
  WreathElement r(A_, n_, var_, z_);
  if (c == 0) return r;
  for (auto& [w, p] : t_) r.t_.emplace(w, p.scale(c));
  return r;
}

WreathElement WreathElement::lmulPol(const PolyElement& f) const {
  WreathElement r(A_, n_, var_, z_);
  for (auto& [w, p] : t_) r.addTerm(w, f * p);
  return r;
}

WreathElement WreathElement::rmulToken(int slot, const Vec& vec) const {
  if (slot < 0 || slot >= n_) fail(Err::IndexOutOfRange, "token slot");
  WreathElement r(A_, n_, var_, z_);
  for (auto& [w, p] : t_)
    r.addTerm(w, p * PolyElement::token(A_, n_, var_, w[slot], vec));
  return r;
}

WreathElement WreathElement::rmulCrossing(int i) const {
  if (i < 0 || i + 1 >= n_) fail(Err::IndexOutOfRange, "crossing index");
  WreathElement r(A_, n_, var_, z_);
  Perm si = perm_s(n_, i);
  for (auto& [w, p] : t_) {
    Perm wsi = perm_compose(w, si);
    if (var_ == Variant::Degenerate || perm_len(wsi) > perm_len(w)) {
      r.addTerm(wsi, p);
    } else {
      // Shorten then apply the quadratic relation: the emerging teleporter
      // slides left through the shorter crossing word by superpermutation.
      r.addTerm(wsi, p);
      PolyElement t = teleporter(A_, n_, var_, i, i + 1).superpermute(wsi);
      r.addTerm(w, (p * t).scale(z_));
    }
  }
  return r;
}

WreathElement WreathElement::sigmaDot(const Perm& w, int slot, int e) const {
  if (perm_is_identity(w))
    return fromPol(PolyElement::dot(A_, n_, var_, slot, e), z_);
  int p = -1;
  for (int i = 0; i + 1 < n_; ++i)
    if (w[i] > w[i + 1]) { p = i; break; }
  Perm v = perm_compose(w, perm_s(n_, p));
  int slot2 = slot == p ? p + 1 : slot == p + 1 ? p : slot;
  WreathElement part = sigmaDot(v, slot2, e).rmulCrossing(p);
  if (var_ == Variant::Degenerate) {
    PolyElement corr(A_, n_, var_);
    if (slot == p)
      corr = teleporter(A_, n_, var_, p, p + 1);
    else if (slot == p + 1)
      corr = teleporter(A_, n_, var_, p + 1, p).scale(Rat(-1));
    if (!corr.isZero()) {
      WreathElement c(A_, n_, var_, z_);
      c.addTerm(v, corr.superpermute(v));
      part = part - c;
    }
  } else {
    // Laurent correction: nonzero only for the two slots at the crossing.
    int sgn = 0, mslot = 0, me = 0;
    if (slot == p && e == 1) { sgn = -1; mslot = p + 1; me = 1; }
    if (slot == p + 1 && e == 1) { sgn = +1; mslot = p + 1; me = 1; }
    if (slot == p && e == -1) { sgn = +1; mslot = p; me = -1; }
    if (slot == p + 1 && e == -1) { sgn = -1; mslot = p; me = -1; }
    if (sgn != 0) {
      PolyElement t = teleporter(A_, n_, var_, p, p + 1).superpermute(v);
      WreathElement c = sigmaDot(v, mslot, me).lmulPol(t).scale(z_ * sgn);
      part = part + c;
    }
  }
  return part;
}

WreathElement WreathElement::rmulDot(int slot, long e) const {
  if (slot < 0 || slot >= n_) fail(Err::IndexOutOfRange, "dot slot");
  if (e < 0 && var_ == Variant::Degenerate)
    fail(Err::InverseDotInDegenerate, "inverse dots need the quantum variant");
  WreathElement acc = *this;
  int step = e > 0 ? 1 : -1;
  for (long k = 0; k < std::abs(e); ++k) {
    WreathElement next(A_, n_, var_, z_);
    for (auto& [w, p] : acc.t_) {
      WreathElement piece = sigmaDot(w, slot, step).lmulPol(p);
      next = next + piece;
    }
    acc = next;
  }
  return acc;
}

WreathElement WreathElement::multiply(const WreathElement& v) const {
  requireCompatible(v);
  WreathElement res(A_, n_, var_, z_);
  for (auto& [wv, pol] : v.t_) {
    auto rw = reduced_word(wv);
    for (auto& [key, c] : pol.terms()) {
      WreathElement acc = scale(c);
      for (int s = 0; s < n_; ++s)
        acc = acc.rmulToken(s, A_->basisVec(key.idx[s]));
      for (int s = 0; s < n_; ++s)
        if (key.exp[s] != 0) acc = acc.rmulDot(s, key.exp[s]);
      for (int i : rw) acc = acc.rmulCrossing(i);
      res = res + acc;
    }
  }
  return res;
}

long WreathElement::maxAbsDegree() const {
  long m = 0;
  for (auto& [w, p] : t_) m = std::max(m, p.maxAbsDegree());
  return m;
}

CenterResult center_membership(const WreathElement& u) {
  for (auto& [w, p] : u.terms())
    if (!perm_is_identity(w))
      return {false, "has a term with a non-identity permutation"};
  if (u.isZero()) return {true, "zero element"};
  const PolyElement& f = u.terms().begin()->second;
  for (int i = 0; i + 1 < u.n(); ++i)
    if (!(f.superpermuteS(i) == f))
      return {false, "polynomial part is not symmetric"};
  if (!is_symmetric_central(f))
    return {false, "polynomial part does not supercommute with the strand generators"};
  return {true, "symmetric central polynomial"};
}

// ---------------------------------------------------------------- cyclotomic

CyclotomicReducer::CyclotomicReducer(const FrobeniusAlgebra* A, int n,
                                     Variant var, Rat z, const PolyElement& Q)
    : A_(A), n_(n), var_(var), z_(std::move(z)), Q_(Q) {
  if (Q.algebra() != A || Q.n() != 1 || Q.variant() != var)
    fail(Err::VariantMismatch, "pin from a different context");
  if (Q.isZero()) fail(Err::NotMonic, "zero pin");
  long lead = 0, trail = 0;
  bool first = true;
  for (auto& [k, c] : Q.terms()) {
    if (first) { lead = trail = k.exp[0]; first = false; }
    lead = std::max(lead, k.exp[0]);
    trail = std::min(trail, k.exp[0]);
  }
  if (trail < 0) fail(Err::NotMonic, "pin has negative exponents");
  if (lead < 1) fail(Err::NotMonic, "pin is constant");
  level_ = (int)lead;
  Vec lc(A->dim(), Rat(0));
  for (auto& [k, c] : Q.terms())
    if (k.exp[0] == lead) lc[k.idx[0]] += c;
  if (lc != A->unit()) fail(Err::NotMonic, "leading coefficient is not the unit");

  if (var_ == Variant::Degenerate) {
    // Congruences: the pin on strand 1 vanishes; sliding it across a crossing
    // with the Demazure correction yields the substitute for higher strands.
    std::vector<WreathElement> R(n);
    R[0] = WreathElement::zero(A, n, var, z_);
    for (int j = 0; j + 1 < n; ++j) {
      WreathElement C = WreathElement::crossing(A, n, var, j, z_);
      R[j + 1] = C.multiply(R[j]).multiply(C) +
                 WreathElement::fromPol(demazure(j, pinPolAt(j)), z_)
                     .multiply(C);
    }
    sub_.resize(n);
    for (int j = 0; j < n; ++j) {
      PolyElement lower =
          pinPolAt(j) - PolyElement::dot(A, n, var, j, level_);
      sub_[j] = R[j] - WreathElement::fromPol(lower, z_);
    }
  } else {
    // Window basis (idx, exp in [0,level)^n, w), fixed order, for clearing
    // negative exponents through the inverse dot action.
    std::vector<std::vector<int>> words;
    {
      std::vector<int> cur(n, 0);
      for (;;) {
        words.push_back(cur);
        int s = n - 1;
        while (s >= 0 && ++cur[s] == A->dim()) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    std::vector<std::vector<long>> exps;
    {
      std::vector<long> cur(n, 0);
      for (;;) {
        exps.push_back(cur);
        int s = n - 1;
        while (s >= 0 && ++cur[s] == level_) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    for (auto& idx : words)
      for (auto& exp : exps)
        for (auto& w : all_perms(n))
          windowBasis_.push_back({PolyKey{idx, exp}, w});
  }
}

PolyElement CyclotomicReducer::pinPolAt(int j) const {
  std::map<long, Vec> coeffs;
  for (auto& [k, c] : Q_.terms()) {
    auto& v = coeffs.try_emplace(k.exp[0], Vec(A_->dim(), Rat(0))).first->second;
    v[k.idx[0]] += c;
  }
  PolyElement r = PolyElement::zero(A_, n_, var_);
  for (auto& [e, v] : coeffs) {
    PolyElement piece = PolyElement::token(A_, n_, var_, j, v);
    if (e != 0) piece = piece * PolyElement::dot(A_, n_, var_, j, e);
    r = r + piece;
  }
  return r;
}

WreathElement CyclotomicReducer::pinAt(int j) const {
  if (j < 0 || j >= n_) fail(Err::IndexOutOfRange, "pin strand");
  return WreathElement::fromPol(pinPolAt(j), z_);
}

WreathElement CyclotomicReducer::reduceDegenerate(WreathElement u) const {
  long guard = 200000;
  for (;;) {
    if (--guard < 0)
      fail(Err::NonTermination, "strand-wise reduction failed to terminate");
    // Highest strand first, then the lexicographically largest offender.
    int j = -1;
    const PolyKey* key = nullptr;
    const Perm* wp = nullptr;
    Rat c;
    for (int s = n_ - 1; s >= 0 && j < 0; --s) {
      for (auto& [w, p] : u.terms()) {
        for (auto& [k, cv] : p.terms()) {
          if (k.exp[s] < level_) continue;
          if (j < 0 || std::tie(k.exp, k.idx, w) >
                           std::tie(key->exp, key->idx, *wp)) {
            j = s;
            key = &k;
            wp = &w;
            c = cv;
          }
        }
      }
    }
    if (j < 0) return u;
    std::vector<long> el = key->exp;
    el[j] -= level_;
    long tail = 0;
    for (int i = j + 1; i < n_; ++i) tail += el[i];
    Rat ck = c;
    if (A_->eps() && mod2((long)level_ * tail)) ck = -ck;
    PolyElement left(A_, n_, var_);
    left.addTerm(key->idx, el, ck);
    WreathElement sigma(A_, n_, var_, z_);
    sigma.addTerm(*wp, PolyElement::unit(A_, n_, var_));
    PolyElement tpol(A_, n_, var_);
    tpol.addTerm(key->idx, key->exp, c);
    WreathElement told(A_, n_, var_, z_);
    told.addTerm(*wp, tpol);
    u = u - told +
        WreathElement::fromPol(left, z_).multiply(sub_[j]).multiply(sigma);
  }
}

WreathElement CyclotomicReducer::reduceWindow(const WreathElement& u) const {
  long D0 = std::max<long>(level_, u.maxAbsDegree());
  int m = A_->dim();
  auto perms = all_perms(n_);
  for (long D = D0; D <= D0 + 4; ++D) {
    // Monomial order: high monomials (some exponent >= level) first so they
    // become pivots; ideal rows eliminate them from u exactly.
    std::vector<std::vector<int>> words;
    {
      std::vector<int> cur(n_, 0);
      for (;;) {
        words.push_back(cur);
        int s = n_ - 1;
        while (s >= 0 && ++cur[s] == m) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    std::vector<std::vector<long>> exps;
    {
      std::vector<long> cur(n_, 0);
      for (;;) {
        exps.push_back(cur);
        int s = n_ - 1;
        while (s >= 0 && ++cur[s] == D + 1) cur[s--] = 0;
        if (s < 0) break;
      }
    }
    std::vector<std::tuple<std::vector<int>, std::vector<long>, Perm>> monos;
    for (int high = 1; high >= 0; --high)
      for (auto& exp : exps) {
        bool h = false;
        for (long e : exp) h = h || e >= level_;
        if (h != (high == 1)) continue;
        for (auto& idx : words)
          for (auto& w : perms) monos.push_back({idx, exp, w});
      }
    std::map<std::tuple<std::vector<int>, std::vector<long>, Perm>, size_t>
        mindex;
    size_t nHigh = 0;
    for (size_t i = 0; i < monos.size(); ++i) {
      mindex[monos[i]] = i;
      bool h = false;
      for (long e : std::get<1>(monos[i])) h = h || e >= level_;
      if (h) ++nHigh;
    }
    auto vectorize = [&](const WreathElement& el, Vec& out) {
      out.assign(monos.size(), Rat(0));
      for (auto& [w, p] : el.terms())
        for (auto& [k, c] : p.terms()) {
          auto it = mindex.find({k.idx, k.exp, w});
          if (it == mindex.end()) return false;
          out[it->second] = c;
        }
      return true;
    };
    WreathElement Qw = WreathElement::fromPol(pinPolAt(0), z_);
    Mat rows;
    for (auto& idx : words)
      for (auto& exp : exps)
        for (auto& w : perms) {
          WreathElement p(A_, n_, var_, z_);
          PolyElement pp(A_, n_, var_);
          pp.addTerm(idx, exp, Rat(1));
          p.addTerm(w, pp);
          WreathElement pq = p.multiply(Qw);
          for (auto& idx2 : words)
            for (auto& exp2 : exps)
              for (auto& w2 : perms) {
                WreathElement q(A_, n_, var_, z_);
                PolyElement qp(A_, n_, var_);
                qp.addTerm(idx2, exp2, Rat(1));
                q.addTerm(w2, qp);
                WreathElement prod = pq.multiply(q);
                if (prod.isZero()) continue;
                Vec row;
                if (vectorize(prod, row)) rows.push_back(std::move(row));
              }
        }
    // Row echelon with pivots scanned left to right (high monomials first).
    std::vector<std::pair<size_t, Vec>> pivots;
    for (auto& row : rows) {
      Vec r = row;
      for (auto& [pc, pr] : pivots)
        if (r[pc] != 0) {
          Rat f = r[pc];
          for (size_t i = 0; i < r.size(); ++i)
            if (pr[i] != 0) r[i] -= f * pr[i];
        }
      size_t lead = r.size();
      for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) { lead = i; break; }
      if (lead == r.size()) continue;
      if (lead >= nHigh)
        fail(Err::InternalInconsistency,
             "ideal relation supported inside the reduced window");
      Rat inv = Rat(1) / r[lead];
      for (auto& x : r) x *= inv;
      pivots.push_back({lead, std::move(r)});
    }
    Vec v;
    if (!vectorize(u, v)) continue;
    for (auto& [pc, pr] : pivots)
      if (v[pc] != 0) {
        Rat f = v[pc];
        for (size_t i = 0; i < v.size(); ++i)
          if (pr[i] != 0) v[i] -= f * pr[i];
      }
    bool residueHigh = false;
    for (size_t i = 0; i < nHigh; ++i) residueHigh = residueHigh || v[i] != 0;
    if (residueHigh) continue;
    WreathElement out(A_, n_, var_, z_);
    for (size_t i = nHigh; i < monos.size(); ++i) {
      if (v[i] == 0) continue;
      PolyElement p(A_, n_, var_);
      p.addTerm(std::get<0>(monos[i]), std::get<1>(monos[i]), v[i]);
      out.addTerm(std::get<2>(monos[i]), p);
    }
    return out;
  }
  fail(Err::NonTermination, "window elimination did not stabilize");
}

WreathElement CyclotomicReducer::reduceNonNegative(const WreathElement& u) const {
  return var_ == Variant::Degenerate ? reduceDegenerate(u) : reduceWindow(u);
}

WreathElement CyclotomicReducer::reduce(const WreathElement& u) const {
  if (u.algebra() != A_ || u.n() != n_ || u.variant() != var_ || u.z() != z_)
    fail(Err::VariantMismatch, "element from a different wreath context");
  std::vector<long> clear(n_, 0);
  bool neg = false;
  for (auto& [w, p] : u.terms())
    for (auto& [k, c] : p.terms())
      for (int s = 0; s < n_; ++s)
        if (k.exp[s] < 0) {
          clear[s] = std::max(clear[s], -k.exp[s]);
          neg = true;
        }
  if (!neg) return reduceNonNegative(u);
  // Clear denominators on the left, reduce, then undo through the inverse of
  // (multiply by the dot, reduce) on the window.
  WreathElement shifted = u;
  for (int s = 0; s < n_; ++s)
    for (long k = 0; k < clear[s]; ++k)
      shifted = shifted.lmulPol(PolyElement::dot(A_, n_, var_, s, 1));
  WreathElement red = reduceNonNegative(shifted);

  size_t W = windowBasis_.size();
  auto coords = [&](const WreathElement& el) {
    Vec v(W, Rat(0));
    for (auto& [w, p] : el.terms())
      for (auto& [k, c] : p.terms()) {
        bool found = false;
        for (size_t i = 0; i < W; ++i)
          if (windowBasis_[i].first == k && windowBasis_[i].second == w) {
            v[i] = c;
            found = true;
            break;
          }
        if (!found)
          fail(Err::InternalInconsistency, "reduced element escapes the window");
      }
    return v;
  };
  auto rebuild = [&](const Vec& v) {
    WreathElement el(A_, n_, var_, z_);
    for (size_t i = 0; i < W; ++i) {
      if (v[i] == 0) continue;
      PolyElement p(A_, n_, var_);
      p.addTerm(windowBasis_[i].first.idx, windowBasis_[i].first.exp, v[i]);
      el.addTerm(windowBasis_[i].second, p);
    }
    return el;
  };
  if (linv_.empty()) {
    for (int s = 0; s < n_; ++s) {
      Mat L(W, Vec(W, Rat(0)));
      for (size_t col = 0; col < W; ++col) {
        WreathElement b = rebuild([&] {
          Vec e(W, Rat(0));
          e[col] = 1;
          return e;
        }());
        WreathElement img =
            reduceNonNegative(b.lmulPol(PolyElement::dot(A_, n_, var_, s, 1)));
        Vec v = coords(img);
        for (size_t row = 0; row < W; ++row) L[row][col] = v[row];
      }
      auto inv = mat_inverse(L);
      if (!inv)
        fail(Err::InternalInconsistency,
             "dot multiplication is singular on the reduced window");
      linv_.push_back(*inv);
    }
  }
  Vec v = coords(red);
  for (int s = 0; s < n_; ++s)
    for (long k = 0; k < clear[s]; ++k) {
      Vec nv(W, Rat(0));
      for (size_t r = 0; r < W; ++r)
        for (size_t cidx = 0; cidx < W; ++cidx)
          if (linv_[s][r][cidx] != 0 && v[cidx] != 0)
            nv[r] += linv_[s][r][cidx] * v[cidx];
      v = nv;
    }
  return rebuild(v);
}

// ------------------------------------------------------------ dim oracle

namespace {
long qdim_at(const FrobeniusAlgebra* A, int n, const PolyElement& Q,
             Variant var, const Rat& z, long D) {
  long lo = var == Variant::Quantum ? -D : 0;
  int m = A->dim();
  std::vector<std::vector<int>> words;
  {
    std::vector<int> cur(n, 0);
    for (;;) {
      words.push_back(cur);
      int s = n - 1;
      while (s >= 0 && ++cur[s] == m) cur[s--] = 0;
      if (s < 0) break;
    }
  }
  auto exp_range = [&](long hi_excl) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n, lo);
    if (lo >= hi_excl) return out;
    for (;;) {
      out.push_back(cur);
      int s = n - 1;
      while (s >= 0 && ++cur[s] == hi_excl) cur[s--] = lo;
      if (s < 0) break;
    }
    return out;
  };
  auto perms = all_perms(n);
  std::map<std::tuple<std::vector<int>, std::vector<long>, Perm>, size_t> mindex;
  {
    size_t i = 0;
    for (auto& idx : words)
      for (auto& exp : exp_range(D + 1))
        for (auto& w : perms) mindex[{idx, exp, w}] = i++;
  }
  // Pin on strand 1.
  std::map<long, Vec> coeffs;
  for (auto& [k, c] : Q.terms()) {
    auto& v = coeffs.try_emplace(k.exp[0], Vec(m, Rat(0))).first->second;
    v[k.idx[0]] += c;
  }
  PolyElement Q1 = PolyElement::zero(A, n, var);
  for (auto& [e, v] : coeffs) {
    PolyElement piece = PolyElement::token(A, n, var, 0, v);
    if (e != 0) piece = piece * PolyElement::dot(A, n, var, 0, e);
    Q1 = Q1 + piece;
  }
  WreathElement Qw = WreathElement::fromPol(Q1, z);
  std::vector<WreathElement> pbws;
  for (auto& idx : words)
    for (auto& exp : exp_range(D))
      for (auto& w : perms) {
        WreathElement el(A, n, var, z);
        PolyElement p(A, n, var);
        p.addTerm(idx, exp, Rat(1));
        el.addTerm(w, p);
        pbws.push_back(el);
      }
  auto in_window = [&](const WreathElement& u) {
    for (auto& [w, p] : u.terms())
      for (auto& [k, c] : p.terms())
        for (long e : k.exp)
          if (e < lo || e > D) return false;
    return true;
  };
  Mat rows;
  for (auto& p : pbws) {
    WreathElement pq = p.multiply(Qw);
    for (auto& q : pbws) {
      WreathElement prod = pq.multiply(q);
      if (prod.isZero() || !in_window(prod)) continue;
      Vec row(mindex.size(), Rat(0));
      for (auto& [w, pol] : prod.terms())
        for (auto& [k, c] : pol.terms())
          row[mindex.at({k.idx, k.exp, w})] = c;
      rows.push_back(std::move(row));
    }
  }
  return (long)mindex.size() - (long)mat_rank(rows);
}
}  // namespace

QuotientDimResult quotient_dim_oracle(const FrobeniusAlgebra* A, int n,
                                      const PolyElement& Q, Variant var, Rat z,
                                      int degree_bound) {
  if (degree_bound < 1) fail(Err::BoundTooSmall, "bound must be at least 1");
  QuotientDimResult r;
  r.dimLow = qdim_at(A, n, Q, var, z, degree_bound - 1);
  r.dimHigh = qdim_at(A, n, Q, var, z, degree_bound);
  r.stabilized = r.dimLow == r.dimHigh;
  return r;
}

}  // namespace fh
