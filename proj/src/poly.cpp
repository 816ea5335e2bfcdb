#include "frobhecke/poly.hpp"

#include <algorithm>
#include <functional>

namespace fh {

namespace {
int mod2(long x) { return (int)(((x % 2) + 2) % 2); }

// Cartesian product over slots of the nonzero entries of each coefficient
// vector; calls fn(indices, product of coefficients).
void combo_expand(const std::vector<Vec>& vecs,
                  const std::function<void(const std::vector<int>&, const Rat&)>& fn) {
  int n = (int)vecs.size();
  std::vector<int> pick(n, 0);
  std::function<void(int, Rat)> rec = [&](int s, Rat acc) {
    if (s == n) {
      fn(pick, acc);
      return;
    }
    for (int i = 0; i < (int)vecs[s].size(); ++i) {
      if (vecs[s][i] == 0) continue;
      pick[s] = i;
      rec(s + 1, acc * vecs[s][i]);
    }
  };
  rec(0, Rat(1));
}
}  // namespace

PolyElement::PolyElement(const FrobeniusAlgebra* A, int n, Variant var)
    : A_(A), n_(n), var_(var) {
  if (n < 0) fail(Err::IndexOutOfRange, "negative strand count");
}

PolyElement PolyElement::zero(const FrobeniusAlgebra* A, int n, Variant var) {
  return PolyElement(A, n, var);
}

PolyElement PolyElement::unit(const FrobeniusAlgebra* A, int n, Variant var) {
  PolyElement p(A, n, var);
  std::vector<Vec> vecs(n, A->unit());
  combo_expand(vecs, [&](const std::vector<int>& idx, const Rat& c) {
    p.addTerm(idx, std::vector<long>(n, 0), c);
  });
  if (n == 0) p.addTerm({}, {}, Rat(1));
  return p;
}

PolyElement PolyElement::token(const FrobeniusAlgebra* A, int n, Variant var,
                               int slot, const Vec& vec) {
  if (slot < 0 || slot >= n) fail(Err::IndexOutOfRange, "token slot");
  PolyElement p(A, n, var);
  std::vector<Vec> vecs(n, A->unit());
  vecs[slot] = vec;
  combo_expand(vecs, [&](const std::vector<int>& idx, const Rat& c) {
    p.addTerm(idx, std::vector<long>(n, 0), c);
  });
  return p;
}

PolyElement PolyElement::dot(const FrobeniusAlgebra* A, int n, Variant var,
                             int slot, long e) {
  if (slot < 0 || slot >= n) fail(Err::IndexOutOfRange, "dot slot");
  PolyElement p = unit(A, n, var);
  PolyElement out(A, n, var);
  for (auto& [k, c] : p.t_) {
    auto exp = k.exp;
    exp[slot] = e;
    out.addTerm(k.idx, exp, c);
  }
  return out;
}

void PolyElement::addTerm(std::vector<int> idx, std::vector<long> exp,
                          const Rat& c) {
  if ((int)idx.size() != n_ || (int)exp.size() != n_)
    fail(Err::InternalInconsistency, "term arity mismatch");
  for (int i : idx)
    if (i < 0 || i >= A_->dim()) fail(Err::IndexOutOfRange, "tensor index");
  if (var_ == Variant::Degenerate)
    for (long e : exp)
      if (e < 0) fail(Err::InverseDotInDegenerate, "negative exponent");
  if (c == 0) return;
  PolyKey k{std::move(idx), std::move(exp)};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void PolyElement::requireCompatible(const PolyElement& o) const {
  if (A_ != o.A_ || n_ != o.n_ || var_ != o.var_)
    fail(Err::MixedVariant, "operands from different polynomial contexts");
}

bool PolyElement::operator==(const PolyElement& o) const {
  return A_ == o.A_ && n_ == o.n_ && var_ == o.var_ && t_ == o.t_;
}

PolyElement PolyElement::operator+(const PolyElement& o) const {
  requireCompatible(o);
  PolyElement r = *this;
  for (auto& [k, c] : o.t_) r.addTerm(k.idx, k.exp, c);
  return r;
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  requireCompatible(o);
  PolyElement r = *this;
  for (auto& [k, c] : o.t_) r.addTerm(k.idx, k.exp, -c);
  return r;
}

PolyElement PolyElement::scale(const Rat& c) const {
  PolyElement r(A_, n_, var_);
  if (c == 0) return r;
  for (auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

int PolyElement::wordParity(const std::vector<int>& idx) const {
  int p = 0;
  for (int i : idx) p += A_->parity()[i];
  return p % 2;
}

int PolyElement::termParity(const PolyKey& k) const {
  int p = wordParity(k.idx);
  if (var_ == Variant::Degenerate) {
    long s = 0;
    for (long e : k.exp) s += e;
    p += A_->eps() * mod2(s);
  }
  return p % 2;
}

void PolyElement::mulTermInto(PolyElement& out, const std::vector<int>& ia,
                              const std::vector<long>& ea,
                              const std::vector<int>& ib,
                              const std::vector<long>& eb,
                              const Rat& coef) const {
  const FrobeniusAlgebra& A = *A_;
  Rat c0 = coef;
  long npass = 0;
  for (long e : ea) npass += std::abs(e);
  if (A.eps() && (npass % 2) && wordParity(ib)) c0 = -c0;
  // Move each factor of b left through the dots of ea: one twist per dot.
  std::vector<Vec> vecs(n_);
  for (int s = 0; s < n_; ++s) {
    Vec v = A.basisVec(ib[s]);
    if (ea[s] != 0) v = A.psiVec(v, -ea[s]);
    vecs[s] = std::move(v);
  }
  long swaps = 0;
  for (int j = 0; j < n_; ++j)
    for (int i = j + 1; i < n_; ++i) swaps += eb[j] * ea[i];
  int sgn2 = A.eps() ? mod2(swaps) : 0;
  std::vector<long> ee(n_);
  for (int s = 0; s < n_; ++s) ee[s] = ea[s] + eb[s];

  combo_expand(vecs, [&](const std::vector<int>& idxb, const Rat& cv) {
    // Koszul sign for interleaving the two tensor words slotwise.
    long ksign = 0;
    for (int k = 0; k < n_; ++k)
      for (int l = k + 1; l < n_; ++l)
        ksign += A.parity()[idxb[k]] * A.parity()[ia[l]];
    Rat cb = c0 * cv;
    if (mod2(ksign)) cb = -cb;
    if (sgn2) cb = -cb;
    // Slotwise products, expanded over the structure constants.
    std::vector<int> idx(n_, 0);
    std::function<void(int, Rat)> rec = [&](int s, Rat acc) {
      if (s == n_) {
        out.addTerm(idx, ee, acc);
        return;
      }
      const Vec& cell = A.data().mult[ia[s]][idxb[s]];
      for (int k = 0; k < A.dim(); ++k) {
        if (cell[k] == 0) continue;
        idx[s] = k;
        rec(s + 1, acc * cell[k]);
      }
    };
    rec(0, cb);
  });
}

PolyElement PolyElement::operator*(const PolyElement& o) const {
  requireCompatible(o);
  PolyElement out(A_, n_, var_);
  for (auto& [ka, ca] : t_)
    for (auto& [kb, cb] : o.t_)
      mulTermInto(out, ka.idx, ka.exp, kb.idx, kb.exp, ca * cb);
  return out;
}

PolyElement PolyElement::superpermuteS(int i) const {
  if (i < 0 || i + 1 >= n_) fail(Err::IndexOutOfRange, "crossing index");
  PolyElement r(A_, n_, var_);
  for (auto& [k, c] : t_) {
    long sgn = (long)A_->parity()[k.idx[i]] * A_->parity()[k.idx[i + 1]];
    if (var_ == Variant::Degenerate)
      sgn += (long)A_->eps() * std::abs(k.exp[i] * k.exp[i + 1]);
    auto idx = k.idx;
    auto exp = k.exp;
    std::swap(idx[i], idx[i + 1]);
    std::swap(exp[i], exp[i + 1]);
    r.addTerm(idx, exp, mod2(sgn) ? -c : c);
  }
  return r;
}

PolyElement PolyElement::superpermute(const Perm& w) const {
  if ((int)w.size() != n_) fail(Err::IndexOutOfRange, "permutation size");
  PolyElement r = *this;
  auto rw = reduced_word(w);
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) r = r.superpermuteS(*it);
  return r;
}

long PolyElement::maxAbsDegree() const {
  long m = 0;
  for (auto& [k, c] : t_)
    for (long e : k.exp) m = std::max(m, std::abs(e));
  return m;
}

PolyElement teleporter(const FrobeniusAlgebra* A, int n, Variant var, int i,
                       int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    fail(Err::IndexOutOfRange, "teleporter slots");
  PolyElement r = PolyElement::zero(A, n, var);
  for (int b = 0; b < A->dim(); ++b) {
    PolyElement p = PolyElement::token(A, n, var, i, A->basisVec(b)) *
                    PolyElement::token(A, n, var, j, A->dualVec(b));
    if (A->eps() && A->parity()[b]) p = p.scale(Rat(-1));
    r = r + p;
  }
  return r;
}

namespace {
// One canonical-factorization generator: a tensor word or a single dot.
struct Gen {
  bool isTok;
  std::vector<int> idx;  // when isTok
  int slot = 0;          // when dot
};

PolyElement gen_pol(const FrobeniusAlgebra* A, int n, Variant var,
                    const Gen& g) {
  if (g.isTok) {
    PolyElement p(A, n, var);
    p.addTerm(g.idx, std::vector<long>(n, 0), Rat(1));
    return p;
  }
  return PolyElement::dot(A, n, var, g.slot);
}
}  // namespace

PolyElement demazure(int i, const PolyElement& f) {
  if (f.variant() != Variant::Degenerate)
    fail(Err::WrongVariant, "divided difference needs the degenerate variant");
  const FrobeniusAlgebra* A = f.algebra();
  int n = f.n();
  if (i < 0 || i + 1 >= n) fail(Err::IndexOutOfRange, "crossing index");
  Variant var = f.variant();
  PolyElement out = PolyElement::zero(A, n, var);
  for (auto& [k, c] : f.terms()) {
    std::vector<Gen> gens;
    gens.push_back(Gen{true, k.idx, 0});
    for (int s = 0; s < n; ++s)
      for (long t = 0; t < k.exp[s]; ++t) gens.push_back(Gen{false, {}, s});
    int m = (int)gens.size();
    // Twisted Leibniz down the factorization: suffix products first.
    std::vector<PolyElement> suffix(m + 1, PolyElement::unit(A, n, var));
    for (int t = m - 1; t >= 0; --t)
      suffix[t] = gen_pol(A, n, var, gens[t]) * suffix[t + 1];
    PolyElement prefix = PolyElement::unit(A, n, var);
    PolyElement acc = PolyElement::zero(A, n, var);
    for (int t = 0; t < m; ++t) {
      const Gen& g = gens[t];
      PolyElement dg = PolyElement::zero(A, n, var);
      if (!g.isTok) {
        if (g.slot == i)
          dg = teleporter(A, n, var, i, i + 1);
        else if (g.slot == i + 1)
          dg = teleporter(A, n, var, i + 1, i).scale(Rat(-1));
      }
      if (!dg.isZero()) acc = acc + prefix * dg * suffix[t + 1];
      prefix = prefix * gen_pol(A, n, var, g).superpermuteS(i);
    }
    out = out + acc.scale(c);
  }
  return out;
}

PolyElement delta(int i, const PolyElement& f) {
  if (f.variant() != Variant::Quantum)
    fail(Err::WrongVariant, "Laurent divided difference needs the quantum variant");
  const FrobeniusAlgebra* A = f.algebra();
  int n = f.n();
  if (i < 0 || i + 1 >= n) fail(Err::IndexOutOfRange, "crossing index");
  PolyElement tele = teleporter(A, n, Variant::Quantum, i, i + 1);
  PolyElement out = PolyElement::zero(A, n, Variant::Quantum);
  for (auto& [k, c] : f.terms()) {
    long a = k.exp[i], b = k.exp[i + 1];
    if (a == b) continue;
    // Exact geometric-sum quotient of x_{i+1}(swap - id) applied to the
    // exponent pair, other slots carried along.
    PolyElement quot = PolyElement::zero(A, n, Variant::Quantum);
    PolyElement u = PolyElement::unit(A, n, Variant::Quantum);
    auto addq = [&](long ei, long ei1, int sgn) {
      for (auto& [ku, cu] : u.terms()) {
        auto exp = k.exp;
        exp[i] = ei;
        exp[i + 1] = ei1;
        quot.addTerm(ku.idx, exp, sgn > 0 ? cu : -cu);
      }
    };
    if (a > b)
      for (long t = 0; t < a - b; ++t) addq(a - 1 - t, b + 1 + t, -1);
    else
      for (long t = 0; t < b - a; ++t) addq(a + t, b - t, +1);
    PolyElement tok(A, n, Variant::Quantum);
    tok.addTerm(k.idx, std::vector<long>(n, 0), c);
    out = out + tele * tok * quot;
  }
  return out;
}

PinCheckResult pin_check(const PolyElement& f) {
  PinCheckResult res;
  const FrobeniusAlgebra* A = f.algebra();
  if (f.n() != 1) fail(Err::IndexOutOfRange, "pin labels live on one strand");
  if (f.isZero()) {
    res.reason = "zero element is not regular";
    return res;
  }
  for (auto& [k, c] : f.terms()) {
    if (f.termParity(k)) {
      res.reason = "term with tensor word index " + std::to_string(k.idx[0]) +
                   " is odd";
      return res;
    }
  }
  long lead = f.terms().begin()->first.exp[0];
  long trail = lead;
  for (auto& [k, c] : f.terms()) {
    lead = std::max(lead, k.exp[0]);
    trail = std::min(trail, k.exp[0]);
  }
  auto coeff_at = [&](long e) {
    Vec v(A->dim(), Rat(0));
    for (auto& [k, c] : f.terms())
      if (k.exp[0] == e) v[k.idx[0]] += c;
    return v;
  };
  for (long e = trail; e <= lead; ++e) {
    Vec ce = coeff_at(e);
    for (int i = 0; i < A->dim(); ++i) {
      Vec bi = A->basisVec(i);
      if (A->mulVec(ce, bi) != A->mulVec(bi, ce)) {
        res.reason = "a dot coefficient is not central in the base algebra";
        return res;
      }
    }
  }
  if (!A->isRegular(coeff_at(lead))) {
    res.inconclusive = true;
    res.reason = "leading dot coefficient is not regular in A";
    return res;
  }
  if (f.variant() == Variant::Quantum && trail != lead &&
      !A->isRegular(coeff_at(trail))) {
    res.inconclusive = true;
    res.reason = "trailing dot coefficient is not regular in A";
    return res;
  }
  res.ok = true;
  return res;
}

PolyElement exact_divide(const PolyElement& f, const PolyElement& h) {
  if (f.algebra() != h.algebra() || f.n() != h.n() ||
      f.variant() != h.variant())
    fail(Err::MixedVariant, "division operands from different contexts");
  const FrobeniusAlgebra* A = f.algebra();
  int n = f.n(), m = A->dim();
  if (h.isZero()) fail(Err::NotDivisible, "division by zero");
  PolyElement g = PolyElement::zero(A, n, f.variant());
  PolyElement rem = f;
  auto lex_max_exp = [](const PolyElement& p) {
    std::vector<long> best = p.terms().begin()->first.exp;
    for (auto& [k, c] : p.terms())
      if (best < k.exp) best = k.exp;
    return best;
  };
  std::vector<long> eh = lex_max_exp(h);
  // Tensor words enumerated in lexicographic order for the solve.
  long words = 1;
  for (int s = 0; s < n; ++s) words *= m;
  auto word_of = [&](long r) {
    std::vector<int> idx(n);
    for (int s = n - 1; s >= 0; --s) {
      idx[s] = (int)(r % m);
      r /= m;
    }
    return idx;
  };
  auto rank_of = [&](const std::vector<int>& idx) {
    long r = 0;
    for (int s = 0; s < n; ++s) r = r * m + idx[s];
    return r;
  };
  long guard = 64 * ((long)f.terms().size() + 1) * ((long)h.terms().size() + 1) +
               1024;
  while (!rem.isZero()) {
    if (--guard < 0) fail(Err::NotDivisible, "leading-term peeling diverged");
    std::vector<long> ef = lex_max_exp(rem);
    std::vector<long> eg(n);
    for (int s = 0; s < n; ++s) {
      eg[s] = ef[s] - eh[s];
      if (f.variant() == Variant::Degenerate && eg[s] < 0)
        fail(Err::NotDivisible, "quotient exponent would be negative");
    }
    // Leading-coefficient map of right multiplication by h at exponent ef.
    Mat M(words, Vec(words, Rat(0)));
    for (long cidx = 0; cidx < words; ++cidx) {
      PolyElement mono(A, n, f.variant());
      mono.addTerm(word_of(cidx), eg, Rat(1));
      PolyElement prod = mono * h;
      for (auto& [k, c] : prod.terms())
        if (k.exp == ef) M[rank_of(k.idx)][cidx] = c;
    }
    Vec rhs(words, Rat(0));
    for (auto& [k, c] : rem.terms())
      if (k.exp == ef) rhs[rank_of(k.idx)] = c;
    auto sol = mat_solve(M, rhs);
    if (!sol) fail(Err::NotDivisible, "leading system unsolvable");
    PolyElement piece(A, n, f.variant());
    for (long cidx = 0; cidx < words; ++cidx)
      if ((*sol)[cidx] != 0) piece.addTerm(word_of(cidx), eg, (*sol)[cidx]);
    if (piece.isZero()) fail(Err::NotDivisible, "zero quotient piece");
    g = g + piece;
    rem = rem - piece * h;
    if (!rem.isZero() && !(lex_max_exp(rem) < ef))
      fail(Err::NotDivisible, "leading terms not cleared");
  }
  return g;
}

bool is_symmetric_central(const PolyElement& f) {
  const FrobeniusAlgebra* A = f.algebra();
  int n = f.n();
  for (int i = 0; i + 1 < n; ++i)
    if (!(f.superpermuteS(i) == f)) return false;
  // Split into parity parts; each must supercommute with every generator.
  PolyElement even(A, n, f.variant()), odd(A, n, f.variant());
  for (auto& [k, c] : f.terms())
    (f.termParity(k) ? odd : even).addTerm(k.idx, k.exp, c);
  std::vector<std::pair<PolyElement, int>> gens;
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < A->dim(); ++i)
      gens.push_back({PolyElement::token(A, n, f.variant(), s, A->basisVec(i)),
                      A->parity()[i]});
    gens.push_back({PolyElement::dot(A, n, f.variant(), s),
                    f.variant() == Variant::Degenerate ? A->eps() : 0});
  }
  for (auto& [part, pf] : std::vector<std::pair<PolyElement, int>>{
           {even, 0}, {odd, 1}}) {
    if (part.isZero()) continue;
    for (auto& [g, pg] : gens) {
      PolyElement rhs = g * part;
      if (pf && pg) rhs = rhs.scale(Rat(-1));
      if (!((part * g) - rhs).isZero()) return false;
    }
  }
  return true;
}

}  // namespace fh
