#include "frobhecke/parse.hpp"

#include <algorithm>
#include <sstream>

namespace fh {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skipWs() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skipWs();
    return i >= s.size();
  }
  char peek() {
    skipWs();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(Err::SyntaxError, msg + " at position " + std::to_string(i + 1));
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++i;
  }
  bool tryConsume(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }
  long integer() {
    skipWs();
    size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !isdigit((unsigned char)s[i])) {
      i = start;
      error("expected an integer");
    }
    long v = 0;
    while (i < s.size() && isdigit((unsigned char)s[i]))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  Rat rational(bool allowSign) {
    skipWs();
    size_t start = i;
    std::string tok;
    if (allowSign && i < s.size() && (s[i] == '-' || s[i] == '+'))
      tok += s[i++];
    while (i < s.size() && isdigit((unsigned char)s[i])) tok += s[i++];
    if (tok.empty() || !isdigit((unsigned char)tok.back())) {
      i = start;
      error("expected a rational");
    }
    if (i < s.size() && s[i] == '/') {
      tok += s[i++];
      if (i >= s.size() || !isdigit((unsigned char)s[i]))
        error("expected a denominator");
      while (i < s.size() && isdigit((unsigned char)s[i])) tok += s[i++];
    }
    return rat_parse(tok);
  }
  std::string label() {
    skipWs();
    std::string out;
    while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_' ||
                            s[i] == ':'))
      out += s[i++];
    if (out.empty()) error("expected a basis label");
    return out;
  }
};

// Shared term parser. Crossings are collected for the caller; a polynomial
// context passes crossings == nullptr and rejects them.
PolyElement parse_term(Cursor& cur, const FrobeniusAlgebra* A, int n,
                       Variant var, std::vector<int>* crossings) {
  Rat coeff(1);
  bool sawCoeff = false;
  char c = cur.peek();
  if (c == '-' || c == '+' || isdigit((unsigned char)c)) {
    coeff = cur.rational(true);
    sawCoeff = true;
  }
  PolyElement base = PolyElement::unit(A, n, var).scale(coeff);
  bool sawBody = false;
  if (sawCoeff) {
    if (!cur.tryConsume('*')) return base;  // bare rational
  }
  if (cur.peek() == '(') {
    ++cur.i;
    std::vector<int> idx;
    for (;;) {
      std::string lab = cur.label();
      int bi = A->labelIndex(lab);
      if (bi < 0) fail(Err::UnknownLabel, "unknown basis label '" + lab + "'");
      idx.push_back(bi);
      if (cur.tryConsume(')')) break;
      cur.expect('|');
    }
    if ((int)idx.size() != n)
      cur.error("tensor word has " + std::to_string(idx.size()) +
                " factors, expected " + std::to_string(n));
    base = PolyElement(A, n, var);
    base.addTerm(idx, std::vector<long>(n, 0), coeff);
    sawBody = true;
  }
  for (;;) {
    char d = cur.peek();
    if (d == 'x' || d == 'X') {
      Variant dv = d == 'x' ? Variant::Degenerate : Variant::Quantum;
      if (dv != var)
        fail(Err::VariantMismatch,
             std::string("dot letter '") + d + "' does not match the variant");
      ++cur.i;
      int slot;
      if (isdigit((unsigned char)cur.peek())) {
        slot = (int)cur.integer();
      } else if (n == 1) {
        slot = 1;
      } else {
        cur.error("dot index required when n > 1");
      }
      if (slot < 1 || slot > n)
        fail(Err::IndexOutOfRange, "dot strand " + std::to_string(slot));
      long e = 1;
      if (cur.tryConsume('^')) e = cur.integer();
      if (e < 0 && var == Variant::Degenerate)
        fail(Err::InverseDotInDegenerate,
             "negative dot powers need the quantum variant");
      base = base * PolyElement::dot(A, n, var, slot - 1, e);
      sawBody = true;
      continue;
    }
    if (d == 's' || d == 'T') {
      Variant dv = d == 's' ? Variant::Degenerate : Variant::Quantum;
      if (dv != var)
        fail(Err::VariantMismatch,
             std::string("crossing letter '") + d +
                 "' does not match the variant");
      if (!crossings) cur.error("crossings are not polynomial elements");
      ++cur.i;
      int idx = (int)cur.integer();
      if (idx < 1 || idx > n - 1)
        fail(Err::IndexOutOfRange, "crossing index " + std::to_string(idx));
      crossings->push_back(idx - 1);
      sawBody = true;
      continue;
    }
    break;
  }
  if (!sawCoeff && !sawBody) cur.error("expected a term");
  return base;
}

template <class Acc, class TermFn>
Acc parse_element(const std::string& text, Acc zero, TermFn termFn) {
  Cursor cur{text};
  if (cur.done()) cur.error("empty element");
  Acc acc = zero;
  bool negate = false;
  if (cur.tryConsume('+')) {
  } else if (cur.tryConsume('-')) {
    negate = true;
  }
  for (;;) {
    acc = termFn(acc, cur, negate);
    if (cur.done()) return acc;
    if (cur.tryConsume('+')) {
      negate = false;
    } else if (cur.tryConsume('-')) {
      negate = true;
    } else {
      cur.error("expected '+' or '-'");
    }
  }
}

std::string term_string(const FrobeniusAlgebra* A, const std::vector<int>& idx,
                        const std::vector<long>& exp, const Rat& c,
                        const Perm* w, Variant var) {
  std::string out = rat_str(c) + "*(";
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) out += "|";
    out += A->labels()[idx[k]];
  }
  out += ")";
  const char* xv = var == Variant::Quantum ? "X" : "x";
  for (size_t s = 0; s < exp.size(); ++s) {
    if (exp[s] == 0) continue;
    out += " ";
    out += xv;
    out += std::to_string(s + 1);
    if (exp[s] != 1) out += "^" + std::to_string(exp[s]);
  }
  if (w) {
    const char* lw = var == Variant::Quantum ? "T" : "s";
    for (int i : reduced_word(*w)) out += std::string(" ") + lw + std::to_string(i + 1);
  }
  return out;
}

}  // namespace

PolyElement parse_pol(const std::string& text, const FrobeniusAlgebra* A,
                      int n, Variant var) {
  return parse_element(
      text, PolyElement::zero(A, n, var),
      [&](PolyElement acc, Cursor& cur, bool negate) {
        PolyElement t = parse_term(cur, A, n, var, nullptr);
        return negate ? acc - t : acc + t;
      });
}

WreathElement parse_wreath(const std::string& text, const FrobeniusAlgebra* A,
                           int n, Variant var, const Rat& z) {
  return parse_element(
      text, WreathElement::zero(A, n, var, z),
      [&](WreathElement acc, Cursor& cur, bool negate) {
        std::vector<int> crossings;
        PolyElement p = parse_term(cur, A, n, var, &crossings);
        WreathElement t = WreathElement::fromPol(p, z);
        for (int i : crossings) t = t.rmulCrossing(i);
        return negate ? acc - t : acc + t;
      });
}

std::string pol_to_string(const PolyElement& p) {
  if (p.isZero()) return "0";
  std::vector<const PolyKey*> keys;
  for (auto& [k, c] : p.terms()) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](const PolyKey* a, const PolyKey* b) {
    return std::tie(a->exp, a->idx) < std::tie(b->exp, b->idx);
  });
  std::string out;
  for (auto* k : keys) {
    if (!out.empty()) out += " + ";
    out += term_string(p.algebra(), k->idx, k->exp, p.terms().at(*k), nullptr,
                       p.variant());
  }
  return out;
}

std::string wreath_to_string(const WreathElement& u) {
  if (u.isZero()) return "0";
  std::vector<const Perm*> ws;
  for (auto& [w, p] : u.terms()) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(), [](const Perm* a, const Perm* b) {
    return std::make_pair(perm_len(*a), *a) < std::make_pair(perm_len(*b), *b);
  });
  std::string out;
  for (auto* w : ws) {
    const PolyElement& p = u.terms().at(*w);
    std::vector<const PolyKey*> keys;
    for (auto& [k, c] : p.terms()) keys.push_back(&k);
    std::sort(keys.begin(), keys.end(),
              [](const PolyKey* a, const PolyKey* b) {
                return std::tie(a->exp, a->idx) < std::tie(b->exp, b->idx);
              });
    for (auto* k : keys) {
      if (!out.empty()) out += " + ";
      out += term_string(u.algebra(), k->idx, k->exp, p.terms().at(*k), w,
                         u.variant());
    }
  }
  return out;
}

ObjectWord parse_object_word(const std::string& text, int level) {
  Cursor cur{text};
  cur.expect('[');
  ObjectWord obj;
  for (;;) {
    char c = cur.peek();
    if (c == ']') {
      ++cur.i;
      break;
    }
    if (c == '.') {
      ++cur.i;
      obj.push_back(kBlack);
      continue;
    }
    if (c == 'Q') {
      ++cur.i;
      int r = (int)cur.integer();
      if (r < 1 || r > level)
        fail(Err::IndexOutOfRange, "red label " + std::to_string(r));
      obj.push_back(r);
      continue;
    }
    cur.error("expected '.', 'Q<r>' or ']'");
  }
  if (!cur.done()) cur.error("trailing input after object word");
  return obj;
}

std::string object_to_string(const ObjectWord& obj) {
  std::string out = "[";
  for (size_t k = 0; k < obj.size(); ++k) {
    if (k) out += " ";
    out += is_black(obj[k]) ? "." : "Q" + std::to_string(obj[k]);
  }
  return out + "]";
}

namespace {
Vec parse_token_payload(Cursor& cur, const FrobeniusAlgebra* A) {
  Vec v(A->dim(), Rat(0));
  for (;;) {
    Rat c(1);
    char ch = cur.peek();
    if (ch == '-' || ch == '+' || isdigit((unsigned char)ch)) {
      c = cur.rational(true);
      cur.expect('*');
    }
    std::string lab = cur.label();
    int bi = A->labelIndex(lab);
    if (bi < 0) fail(Err::UnknownLabel, "unknown basis label '" + lab + "'");
    v[bi] += c;
    if (!cur.tryConsume('+')) break;
  }
  return v;
}
}  // namespace

DiagramWord parse_diagram_word(const std::string& text,
                               const FrobeniusAlgebra* A, Variant var) {
  DiagramWord word;
  Cursor cur{text};
  if (cur.done()) return word;
  for (;;) {
    Step st;
    cur.skipWs();
    if (cur.s.compare(cur.i, 3, "xRB") == 0) {
      st.kind = StepKind::BlackRight;
      cur.i += 3;
    } else if (cur.s.compare(cur.i, 3, "xBR") == 0) {
      st.kind = StepKind::BlackLeft;
      cur.i += 3;
    } else if (cur.s.compare(cur.i, 4, "idot") == 0) {
      if (var == Variant::Degenerate)
        fail(Err::InverseDotInDegenerate,
             "inverse dots need the quantum variant");
      st.kind = StepKind::InvDot;
      cur.i += 4;
    } else if (cur.s.compare(cur.i, 3, "dot") == 0) {
      st.kind = StepKind::Dot;
      cur.i += 3;
    } else if (cur.s.compare(cur.i, 4, "tok(") == 0) {
      st.kind = StepKind::Token;
      cur.i += 4;
      st.token = parse_token_payload(cur, A);
      cur.expect(')');
    } else if (cur.s.compare(cur.i, 2, "s-") == 0) {
      if (var == Variant::Degenerate)
        fail(Err::VariantMismatch,
             "inverse crossings need the quantum variant");
      st.kind = StepKind::CrossNeg;
      cur.i += 2;
    } else if (cur.s.compare(cur.i, 1, "s") == 0) {
      st.kind = StepKind::Cross;
      cur.i += 1;
    } else {
      cur.error("expected a diagram layer");
    }
    cur.expect('@');
    int pos = (int)cur.integer();
    if (pos < 1) fail(Err::IndexOutOfRange, "layer slot " + std::to_string(pos));
    st.pos = pos - 1;
    word.push_back(st);
    if (cur.done()) return word;
    cur.expect(';');
  }
}

std::string diagram_to_string(const DiagramWord& word,
                              const FrobeniusAlgebra* A) {
  std::string out;
  for (auto& st : word) {
    if (!out.empty()) out += ";";
    switch (st.kind) {
      case StepKind::Cross: out += "s"; break;
      case StepKind::CrossNeg: out += "s-"; break;
      case StepKind::BlackRight: out += "xRB"; break;
      case StepKind::BlackLeft: out += "xBR"; break;
      case StepKind::Dot: out += "dot"; break;
      case StepKind::InvDot: out += "idot"; break;
      case StepKind::Token: {
        out += "tok(";
        bool firstEntry = true;
        for (size_t b = 0; b < st.token.size(); ++b) {
          if (st.token[b] == 0) continue;
          if (!firstEntry) out += "+";
          firstEntry = false;
          if (st.token[b] != 1) out += rat_str(st.token[b]) + "*";
          out += A->labels()[b];
        }
        if (firstEntry) out += "0*" + A->labels()[0];
        out += ")";
        break;
      }
    }
    out += "@" + std::to_string(st.pos + 1);
  }
  return out;
}

std::string perm_to_string(const Perm& w) {
  std::string out = "w[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w[k] + 1);
  }
  return out + "]";
}

std::string morphism_to_string(const Morphism& f) {
  std::string out = object_to_string(f.src) + " -> " + object_to_string(f.tgt);
  if (f.isZero()) return out + " : 0";
  std::vector<const Perm*> ws;
  for (auto& [w, p] : f.coeffs) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(), [](const Perm* a, const Perm* b) {
    return std::make_pair(perm_len(*a), *a) < std::make_pair(perm_len(*b), *b);
  });
  for (auto* w : ws)
    out += " : " + perm_to_string(*w) + " " + pol_to_string(f.coeffs.at(*w));
  return out;
}

}  // namespace fh
