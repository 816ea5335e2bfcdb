#pragma once

#include <map>
#include <vector>

#include "frobhecke/wreath.hpp"

namespace fh {

// Object word slots: -1 is a black strand, r >= 1 is the red strand labeled r.
using ObjectWord = std::vector<int>;

constexpr int kBlack = -1;

inline bool is_black(int slot) { return slot == kBlack; }

// Elementary diagram layers, bottom-to-top.
//   Cross      s@p  : positive crossing of black strands at slots p, p+1
//   CrossNeg   s-@p : inverse crossing (quantum only)
//   BlackRight xRB@p: black at p crosses right over red at p+1
//   BlackLeft  xBR@p: black at p+1 crosses left over red at p
//   Dot        dot@p, InvDot idot@p (quantum only), Token tok(b)@p
enum class StepKind { Cross, CrossNeg, BlackRight, BlackLeft, Dot, InvDot, Token };

struct Step {
  StepKind kind;
  int pos = 0;  // 0-based slot
  Vec token;    // Token payload in the algebra basis
  bool operator==(const Step& o) const {
    return kind == o.kind && pos == o.pos && token == o.token;
  }
};

using DiagramWord = std::vector<Step>;

// All interleavings of d blacks with reds 1..level, lexicographic with
// black < red.
std::vector<ObjectWord> shuffles(int d, int level);
bool is_shuffle_word(const ObjectWord& obj, int d, int level);
int black_count(const ObjectWord& obj);

// Object transported across one layer; IllTypedWord on slot-type mismatch.
ObjectWord apply_step(const ObjectWord& obj, const Step& s);
ObjectWord word_target(ObjectWord obj, const DiagramWord& word);

// Index of a black slot among the blacks of the object (0-based).
int black_index(const ObjectWord& obj, int pos);

// The straight-line wiring from src to tgt matching the k-th black of src to
// the w(k)-th black of tgt and red r to red r; IncompatibleObjects when the
// two words are not shuffles of the same data.
DiagramWord canonical_diagram(const ObjectWord& src, const ObjectWord& tgt,
                              const Perm& w);

// Morphism between shuffle objects in the canonical basis: a finite map
// (black matching w) -> polynomial left coefficient over d strands.
struct Morphism {
  ObjectWord src, tgt;
  std::map<Perm, PolyElement> coeffs;
  bool isZero() const { return coeffs.empty(); }
  bool operator==(const Morphism& o) const {
    return src == o.src && tgt == o.tgt && coeffs == o.coeffs;
  }
};

// Element of the path algebra over all shuffle objects: block map
// (src, tgt) -> Morphism.
struct PathElement {
  std::map<std::pair<ObjectWord, ObjectWord>, Morphism> blocks;
  bool isZero() const { return blocks.empty(); }
};

}  // namespace fh
