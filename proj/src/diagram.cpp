#include "frobhecke/diagram.hpp"

#include <algorithm>

namespace fh {

namespace {
void shuffle_rec(int blacksLeft, int nextRed, int level, ObjectWord& cur,
                 std::vector<ObjectWord>& out) {
  if (blacksLeft == 0 && nextRed > level) {
    out.push_back(cur);
    return;
  }
  if (blacksLeft > 0) {
    cur.push_back(kBlack);
    shuffle_rec(blacksLeft - 1, nextRed, level, cur, out);
    cur.pop_back();
  }
  if (nextRed <= level) {
    cur.push_back(nextRed);
    shuffle_rec(blacksLeft, nextRed + 1, level, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<ObjectWord> shuffles(int d, int level) {
  if (d < 0 || level < 0) fail(Err::IndexOutOfRange, "negative object data");
  std::vector<ObjectWord> out;
  ObjectWord cur;
  shuffle_rec(d, 1, level, cur, out);
  return out;
}

bool is_shuffle_word(const ObjectWord& obj, int d, int level) {
  int blacks = 0, nextRed = 1;
  for (int s : obj) {
    if (is_black(s)) {
      ++blacks;
    } else {
      if (s != nextRed) return false;
      ++nextRed;
    }
  }
  return blacks == d && nextRed == level + 1;
}

int black_count(const ObjectWord& obj) {
  int c = 0;
  for (int s : obj) c += is_black(s) ? 1 : 0;
  return c;
}

ObjectWord apply_step(const ObjectWord& obj, const Step& st) {
  int sz = (int)obj.size();
  auto needBlack = [&](int p) {
    if (p < 0 || p >= sz) fail(Err::IndexOutOfRange, "layer slot");
    if (!is_black(obj[p]))
      fail(Err::IllTypedWord, "slot " + std::to_string(p + 1) +
                                  " is not a black strand");
  };
  auto needRed = [&](int p) {
    if (p < 0 || p >= sz) fail(Err::IndexOutOfRange, "layer slot");
    if (is_black(obj[p]))
      fail(Err::IllTypedWord,
           "slot " + std::to_string(p + 1) + " is not a red strand");
  };
  ObjectWord out = obj;
  switch (st.kind) {
    case StepKind::Cross:
    case StepKind::CrossNeg:
      needBlack(st.pos);
      needBlack(st.pos + 1);
      break;
    case StepKind::BlackRight:
      needBlack(st.pos);
      needRed(st.pos + 1);
      std::swap(out[st.pos], out[st.pos + 1]);
      break;
    case StepKind::BlackLeft:
      needRed(st.pos);
      needBlack(st.pos + 1);
      std::swap(out[st.pos], out[st.pos + 1]);
      break;
    case StepKind::Dot:
    case StepKind::InvDot:
    case StepKind::Token:
      needBlack(st.pos);
      break;
  }
  return out;
}

ObjectWord word_target(ObjectWord obj, const DiagramWord& word) {
  for (auto& st : word) obj = apply_step(obj, st);
  return obj;
}

int black_index(const ObjectWord& obj, int pos) {
  if (pos < 0 || pos >= (int)obj.size())
    fail(Err::IndexOutOfRange, "black slot");
  if (!is_black(obj[pos]))
    fail(Err::IllTypedWord,
         "slot " + std::to_string(pos + 1) + " is not a black strand");
  int k = 0;
  for (int i = 0; i < pos; ++i) k += is_black(obj[i]) ? 1 : 0;
  return k;
}

DiagramWord canonical_diagram(const ObjectWord& src, const ObjectWord& tgt,
                              const Perm& w) {
  if (src.size() != tgt.size())
    fail(Err::IncompatibleObjects, "object words of different lengths");
  std::vector<int> srcReds, tgtReds;
  for (int s : src)
    if (!is_black(s)) srcReds.push_back(s);
  for (int s : tgt)
    if (!is_black(s)) tgtReds.push_back(s);
  if (srcReds != tgtReds)
    fail(Err::IncompatibleObjects, "red labels differ");
  int d = black_count(src);
  if (black_count(tgt) != d || (int)w.size() != d)
    fail(Err::IncompatibleObjects, "black counts differ from the matching");
  {
    std::vector<bool> seen(d, false);
    for (int v : w) {
      if (v < 0 || v >= d || seen[v])
        fail(Err::IncompatibleObjects, "matching is not a permutation");
      seen[v] = true;
    }
  }
  // Destination slot for each source slot.
  int sz = (int)src.size();
  std::vector<int> tgtBlackPos;
  std::map<int, int> tgtRedPos;
  for (int i = 0; i < sz; ++i) {
    if (is_black(tgt[i]))
      tgtBlackPos.push_back(i);
    else
      tgtRedPos[tgt[i]] = i;
  }
  std::vector<int> dest(sz), types = src;
  {
    int k = 0;
    for (int i = 0; i < sz; ++i) {
      if (is_black(src[i]))
        dest[i] = tgtBlackPos[w[k++]];
      else
        dest[i] = tgtRedPos[src[i]];
    }
  }
  // Insertion sort: pull the strand destined for slot t leftward, one slot at
  // a time; each swap is one layer, read bottom to top.
  DiagramWord word;
  for (int t = 0; t < sz; ++t) {
    int q = t;
    while (dest[q] != t) ++q;
    for (int j = q - 1; j >= t; --j) {
      bool moverBlack = is_black(types[j + 1]);
      bool otherBlack = is_black(types[j]);
      Step st;
      st.pos = j;
      if (moverBlack && otherBlack)
        st.kind = StepKind::Cross;
      else if (moverBlack && !otherBlack)
        st.kind = StepKind::BlackLeft;
      else if (!moverBlack && otherBlack)
        st.kind = StepKind::BlackRight;
      else
        fail(Err::InternalInconsistency, "red strands never cross");
      word.push_back(st);
      std::swap(dest[j], dest[j + 1]);
      std::swap(types[j], types[j + 1]);
    }
  }
  return word;
}

}  // namespace fh
