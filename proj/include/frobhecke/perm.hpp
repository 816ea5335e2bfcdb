#pragma once

#include <vector>

namespace fh {

// Permutations in one-line notation, 0-based: w[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& w);

// (u o v)(k) = u(v(k)).
Perm perm_compose(const Perm& u, const Perm& v);
Perm perm_inverse(const Perm& w);

// Adjacent transposition swapping i, i+1 (0-based).
Perm perm_s(int n, int i);

// Number of inversions (Coxeter length).
int perm_len(const Perm& w);

// Word i1,...,ik with w = s_{i1} o ... o s_{ik}, produced by repeatedly
// clearing the smallest descent; deterministic.
std::vector<int> reduced_word(const Perm& w);

std::vector<Perm> all_perms(int n);

}  // namespace fh
