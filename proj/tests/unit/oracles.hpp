#pragma once

#include <string>
#include <vector>

#include "gamechrom/game.hpp"

// Independent reference implementations used to cross-check the library.
// They deliberately avoid the library's canonicalization, enumeration and
// search machinery.
namespace oracle {

// Reference minimax over the public move API. Memoizes on exact state keys
// only; no color canonicalization, no move ordering, no capacity cap.
gamechrom::Winner plain_solve(const gamechrom::GameState& s);

// Every labeled tree on n vertices, decoded from Prüfer sequences.
std::vector<gamechrom::Forest> labeled_trees(int n);

// Every labeled forest on n vertices (acyclic edge subsets of K_n).
std::vector<gamechrom::Forest> labeled_forests(int n);

// Isomorphism-invariant key via center-rooted subtree encodings.
std::string iso_key(const gamechrom::Forest& f);

// Longest path length by all-pairs breadth-first search; -1 when empty.
int brute_longest_path(const gamechrom::Forest& f);

}  // namespace oracle
