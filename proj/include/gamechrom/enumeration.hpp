#pragma once

#include <string>
#include <vector>

#include "gamechrom/forest.hpp"

namespace gamechrom {

// Isomorphism-invariant total-order key: per component, the lexicographically
// least parenthesized encoding rooted at a centroid; components sorted and
// concatenated. Two forests share a key iff they are isomorphic.
std::string canonical_form(const Forest& f);

// Rebuilds a forest from a canonical form, assigning ids in decode order.
Forest forest_from_canonical(const std::string& canon);

// One representative per isomorphism class, ordered lexicographically by
// canonical form. Rooted trees come from level-sequence successor
// generation; free trees are deduplicated through centroid rooting.
std::vector<Forest> trees_of_order(int n);   // n >= 1
std::vector<Forest> forests_of_order(int n); // n >= 0; multisets of trees

// All trees with lo <= order <= hi, concatenated in order.
std::vector<Forest> trees_up_to(int lo, int hi);
std::vector<Forest> forests_up_to(int lo, int hi);

}  // namespace gamechrom
