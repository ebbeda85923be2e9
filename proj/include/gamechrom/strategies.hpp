#pragma once

#include <functional>

#include "gamechrom/game.hpp"

namespace gamechrom {

// Deterministic choice function for one designated side.
using Policy = std::function<Move(const GameState&)>;

struct StrategyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Alice's 4-MCG strategy: when a trunk has 3 colored leaves, color the
// branch vertex separating them; with 2 colored ends, color a vertex on the
// path between them; otherwise color anywhere in a trunk with an uncolored
// vertex. Ties by ascending id, lowest legal color.
Move alice_4mcg(const GameState& s);

// Alice's 3-MCG strategy for trunks of order <= 7 with at most one initially
// colored vertex, driven by the dangerous-vertex case analysis.
Move alice_small_trunk_3mcg(const GameState& s);

// Alice's 3-RCG strategy on a reduced graph whose trunks each have at most
// one colored vertex without an E>>2 edge, or no colored vertex and a
// covering vertex.
Move alice_rcg(const GameState& s);

// Alice's 2-coloring strategy for forests meeting the chi_g = 2 condition:
// mirror Bob inside P4 components at distance 2 with the same color,
// otherwise play the 2-MCG star strategy on the remainder.
Move alice_2color(const GameState& s);

// True iff the policy's side wins against every opponent reply sequence,
// checked exhaustively with memoization. Throws StrategyError (naming the
// state) if the policy ever returns an illegal move.
bool verify_policy(const Policy& p, Player side, const GameState& start);

}  // namespace gamechrom
