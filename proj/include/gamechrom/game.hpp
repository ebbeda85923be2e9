#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamechrom/position.hpp"

namespace gamechrom {

enum class Player : std::uint8_t { Alice, Bob };
enum class Winner : std::uint8_t { Alice, Bob };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline bool wins(Player p, Winner w) {
    return (p == Player::Alice) == (w == Winner::Alice);
}
inline const char* name(Player p) { return p == Player::Alice ? "Alice" : "Bob"; }
inline const char* name(Winner w) { return w == Winner::Alice ? "AliceWin" : "BobWin"; }

enum class WinCondition : std::uint8_t { AllColored, AllDegreeAtLeast };

// Game-variant configuration. The four named variants from the factory
// functions cover every game played here; the fields compose freely.
struct Ruleset {
    int palette = 0;
    Player first_mover = Player::Alice;
    bool alice_may_pass = false;
    bool alice_may_add_leaf = false;
    bool bob_may_pass = false;
    int alice_min_degree = 0;  // 0 = unrestricted
    WinCondition win_condition = WinCondition::AllColored;
    int win_degree = 0;  // threshold for AllDegreeAtLeast

    static Ruleset standard(int t);
    // Bob first, Bob may pass.
    static Ruleset mcg(int t);
    // Alice may pass and may add a single colored leaf instead of coloring.
    static Ruleset ecg(int t);
    // MCG flags, Alice colors only degree >= k vertices and wins once all
    // degree >= k vertices are colored. Degrees are fixed at game start.
    static Ruleset rcg(int t, int k);

    std::uint64_t hash() const;
    bool operator==(const Ruleset&) const = default;
};

struct Move {
    enum class Kind : std::uint8_t { ColorVertex, Pass, AddExternal };
    Kind kind = Kind::Pass;
    Vertex vertex = -1;
    Color color = kUncolored;

    static Move color_vertex(Vertex v, Color c) { return {Kind::ColorVertex, v, c}; }
    static Move pass() { return {Kind::Pass, -1, kUncolored}; }
    static Move add_external(Vertex v, Color c) { return {Kind::AddExternal, v, c}; }

    bool operator==(const Move&) const = default;
    std::string str() const;
};

struct GameState {
    Position position;
    Player to_move = Player::Alice;
    Ruleset rules;

    static GameState initial(Forest f, Ruleset r);
    static GameState from_position(Position p, Ruleset r, std::optional<Player> to_move = {});
};

struct IllegalMoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete duplicate-free list honoring all ruleset flags, in deterministic
// order: colorings by ascending (vertex, color), then AddExternal, then Pass.
std::vector<Move> legal_moves(const GameState& s);

bool is_legal(const GameState& s, const Move& m);

// Throws IllegalMoveError naming the violated rule. The input is unchanged.
GameState apply_move(const GameState& s, const Move& m);

// BobWin once a win-condition-relevant uncolored vertex has no legal color,
// AliceWin once the win condition is met, nothing otherwise.
std::optional<Winner> terminal(const GameState& s);

// True for vertices tested by the win condition (all vertices under
// AllColored, degree >= win_degree vertices under AllDegreeAtLeast).
bool win_relevant(const GameState& s, Vertex v);

// Key identifying the state up to a palette permutation applied jointly to
// the coloring and the external sets. Includes to_move and the ruleset hash.
std::string canonical_key(const GameState& s);
std::string canonical_key_hex(const GameState& s);

// Legal colorings that leave some win-relevant vertex uncolorable.
std::vector<Move> find_winning_moves(const GameState& s);

// Winning moves with targets more than distance 2 apart; two of them on the
// opponent's turn cannot both be answered.
bool disjoint_winning_moves(const Forest& f, const Move& a, const Move& b);

}  // namespace gamechrom
