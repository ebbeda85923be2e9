#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>

#include "gamechrom/game.hpp"

namespace gamechrom {

struct MemoCapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verdict store keyed by canonical state key. Capacity-capped; by default a
// full table fails loudly instead of evicting. The lossy mode drops new
// entries at capacity, which only costs recomputation.
class TranspositionTable {
public:
    explicit TranspositionTable(std::size_t max_entries = default_entries(), bool lossy = false)
        : cap_(max_entries), lossy_(lossy) {}

    static std::size_t entries_for_mb(std::size_t mb);
    static std::size_t default_entries();  // honors GAMECHROM_MEMO_MB

    const Winner* find(const std::string& key);
    void publish(const std::string& key, Winner w);

    std::size_t size() const { return map_.size(); }
    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }
    void clear() { map_.clear(); hits_ = misses_ = 0; }

    // Cache file: header "gamechrom-cache 1 <ruleset-hash>", then one
    // "<canonical-key-hex> <verdict>" record per line.
    void save(std::ostream& out, std::uint64_t ruleset_hash) const;
    void load(std::istream& in, std::uint64_t ruleset_hash);  // throws on mismatch

private:
    std::unordered_map<std::string, Winner> map_;
    std::size_t cap_;
    bool lossy_;
    std::uint64_t hits_ = 0, misses_ = 0;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
};

// Exact AND/OR solver with memoization on color-canonical keys. Move
// ordering: winning moves, then moves adjacent to colored vertices, then
// ascending id. A solver instance is single-threaded.
class Solver {
public:
    Solver() : table_(TranspositionTable::default_entries()) {}
    explicit Solver(std::size_t max_entries, bool lossy = false) : table_(max_entries, lossy) {}

    Winner solve(const GameState& s);

    // True implies Bob forces a win spending at most bob_moves of his own
    // moves against every reply; false is inconclusive.
    bool bob_wins_within(const GameState& s, int bob_moves);

    const SolveStats& stats() const { return stats_; }
    TranspositionTable& table() { return table_; }

private:
    TranspositionTable table_;
    std::unordered_map<std::string, bool> bounded_memo_;
    SolveStats stats_;
};

inline Winner solve(const GameState& s) { return Solver().solve(s); }
inline bool bob_wins_within(const GameState& s, int bob_moves) {
    return Solver().bob_wins_within(s, bob_moves);
}

struct ChiG {
    int value = 0;
    // 4 reported from the forest cap without a t=4 solve.
    bool theorem_capped = false;
};

// Least t for which Alice wins the standard t-coloring game, scanning t
// upward; a loss at t=3 reports 4 via the forest cap.
ChiG game_chromatic_number(const Forest& f);

}  // namespace gamechrom
