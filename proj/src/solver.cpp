#include "gamechrom/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace gamechrom {

std::size_t TranspositionTable::entries_for_mb(std::size_t mb) {
    // rough per-entry footprint of key + node + bucket
    return mb * 1024 * 1024 / 96;
}

std::size_t TranspositionTable::default_entries() {
    std::size_t mb = 1024;
    if (const char* env = std::getenv("GAMECHROM_MEMO_MB")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) mb = v;
    }
    return entries_for_mb(mb);
}

const Winner* TranspositionTable::find(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) {
        ++misses_;
        return nullptr;
    }
    ++hits_;
    return &it->second;
}

void TranspositionTable::publish(const std::string& key, Winner w) {
    if (map_.size() >= cap_) {
        if (lossy_) return;
        throw MemoCapacityError("transposition table reached its capacity of " +
                                std::to_string(cap_) +
                                " entries; raise GAMECHROM_MEMO_MB or enable the lossy mode");
    }
    map_.emplace(key, w);
}

namespace {

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 0xf]);
    }
    return hex;
}

std::string from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw CacheFormatError("odd-length hex key");
    std::string bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw CacheFormatError("invalid hex key: " + hex);
        bytes.push_back(static_cast<char>((hi << 4) | lo));
    }
    return bytes;
}

}  // namespace

void TranspositionTable::save(std::ostream& out, std::uint64_t ruleset_hash) const {
    out << "gamechrom-cache 1 " << ruleset_hash << "\n";
    for (const auto& [key, w] : map_)
        out << to_hex(key) << ' ' << (w == Winner::Alice ? 'A' : 'B') << '\n';
}

void TranspositionTable::load(std::istream& in, std::uint64_t ruleset_hash) {
    std::string magic;
    int version = 0;
    std::uint64_t hash = 0;
    if (!(in >> magic >> version >> hash) || magic != "gamechrom-cache" || version != 1)
        throw CacheFormatError("not a gamechrom-cache version 1 file");
    if (hash != ruleset_hash)
        throw CacheFormatError("cache was built for a different ruleset (hash " +
                               std::to_string(hash) + " vs " + std::to_string(ruleset_hash) + ")");
    std::string key;
    char verdict;
    while (in >> key >> verdict) {
        if (verdict != 'A' && verdict != 'B')
            throw CacheFormatError(std::string("invalid verdict '") + verdict + "'");
        publish(from_hex(key), verdict == 'A' ? Winner::Alice : Winner::Bob);
    }
}

namespace {

// Search over a single mutable state with undo; never copies the forest.
class Search {
public:
    Search(GameState s, TranspositionTable& table, SolveStats& stats)
        : s_(std::move(s)), table_(table), stats_(stats) {
        depth_limit_ = 2 * s_.position.order() + s_.rules.palette * s_.position.order() + 2;
    }

    Winner run() { return recurse(0); }

    bool run_bounded(int bob_moves, std::unordered_map<std::string, bool>& memo) {
        return bounded(bob_moves, 0, memo);
    }

    // Move ordering: winning moves, then moves adjacent to colored
    // vertices (or external colors), then ascending id; leaf additions and
    // passes after all colorings.
    std::vector<Move> ordered_moves() {
        std::vector<Move> moves = legal_moves(s_);
        ColorMask full = full_mask(s_.rules.palette);
        auto score = [&](const Move& m) -> int {
            if (m.kind == Move::Kind::Pass) return 4;
            if (m.kind == Move::Kind::AddExternal) return 3;
            for (Vertex w : s_.position.forest.neighbors(m.vertex)) {
                if (s_.position.colored(w) || !win_relevant(s_, w)) continue;
                if (((s_.position.forbidden(w) | (ColorMask(1) << m.color)) & full) == full)
                    return 0;
            }
            return s_.position.forbidden(m.vertex) ? 1 : 2;
        };
        std::stable_sort(moves.begin(), moves.end(),
                         [&](const Move& a, const Move& b) { return score(a) < score(b); });
        return moves;
    }

private:
    void do_move(const Move& m) {
        if (m.kind == Move::Kind::ColorVertex)
            s_.position.color[m.vertex] = m.color;
        else if (m.kind == Move::Kind::AddExternal)
            s_.position.external[m.vertex] |= ColorMask(1) << m.color;
        s_.to_move = other(s_.to_move);
    }

    void undo_move(const Move& m) {
        if (m.kind == Move::Kind::ColorVertex)
            s_.position.color[m.vertex] = kUncolored;
        else if (m.kind == Move::Kind::AddExternal)
            s_.position.external[m.vertex] &= ~(ColorMask(1) << m.color);
        s_.to_move = other(s_.to_move);
    }

    Winner recurse(int depth) {
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (depth > depth_limit_)
            throw std::logic_error("search exceeded the finiteness depth bound");
        if (auto t = terminal(s_)) return *t;
        std::string key = canonical_key(s_);
        if (const Winner* cached = table_.find(key)) return *cached;
        Player me = s_.to_move;
        Winner result = me == Player::Alice ? Winner::Bob : Winner::Alice;
        for (const Move& m : ordered_moves()) {
            do_move(m);
            Winner w = recurse(depth + 1);
            undo_move(m);
            if (wins(me, w)) {
                result = w;
                break;
            }
        }
        table_.publish(key, result);
        return result;
    }

    bool bounded(int bob_moves, int depth, std::unordered_map<std::string, bool>& memo) {
        ++stats_.nodes;
        if (depth > depth_limit_) throw std::logic_error("bounded search exceeded depth bound");
        if (auto t = terminal(s_)) return *t == Winner::Bob;
        if (s_.to_move == Player::Bob && bob_moves == 0) return false;
        std::string key = canonical_key(s_) + static_cast<char>(bob_moves);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool result;
        if (s_.to_move == Player::Bob) {
            result = false;
            for (const Move& m : ordered_moves()) {
                do_move(m);
                bool r = bounded(bob_moves - 1, depth + 1, memo);
                undo_move(m);
                if (r) {
                    result = true;
                    break;
                }
            }
        } else {
            result = true;
            for (const Move& m : legal_moves(s_)) {
                do_move(m);
                bool r = bounded(bob_moves, depth + 1, memo);
                undo_move(m);
                if (!r) {
                    result = false;
                    break;
                }
            }
        }
        memo.emplace(std::move(key), result);
        return result;
    }

    GameState s_;
    TranspositionTable& table_;
    SolveStats& stats_;
    int depth_limit_;
};

}  // namespace

Winner Solver::solve(const GameState& s) {
    s.position.check_legal(s.rules.palette);
    return Search(s, table_, stats_).run();
}

bool Solver::bob_wins_within(const GameState& s, int bob_moves) {
    s.position.check_legal(s.rules.palette);
    return Search(s, table_, stats_).run_bounded(bob_moves, bounded_memo_);
}

ChiG game_chromatic_number(const Forest& f) {
    for (int t = 0; t <= 3; ++t) {
        Solver solver;
        if (solver.solve(GameState::initial(f, Ruleset::standard(t))) == Winner::Alice)
            return {t, false};
    }
    return {4, true};  // every forest is a win for Alice with 4 colors
}

}  // namespace gamechrom
