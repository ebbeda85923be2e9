#include "gamechrom/game.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace gamechrom {

Ruleset Ruleset::standard(int t) {
    Ruleset r;
    r.palette = t;
    return r;
}

Ruleset Ruleset::mcg(int t) {
    Ruleset r;
    r.palette = t;
    r.first_mover = Player::Bob;
    r.bob_may_pass = true;
    return r;
}

Ruleset Ruleset::ecg(int t) {
    Ruleset r;
    r.palette = t;
    r.alice_may_pass = true;
    r.alice_may_add_leaf = true;
    return r;
}

Ruleset Ruleset::rcg(int t, int k) {
    Ruleset r;
    r.palette = t;
    r.first_mover = Player::Bob;
    r.bob_may_pass = true;
    r.alice_min_degree = k;
    r.win_condition = WinCondition::AllDegreeAtLeast;
    r.win_degree = k;
    return r;
}

std::uint64_t Ruleset::hash() const {
    // FNV-1a over the fields
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(palette));
    mix(first_mover == Player::Bob);
    mix(alice_may_pass);
    mix(alice_may_add_leaf);
    mix(bob_may_pass);
    mix(static_cast<std::uint64_t>(alice_min_degree));
    mix(win_condition == WinCondition::AllDegreeAtLeast);
    mix(static_cast<std::uint64_t>(win_degree));
    return h;
}

std::string Move::str() const {
    switch (kind) {
        case Kind::Pass:
            return "pass";
        case Kind::ColorVertex:
            return "color " + std::to_string(vertex) + " with " + std::to_string(color);
        case Kind::AddExternal:
            return "add leaf colored " + std::to_string(color) + " at " + std::to_string(vertex);
    }
    return "?";
}

GameState GameState::initial(Forest f, Ruleset r) {
    return from_position(Position::uncolored(std::move(f)), r);
}

GameState GameState::from_position(Position p, Ruleset r, std::optional<Player> to_move) {
    p.check_legal(r.palette);
    GameState s;
    s.position = std::move(p);
    s.rules = r;
    s.to_move = to_move.value_or(r.first_mover);
    return s;
}

bool win_relevant(const GameState& s, Vertex v) {
    if (s.rules.win_condition == WinCondition::AllColored) return true;
    return s.position.forest.degree(v) >= s.rules.win_degree;
}

namespace {

const char* check_move(const GameState& s, const Move& m) {
    const Position& p = s.position;
    switch (m.kind) {
        case Move::Kind::Pass:
            if (s.to_move == Player::Alice && !s.rules.alice_may_pass)
                return "Alice may not pass under this ruleset";
            if (s.to_move == Player::Bob && !s.rules.bob_may_pass)
                return "Bob may not pass under this ruleset";
            return nullptr;
        case Move::Kind::AddExternal:
            if (s.to_move != Player::Alice || !s.rules.alice_may_add_leaf)
                return "leaf addition is an Alice-only ECG move";
            if (m.vertex < 0 || m.vertex >= p.order()) return "leaf site out of range";
            if (m.color < 0 || m.color >= s.rules.palette) return "leaf color outside the palette";
            if (p.external[m.vertex] & (ColorMask(1) << m.color))
                return "duplicate external color collapses to a no-op";
            if (p.color[m.vertex] == m.color)
                return "a leaf may not repeat its attachment vertex's color";
            return nullptr;
        case Move::Kind::ColorVertex:
            if (m.vertex < 0 || m.vertex >= p.order()) return "vertex out of range";
            if (m.color < 0 || m.color >= s.rules.palette) return "color outside the palette";
            if (p.colored(m.vertex)) return "vertex is already colored";
            if (!p.legal(m.vertex, m.color)) return "color is not legal for the vertex";
            if (s.to_move == Player::Alice && s.rules.alice_min_degree > 0 &&
                p.forest.degree(m.vertex) < s.rules.alice_min_degree)
                return "Alice may only color vertices meeting the degree threshold";
            return nullptr;
    }
    return "unknown move kind";
}

}  // namespace

bool is_legal(const GameState& s, const Move& m) { return check_move(s, m) == nullptr; }

std::vector<Move> legal_moves(const GameState& s) {
    const Position& p = s.position;
    std::vector<Move> out;
    bool degree_limited = s.to_move == Player::Alice && s.rules.alice_min_degree > 0;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (p.colored(v)) continue;
        if (degree_limited && p.forest.degree(v) < s.rules.alice_min_degree) continue;
        ColorMask forbidden = p.forbidden(v);
        for (Color c = 0; c < s.rules.palette; ++c)
            if (!(forbidden & (ColorMask(1) << c))) out.push_back(Move::color_vertex(v, c));
    }
    if (s.to_move == Player::Alice && s.rules.alice_may_add_leaf)
        for (Vertex v = 0; v < p.order(); ++v)
            for (Color c = 0; c < s.rules.palette; ++c) {
                if (p.external[v] & (ColorMask(1) << c)) continue;
                if (p.color[v] == c) continue;
                out.push_back(Move::add_external(v, c));
            }
    if ((s.to_move == Player::Alice && s.rules.alice_may_pass) ||
        (s.to_move == Player::Bob && s.rules.bob_may_pass))
        out.push_back(Move::pass());
    return out;
}

GameState apply_move(const GameState& s, const Move& m) {
    if (const char* why = check_move(s, m))
        throw IllegalMoveError(std::string("illegal move (") + m.str() + "): " + why);
    GameState next = s;
    next.to_move = other(s.to_move);
    if (m.kind == Move::Kind::ColorVertex)
        next.position.color[m.vertex] = m.color;
    else if (m.kind == Move::Kind::AddExternal)
        next.position.external[m.vertex] |= ColorMask(1) << m.color;
    return next;
}

std::optional<Winner> terminal(const GameState& s) {
    const Position& p = s.position;
    ColorMask full = full_mask(s.rules.palette);
    int uncolored_relevant = 0;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (p.colored(v) || !win_relevant(s, v)) continue;
        ++uncolored_relevant;
        if ((p.forbidden(v) & full) == full) return Winner::Bob;
    }
    if (uncolored_relevant == 0) return Winner::Alice;
    return std::nullopt;
}

std::string canonical_key(const GameState& s) {
    const Position& p = s.position;
    int n = p.order();
    // colors relabeled by first occurrence: vertex colors in ascending id,
    // then external sets folded in
    int next_label = 0;
    std::array<int, kMaxPalette> relabel;
    relabel.fill(-1);
    std::string key;
    key.reserve(static_cast<std::size_t>(n) * (s.rules.alice_may_add_leaf ? 2 : 1) + 10);
    std::uint64_t rh = s.rules.hash();
    for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>((rh >> (8 * i)) & 0xff));
    key.push_back(s.to_move == Player::Alice ? 'A' : 'B');
    for (Vertex v = 0; v < n; ++v) {
        Color c = p.color[v];
        if (c == kUncolored) {
            key.push_back(0);
        } else {
            if (relabel[c] < 0) relabel[c] = next_label++;
            key.push_back(static_cast<char>(relabel[c] + 1));
        }
    }
    if (s.rules.alice_may_add_leaf) {
        for (Vertex v = 0; v < n; ++v) {
            ColorMask mapped = 0;
            ColorMask m = p.external[v];
            for (Color c = 0; c < s.rules.palette; ++c)
                if (m & (ColorMask(1) << c)) {
                    if (relabel[c] < 0) relabel[c] = next_label++;
                    mapped |= ColorMask(1) << relabel[c];
                }
            key.push_back(static_cast<char>(mapped & 0xff));
            if (s.rules.palette > 8) key.push_back(static_cast<char>(mapped >> 8));
        }
    }
    return key;
}

std::string canonical_key_hex(const GameState& s) {
    static const char* digits = "0123456789abcdef";
    std::string key = canonical_key(s), hex;
    hex.reserve(key.size() * 2);
    for (unsigned char b : key) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 0xf]);
    }
    return hex;
}

std::vector<Move> find_winning_moves(const GameState& s) {
    const Position& p = s.position;
    ColorMask full = full_mask(s.rules.palette);
    std::vector<Move> out;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (p.colored(v)) continue;
        ColorMask forbidden = p.forbidden(v);
        for (Color c = 0; c < s.rules.palette; ++c) {
            if (forbidden & (ColorMask(1) << c)) continue;
            // only neighbors of v can become uncolorable
            for (Vertex w : p.forest.neighbors(v)) {
                if (p.colored(w) || !win_relevant(s, w)) continue;
                if (((p.forbidden(w) | (ColorMask(1) << c)) & full) == full) {
                    out.push_back(Move::color_vertex(v, c));
                    break;
                }
            }
        }
    }
    return out;
}

bool disjoint_winning_moves(const Forest& f, const Move& a, const Move& b) {
    return distance(f, a.vertex, b.vertex) > 2;
}

}  // namespace gamechrom
