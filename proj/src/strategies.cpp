#include "gamechrom/strategies.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gamechrom/structure.hpp"

namespace gamechrom {

namespace {

Color lowest_legal(const Position& p, Vertex v, int palette) {
    for (Color c = 0; c < palette; ++c)
        if (p.legal(v, c)) return c;
    throw StrategyError("no legal color at vertex " + std::to_string(v));
}

Move color_lowest(const GameState& s, Vertex v) {
    return Move::color_vertex(v, lowest_legal(s.position, v, s.rules.palette));
}

// The unique vertex lying on all three pairwise paths among x, y, z.
Vertex median_of_three(const Forest& f, Vertex x, Vertex y, Vertex z) {
    auto pxy = path_between(f, x, y);
    auto pxz = path_between(f, x, z);
    std::size_t i = 0;
    while (i < pxy.size() && i < pxz.size() && pxy[i] == pxz[i]) ++i;
    return pxy[i - 1];
}

int colored_neighbor_count(const Position& p, Vertex v) {
    int k = 0;
    for (Vertex w : p.forest.neighbors(v)) k += p.colored(w);
    return k;
}

}  // namespace

Move alice_4mcg(const GameState& s) {
    const Position& p = s.position;
    auto ts = trunks(p);

    // At most one trunk can hold three colored leaves after Bob's move;
    // coloring the vertex that pairwise separates them restores the
    // two-colored-per-trunk invariant.
    for (const Trunk& t : ts) {
        std::vector<Vertex> col;
        for (Vertex v : t.vertices)
            if (p.colored(v)) col.push_back(v);
        if (col.size() > 3) throw StrategyError("trunk with more than three colored vertices");
        if (col.size() == 3) {
            Vertex m = median_of_three(p.forest, col[0], col[1], col[2]);
            if (p.colored(m)) throw StrategyError("separator of three colored leaves is colored");
            return color_lowest(s, m);
        }
    }

    // Otherwise play in the first trunk holding an uncolored vertex; inside a
    // two-colored trunk the move must stay on the path between its ends.
    for (const Trunk& t : ts) {
        std::vector<Vertex> col, unc;
        for (Vertex v : t.vertices)
            (p.colored(v) ? col : unc).push_back(v);
        if (unc.empty()) continue;
        if (col.size() == 2) {
            auto path = path_between(p.forest, col[0], col[1]);
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (!p.colored(path[i])) return color_lowest(s, path[i]);
            throw StrategyError("two-colored trunk without an uncolored path vertex");
        }
        return color_lowest(s, unc.front());
    }
    throw StrategyError("no trunk with an uncolored vertex");
}

Move alice_small_trunk_3mcg(const GameState& s) {
    const Position& p = s.position;
    const int palette = s.rules.palette;
    auto danger = dangerous_vertices(p, palette);

    if (danger.empty()) {
        for (Vertex v = 0; v < p.order(); ++v)
            if (!p.colored(v)) return color_lowest(s, v);
        throw StrategyError("no uncolored vertex remains");
    }
    if (danger.size() == 1) return color_lowest(s, danger[0]);
    if (danger.size() > 2) throw StrategyError("more than two dangerous vertices");

    Vertex x = danger[0], y = danger[1];
    int cx = colored_neighbor_count(p, x);
    int cy = colored_neighbor_count(p, y);

    // Two colored neighbors: coloring that vertex puts the colored vertices
    // on a P3 and leaves the other with at most one colored neighbor.
    if (cx >= 2) return color_lowest(s, x);
    if (cy >= 2) return color_lowest(s, y);

    // One uncolored-neighborhood vertex: color the other dangerous vertex.
    if (cx == 0) return color_lowest(s, y);
    if (cy == 0) return color_lowest(s, x);

    // Both have exactly one colored neighbor; one of them has degree 3.
    if (p.forest.degree(x) != 3) {
        if (p.forest.degree(y) != 3) throw StrategyError("no dangerous vertex of degree 3");
        std::swap(x, y);
    }
    if (!p.forest.has_edge(x, y)) return color_lowest(s, x);
    Color cn = kUncolored;
    for (Vertex w : p.forest.neighbors(x))
        if (p.colored(w)) cn = p.color[w];
    for (Vertex u : p.forest.neighbors(x)) {
        if (p.colored(u) || u == y || p.forest.has_edge(u, y)) continue;
        if (colored_neighbor_count(p, u) != 0) continue;
        if (p.legal(u, cn)) return Move::color_vertex(u, cn);
    }
    throw StrategyError("no neutral neighbor of the degree-3 dangerous vertex");
}

namespace {

// Colored vertices of a trunk, counting same-colored leaves hanging off a
// common neighbor once (they constrain play identically).
std::vector<Vertex> effective_colored(const Position& p, const Trunk& t) {
    std::vector<Vertex> out;
    std::set<std::pair<Vertex, Color>> seen;
    for (Vertex v : t.vertices) {
        if (!p.colored(v)) continue;
        if (t.degree_within(v) == 1) {
            Vertex nbr = -1;
            for (auto [a, b] : t.edges)
                if (a == v || b == v) nbr = (a == v ? b : a);
            if (!seen.insert({nbr, p.color[v]}).second) continue;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

Move alice_rcg(const GameState& s) {
    const Position& p = s.position;
    ReducedGraph r = reduced_graph(p);
    auto ts = r.trunks();
    auto rdeg = r.degrees();

    auto split_at_colored_neighbor = [&](const Trunk& t) -> std::optional<Move> {
        for (Vertex x : t.vertices) {
            if (!p.colored(x)) continue;
            for (auto [a, b] : t.edges) {
                if (a != x && b != x) continue;
                Vertex xp = (a == x ? b : a);
                if (!p.colored(xp) && rdeg[xp] >= 3) {
                    Move m = color_lowest(s, xp);
                    if (is_legal(s, m)) return m;
                }
            }
        }
        return std::nullopt;
    };

    // First repair any trunk that stopped satisfying the winning shape:
    // either two colored vertices, or one colored vertex alongside an edge
    // whose endpoints both have reduced degree above 2.
    for (const Trunk& t : ts) {
        auto col = effective_colored(p, t);
        if (col.size() >= 2) {
            if (auto m = split_at_colored_neighbor(t)) return *m;
            throw StrategyError("two-colored reduced trunk has no splittable neighbor");
        }
        if (col.size() == 1 && !r.e_gg2(t).empty()) {
            Vertex b = col[0];
            CoverResult cover = covering_vertex(r, t);
            if (cover.kind != CoverResult::Kind::Covered)
                throw StrategyError("colored reduced trunk has no covering vertex");
            Vertex v = *cover.vertex;
            int d = distance(p.forest, b, v);
            if (d <= 2) {
                Color c = p.color[b];
                Move m = (d == 2 && p.legal(v, c)) ? Move::color_vertex(v, c)
                                                   : color_lowest(s, v);
                if (is_legal(s, m)) return m;
                throw StrategyError("covering vertex cannot be colored");
            }
            Vertex bp = path_between(p.forest, b, v)[1];
            Move m = color_lowest(s, bp);
            if (is_legal(s, m)) return m;
            throw StrategyError("path neighbor of the colored vertex cannot be colored");
        }
    }

    // Every trunk is in winning shape (Bob passed or played harmlessly):
    // extend a one-colored trunk at a high-degree neighbor, or open an
    // uncolored trunk at its covering vertex.
    for (const Trunk& t : ts) {
        if (effective_colored(p, t).size() != 1) continue;
        if (auto m = split_at_colored_neighbor(t)) return *m;
    }
    for (const Trunk& t : ts) {
        if (!effective_colored(p, t).empty()) continue;
        CoverResult cover = covering_vertex(r, t);
        if (cover.kind == CoverResult::Kind::Covered) {
            Move m = color_lowest(s, *cover.vertex);
            if (is_legal(s, m)) return m;
        } else if (cover.kind == CoverResult::Kind::TriviallyCovered) {
            for (Vertex v : t.vertices) {
                if (p.colored(v)) continue;
                Move m = Move::color_vertex(v, lowest_legal(p, v, s.rules.palette));
                if (is_legal(s, m)) return m;
            }
        } else {
            throw StrategyError("uncolored reduced trunk has no covering vertex");
        }
    }
    for (const Move& m : legal_moves(s))
        if (m.kind == Move::Kind::ColorVertex) return m;
    throw StrategyError("no legal coloring move remains");
}

Move alice_2color(const GameState& s) {
    const Position& p = s.position;
    const Forest& f = p.forest;
    auto comps = components(f);

    auto is_p4 = [&](const std::vector<Vertex>& comp) {
        return comp.size() == 4 && component_diameter(f, comp[0]) == 3;
    };
    auto center_of = [&](const std::vector<Vertex>& comp) {
        Vertex best = comp[0];
        for (Vertex v : comp)
            if (f.degree(v) > f.degree(best)) best = v;
        return best;
    };

    // A P4 Bob just opened: mirror at distance 2 with his color.
    for (const auto& comp : comps) {
        if (!is_p4(comp)) continue;
        std::vector<Vertex> col;
        for (Vertex v : comp)
            if (p.colored(v)) col.push_back(v);
        if (col.size() == 1) {
            for (Vertex u : comp)
                if (!p.colored(u) && distance(f, col[0], u) == 2) {
                    Move m = Move::color_vertex(u, p.color[col[0]]);
                    if (!is_legal(s, m)) throw StrategyError("mirror reply is illegal");
                    return m;
                }
            throw StrategyError("no mirror vertex in an opened P4");
        }
        if (col.size() == 3) {
            for (Vertex u : comp)
                if (!p.colored(u)) return color_lowest(s, u);
        }
    }

    // A component Bob just entered whose center is still open: secure it.
    for (const auto& comp : comps) {
        if (is_p4(comp) || comp.size() < 2) continue;
        bool touched = false;
        for (Vertex v : comp) touched |= p.colored(v);
        Vertex c = center_of(comp);
        if (touched && !p.colored(c)) return color_lowest(s, c);
    }

    // Quiet board: open the next untouched component at its center.
    for (const auto& comp : comps) {
        if (is_p4(comp) || comp.size() < 2) continue;
        bool touched = false;
        for (Vertex v : comp) touched |= p.colored(v);
        if (!touched) return color_lowest(s, center_of(comp));
    }

    // Leftovers: secured leaves and isolated vertices first, P4 interiors last.
    for (const auto& comp : comps) {
        if (is_p4(comp)) continue;
        for (Vertex v : comp)
            if (!p.colored(v)) return color_lowest(s, v);
    }
    for (Vertex v = 0; v < p.order(); ++v)
        if (!p.colored(v)) return color_lowest(s, v);
    throw StrategyError("no uncolored vertex remains");
}

bool verify_policy(const Policy& pol, Player side, const GameState& start) {
    std::map<std::string, bool> memo;

    auto key_of = [](const GameState& s) {
        std::ostringstream k;
        k << (s.to_move == Player::Alice ? 'A' : 'B');
        for (Color c : s.position.color) k << ' ' << c;
        for (ColorMask m : s.position.external) k << ' ' << m;
        return k.str();
    };

    auto wins_from = [&](auto&& self, const GameState& s) -> bool {
        if (auto w = terminal(s)) return wins(side, *w);
        std::string key = key_of(s);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool result;
        if (s.to_move == side) {
            Move m = pol(s);
            if (!is_legal(s, m))
                throw StrategyError("policy returned illegal move " + m.str() + " at state " +
                                    canonical_key_hex(s));
            result = self(self, apply_move(s, m));
        } else {
            auto moves = legal_moves(s);
            if (moves.empty())
                throw StrategyError("non-terminal state with no legal moves: " +
                                    canonical_key_hex(s));
            result = true;
            for (const Move& m : moves) {
                if (!self(self, apply_move(s, m))) {
                    result = false;
                    break;
                }
            }
        }
        memo.emplace(std::move(key), result);
        return result;
    };
    return wins_from(wins_from, start);
}

}  // namespace gamechrom
