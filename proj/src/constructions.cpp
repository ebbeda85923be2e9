#include "gamechrom/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gamechrom/classifier.hpp"
#include "gamechrom/structure.hpp"
#include "gamechrom/textio.hpp"

#ifndef GAMECHROM_DATA_DIR
#define GAMECHROM_DATA_DIR "data"
#endif

namespace gamechrom {

std::string data_dir() {
    if (const char* env = std::getenv("GAMECHROM_DATA")) return env;
    return GAMECHROM_DATA_DIR;
}

namespace {

Position load_data(const std::string& name) {
    return load_position(data_dir() + "/constructions/" + name);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConstructionError("construction validation failed: " + what);
}

}  // namespace

Forest path_graph(int n) {
    require(n >= 1, "path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Forest::build(n, edges);
}

Forest star(int leaves) {
    require(leaves >= 0, "star needs a nonnegative leaf count");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Forest::build(leaves + 1, edges);
}

Forest caterpillar(const std::vector<int>& spine_degrees) {
    int spine = static_cast<int>(spine_degrees.size());
    require(spine >= 1, "caterpillar needs a spine");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int next = spine;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < spine; ++i) {
        int spine_nbrs = (i > 0) + (i + 1 < spine);
        require(spine_degrees[i] >= spine_nbrs, "spine degree below its path degree");
        for (int k = spine_nbrs; k < spine_degrees[i]; ++k) edges.emplace_back(i, next++);
    }
    return Forest::build(next, edges);
}

Forest spider(int legs, int leg_length) {
    require(legs >= 0 && leg_length >= 1, "spider needs positive leg length");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int i = 0; i < leg_length; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Forest::build(next, edges);
}

Forest p4_plus() {
    Forest f = load_data("p4plus.forest").forest;
    require(f.order() == 5, "P4+ has 5 vertices");
    require(longest_path_length(f) == 3, "P4+ has longest path 3");
    std::vector<int> degs;
    for (Vertex v = 0; v < 5; ++v) degs.push_back(f.degree(v));
    std::sort(degs.begin(), degs.end());
    require(degs == std::vector<int>({1, 1, 1, 2, 3}), "P4+ degree multiset");
    return f;
}

Vertex fig3_vertex(const std::string& label) {
    static const std::map<std::string, Vertex> ids = {
        {"x1", 0},      {"x2", 1},      {"x1_leaf", 2}, {"x1'", 3},
        {"x1''", 4},    {"x2_leaf", 5}, {"x2'", 6},     {"x2''", 7},
    };
    auto it = ids.find(label);
    if (it == ids.end()) throw ConstructionError("unknown fig3 vertex label: " + label);
    return it->second;
}

Position fig3_position(std::optional<Fig3Site> extra_leaf_site) {
    Position base = load_data("fig3.position");
    require(base.order() == 8, "fig3 has 8 vertices");
    require(base.forest.has_edge(0, 1), "x1 adjacent x2");
    require(base.forest.degree(0) == 4 && base.forest.degree(1) == 4, "x1, x2 degree 4");
    require(base.color[2] == 0 && base.color[5] == 0, "both alpha leaves colored alike");
    require(base.color[0] == kUncolored && base.color[1] == kUncolored, "x1, x2 uncolored");
    if (!extra_leaf_site) return base;
    Vertex site;
    switch (*extra_leaf_site) {
        case Fig3Site::X1Prime: site = 3; break;
        case Fig3Site::X1DoublePrime: site = 4; break;
        case Fig3Site::X2Prime: site = 6; break;
        case Fig3Site::X2DoublePrime: site = 7; break;
        default: throw ConstructionError("invalid fig3 leaf site");
    }
    auto edges = base.forest.edges();
    edges.emplace_back(site, 8);
    Position p = Position::uncolored(Forest::build(9, edges));
    p.color = base.color;
    p.color.push_back(1);  // beta
    return p;
}

Forest t_prime() {
    Forest f = load_data("tprime.forest").forest;
    require(f.order() == 14, "T' has 14 vertices");
    for (Vertex v : {0, 1, 2, 3}) require(f.degree(v) == 4, "spine vertex of degree 4");
    for (Vertex v = 0; v < 14; ++v) require(f.degree(v) != 3, "T' has no degree-3 vertex");
    ReducedGraph r = reduced_graph(Position::uncolored(f));
    auto ts = r.trunks();
    require(ts.size() == 1, "T' reduces to one trunk");
    require(r.e_gg2(ts[0]) ==
                std::vector<std::pair<Vertex, Vertex>>({{0, 1}, {1, 2}, {2, 3}}),
            "E>>2 is exactly the spine");
    require(!b_vertex_search(f).has_value(), "T' admits no b-vertex");
    return f;
}

Forest twelve_vertex_example() {
    Forest f = load_data("twelve.forest").forest;
    require(f.order() == 12, "12-vertex example");
    for (Vertex v : {0, 1, 2, 3, 4}) require(f.degree(v) == 3, "spine vertex of degree 3");
    return f;
}

Forest glue_at_vertex(const Forest& g, Vertex u, int copies) {
    require(copies >= 1, "glue needs at least one copy");
    require(u >= 0 && u < g.order(), "glue vertex out of range");
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    int n = g.order();
    for (int c = 1; c < copies; ++c) {
        int base = n;
        auto remap = [&](Vertex v) { return v == u ? u : base + (v < u ? v : v - 1); };
        for (auto [a, b] : g.edges()) edges.emplace_back(remap(a), remap(b));
        n += g.order() - 1;
    }
    Forest out = Forest::build(n, edges);
    require(out.order() == copies * g.order() - (copies - 1), "glued order");
    require(out.degree(u) == copies * g.degree(u), "glued degree at the shared vertex");
    return out;
}

namespace {

void require_colored_are_leaves(const Position& p, const std::string& what) {
    for (Vertex v = 0; v < p.order(); ++v)
        if (p.colored(v)) require(p.forest.degree(v) == 1, what + ": colored vertices are leaves");
}

}  // namespace

Deg3GadgetSuite deg3_gadget_suite() {
    Deg3GadgetSuite s;

    s.t1 = load_data("t1.position");
    require(s.t1.order() == 7, "t1 order");
    require(s.t1.color[0] != kUncolored && s.t1.color[4] != kUncolored, "t1 ends colored");
    // some third color is available for x and matches any colored neighbor
    // of the killing leaves (they have none here)
    ColorMask uv = (ColorMask(1) << s.t1.color[0]) | (ColorMask(1) << s.t1.color[4]);
    require((full_mask(3) & ~uv & ~s.t1.forbidden(2)) != 0, "t1: gamma available for x");
    for (Vertex leaf : {5, 6})
        for (Vertex w : s.t1.forest.neighbors(leaf))
            require(!s.t1.colored(w), "t1: killing leaves see no colored vertex");

    s.t3 = load_data("t3.position");
    require(s.t3.order() == 20, "t3 order");
    require(distance(s.t3.forest, 0, 9) == 9, "t3: u,v-path of length 9");
    require(s.t3.color[0] == s.t3.color[11] && s.t3.color[0] == s.t3.color[13],
            "t3: c(u)=c(w)=c(x)");
    require(s.t3.color[9] == s.t3.color[17] && s.t3.color[9] == s.t3.color[19],
            "t3: c(v)=c(y)=c(z)");
    require(s.t3.color[0] != s.t3.color[9], "t3: c(u) != c(v)");
    require_colored_are_leaves(s.t3, "t3");
    {
        // the mirror involution must preserve edges and swap the two colors
        static const Vertex mirror[20] = {9, 8, 7, 6, 5, 4,  3,  2,  1,  0,
                                          18, 19, 16, 17, 15, 14, 12, 13, 10, 11};
        for (auto [a, b] : s.t3.forest.edges())
            require(s.t3.forest.has_edge(mirror[a], mirror[b]), "t3: mirror symmetry");
        for (Vertex v = 0; v < 20; ++v)
            if (s.t3.colored(v))
                require(s.t3.color[mirror[v]] == 1 - s.t3.color[v], "t3: mirror swaps colors");
    }

    s.t4 = load_data("t4.position");
    require(s.t4.forest == s.t3.forest, "t4 shares t3's tree");
    require(s.t4.color[0] == s.t4.color[11] && s.t4.color[0] == s.t4.color[13],
            "t4: c(u)=c(w)=c(x)");
    require(s.t4.color[9] != kUncolored && s.t4.color[9] != s.t4.color[0], "t4: c(v) differs");
    require(s.t4.color[17] == kUncolored && s.t4.color[19] == kUncolored,
            "t4: right pendants uncolored");

    s.t5 = load_data("t5.position");
    require(s.t5.order() == 32, "t5 has 32 vertices");
    require(s.t5.forest.max_degree() == 3, "t5 maximum degree 3");
    require(s.t5.forest.degree(0) == 1 && s.t5.forest.degree(15) == 1, "t5: u and v are leaves");
    require(s.t5.color[0] != kUncolored && s.t5.color[15] != kUncolored &&
                s.t5.color[0] != s.t5.color[15],
            "t5: differently colored endpoints");
    require_colored_are_leaves(s.t5, "t5");
    s.t5_u = 0;
    s.t5_v = 15;

    s.h = load_data("h.forest").forest;
    require(s.h.order() == 8, "h order");
    require(s.h.has_edge(1, 2) && s.h.degree(1) == 4 && s.h.degree(2) == 4,
            "h: adjacent degree-4 pair");
    require(s.h.degree(0) == 1, "h: glue vertex is a leaf");

    s.t_double_prime = glue_at_vertex(s.h, 0, 3);
    require(s.t_double_prime.order() == 22, "t'' order");
    require(s.t_double_prime.degree(0) == 3, "t'' center degree 3");

    s.t = glue_at_vertex(s.t5.forest, s.t5_u, 3);
    require(s.t.order() == 94, "t has 3*32-2 = 94 vertices");
    require(s.t.max_degree() == 3, "t maximum degree 3");

    return s;
}

Position surrounded_p4_trap() {
    // P4 = 0-1-2-3, pendant leaves 4..7 all colored alpha
    std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {1, 2}, {2, 3},
                                                    {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    Position p = Position::uncolored(Forest::build(8, edges));
    for (Vertex v : {4, 5, 6, 7}) p.color[v] = 0;
    require(p.order() % 2 == 0, "trap host has even order");
    return p;
}

}  // namespace gamechrom
