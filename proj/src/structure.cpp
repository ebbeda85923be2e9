#include "gamechrom/structure.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gamechrom {

int Trunk::colored_count(const Position& p) const {
    int c = 0;
    for (Vertex v : vertices) c += p.colored(v);
    return c;
}

bool Trunk::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Trunk::degree_within(Vertex v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

namespace {

// Shared trunk computation over an explicit edge set: uncolored components
// pick up their colored neighbors as leaves; colored-colored edges form
// two-vertex trunks of their own.
std::vector<Trunk> trunks_over(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                               const std::vector<Color>& color) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Trunk> out;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || color[s] != kUncolored) continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        Trunk t;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            t.vertices.push_back(v);
            for (Vertex w : adj[v]) {
                if (color[w] != kUncolored) {
                    // colored boundary leaf; may repeat if adjacent to two
                    // component vertices, which a forest forbids
                    t.vertices.push_back(w);
                    t.edges.emplace_back(std::min(v, w), std::max(v, w));
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                    t.edges.emplace_back(std::min(v, w), std::max(v, w));
                }
            }
        }
        std::sort(t.vertices.begin(), t.vertices.end());
        t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
        std::sort(t.edges.begin(), t.edges.end());
        out.push_back(std::move(t));
    }
    for (auto [u, v] : edges)
        if (color[u] != kUncolored && color[v] != kUncolored) {
            Trunk t;
            t.vertices = {std::min(u, v), std::max(u, v)};
            t.edges = {{std::min(u, v), std::max(u, v)}};
            out.push_back(std::move(t));
        }
    std::sort(out.begin(), out.end(),
              [](const Trunk& a, const Trunk& b) { return a.vertices < b.vertices; });
    return out;
}

}  // namespace

std::vector<Trunk> trunks(const Position& p) {
    return trunks_over(p.order(), p.forest.edges(), p.color);
}

std::vector<int> ReducedGraph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<Trunk> ReducedGraph::trunks() const {
    return trunks_over(n, edges, color);
}

std::vector<std::pair<Vertex, Vertex>> ReducedGraph::e_gg2(const Trunk& t) const {
    // Colored vertices have degree 1 within their trunk, so only edges
    // between uncolored vertices of reduced degree > 2 qualify.
    auto deg = degrees();
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [u, v] : t.edges)
        if (color[u] == kUncolored && color[v] == kUncolored && deg[u] > 2 && deg[v] > 2)
            out.emplace_back(u, v);
    return out;
}

ReducedGraph reduced_graph(const Position& p) {
    // An uncolored vertex has the same degree in its trunk as in the forest;
    // a colored vertex is a leaf of every trunk it belongs to.
    ReducedGraph r;
    r.n = p.order();
    r.color = p.color;
    auto trunk_degree = [&](Vertex v) {
        return p.colored(v) ? 1 : p.forest.degree(v);
    };
    for (auto [u, v] : p.forest.edges())
        if (trunk_degree(u) > 2 || trunk_degree(v) > 2) r.edges.emplace_back(u, v);
    return r;
}

CoverResult covering_vertex(const ReducedGraph& r, const Trunk& t) {
    auto edges = r.e_gg2(t);
    if (edges.empty()) return {CoverResult::Kind::TriviallyCovered, std::nullopt};
    for (Vertex cand : {edges[0].first, edges[0].second}) {
        bool covers = true;
        for (auto [u, v] : edges)
            if (u != cand && v != cand) {
                covers = false;
                break;
            }
        if (covers) return {CoverResult::Kind::Covered, cand};
    }
    return {CoverResult::Kind::None, std::nullopt};
}

namespace {

// Size of each piece of component - v, via DFS from each neighbor of v.
int largest_piece(const Forest& f, const std::vector<char>& in_comp, Vertex v) {
    int worst = 0;
    std::vector<char> seen(f.order(), 0);
    seen[v] = 1;
    for (Vertex s : f.neighbors(v)) {
        if (!in_comp[s] || seen[s]) continue;
        int size = 0;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : f.neighbors(x))
                if (in_comp[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        worst = std::max(worst, size);
    }
    return worst;
}

}  // namespace

Vertex find_splitter(const Forest& f, const std::vector<Vertex>& component) {
    std::vector<char> in_comp(f.order(), 0);
    for (Vertex v : component) in_comp[v] = 1;
    Vertex best = component.front();
    int best_size = f.order() + 1;
    for (Vertex v : component) {  // ascending ids, so ties go to the lowest
        int size = largest_piece(f, in_comp, v);
        if (size < best_size) {
            best_size = size;
            best = v;
        }
    }
    return best;
}

Vertex find_splitter(const Forest& f) {
    auto comps = components(f);
    if (comps.size() != 1)
        throw std::invalid_argument("find_splitter without a component needs a single tree");
    return find_splitter(f, comps[0]);
}

std::vector<Vertex> dangerous_vertices(const Position& p, int palette) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (p.colored(v)) continue;
        int uncolored_nbrs = 0;
        for (Vertex w : p.forest.neighbors(v)) uncolored_nbrs += !p.colored(w);
        if (uncolored_nbrs >= p.legal_color_count(v, palette)) out.push_back(v);
    }
    return out;
}

}  // namespace gamechrom
