#include "gamechrom/forest.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gamechrom {

namespace {

// Union-find over dense ids.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Forest Forest::build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Forest f;
    f.n_ = n;
    f.adj_.resize(n);
    Dsu dsu(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ForestError(ForestError::Kind::VertexOutOfRange,
                              "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw ForestError(ForestError::Kind::SelfLoop,
                              "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ForestError(ForestError::Kind::DuplicateEdge,
                              "duplicate edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
        if (!dsu.unite(u, v))
            throw ForestError(ForestError::Kind::Cycle,
                              "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") closes a cycle");
        f.edges_.emplace_back(key.first, key.second);
        f.adj_[u].push_back(v);
        f.adj_[v].push_back(u);
    }
    std::sort(f.edges_.begin(), f.edges_.end());
    for (auto& nb : f.adj_) std::sort(nb.begin(), nb.end());
    return f;
}

int Forest::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Forest::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::vector<Vertex>> components(const Forest& f) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(f.order(), 0);
    for (Vertex s = 0; s < f.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : f.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// Farthest vertex from s with its distance, restricted to s's component.
std::pair<Vertex, int> farthest(const Forest& f, Vertex s) {
    std::vector<int> dist(f.order(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    Vertex best = s;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        if (dist[v] > dist[best]) best = v;
        for (Vertex w : f.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return {best, dist[best]};
}

}  // namespace

int component_diameter(const Forest& f, Vertex v) {
    auto [a, _] = farthest(f, v);
    return farthest(f, a).second;
}

int longest_path_length(const Forest& f) {
    if (f.order() == 0) return -1;  // sentinel for the empty forest
    int best = 0;
    std::vector<char> seen(f.order(), 0);
    for (Vertex s = 0; s < f.order(); ++s) {
        if (seen[s]) continue;
        auto [a, _] = farthest(f, s);
        auto [b, d] = farthest(f, a);
        best = std::max(best, d);
        // mark the component done
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : f.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        (void)b;
    }
    return best;
}

std::vector<Vertex> path_between(const Forest& f, Vertex x, Vertex y) {
    std::vector<Vertex> prev(f.order(), -2);
    std::vector<Vertex> queue{x};
    prev[x] = -1;
    for (std::size_t i = 0; i < queue.size() && prev[y] == -2; ++i) {
        Vertex v = queue[i];
        for (Vertex w : f.neighbors(v))
            if (prev[w] == -2) {
                prev[w] = v;
                queue.push_back(w);
            }
    }
    if (prev[y] == -2)
        throw DisconnectedError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                " are in different components");
    std::vector<Vertex> path;
    for (Vertex v = y; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int distance(const Forest& f, Vertex x, Vertex y) {
    return static_cast<int>(path_between(f, x, y).size()) - 1;
}

}  // namespace gamechrom
