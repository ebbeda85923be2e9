#include "gamechrom/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gamechrom {

namespace {

std::string encode_rooted(const Forest& f, Vertex v, Vertex parent) {
    std::vector<std::string> child_codes;
    for (Vertex w : f.neighbors(v))
        if (w != parent) child_codes.push_back(encode_rooted(f, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// Centroids of the component containing any vertex of comp (1 or 2 vertices).
std::vector<Vertex> centroids(const Forest& f, const std::vector<Vertex>& comp) {
    int total = static_cast<int>(comp.size());
    std::vector<int> size(f.order(), 1), max_piece(f.order(), 0);
    // iterative post-order from comp.front()
    std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent)
    std::vector<std::pair<Vertex, Vertex>> stack{{comp.front(), -1}};
    while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        order.emplace_back(v, parent);
        for (Vertex w : f.neighbors(v))
            if (w != parent) stack.emplace_back(w, v);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, parent] = *it;
        if (parent >= 0) {
            size[parent] += size[v];
            max_piece[parent] = std::max(max_piece[parent], size[v]);
        }
    }
    std::vector<Vertex> out;
    int best = total + 1;
    for (Vertex v : comp) {
        int worst = std::max(max_piece[v], total - size[v]);
        if (worst < best) {
            best = worst;
            out.assign(1, v);
        } else if (worst == best) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string component_canonical(const Forest& f, const std::vector<Vertex>& comp) {
    std::string best;
    for (Vertex c : centroids(f, comp)) {
        std::string code = encode_rooted(f, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::string canonical_form(const Forest& f) {
    std::vector<std::string> codes;
    for (const auto& comp : components(f)) codes.push_back(component_canonical(f, comp));
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes) out += c;
    return out;
}

Forest forest_from_canonical(const std::string& canon) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int next_id = 0;
    std::vector<Vertex> path;  // ancestor stack
    for (char ch : canon) {
        if (ch == '(') {
            int id = next_id++;
            if (!path.empty()) edges.emplace_back(path.back(), id);
            path.push_back(id);
        } else if (ch == ')') {
            if (path.empty()) throw std::invalid_argument("unbalanced canonical form");
            path.pop_back();
        } else {
            throw std::invalid_argument("canonical form may only contain parentheses");
        }
    }
    if (!path.empty()) throw std::invalid_argument("unbalanced canonical form");
    return Forest::build(next_id, edges);
}

std::vector<Forest> trees_of_order(int n) {
    if (n < 1) throw std::invalid_argument("trees_of_order needs n >= 1");
    std::map<std::string, int> canon_set;
    if (n == 1) {
        canon_set.emplace("()", 0);
    } else {
        // level-sequence successor generation of rooted trees
        // (Beyer-Hedetniemi); the root has level 0 and the initial sequence
        // is the path 0,1,...,n-1
        std::vector<int> level(n);
        for (int i = 0; i < n; ++i) level[i] = i;
        while (true) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int i = 1; i < n; ++i) {
                int parent = i - 1;
                while (level[parent] != level[i] - 1) --parent;
                edges.emplace_back(parent, i);
            }
            Forest f = Forest::build(n, edges);
            std::vector<Vertex> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            canon_set.emplace(component_canonical(f, all), 0);

            // successor: shift the tail after the last level > 1 under its
            // most recent shallower ancestor
            int p = n - 1;
            while (p > 0 && level[p] <= 1) --p;
            if (p == 0) break;  // reached the star
            int q = p - 1;
            while (level[q] != level[p] - 1) --q;
            for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
        }
    }
    std::vector<Forest> out;
    out.reserve(canon_set.size());
    for (const auto& [canon, _] : canon_set) out.push_back(forest_from_canonical(canon));
    return out;
}

std::vector<Forest> forests_of_order(int n) {
    if (n < 0) throw std::invalid_argument("forests_of_order needs n >= 0");
    if (n == 0) return {Forest::build(0, {})};
    // component choices ordered by (size descending, canonical ascending);
    // a forest is a non-decreasing rank sequence with sizes summing to n
    struct Part {
        int size;
        std::string canon;
    };
    std::vector<Part> parts;
    for (int s = n; s >= 1; --s)
        for (const Forest& t : trees_of_order(s)) parts.push_back({s, canonical_form(t)});
    std::vector<std::string> results;
    std::vector<std::string> chosen;
    auto rec = [&](auto&& self, int left, std::size_t min_rank) -> void {
        if (left == 0) {
            auto sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            std::string canon;
            for (const auto& c : sorted) canon += c;
            results.push_back(std::move(canon));
            return;
        }
        for (std::size_t r = min_rank; r < parts.size(); ++r) {
            if (parts[r].size > left) continue;
            chosen.push_back(parts[r].canon);
            self(self, left - parts[r].size, r);
            chosen.pop_back();
        }
    };
    rec(rec, n, 0);
    std::sort(results.begin(), results.end());
    std::vector<Forest> out;
    out.reserve(results.size());
    for (const auto& canon : results) out.push_back(forest_from_canonical(canon));
    return out;
}

std::vector<Forest> trees_up_to(int lo, int hi) {
    std::vector<Forest> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& t : trees_of_order(n)) out.push_back(std::move(t));
    return out;
}

std::vector<Forest> forests_up_to(int lo, int hi) {
    std::vector<Forest> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& f : forests_of_order(n)) out.push_back(std::move(f));
    return out;
}

}  // namespace gamechrom
