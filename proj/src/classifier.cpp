#include "gamechrom/classifier.hpp"

#include <algorithm>

#include "gamechrom/solver.hpp"
#include "gamechrom/structure.hpp"

namespace gamechrom {

const char* name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::TheoremCapped: return "theorem-capped";
        case Method::SolverFallback: return "solver";
    }
    return "?";
}

std::pair<bool, std::string> is_chi_g_2(const Forest& f) {
    int l = longest_path_length(f);
    if (l >= 1 && l <= 2) return {true, "1 <= l(F) <= 2"};
    if (l != 3) return {false, "l(F) outside [1,3]"};
    if (f.order() % 2 == 0) return {false, "l(F) = 3 but |V(F)| is even"};
    for (const auto& comp : components(f)) {
        if (component_diameter(f, comp.front()) != 3) continue;
        // a diameter-3 path component is exactly a P4
        if (comp.size() != 4) return {false, "diameter-3 component is not a path"};
        for (Vertex v : comp)
            if (f.degree(v) > 2) return {false, "diameter-3 component is not a path"};
    }
    return {true, "l(F) = 3, |V(F)| odd, all diameter-3 components are paths"};
}

bool b_vertex_ok(const Forest& f, Vertex b) {
    // the trunk conditions are color-independent, so color 0 stands in
    Position p = Position::uncolored(f);
    p.color[b] = 0;
    ReducedGraph r = reduced_graph(p);
    for (const Trunk& t : r.trunks()) {
        int colored = t.colored_count(p);
        if (colored == 0) {
            if (!covering_vertex(r, t).exists()) return false;
        } else {
            if (!r.e_gg2(t).empty()) return false;
        }
    }
    return true;
}

std::optional<Vertex> b_vertex_search(const Forest& f) {
    if (f.order() == 0) return std::nullopt;
    ReducedGraph r = reduced_graph(Position::uncolored(f));
    // trunks of the uncolored reduced graph are its components; count those
    // holding two disjoint E>>2 edges
    std::vector<std::pair<Vertex, Vertex>> disjoint_pair;
    int trunks_with_disjoint = 0;
    for (const Trunk& t : r.trunks()) {
        auto edges = r.e_gg2(t);
        bool found = false;
        for (std::size_t i = 0; i < edges.size() && !found; ++i)
            for (std::size_t j = i + 1; j < edges.size() && !found; ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                if (a != c && a != d && b != c && b != d) {
                    found = true;
                    if (trunks_with_disjoint == 0) disjoint_pair = {edges[i], edges[j]};
                }
            }
        trunks_with_disjoint += found;
    }
    if (trunks_with_disjoint >= 2) return std::nullopt;
    std::vector<Vertex> candidates;
    if (trunks_with_disjoint == 0) {
        candidates.resize(f.order());
        for (Vertex v = 0; v < f.order(); ++v) candidates[v] = v;
    } else {
        // b must lie on the path between the disjoint edges (endpoints
        // included); the path is taken in the original forest
        auto [e1, e2] = std::pair{disjoint_pair[0], disjoint_pair[1]};
        std::vector<Vertex> ends1{e1.first, e1.second}, ends2{e2.first, e2.second};
        std::vector<char> on_path(f.order(), 0);
        for (Vertex a : ends1)
            for (Vertex b : ends2)
                for (Vertex v : path_between(f, a, b)) on_path[v] = 1;
        for (Vertex v = 0; v < f.order(); ++v)
            if (on_path[v]) candidates.push_back(v);
    }
    for (Vertex v : candidates)
        if (b_vertex_ok(f, v)) return v;
    return std::nullopt;
}

Classification classify_no_deg3(const Forest& f) {
    for (Vertex v = 0; v < f.order(); ++v)
        if (f.degree(v) == 3)
            throw ClassifierError("classify_no_deg3 requires a forest without degree-3 vertices");
    if (f.order() == 0) return {0, Method::ClosedForm, "empty forest", {}};
    if (f.edge_count() == 0) return {1, Method::ClosedForm, "edgeless forest", {}};
    if (auto [is2, rule] = is_chi_g_2(f); is2)
        return {2, Method::ClosedForm, "chi_g = 2 characterization: " + rule, {}};
    if (auto b = b_vertex_search(f))
        return {3, Method::ClosedForm, "degree-3-free dichotomy: b-vertex exists", b};
    return {4, Method::ClosedForm, "degree-3-free dichotomy: no b-vertex", {}};
}

Classification classify(const Forest& f) {
    if (f.order() == 0) return {0, Method::ClosedForm, "empty forest", {}};
    if (f.edge_count() == 0) return {1, Method::ClosedForm, "edgeless forest", {}};
    if (auto [is2, rule] = is_chi_g_2(f); is2)
        return {2, Method::ClosedForm, "chi_g = 2 characterization: " + rule, {}};
    bool has_deg3 = false;
    for (Vertex v = 0; v < f.order() && !has_deg3; ++v) has_deg3 = f.degree(v) == 3;
    if (!has_deg3) return classify_no_deg3(f);
    // b-vertex existence certifies <= 3 but never forces 4 here
    if (auto b = b_vertex_search(f))
        return {3, Method::ClosedForm, "b-vertex sufficient condition", b};
    if (f.order() <= 13)
        return {3, Method::ClosedForm, "order <= 13 bound (2 already excluded)", {}};
    ChiG result = game_chromatic_number(f);
    return {result.value, result.theorem_capped ? Method::TheoremCapped : Method::SolverFallback,
            "exact solve", {}};
}

}  // namespace gamechrom
