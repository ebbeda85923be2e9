#pragma once

#include <optional>
#include <vector>

#include "gamechrom/position.hpp"

namespace gamechrom {

// Maximal connected subgraph of a position in which every colored vertex is a
// leaf. A colored vertex of degree d belongs to d trunks; an isolated colored
// vertex belongs to none.
struct Trunk {
    std::vector<Vertex> vertices;                  // ascending ids
    std::vector<std::pair<Vertex, Vertex>> edges;  // induced edges

    int colored_count(const Position& p) const;
    bool contains(Vertex v) const;
    int degree_within(Vertex v) const;  // degree of v restricted to trunk edges
};

std::vector<Trunk> trunks(const Position& p);

// The trunk graph with every edge deleted whose endpoints both have degree
// at most 2 inside their trunk. Keeps source vertex ids; colored vertices act
// as split points, so trunks of the reduced graph never merge through them.
struct ReducedGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Color> color;  // inherited from the source position

    std::vector<int> degrees() const;  // within the reduced graph
    std::vector<Trunk> trunks() const;

    // Edges of the given trunk whose endpoints both have degree > 2 in the
    // reduced graph (colored vertices count with their per-trunk degree of 1).
    std::vector<std::pair<Vertex, Vertex>> e_gg2(const Trunk& t) const;
};

ReducedGraph reduced_graph(const Position& p);

// Result of searching a reduced trunk for a vertex covering its E>>2 edges.
struct CoverResult {
    enum class Kind { TriviallyCovered, Covered, None };
    Kind kind;
    std::optional<Vertex> vertex;  // set iff kind == Covered

    bool exists() const { return kind != Kind::None; }
};

CoverResult covering_vertex(const ReducedGraph& r, const Trunk& t);

// Vertex of the given tree component minimizing the largest component of
// T - v; ties broken by lowest id. For components of at most 13 vertices the
// largest remaining component has at most 6 vertices.
Vertex find_splitter(const Forest& f, const std::vector<Vertex>& component);
Vertex find_splitter(const Forest& f);  // whole forest must be one tree

// Uncolored vertices with at least as many uncolored neighbors as legal
// colors remaining, in ascending id order.
std::vector<Vertex> dangerous_vertices(const Position& p, int palette);

}  // namespace gamechrom
