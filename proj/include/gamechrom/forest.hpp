#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamechrom {

using Vertex = int;

// Construction failure for graphs that are not simple acyclic forests.
struct ForestError : std::runtime_error {
    enum class Kind { Cycle, DuplicateEdge, VertexOutOfRange, SelfLoop };
    Kind kind;
    ForestError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Immutable undirected acyclic simple graph over dense vertex ids 0..n-1.
class Forest {
public:
    Forest() = default;

    // Validates acyclicity, simplicity and id range; throws ForestError.
    static Forest build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    bool operator==(const Forest& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Connected components as ascending-id vertex lists, ascending by lowest id.
std::vector<std::vector<Vertex>> components(const Forest& f);

// Length in edges of the longest path; 0 for edgeless nonempty graphs,
// -1 for the empty graph.
int longest_path_length(const Forest& f);

// Diameter in edges of the component containing v.
int component_diameter(const Forest& f, Vertex v);

struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hop count between x and y; throws DisconnectedError if in different components.
int distance(const Forest& f, Vertex x, Vertex y);

// The unique x,y-path as a vertex sequence (inclusive); throws DisconnectedError.
std::vector<Vertex> path_between(const Forest& f, Vertex x, Vertex y);

}  // namespace gamechrom
