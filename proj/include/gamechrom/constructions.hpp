#pragma once

#include <optional>
#include <string>

#include "gamechrom/position.hpp"

namespace gamechrom {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directory holding the checked-in construction data files. Defaults to the
// compiled-in source path; GAMECHROM_DATA overrides it.
std::string data_dir();

Forest path_graph(int n);
Forest star(int leaves);  // K_{1,leaves}
// Path of spine vertices, the i-th carrying spine_degrees[i] pendant leaves.
Forest caterpillar(const std::vector<int>& spine_degrees);
Forest spider(int legs, int leg_length);

// P4 with one extra pendant on its third vertex: x1-x2-x3-x4 plus x3'.
Forest p4_plus();

// Attachment points for the optional beta leaf of the Figure 3 gadget.
enum class Fig3Site { X1Prime, X1DoublePrime, X2Prime, X2DoublePrime };

// Adjacent x1, x2 of degree 4, each with one alpha-colored leaf and two
// uncolored leaves; optionally one extra leaf colored beta at the given site.
Position fig3_position(std::optional<Fig3Site> extra_leaf_site);
Vertex fig3_vertex(const std::string& label);  // "x1", "x1'", "x1''", ...

// The 14-vertex extremal tree: spine x1-x2-x3-x4, every spine vertex of
// degree 4 (three leaves on the ends, two on the middle vertices).
Forest t_prime();

// P5 with leaves added until every spine vertex has degree 3 (12 vertices).
Forest twelve_vertex_example();

// k copies of g identified at u; |V| = k|V(g)| - (k-1), the glued vertex
// gets k times its degree. Copy 1 keeps its ids, later copies append.
Forest glue_at_vertex(const Forest& g, Vertex u, int copies);

// Gadget transcriptions for the maximum-degree-3 construction. The figure
// transcriptions live in data files; pendant placement not pinned by the
// prose is provisional there.
struct Deg3GadgetSuite {
    Position t1;  // double-danger trap, Bob to move
    Position t3;  // symmetric length-9 spine with colored pendants
    Position t4;  // t3 with the right-hand pendant colors removed
    Position t5;  // 32-vertex gadget, endpoints u and v colored
    Forest h;             // building block of t_double_prime
    Forest t_double_prime;
    Forest t;             // three copies of t5 glued at u; 94 vertices
    Vertex t5_u = 0, t5_v = 0;
};

Deg3GadgetSuite deg3_gadget_suite();

// Uncolored P4 in which every vertex has a pendant leaf colored alpha; the
// side to move must open the P4 and loses within one Bob move.
Position surrounded_p4_trap();

}  // namespace gamechrom
