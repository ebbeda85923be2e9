#pragma once

#include <optional>
#include <string>

#include "gamechrom/forest.hpp"

namespace gamechrom {

enum class Method { ClosedForm, TheoremCapped, SolverFallback };

const char* name(Method m);

struct Classification {
    int value = 0;
    Method method = Method::ClosedForm;
    std::string rule;                // which criterion fired
    std::optional<Vertex> b_vertex;  // set when a b-vertex argument decided it
};

// chi_g(F) = 2 iff 1 <= l(F) <= 2, or l(F) = 3 with |V(F)| odd and every
// diameter-3 component a path. Returns the flag plus the clause that decided.
std::pair<bool, std::string> is_chi_g_2(const Forest& f);

// A vertex b whose coloring makes every reduced trunk safe (no E>>2 edge
// next to its one colored vertex, or a covering vertex when uncolored).
// Candidates are narrowed first: no trunk of the reduced graph with two
// disjoint E>>2 edges means any vertex works, two such trunks mean none, one
// restricts b to the path between a disjoint pair. Every returned vertex is
// verified against the exact trunk conditions.
std::optional<Vertex> b_vertex_search(const Forest& f);

// Exact per-candidate test behind b_vertex_search, exposed for the
// brute-force cross-check. The hypothetical color is irrelevant.
bool b_vertex_ok(const Forest& f, Vertex b);

struct ClassifierError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact classification for forests without vertices of degree exactly 3:
// the 3-vs-4 split is decided by b_vertex_search alone. Throws
// ClassifierError if a degree-3 vertex is present.
Classification classify_no_deg3(const Forest& f);

// Full dispatch: closed forms where the theorems apply, solver fallback for
// forests with degree-3 vertices above 13 vertices failing the b-vertex
// condition.
Classification classify(const Forest& f);

}  // namespace gamechrom
