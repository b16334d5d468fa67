#pragma once

#include "quartic/plane_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

// A fixed small pattern with named roles; role index is the vertex id in g.
struct PatternGraph {
    PlaneGraph g;
    std::vector<std::string> role;
};

// Roles x a b c d y = ids 0..5. Degree 3 at x and y; 11 edges; the four
// non-adjacent pairs are xy, xd, by, ac.
const PatternGraph& f6_pattern();
// Roles x a b c d e y = ids 0..6; 13 edges; degree 3 at x and y.
const PatternGraph& g7_pattern();
// f6 plus the edge xy; antipodal pairs (x,d), (a,c), (b,y).
const PatternGraph& octahedron_pattern();

// Abstract (not necessarily induced) subgraph embedding of the 6-vertex
// pattern; returns role -> vertex, roles in order x a b c d y.
std::optional<std::vector<VertexId>> find_f6(const PlaneGraph& g);
// Reference matcher: all 6-subsets times all placements.
std::optional<std::vector<VertexId>> find_f6_naive(const PlaneGraph& g);

bool is_octahedron(const PlaneGraph& g);

enum class CKind { F6minusE, G7, G7minusE, K4 };

// A piece sitting at the entry cut of a side: its induced subgraph equals
// the pattern, entry roles land on the given cut ends, and the remaining
// degree deficit is exactly the exit edges listed.
struct CMember {
    CKind kind;
    std::pair<int, int> removed{-1, -1};          // removed edge as role pair
    std::vector<VertexId> map;                    // role -> vertex of A
    std::vector<std::pair<VertexId, VertexId>> exit_edges;  // (member vtx, outside vtx)
};

std::optional<CMember> c_subgraph_at_cut(const PlaneGraph& a, VertexId x, VertexId y);

}  // namespace quartic
