#pragma once

#include "quartic/plane_graph.hpp"

#include <optional>
#include <vector>

namespace quartic {

// Two-vertex-cut taxonomy by half-edge distribution into the sides.
// (a): both cut vertices send 2 half-edges into each side.
// (b): both send 3 into the same side.
// (c): one sends 3 into A, the other 3 into B.
// (d): the remaining distributions; in quartic graphs this is exactly the
//      case where the cut vertices are adjacent (parity forces it).
// (e): a single cutvertex, which always splits 2/2.
enum class CutType { a, b, c, d, e };

struct TwoVertexCut {
    VertexId x, y;
    CutType type;
    std::vector<VertexId> side_a, side_b;  // vertex sets, both contain x and y
};

struct TwoEdgeCut {
    int e1, e2;                            // edge ids
    std::vector<VertexId> side_a, side_b;  // vertex partition; cut edges cross
};

struct CutReport {
    std::vector<VertexId> cutvertices;
    std::vector<TwoVertexCut> two_vertex_cuts;  // minimal cuts only
    std::vector<TwoEdgeCut> two_edge_cuts;      // minimal cuts only
    int edge_connectivity = 0;
};

CutReport connectivity_report(const PlaneGraph& g);

struct ClassifiedCut {
    CutType type;
    std::vector<VertexId> side_a, side_b;
};

// {x,y} must be a minimal 2-vertex-cut, else NotACut.
ClassifiedCut classify_2cut(const PlaneGraph& g, VertexId x, VertexId y);

bool is_cut_vertex(const PlaneGraph& g, VertexId x);
bool is_cut_pair(const PlaneGraph& g, VertexId x, VertexId y);

int edge_connectivity(const PlaneGraph& g);
std::vector<std::pair<int, int>> find_two_edge_cuts(const PlaneGraph& g);
std::optional<std::pair<int, int>> any_two_edge_cut(const PlaneGraph& g);

bool is_3connected(const PlaneGraph& g);

// Induced sub-plane-graph on a vertex subset, ids compacted in the order
// given by `side`.  Rotations keep their cyclic order; for every deleted
// crossing edge a stub records where in the surviving rotation it sat, so a
// replacement neighbor can be spliced into the same position later.
struct InducedSide {
    PlaneGraph g;
    std::vector<VertexId> old_of_new;
    std::vector<int> new_of_old;  // -1 when the old vertex is not in the side
    struct Stub {
        VertexId v;      // new id
        int slot;        // insertion index into g.rot[v] restoring the position
        VertexId far;    // old id of the removed far endpoint
    };
    std::vector<Stub> stubs;
};

InducedSide induce_side(const PlaneGraph& g, const std::vector<VertexId>& side);

}  // namespace quartic
