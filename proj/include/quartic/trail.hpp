#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/plane_graph.hpp"

namespace quartic {

// A trail as a vertex sequence v0 v1 ... vL (consecutive pairs are edges,
// no edge repeats). For closed trails the sequence ends where it starts:
// verts.front() == verts.back(), and length() counts the closing edge once.
struct Trail {
    std::vector<VertexId> verts;
    bool closed = false;

    int length() const { return (int)verts.size() - 1; }
    bool operator==(const Trail&) const = default;
};

Trail reversed(const Trail& t);
// Rotates a closed trail so it starts at the k-th edge of the original.
Trail rotated(const Trail& t, int k);
std::string to_string(const Trail& t);

// Checks adjacency of consecutive vertices and that no edge repeats
// (diagnostic on failure). Does not require covering all of g.
std::optional<std::string> trail_defect(const PlaneGraph& g, const Trail& t);

// True iff some run of at most k consecutive edges of t forms a cycle
// (equal endpoints, distinct interior). Literal definition; used as the
// reference checker.
bool has_short_subcycle(const PlaneGraph& g, const Trail& t, int k);

// Window form of the k=4 check: for all i, v_i != v_{i+3} and v_i != v_{i+4}
// (wrapping only when closed). Equivalent to has_short_subcycle(..., 4) on
// edge-repeat-free trails in simple graphs.
bool window_check_4(const Trail& t);

// Edge ids traversed by t, in order.
std::vector<int> trail_edge_ids(const PlaneGraph& g, const Trail& t);

} // namespace quartic
