#pragma once

// Internal helpers shared by the circuit lifts.

#include "quartic/plane_graph.hpp"
#include "quartic/trail.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace quartic::detail {

using EdgeKey = std::pair<VertexId, VertexId>;
inline EdgeKey ekey(VertexId u, VertexId v) { return {std::min(u, v), std::max(u, v)}; }

// Maximal kept runs of a closed trail after deleting the edges in drop,
// cyclic order preserved; consecutive dropped edges collapse into one gap.
// The gap after arcs[j] leads into arcs[(j+1) % t].
std::vector<std::vector<VertexId>> arcs_without(const Trail& c, const std::set<EdgeKey>& drop);

// Maps t through the canonical-position correspondence of two isomorphic
// embedded graphs (throws PreconditionViolated when codes differ).
Trail transport(const PlaneGraph& from, const Trail& t, const PlaneGraph& to);

// Chains every piece exactly once (either direction) into closed walks,
// piece 0 pinned forward; returns the first whose trail verifies at k=4.
// budget counts search nodes; exhaustion stops the search empty-handed.
std::optional<Trail> assemble_pieces(const PlaneGraph& g,
                                     const std::vector<std::vector<VertexId>>& pieces,
                                     long long* budget);

}  // namespace quartic::detail
