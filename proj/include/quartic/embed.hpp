#pragma once

#include "quartic/plane_graph.hpp"

#include <optional>
#include <vector>

namespace quartic {

// Abstract adjacency, neighbor order carries no meaning.
using Adj = std::vector<std::vector<VertexId>>;

Adj adj_from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

// Computes a plane rotation system, or nullopt when the graph is nonplanar.
// Per-block path-addition embedding, blocks glued at cutvertices.
std::optional<Rot> planar_rotation(const Adj& adj);

// planar_rotation + build; throws NotPlanar.
PlaneGraph embed(const Adj& adj);

}  // namespace quartic
