#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/errors.hpp"

namespace quartic {

using VertexId = int;

// Rotation data under construction: rot[v] lists the neighbors of v in
// clockwise order. This is the mutable form all surgery works on; build()
// freezes it into a validated PlaneGraph.
using Rot = std::vector<std::vector<VertexId>>;

// A dart is one of the two directed halves of an edge, identified by its
// (tail, slot) position; slot indexes the tail's rotation.
struct Dart {
    VertexId tail = -1;
    int slot = -1;
    bool operator==(const Dart&) const = default;
};

// Immutable embedded multigraph-free graph: simple, loopless, with a plane
// rotation system (validated per component via Euler's formula).
// Isolated vertices are allowed; quartic-validating entry points reject them.
struct PlaneGraph {
    Rot rot;                                   // rot[v]: clockwise neighbors
    int m = 0;                                 // edge count
    std::vector<std::pair<VertexId, VertexId>> edges;  // id -> (u,v), u < v
    std::vector<std::vector<int>> eid;         // eid[u][v] = edge id or -1
    std::vector<std::vector<int>> faces;       // face walks as dart ids
    std::vector<int> dart_face;                // dart id -> face index

    int n() const { return (int)rot.size(); }
    int deg(VertexId v) const { return (int)rot[v].size(); }
    bool has_edge(VertexId u, VertexId v) const { return eid[u][v] >= 0; }
    int edge_id(VertexId u, VertexId v) const { return eid[u][v]; }

    // dart ids: dense over the flattened rotation
    int dart_id(const Dart& d) const { return dart_base_[d.tail] + d.slot; }
    Dart dart(int id) const;
    int dart_count() const { return 2 * m; }
    VertexId head(const Dart& d) const { return rot[d.tail][d.slot]; }
    Dart twin(const Dart& d) const;
    // next dart clockwise around the same tail
    Dart rot_next(const Dart& d) const { return {d.tail, (d.slot + 1) % deg(d.tail)}; }
    Dart rot_prev(const Dart& d) const { return {d.tail, (d.slot + deg(d.tail) - 1) % deg(d.tail)}; }
    // next dart of the face walk containing d
    Dart face_next(const Dart& d) const { return rot_next(twin(d)); }

    int slot_of(VertexId v, VertexId nbr) const;  // -1 if absent
    bool is_quartic() const;
    std::vector<int> component_of() const;  // vertex -> component index
    int component_count() const;            // isolated vertices count as components
    bool connected_ignoring_isolated() const;

    std::vector<int> dart_base_;  // prefix offsets into the flattened rotation
};

// Validates mutual consistency, simplicity and planarity (Euler per
// component) and traces faces. Throws InconsistentRotation / NotSimple /
// NotPlanar.
PlaneGraph build(const Rot& rot);

// -------- rotation surgery helpers (operate on Rot, then re-build) --------

// Removes one undirected edge; throws PatternAbsent if missing.
void rot_remove_edge(Rot& r, VertexId u, VertexId v);
// Inserts w into u's rotation right after the occurrence of `after`.
void rot_insert_after(Rot& r, VertexId u, VertexId after, VertexId w);
// Replaces the occurrence of `old_nbr` in u's rotation by `new_nbr`, in place.
void rot_replace(Rot& r, VertexId u, VertexId old_nbr, VertexId new_nbr);

// Relabels vertices: new_of[v] = new id, or -1 to drop (must be isolated).
// Returns the relabeled rotation; new ids must form a dense range.
Rot rot_relabel(const Rot& r, const std::vector<int>& new_of);

// Drops isolated vertices, compacting ids. Returns (rot, old_of_new map).
std::pair<Rot, std::vector<VertexId>> rot_compact(const Rot& r);

// -------- the spec'd vertex operations --------

struct SplitResult {
    PlaneGraph g;
    std::vector<VertexId> pendants;  // in v's former rotation order
};

// Replaces v by deg(v) pendant vertices, each keeping v's slot at the far
// endpoint. v's id becomes isolated (degree 0); pendants get fresh ids.
SplitResult split_vertex(const PlaneGraph& g, VertexId v);

// Inverse of split_vertex: merges a group of pendant (degree-1) vertices
// lying on a common face into one new vertex. Throws NotCoFacial.
// Returns the new graph and the merged vertex id.
std::pair<PlaneGraph, VertexId> identify_pendants(const PlaneGraph& g,
                                                  const std::vector<VertexId>& pendants);

struct CompletionResult {
    PlaneGraph g;
    VertexId z;                       // the new apex
    std::vector<VertexId> cycle;      // the four pendants in face order
};

// Adds an apex z adjacent to all four pendants plus the 4-cycle on them in
// face order (8 new edges). Requires exactly four pairwise non-adjacent
// co-facial pendants; every other vertex quartic.
CompletionResult complete_into_quartic(const PlaneGraph& g);

} // namespace quartic
