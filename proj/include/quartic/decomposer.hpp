#pragma once

#include "quartic/plane_graph.hpp"
#include "quartic/trail.hpp"

#include <string>
#include <vector>

namespace quartic {

using LengthSequence = std::vector<int>;

struct UnderlinedPattern {
    std::vector<int> lengths;
    std::vector<bool> underlined;  // parallel to lengths
};

// Ordered edge-disjoint paths laid end to end; path i has L[i] edges, the
// last vertex of each path is the first of the next, and the concatenation
// is an Eulerian circuit through v.
struct PathDecomposition {
    std::vector<Trail> paths;
    VertexId v;
};

// True iff L arises from the pattern by repeatedly replacing one
// non-underlined length with two or more smaller lengths of equal sum.
bool is_subdivision(const LengthSequence& l, const UnderlinedPattern& pattern);

// Slices a verified good circuit at the prefix sums of L starting from v.
// All parts must be <= 4 so every slice is a path.
PathDecomposition cut_circuit(const PlaneGraph& g, const Trail& c, const LengthSequence& l,
                              VertexId v);

// Decomposition of the six-vertex obstruction in its role labels
// (x=0,a=1,b=2,c=3,d=4,y=5), entering at x and leaving at y. Sum 11.
PathDecomposition f6_decomposition(const LengthSequence& l);

// g must be the octahedron; sum 12. Works for any start vertex by symmetry.
PathDecomposition octahedron_decomposition(const PlaneGraph& g, const LengthSequence& l,
                                           VertexId v);

// Total decomposer: cut a good circuit when one exists, octahedron special
// case, obstruction-containing graphs via gadget replacement and splicing.
PathDecomposition p_decomposition(const PlaneGraph& g, const LengthSequence& l, VertexId v);

struct DecompositionCheck {
    bool ok;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};
DecompositionCheck verify_decomposition(const PlaneGraph& g, const PathDecomposition& d,
                                        const LengthSequence& l, VertexId v);

}  // namespace quartic
