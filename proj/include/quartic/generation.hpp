#pragma once

#include "quartic/plane_graph.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace quartic {

// Fixed labeling: a=0, b=1, c=2, x_i=2+i (i=1..k-1), y_j=k+1+j (j=1..k-2).
// Top cycle (a, x_1..x_{k-1}), bottom cycle (b, y_1..y_{k-2}, c), band
// t_i ~ b_i and t_i ~ b_{i-1}. antiprism(3) is the octahedron.
PlaneGraph antiprism(int k);

// Expansion operations; all ids refer to the graph the op is applied to.
struct Pegging {  // path a-b-c-d; edges ab, cd co-facial; they are removed
    VertexId a, b, c, d;
};
struct FourCycleAddition {  // ring inserted between x and its four neighbors
    VertexId x;
};
struct ThreeCycleSlide {  // d = rot[u][slot], a,b,c follow; edge ad removed
    VertexId u;
    int slot;
};
using ExpansionOp = std::variant<Pegging, FourCycleAddition, ThreeCycleSlide>;

struct ApplyResult {
    PlaneGraph g;
    // Pegging: {u}; FourCycleAddition: ring {e,f,g,h} attached to
    // rot[x][0..3]; ThreeCycleSlide: {x,y,z}.
    std::vector<VertexId> added;
    // input id -> result id; -1 for the slide's removed vertex
    std::vector<int> new_of_old;
};
ApplyResult apply(const PlaneGraph& g, const ExpansionOp& op);

// Every op whose local pattern is present, in deterministic order
// (peggings, then 4-cycle additions, then slides).
std::vector<ExpansionOp> enumerate_expansions(const PlaneGraph& g);

// Role data for the circuit lifts, in ids of the *original* (larger) graph.
struct PeggingRoles {  // reduced graph has edges ab, cd and the path a-b-c-d
    VertexId u, a, b, c, d;
};
struct FourCARoles {  // outer[i] is attached to ring[i] = rot[x][i]
    VertexId x;
    std::array<VertexId, 4> ring, outer;
};
struct SlideRoles {  // x adj {alpha,delta,y,z}, y adj {alpha,beta,x,z},
                     // z adj {gamma,delta,x,y}; u_label is the fresh id the
                     // reduced graph's new vertex carries when translated back
    VertexId x, y, z, alpha, beta, gamma, delta, u_label;
};
using ReductionRoles = std::variant<PeggingRoles, FourCARoles, SlideRoles>;

struct ReductionStep {
    PlaneGraph reduced;                // compacted, verified in class
    std::vector<VertexId> old_of_new;  // reduced id -> original id
    ExpansionOp op;                    // on reduced, reproduces the original up to iso
    ReductionRoles roles;
};

// All class-preserving reductions: 3-cycle unslides, then 4-cycle removals,
// then unpeggings. Antiprisms may yield an empty list; by the generation
// theorem nothing else does.
std::vector<ReductionStep> find_reductions(const PlaneGraph& g);

struct CanonicalForm {
    std::string code;
    std::vector<int> label_of;  // vertex -> canonical position
};

// Equal codes iff isomorphic as embedded graphs up to reflection.
// Requires a connected graph without isolated vertices.
CanonicalForm canonical_form(const PlaneGraph& g);
std::string canonical_code(const PlaneGraph& g);

// All 3-connected quartic planar graphs with 6 <= n <= n_max vertices,
// isomorph-free, sorted by (n, canonical code).
std::vector<PlaneGraph> generate(int n_max, int jobs = 1);

}  // namespace quartic
