#pragma once

#include "quartic/generation.hpp"
#include "quartic/plane_graph.hpp"
#include "quartic/trail.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quartic {

struct GoodCircuit {
    Trail circuit;  // closed, passes verify_circuit at k=4
};
struct ObstructedByF6 {
    std::vector<VertexId> roles;  // x a b c d y
};
struct NotConnected {};
using SolveOutcome = std::variant<GoodCircuit, ObstructedByF6, NotConnected>;

// Step log for the CLI's --trace flag.
struct Transcript {
    std::vector<std::string> lines;
    void note(std::string s) { lines.push_back(std::move(s)); }
};

// The known-good circuit of the k-antiprism in generation.hpp's labels, k >= 4.
Trail antiprism_good_circuit(int k);

// Entry points, strongest precondition first.
Trail good_circuit_3connected(const PlaneGraph& g, Transcript* tr = nullptr);
Trail good_circuit_3edgeconnected(const PlaneGraph& g, Transcript* tr = nullptr);
SolveOutcome good_circuit_2connected(const PlaneGraph& g, Transcript* tr = nullptr);
SolveOutcome good_circuit(const PlaneGraph& g, Transcript* tr = nullptr);

// Circuit lifts. ch is a good circuit of the reduced graph translated into
// g's ids; for slides the vanished vertex carries roles.u_label.
Trail lift_4cycle_addition(const PlaneGraph& g, const FourCARoles& roles, const Trail& ch,
                           Transcript* tr = nullptr);
Trail lift_3cycle_slide(const PlaneGraph& g, const SlideRoles& roles, const Trail& ch,
                        Transcript* tr = nullptr);

// A pegging lift may bounce: the circuit cannot thread the new vertex, but g
// admits a slide reduction whose own lift will succeed once the smaller graph
// is re-solved. Vertex count strictly decreases, so the caller terminates.
struct Restructure {
    PlaneGraph reduced;
    std::vector<VertexId> old_of_new;
    SlideRoles roles;
};
using PeggingLift = std::variant<Trail, Restructure>;
PeggingLift lift_pegging(const PlaneGraph& g, const PeggingRoles& roles, const Trail& ch,
                         Transcript* tr = nullptr);

// Re-inserts a vertex across an independent 2-edge-cut {ab, cd}: a circuit of
// the form a P d | c Q b | a becomes a P d x c Q b x a. The result uses
// g's ids plus x_label for the new vertex.
Trail lift_special_pegging(const PlaneGraph& g, VertexId a, VertexId b, VertexId c, VertexId d,
                           VertexId x_label, const Trail& circuit, Transcript* tr = nullptr);

// Lemma-style trail rearrangement on a graph that is quartic except for four
// pendant vertices x1,x2 (attached at a1 != a2) and y1,y2 (at b1 != b2).
enum class TrailShape {
    XXYY,  // t1 is an (x1,x2)-trail, t2 a (y1,y2)-trail, both length >= 5
    XY,    // both trails run between an x-pendant and a y-pendant, length >= 3
};
struct TrailPair {
    Trail t1, t2;
    VertexId x1, x2, y1, y2;
    TrailShape shape;
};
TrailPair rearrange_trails(const PlaneGraph& g, const TrailPair& in);

// Relabels a trail through map; entries of -1 become missing_label (the
// slide's vanished vertex when mapping forward through ApplyResult).
Trail translate_trail(const Trail& t, const std::vector<VertexId>& map, VertexId missing_label = -1);

// Roles for lifting apply(h, op) = res back from h; inverse of the bookkeeping
// find_reductions performs. All ids refer to res.g.
ReductionRoles lift_roles(const PlaneGraph& h, const ExpansionOp& op, const ApplyResult& res);

}  // namespace quartic
