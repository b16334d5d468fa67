#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/connectivity.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/oracle.hpp"
#include "quartic/solver.hpp"
#include "support/corpus.hpp"

#include <set>

using namespace quartic;

TEST_CASE("the known antiprism circuits verify") {
    for (int k : {4, 5, 6, 7, 8}) {
        CAPTURE(k);
        CHECK(verify_circuit(antiprism(k), antiprism_good_circuit(k), 4).ok);
    }
    CHECK_THROWS_AS(antiprism_good_circuit(3), PreconditionViolated);
}

TEST_CASE("translate_trail maps and rejects unmapped ids") {
    Trail t{{0, 1, 2, 0}, true};
    Trail m = translate_trail(t, {5, 6, 7});
    CHECK(m.verts == std::vector<VertexId>{5, 6, 7, 5});
    CHECK_THROWS_AS(translate_trail(t, {5, -1, 7}), PreconditionViolated);
    Trail withu = translate_trail(t, {5, -1, 7}, 9);
    CHECK(withu.verts == std::vector<VertexId>{5, 9, 7, 5});
}

TEST_CASE("3-connected solver: every small member gets a verified circuit") {
    for (const auto& g : testsup::all_3connected(10)) {
        if (is_octahedron(g)) {
            CHECK_THROWS_AS(good_circuit_3connected(g), IsOctahedron);
            continue;
        }
        CAPTURE(g.n());
        Trail t = good_circuit_3connected(g);
        CHECK(verify_circuit(g, t, 4).ok);
    }
}

TEST_CASE("3-connected solver leaves a transcript") {
    const auto& all = testsup::all_3connected(10);
    for (const auto& g : all) {
        if (g.n() != 10 || is_octahedron(g)) continue;
        Transcript tr;
        good_circuit_3connected(g, &tr);
        CHECK(!tr.lines.empty());
    }
}

TEST_CASE("solver precondition checks") {
    PlaneGraph f6 = testsup::f6_graph();
    CHECK_THROWS_AS(good_circuit_3connected(f6), PreconditionViolated);
    PlaneGraph low = testsup::join_two_edge_cut(antiprism(4), 0, antiprism(4), 0);
    CHECK_THROWS_AS(good_circuit_3connected(low), PreconditionViolated);
    CHECK_THROWS_AS(good_circuit(f6), PreconditionViolated);
}

TEST_CASE("good_circuit reports obstruction and disconnection") {
    PlaneGraph oct = testsup::octahedron();
    SolveOutcome obs = good_circuit(oct);
    REQUIRE(std::holds_alternative<ObstructedByF6>(obs));
    const auto& roles = std::get<ObstructedByF6>(obs).roles;
    REQUIRE(roles.size() == 6);
    const PlaneGraph& pat = f6_pattern().g;
    for (auto [u, v] : pat.edges) CHECK(oct.has_edge(roles[u], roles[v]));

    SolveOutcome two = good_circuit(testsup::disjoint_union(oct, oct));
    CHECK(std::holds_alternative<NotConnected>(two));
    SolveOutcome mixed = good_circuit(testsup::disjoint_union(antiprism(4), antiprism(5)));
    CHECK(std::holds_alternative<NotConnected>(mixed));
}

TEST_CASE("good_circuit solves the 3-connected members directly") {
    for (const auto& g : testsup::all_3connected(9)) {
        if (is_octahedron(g)) continue;
        SolveOutcome out = good_circuit(g);
        REQUIRE(std::holds_alternative<GoodCircuit>(out));
        CHECK(verify_circuit(g, std::get<GoodCircuit>(out).circuit, 4).ok);
    }
}

TEST_CASE("forward lifts reproduce verified circuits on small hosts") {
    // take a class member, expand it, and lift a known circuit of the host
    const PlaneGraph h = antiprism(4);
    Trail ch = antiprism_good_circuit(4);
    REQUIRE(verify_circuit(h, ch, 4).ok);
    int tried = 0;
    for (const auto& op : enumerate_expansions(h)) {
        ApplyResult res = apply(h, op);
        if (!is_3connected(res.g)) continue;
        ReductionRoles roles = lift_roles(h, op, res);
        Trail mapped = translate_trail(
            ch, res.new_of_old,
            std::holds_alternative<SlideRoles>(roles) ? std::get<SlideRoles>(roles).u_label : -1);
        Trail lifted;
        if (const auto* sr = std::get_if<SlideRoles>(&roles)) {
            lifted = lift_3cycle_slide(res.g, *sr, mapped);
        } else if (const auto* fr = std::get_if<FourCARoles>(&roles)) {
            lifted = lift_4cycle_addition(res.g, *fr, mapped);
        } else {
            PeggingLift pl = lift_pegging(res.g, std::get<PeggingRoles>(roles), mapped);
            if (std::holds_alternative<Restructure>(pl)) {
                const auto& rs = std::get<Restructure>(pl);
                Trail sub = good_circuit_3connected(rs.reduced);
                lifted = lift_3cycle_slide(res.g, rs.roles, translate_trail(sub, rs.old_of_new));
            } else {
                lifted = std::get<Trail>(pl);
            }
        }
        CHECK(verify_circuit(res.g, lifted, 4).ok);
        ++tried;
    }
    CHECK(tried > 0);
}
