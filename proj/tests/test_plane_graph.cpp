#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/generation.hpp"
#include "quartic/plane_graph.hpp"
#include "support/corpus.hpp"

#include <algorithm>
#include <set>

using namespace quartic;

namespace {

Rot k4_rot() {
    // outer triangle 0 1 2, vertex 3 inside
    return {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}};
}

}  // namespace

TEST_CASE("build validates K4 and traces its faces") {
    PlaneGraph g = build(k4_rot());
    CHECK(g.n() == 4);
    CHECK(g.m == 6);
    CHECK(g.faces.size() == 4);  // 4 - 6 + F = 2
    for (VertexId v = 0; v < 4; ++v) CHECK(g.deg(v) == 3);
    CHECK(g.dart_count() == 12);
    CHECK(g.component_count() == 1);
    CHECK(g.has_edge(0, 3));
    CHECK(!g.has_edge(0, 0));
    CHECK(g.edge_id(1, 2) == g.edge_id(2, 1));
}

TEST_CASE("darts: ids, twins and face walks are involutive and closed") {
    PlaneGraph g = build(k4_rot());
    std::set<int> seen;
    for (VertexId v = 0; v < g.n(); ++v) {
        for (int s = 0; s < g.deg(v); ++s) {
            Dart d{v, s};
            int id = g.dart_id(d);
            CHECK(g.dart(id) == d);
            seen.insert(id);
            Dart t = g.twin(d);
            CHECK(g.twin(t) == d);
            CHECK(g.head(d) == t.tail);
            CHECK(g.head(t) == v);
        }
    }
    CHECK((int)seen.size() == g.dart_count());
    // every dart returns to itself along its face, in face walk length steps
    for (size_t f = 0; f < g.faces.size(); ++f) {
        for (int did : g.faces[f]) CHECK(g.dart_face[did] == (int)f);
        Dart d = g.dart(g.faces[f][0]);
        Dart w = d;
        for (size_t i = 0; i < g.faces[f].size(); ++i) w = g.face_next(w);
        CHECK(w == d);
    }
}

TEST_CASE("slot_of finds rotation positions") {
    PlaneGraph g = build(k4_rot());
    for (VertexId v = 0; v < 4; ++v)
        for (int s = 0; s < 3; ++s) CHECK(g.slot_of(v, g.rot[v][s]) == s);
    CHECK(g.slot_of(0, 0) == -1);
}

TEST_CASE("build rejects broken rotations") {
    CHECK_THROWS_AS(build(Rot{{1}, {}}), InconsistentRotation);
    CHECK_THROWS_AS(build(Rot{{1, 1}, {0, 0}}), NotSimple);
    CHECK_THROWS_AS(build(Rot{{0, 1}, {0, 1}}), NotSimple);  // self loop
    Rot k5(5);
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = 0; v < 5; ++v)
            if (u != v) k5[u].push_back(v);
    CHECK_THROWS_AS(build(k5), NotPlanar);
}

TEST_CASE("build accepts isolated vertices and counts them as components") {
    PlaneGraph g = build(Rot{{1}, {0}, {}});
    CHECK(g.n() == 3);
    CHECK(g.m == 1);
    CHECK(g.component_count() == 2);
    CHECK(g.connected_ignoring_isolated());
}

TEST_CASE("rotation surgery helpers") {
    Rot r = k4_rot();
    rot_remove_edge(r, 0, 3);
    CHECK(std::find(r[0].begin(), r[0].end(), 3) == r[0].end());
    CHECK(std::find(r[3].begin(), r[3].end(), 0) == r[3].end());
    CHECK_THROWS_AS(rot_remove_edge(r, 0, 3), PatternAbsent);
    rot_insert_after(r, 0, 2, 3);
    rot_insert_after(r, 3, 1, 0);  // restores the original cyclic order
    CHECK(r[0][1] == 3);  // right after the occurrence of 2
    PlaneGraph g = build(r);
    CHECK(g.m == 6);

    rot_replace(r, 0, 1, 1);  // identity replace keeps structure
    CHECK(build(r).m == 6);
}

TEST_CASE("rot_compact drops isolated ids and reports the old ids") {
    Rot r{{2}, {}, {0}};
    auto [c, old_of_new] = rot_compact(r);
    CHECK(c.size() == 2);
    CHECK(old_of_new == std::vector<VertexId>{0, 2});
    CHECK(build(c).m == 1);
}

TEST_CASE("rot_relabel permutes ids") {
    Rot r = k4_rot();
    std::vector<int> perm{3, 2, 1, 0};
    Rot p = rot_relabel(r, perm);
    PlaneGraph a = build(r), b = build(p);
    CHECK(a.m == b.m);
    CHECK(b.has_edge(3, 2) == a.has_edge(0, 1));
}

TEST_CASE("split_vertex leaves pendants in rotation order") {
    PlaneGraph oct = testsup::octahedron();
    auto sp = split_vertex(oct, 0);
    CHECK(sp.pendants.size() == 4);
    CHECK(sp.g.deg(0) == 0);
    for (int i = 0; i < 4; ++i) {
        VertexId p = sp.pendants[i];
        CHECK(sp.g.deg(p) == 1);
        CHECK(sp.g.rot[p][0] == oct.rot[0][i]);
    }
    CHECK(sp.g.m == oct.m);
}

TEST_CASE("identify_pendants merges a split vertex back") {
    PlaneGraph oct = testsup::octahedron();
    auto sp = split_vertex(oct, 0);
    auto [merged, w] = identify_pendants(sp.g, sp.pendants);
    CHECK(merged.deg(w) == 4);
    auto [rc, old_of_new] = rot_compact(merged.rot);
    CHECK(canonical_code(build(rc)) == canonical_code(oct));
}

TEST_CASE("complete_into_quartic equals a 4-cycle addition") {
    PlaneGraph oct = testsup::octahedron();
    auto sp = split_vertex(oct, 2);
    auto [rc, old_of_new] = rot_compact(sp.g.rot);
    PlaneGraph host = build(rc);
    auto cr = complete_into_quartic(host);
    CHECK(cr.g.is_quartic());
    CHECK(cr.g.n() == host.n() + 1);
    CHECK(cr.cycle.size() == 4);
    PlaneGraph via_op = apply(oct, FourCycleAddition{2}).g;
    CHECK(canonical_code(cr.g) == canonical_code(via_op));
}

TEST_CASE("complete_into_quartic rejects bad inputs") {
    PlaneGraph oct = testsup::octahedron();
    CHECK_THROWS_AS(complete_into_quartic(oct), PreconditionViolated);  // no pendants
}
