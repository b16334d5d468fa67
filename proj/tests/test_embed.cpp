#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/embed.hpp"
#include "quartic/generation.hpp"
#include "support/corpus.hpp"

using namespace quartic;

namespace {

Adj complete_graph(int n) {
    Adj a(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v) a[u].push_back(v);
    return a;
}

}  // namespace

TEST_CASE("embed K4") {
    PlaneGraph g = embed(complete_graph(4));
    CHECK(g.n() == 4);
    CHECK(g.m == 6);
    CHECK(g.faces.size() == 4);
}

TEST_CASE("nonplanar graphs are refused") {
    CHECK(!planar_rotation(complete_graph(5)));
    CHECK_THROWS_AS(embed(complete_graph(5)), NotPlanar);
    Adj k33(6);
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 3; v < 6; ++v) {
            k33[u].push_back(v);
            k33[v].push_back(u);
        }
    CHECK(!planar_rotation(k33));
}

TEST_CASE("embedding the octahedron matches the antiprism embedding") {
    PlaneGraph oct = testsup::octahedron();
    Adj a(oct.n());
    for (auto [u, v] : oct.edges) {
        a[u].push_back(v);
        a[v].push_back(u);
    }
    PlaneGraph e = embed(a);
    CHECK(e.is_quartic());
    // 3-connected planar graphs embed uniquely up to reflection
    CHECK(canonical_code(e) == canonical_code(oct));
}

TEST_CASE("cutvertex glued blocks embed") {
    // two triangles sharing vertex 0
    Adj bowtie(5);
    auto link = [&](VertexId u, VertexId v) {
        bowtie[u].push_back(v);
        bowtie[v].push_back(u);
    };
    link(0, 1);
    link(1, 2);
    link(2, 0);
    link(0, 3);
    link(3, 4);
    link(4, 0);
    PlaneGraph g = embed(bowtie);
    CHECK(g.m == 6);
    CHECK(g.faces.size() == 3);  // 5 - 6 + F = 2
}

TEST_CASE("disconnected input embeds per component") {
    Adj two_k4(8);
    Adj k4 = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v) {
        two_k4[v] = k4[v];
        for (VertexId w : k4[v]) two_k4[v + 4].push_back(w + 4);
    }
    PlaneGraph g = embed(two_k4);
    CHECK(g.component_count() == 2);
    CHECK(g.m == 12);
}

TEST_CASE("adj_from_edges builds symmetric adjacency") {
    Adj a = adj_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(a[1].size() == 2);
    PlaneGraph g = embed(a);
    CHECK(g.m == 2);
}
