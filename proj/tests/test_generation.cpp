#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/connectivity.hpp"
#include "quartic/generation.hpp"
#include "quartic/obstructions.hpp"
#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace quartic;

TEST_CASE("antiprisms") {
    for (int k : {3, 4, 5, 6, 7}) {
        CAPTURE(k);
        PlaneGraph g = antiprism(k);
        CHECK(g.n() == 2 * k);
        CHECK(g.m == 4 * k);
        CHECK(g.is_quartic());
        CHECK((int)g.faces.size() == 2 * k + 2);  // two k-faces and 2k triangles
        CHECK(is_3connected(g));
    }
    CHECK(is_octahedron(antiprism(3)));
}

TEST_CASE("class counts for small vertex numbers") {
    std::map<int, int> count;
    for (const auto& g : testsup::all_3connected(10)) count[g.n()]++;
    CHECK(count[6] == 1);
    CHECK(count[7] == 0);
    CHECK(count[8] == 1);
    CHECK(count[9] == 1);
    CHECK(count[10] == 3);
}

TEST_CASE("generated graphs are distinct class members in sorted order") {
    const auto& all = testsup::all_3connected(10);
    std::set<std::string> codes;
    int last_n = 0;
    std::string last_code;
    for (const auto& g : all) {
        CHECK(g.is_quartic());
        CHECK(is_3connected(g));
        std::string code = canonical_code(g);
        CHECK(codes.insert(code).second);
        if (g.n() == last_n) CHECK(last_code < code);
        if (g.n() < last_n) FAIL("sizes out of order");
        last_n = g.n();
        last_code = code;
    }
}

TEST_CASE("parallel generation matches the serial result") {
    auto serial = generate(9, 1);
    auto parallel = generate(9, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i)
        CHECK(canonical_code(serial[i]) == canonical_code(parallel[i]));
}

TEST_CASE("canonical code is invariant under relabeling and reflection") {
    PlaneGraph g = antiprism(4);
    std::string code = canonical_code(g);
    // rotate labels
    std::vector<int> perm(g.n());
    for (int v = 0; v < g.n(); ++v) perm[v] = (v + 3) % g.n();
    CHECK(canonical_code(build(rot_relabel(g.rot, perm))) == code);
    // mirror image: reverse every rotation
    Rot mir = g.rot;
    for (auto& nb : mir) std::reverse(nb.begin(), nb.end());
    CHECK(canonical_code(build(mir)) == code);
    // a different graph with the same size gets a different code
    const auto& ten = testsup::all_3connected(10);
    std::vector<const PlaneGraph*> n10;
    for (const auto& h : ten)
        if (h.n() == 10) n10.push_back(&h);
    REQUIRE(n10.size() == 3);
    CHECK(canonical_code(*n10[0]) != canonical_code(*n10[1]));
}

TEST_CASE("label_of is the transport map onto canonical positions") {
    PlaneGraph g = antiprism(5);
    CanonicalForm cf = canonical_form(g);
    std::set<int> positions(cf.label_of.begin(), cf.label_of.end());
    CHECK((int)positions.size() == g.n());
    CHECK(*positions.begin() == 0);
    CHECK(*positions.rbegin() == g.n() - 1);
}

TEST_CASE("expansion operations stay quartic and planar") {
    for (const auto& h : testsup::all_3connected(8)) {
        auto ops = enumerate_expansions(h);
        CHECK(!ops.empty());
        for (const auto& op : ops) {
            ApplyResult res = apply(h, op);
            CHECK(res.g.is_quartic());
            int expect = h.n() + (std::holds_alternative<Pegging>(op)            ? 1
                                  : std::holds_alternative<FourCycleAddition>(op) ? 4
                                                                                  : 2);
            CHECK(res.g.n() == expect);
            // the added vertices exist and the map covers the old ids
            for (VertexId av : res.added) CHECK(av < res.g.n());
            REQUIRE((int)res.new_of_old.size() == h.n());
            int dropped = 0;
            for (VertexId v = 0; v < h.n(); ++v) {
                if (res.new_of_old[v] < 0)
                    ++dropped;
                else
                    CHECK(res.new_of_old[v] < res.g.n());
            }
            CHECK(dropped == (std::holds_alternative<ThreeCycleSlide>(op) ? 1 : 0));
        }
    }
}

TEST_CASE("every expansion of a class member can be reduced back") {
    for (const auto& h : testsup::all_3connected(8)) {
        std::string hcode = canonical_code(h);
        for (const auto& op : enumerate_expansions(h)) {
            ApplyResult res = apply(h, op);
            if (!is_3connected(res.g)) continue;
            bool found = false;
            for (const auto& step : find_reductions(res.g))
                if (canonical_code(step.reduced) == hcode) found = true;
            CAPTURE(res.g.n());
            CHECK(found);
        }
    }
}

TEST_CASE("reduction steps carry consistent data") {
    const auto& all = testsup::all_3connected(10);
    for (const auto& g : all) {
        for (const auto& step : find_reductions(g)) {
            CHECK(step.reduced.is_quartic());
            CHECK(is_3connected(step.reduced));
            CHECK((int)step.old_of_new.size() == step.reduced.n());
            // applying the recorded op to the reduced graph restores g
            ApplyResult redo = apply(step.reduced, step.op);
            CHECK(canonical_code(redo.g) == canonical_code(g));
            // role ids live in g
            if (const auto* sr = std::get_if<SlideRoles>(&step.roles)) {
                CHECK(g.has_edge(sr->x, sr->y));
                CHECK(g.has_edge(sr->x, sr->z));
                CHECK(g.has_edge(sr->y, sr->z));
                CHECK(g.has_edge(sr->x, sr->alpha));
                CHECK(g.has_edge(sr->x, sr->delta));
                CHECK(g.has_edge(sr->y, sr->alpha));
                CHECK(g.has_edge(sr->y, sr->beta));
                CHECK(g.has_edge(sr->z, sr->gamma));
                CHECK(g.has_edge(sr->z, sr->delta));
            } else if (const auto* fr = std::get_if<FourCARoles>(&step.roles)) {
                for (int i = 0; i < 4; ++i) {
                    CHECK(g.has_edge(fr->x, fr->ring[i]));
                    CHECK(g.has_edge(fr->ring[i], fr->ring[(i + 1) % 4]));
                    CHECK(g.has_edge(fr->ring[i], fr->outer[i]));
                }
            } else {
                const auto& pr = std::get<PeggingRoles>(step.roles);
                for (VertexId w : {pr.a, pr.b, pr.c, pr.d}) CHECK(g.has_edge(pr.u, w));
                CHECK(!g.has_edge(pr.a, pr.b));
                CHECK(!g.has_edge(pr.c, pr.d));
            }
        }
    }
}

TEST_CASE("every member that is not an antiprism admits a reduction") {
    std::set<std::string> anti;
    for (int k : {3, 4, 5}) anti.insert(canonical_code(antiprism(k)));
    for (const auto& g : testsup::all_3connected(10)) {
        if (anti.count(canonical_code(g))) continue;
        CAPTURE(g.n());
        CHECK(!find_reductions(g).empty());
    }
}
