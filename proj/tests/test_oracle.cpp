#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/generation.hpp"
#include "quartic/oracle.hpp"
#include "quartic/solver.hpp"
#include "support/corpus.hpp"

using namespace quartic;

TEST_CASE("verify_circuit accepts the antiprism circuit") {
    PlaneGraph g = antiprism(4);
    Trail t = antiprism_good_circuit(4);
    auto res = verify_circuit(g, t, 4);
    CHECK(res.ok);
    CHECK(res.diagnostic.empty());
}

TEST_CASE("verify_circuit diagnoses failures") {
    PlaneGraph g = antiprism(4);
    // too short: coverage
    Trail partial{{0, 1, 2}, false};
    auto res = verify_circuit(g, partial, 4);
    CHECK(!res);
    CHECK(res.diagnostic.find("covers") != std::string::npos);
    // full Eulerian circuit of the octahedron always has a short subcycle
    PlaneGraph oct = testsup::octahedron();
    SearchConfig raw;
    raw.k = 0;
    auto t = search(oct, raw);
    REQUIRE(t.has_value());
    CHECK(verify_circuit(oct, *t, 0).ok);
    auto res4 = verify_circuit(oct, *t, 4);
    CHECK(!res4);
    CHECK(res4.diagnostic.find("subcycle") != std::string::npos);
}

TEST_CASE("the octahedron admits no good circuit but a 3-locally one") {
    PlaneGraph oct = testsup::octahedron();
    SearchConfig cfg;
    cfg.k = 4;
    CHECK(!search(oct, cfg));
    cfg.k = 3;
    auto t = search(oct, cfg);
    REQUIRE(t.has_value());
    CHECK(verify_circuit(oct, *t, 3).ok);
}

TEST_CASE("the 4-antiprism has a good circuit and the oracle finds it") {
    PlaneGraph g = antiprism(4);
    auto t = search(g, SearchConfig{});
    REQUIRE(t.has_value());
    CHECK(verify_circuit(g, *t, 4).ok);
}

TEST_CASE("every open trail of the obstruction graph is bad") {
    PlaneGraph f6 = testsup::f6_graph();
    SearchConfig cfg;
    cfg.k = 4;
    cfg.closed = false;
    CHECK(!search(f6, cfg));
    cfg.k = 0;
    CHECK(search(f6, cfg).has_value());  // Eulerian open trails do exist
}

TEST_CASE("closed search demands even degrees") {
    PlaneGraph f6 = testsup::f6_graph();
    SearchConfig cfg;  // closed
    CHECK_THROWS_AS(search(f6, cfg), PreconditionViolated);
}

TEST_CASE("budget exhaustion raises") {
    SearchConfig cfg;
    cfg.cap = 5;
    CHECK_THROWS_AS(search(antiprism(6), cfg), BudgetExhausted);
}

TEST_CASE("enumerate_trails visits verifying circuits and honors the stop signal") {
    PlaneGraph g = antiprism(4);
    SearchConfig cfg;
    long long calls = 0;
    long long reported = enumerate_trails(g, cfg, [&](const Trail& t) {
        CHECK(verify_circuit(g, t, 4).ok);
        return ++calls < 7;
    });
    CHECK(calls == 7);
    CHECK(reported == 7);

    long long all = enumerate_trails(g, cfg, [](const Trail&) { return true; });
    CHECK(all > 7);
    long long again = enumerate_trails(g, cfg, [](const Trail&) { return true; });
    CHECK(all == again);  // deterministic
}

TEST_CASE("open search starts at the requested odd vertex") {
    PlaneGraph f6 = testsup::f6_graph();
    SearchConfig cfg;
    cfg.k = 0;
    cfg.closed = false;
    cfg.start = 5;  // role y
    auto t = search(f6, cfg);
    REQUIRE(t.has_value());
    CHECK(t->verts.front() == 5);
    CHECK(t->length() == f6.m);
}
