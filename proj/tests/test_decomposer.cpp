#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/decomposer.hpp"
#include "quartic/generation.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/solver.hpp"
#include "support/corpus.hpp"

#include <numeric>
#include <random>

using namespace quartic;

namespace {

// all ways to write total as an ordered sum of parts in 1..4
std::vector<LengthSequence> compositions(int total) {
    std::vector<LengthSequence> out;
    LengthSequence cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= 4 && p <= left; ++p) {
            cur.push_back(p);
            self(self, left - p);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

}  // namespace

TEST_CASE("is_subdivision") {
    UnderlinedPattern p344{{3, 4, 4}, {false, true, false}};
    CHECK(is_subdivision({3, 4, 4}, p344));
    CHECK(is_subdivision({1, 2, 4, 4}, p344));
    CHECK(is_subdivision({3, 4, 1, 1, 1, 1}, p344));
    CHECK(is_subdivision({2, 1, 4, 2, 2}, p344));
    CHECK(!is_subdivision({4, 3, 4}, p344));        // first block overshoots
    CHECK(!is_subdivision({3, 2, 2, 4}, p344));     // underlined part split
    CHECK(!is_subdivision({3, 4, 5}, p344));        // wrong total
    CHECK(!is_subdivision({3, 4, 4, 1}, p344));     // overshoot at the end
    CHECK(!is_subdivision({11}, p344));
    CHECK(!is_subdivision({3, 4, 0, 4}, p344));     // zero parts never valid
    UnderlinedPattern whole{{5}, {false}};
    CHECK(is_subdivision({5}, whole));
    CHECK(is_subdivision({1, 1, 1, 1, 1}, whole));
    CHECK(!is_subdivision({5, 1}, whole));
}

TEST_CASE("cut_circuit slices a good circuit into paths") {
    PlaneGraph g = antiprism(4);
    Trail c = antiprism_good_circuit(4);
    LengthSequence l{4, 4, 4, 4};
    PathDecomposition d = cut_circuit(g, c, l, 0);
    CHECK(d.paths.size() == 4);
    CHECK(bool(verify_decomposition(g, d, l, 0)));
    // every start vertex works: an Eulerian circuit passes everywhere
    for (VertexId v = 0; v < g.n(); ++v) {
        auto dv = cut_circuit(g, c, l, v);
        CHECK(bool(verify_decomposition(g, dv, l, v)));
    }
    // mixed lengths
    LengthSequence mix{1, 3, 4, 2, 2, 4};
    CHECK(bool(verify_decomposition(g, cut_circuit(g, c, mix, 2), mix, 2)));
}

TEST_CASE("cut_circuit errors") {
    PlaneGraph g = antiprism(4);
    Trail c = antiprism_good_circuit(4);
    CHECK_THROWS_AS(cut_circuit(g, c, {4, 4, 4}, 0), LengthMismatch);
    CHECK_THROWS_AS(cut_circuit(g, c, {5, 4, 4, 3}, 0), BadLengths);
    CHECK_THROWS_AS(cut_circuit(g, c, {4, 4, 4, 4}, 99), StartVertexAbsent);
    Trail open{{0, 1}, false};
    CHECK_THROWS_AS(cut_circuit(g, open, {4, 4, 4, 4}, 0), PreconditionViolated);
}

TEST_CASE("obstruction graph: every admissible length list decomposes") {
    PlaneGraph f6 = testsup::f6_graph();
    for (const auto& l : compositions(11)) {
        PathDecomposition d = f6_decomposition(l);
        REQUIRE(d.paths.size() == l.size());
        // chained trails from x to y covering all 11 edges exactly once
        CHECK(d.paths.front().verts.front() == 0);
        CHECK(d.paths.back().verts.back() == 5);
        std::vector<VertexId> concat = d.paths.front().verts;
        for (size_t i = 1; i < d.paths.size(); ++i) {
            REQUIRE(d.paths[i].verts.front() == concat.back());
            concat.insert(concat.end(), d.paths[i].verts.begin() + 1, d.paths[i].verts.end());
        }
        Trail whole{concat, false};
        CHECK(!trail_defect(f6, whole).has_value());
        CHECK(whole.length() == f6.m);
        for (size_t i = 0; i < l.size(); ++i) CHECK(d.paths[i].length() == l[i]);
    }
}

TEST_CASE("obstruction graph: bad length lists are rejected") {
    CHECK_THROWS_AS(f6_decomposition({4, 4, 4}), BadLengths);
    CHECK_THROWS_AS(f6_decomposition({5, 4, 2}), BadLengths);
    CHECK_THROWS_AS(f6_decomposition({}), BadLengths);
}

TEST_CASE("octahedron: every admissible length list and start vertex decomposes") {
    PlaneGraph oct = testsup::octahedron();
    auto lists = compositions(12);
    for (VertexId v = 0; v < 6; ++v) {
        for (const auto& l : lists) {
            auto d = octahedron_decomposition(oct, l, v);
            CHECK(bool(verify_decomposition(oct, d, l, v)));
        }
    }
}

TEST_CASE("octahedron decomposition errors") {
    PlaneGraph oct = testsup::octahedron();
    CHECK_THROWS_AS(octahedron_decomposition(oct, {4, 4, 4, 4}, 0), BadLengths);
    CHECK_THROWS_AS(octahedron_decomposition(oct, {4, 4, 4}, 9), StartVertexAbsent);
    CHECK_THROWS_AS(octahedron_decomposition(antiprism(4), {4, 4, 4}, 0), PreconditionViolated);
}

TEST_CASE("verify_decomposition rejects corrupted answers") {
    PlaneGraph g = antiprism(4);
    Trail c = antiprism_good_circuit(4);
    LengthSequence l{4, 4, 4, 4};
    PathDecomposition d = cut_circuit(g, c, l, 0);
    CHECK(bool(verify_decomposition(g, d, l, 0)));

    PathDecomposition wrong_v = d;
    CHECK(!verify_decomposition(g, wrong_v, l, 1));
    PathDecomposition chopped = d;
    chopped.paths.pop_back();
    CHECK(!verify_decomposition(g, chopped, l, 0));
    PathDecomposition broken = d;
    std::swap(broken.paths[1], broken.paths[2]);
    CHECK(!verify_decomposition(g, broken, l, 0));
    PathDecomposition dup = d;
    dup.paths[3] = dup.paths[0];
    CHECK(!verify_decomposition(g, dup, l, 0));
    LengthSequence off{4, 4, 4, 3};
    CHECK(!verify_decomposition(g, d, off, 0));
}

namespace {

LengthSequence random_lengths(int total, std::mt19937& rng) {
    LengthSequence l;
    int left = total;
    while (left > 0) {
        std::uniform_int_distribution<int> d(1, std::min(4, left));
        int x = d(rng);
        l.push_back(x);
        left -= x;
    }
    return l;
}

}  // namespace

TEST_CASE("p_decomposition: circuit-bearing graphs, sampled lengths and starts") {
    std::mt19937 rng(20240819);
    for (int n = 6; n <= 10; ++n) {
        for (const auto& g : testsup::all_3connected(n)) {
            for (int rep = 0; rep < 12; ++rep) {
                LengthSequence l = random_lengths(g.m, rng);
                VertexId v = rep % g.n();
                CAPTURE(n);
                CAPTURE(rep);
                auto d = p_decomposition(g, l, v);
                CHECK(bool(verify_decomposition(g, d, l, v)));
            }
            if (g.n() % 2 == 0) {
                // even order: all parts 4 is admissible, giving paths on 5 vertices
                LengthSequence l(g.m / 4, 4);
                auto d = p_decomposition(g, l, 0);
                CHECK(bool(verify_decomposition(g, d, l, 0)));
            }
        }
    }
}

TEST_CASE("p_decomposition: obstructed graphs splice through every start vertex") {
    PlaneGraph two = testsup::join_two_edge_cut(testsup::octahedron(), 0, testsup::octahedron(), 0);
    REQUIRE(find_f6(two).has_value());
    std::mt19937 rng(20240820);
    for (VertexId v = 0; v < two.n(); ++v) {
        for (int rep = 0; rep < 8; ++rep) {
            LengthSequence l = random_lengths(two.m, rng);
            CAPTURE(v);
            auto d = p_decomposition(two, l, v);
            CHECK(bool(verify_decomposition(two, d, l, v)));
        }
    }
    // all parts 4 across an obstructed graph of even order
    LengthSequence l4(two.m / 4, 4);
    CHECK(bool(verify_decomposition(two, p_decomposition(two, l4, 3), l4, 3)));
}

TEST_CASE("p_decomposition: low connectivity corpus decomposes") {
    std::mt19937 rng(20240821);
    auto corpus = testsup::low_connectivity_corpus(60);
    int done = 0;
    for (size_t i = 0; i < corpus.size(); i += 7) {
        const auto& inst = corpus[i];
        std::uniform_int_distribution<int> dv(0, inst.g.n() - 1);
        for (int rep = 0; rep < 3; ++rep) {
            LengthSequence l = random_lengths(inst.g.m, rng);
            VertexId v = dv(rng);
            CAPTURE(inst.recipe);
            auto d = p_decomposition(inst.g, l, v);
            CHECK(bool(verify_decomposition(inst.g, d, l, v)));
            ++done;
        }
    }
    CHECK(done >= 24);
}

TEST_CASE("p_decomposition errors") {
    PlaneGraph oct = testsup::octahedron();
    CHECK_THROWS_AS(p_decomposition(oct, {4, 4, 4}, 9), StartVertexAbsent);
    CHECK_THROWS_AS(p_decomposition(oct, {5, 4, 3}, 0), BadLengths);
    CHECK_THROWS_AS(p_decomposition(oct, {4, 4}, 0), LengthMismatch);
    CHECK_THROWS_AS(p_decomposition(testsup::disjoint_union(oct, oct), {4, 4, 4, 4, 4, 4}, 0),
                    Disconnected);
}
