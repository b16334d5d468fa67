#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartic/generation.hpp"
#include "quartic/io.hpp"
#include "support/corpus.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace quartic;

namespace {

std::string tmp_file(const std::string& contents, const std::string& suffix) {
    std::string path = std::string("io_test_") + std::to_string(rand()) + suffix;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("rotsys round trip with comments") {
    PlaneGraph oct = testsup::octahedron();
    std::string text = "# a comment\n\n" + write_rotsys(oct);
    std::istringstream in(text);
    PlaneGraph back = read_rotsys(in);
    CHECK(back.n() == 6);
    CHECK(canonical_code(back) == canonical_code(oct));
}

TEST_CASE("rotsys parse errors") {
    std::istringstream bad("0: 1 zap\n1: 0\n");
    CHECK_THROWS_AS(read_rotsys(bad), FormatError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_rotsys(empty), FormatError);
}

TEST_CASE("graph6 round trip") {
    PlaneGraph oct = testsup::octahedron();
    std::string line = write_graph6(oct);
    PlaneGraph back = read_graph6_line(line);
    CHECK(back.n() == 6);
    CHECK(back.m == 12);
    CHECK(canonical_code(back) == canonical_code(oct));

    std::istringstream two(line + "\n" + line + "\n");
    auto graphs = read_graph6(two);
    CHECK(graphs.size() == 2);
}

TEST_CASE("planar_code round trip preserves the embedding") {
    PlaneGraph a4 = antiprism(4), a5 = antiprism(5);
    std::ostringstream out(std::ios::binary);
    write_planar_code_header(out);
    write_planar_code(out, a4);
    write_planar_code(out, a5);
    std::string bytes = out.str();
    CHECK(bytes.rfind(">>planar_code<<", 0) == 0);
    // byte layout: n, then per vertex the 1-based clockwise neighbors, 0-terminated
    CHECK((unsigned char)bytes[15] == 8);
    CHECK(std::count(bytes.begin() + 15, bytes.end(), '\0') == 8 + 10);

    std::istringstream in(bytes);
    auto graphs = read_planar_code(in);
    REQUIRE(graphs.size() == 2);
    CHECK(canonical_code(graphs[0]) == canonical_code(a4));
    CHECK(canonical_code(graphs[1]) == canonical_code(a5));
    // whole rotation survives byte for byte, not just up to isomorphism
    CHECK(graphs[0].rot == a4.rot);
}

TEST_CASE("sniffing picks the right reader") {
    CHECK(sniff_format(">>planar_code<<\x08") == Format::planar_code);
    CHECK(sniff_format("0: 1 2 3 4\n") == Format::rotsys);
    CHECK(sniff_format("# comment first\n0: 1\n") == Format::rotsys);
    PlaneGraph oct = testsup::octahedron();
    CHECK(sniff_format(write_graph6(oct)) == Format::graph6);
}

TEST_CASE("read_graph_file sniffs and honors explicit formats") {
    PlaneGraph oct = testsup::octahedron();
    std::string p1 = tmp_file(write_rotsys(oct), ".rotsys");
    PlaneGraph g1 = read_graph_file(p1, std::nullopt);
    CHECK(canonical_code(g1) == canonical_code(oct));
    std::remove(p1.c_str());

    std::ostringstream pc(std::ios::binary);
    write_planar_code_header(pc);
    write_planar_code(pc, oct);
    std::string p2 = tmp_file(pc.str(), ".pc");
    auto graphs = read_graphs_file(p2, std::nullopt);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].rot == oct.rot);
    std::remove(p2.c_str());

    std::string p3 = tmp_file(write_graph6(oct) + "\n", ".g6");
    PlaneGraph g3 = read_graph_file(p3, Format::graph6);
    CHECK(g3.m == 12);
    std::remove(p3.c_str());
}

TEST_CASE("missing files raise FormatError") {
    CHECK_THROWS_AS(read_graph_file("does_not_exist.rotsys", std::nullopt), FormatError);
}
