#pragma once

#include "quartic/plane_graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

enum class Format { rotsys, graph6, planar_code };

// Text rotation systems: one line per vertex, "v: n1 n2 n3 n4" with dense
// 0-based ids; '#' starts a comment, blank lines are skipped.
PlaneGraph read_rotsys(std::istream& in);
std::string write_rotsys(const PlaneGraph& g);

// graph6 (abstract adjacency; an embedding is computed on read).
PlaneGraph read_graph6_line(const std::string& line);
std::vector<PlaneGraph> read_graph6(std::istream& in);
std::string write_graph6(const PlaneGraph& g);

// planar_code, <=255-vertex single-byte variant: optional ">>planar_code<<"
// header, then per graph: byte n, and for each vertex its clockwise
// neighbors as 1-based bytes terminated by 0.
std::vector<PlaneGraph> read_planar_code(std::istream& in);
void write_planar_code_header(std::ostream& out);
void write_planar_code(std::ostream& out, const PlaneGraph& g);

std::optional<Format> sniff_format(const std::string& head);

// Reads a whole file; fmt nullopt -> sniff.
std::vector<PlaneGraph> read_graphs_file(const std::string& path, std::optional<Format> fmt);
PlaneGraph read_graph_file(const std::string& path, std::optional<Format> fmt);

}  // namespace quartic
