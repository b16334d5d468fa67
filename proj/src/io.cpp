#include "quartic/io.hpp"

#include "quartic/embed.hpp"
#include "quartic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace quartic {

PlaneGraph read_rotsys(std::istream& in) {
    std::vector<std::pair<int, std::vector<VertexId>>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        if (head.back() != ':') throw FormatError("rotsys: expected 'v:' at '" + head + "'");
        head.pop_back();
        int v;
        try {
            v = std::stoi(head);
        } catch (...) {
            throw FormatError("rotsys: bad vertex id '" + head + "'");
        }
        std::vector<VertexId> nbrs;
        std::string tok;
        while (ls >> tok) {
            try {
                nbrs.push_back(std::stoi(tok));
            } catch (...) {
                throw FormatError("rotsys: bad neighbor '" + tok + "'");
            }
        }
        lines.push_back({v, std::move(nbrs)});
    }
    if (lines.empty()) throw FormatError("rotsys: empty input");
    int n = 0;
    for (auto& [v, _] : lines) n = std::max(n, v + 1);
    Rot rot(n);
    std::vector<char> seen(n, 0);
    for (auto& [v, nbrs] : lines) {
        if (v < 0) throw FormatError("rotsys: negative vertex id");
        if (seen[v]) throw FormatError("rotsys: duplicate line for vertex " + std::to_string(v));
        seen[v] = 1;
        rot[v] = nbrs;
    }
    for (int v = 0; v < n; v++)
        if (!seen[v]) throw FormatError("rotsys: missing line for vertex " + std::to_string(v));
    try {
        return build(rot);
    } catch (const Error& e) {
        throw FormatError(std::string("rotsys: ") + e.what());
    }
}

std::string write_rotsys(const PlaneGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.n(); v++) {
        os << v << ':';
        for (VertexId w : g.rot[v]) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";
constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

}  // namespace

PlaneGraph read_graph6_line(const std::string& line_in) {
    std::string line = line_in;
    if (line.rfind(kGraph6Header, 0) == 0) line.erase(0, std::string(kGraph6Header).size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw FormatError("graph6: empty line");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw FormatError("graph6: truncated");
        unsigned char c = line[pos++];
        if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");
        return c - 63;
    };
    long long n = next();
    if (n == 63) {
        n = 0;
        for (int i = 0; i < 3; i++) n = (n << 6) | next();
        if (n >= 63 && n < (1 << 18)) {
            // fine: 3-byte size
        } else {
            throw FormatError("graph6: unsupported size encoding");
        }
    }
    if (n > 4096) throw FormatError("graph6: graph too large");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int bits = 0, buf = 0;
    for (VertexId v = 1; v < n; v++)
        for (VertexId u = 0; u < v; u++) {
            if (bits == 0) {
                buf = next();
                bits = 6;
            }
            bits--;
            if (buf >> bits & 1) edges.push_back({u, v});
        }
    if (pos != line.size()) throw FormatError("graph6: trailing bytes");
    return embed(adj_from_edges((int)n, edges));
}

std::vector<PlaneGraph> read_graph6(std::istream& in) {
    std::vector<PlaneGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = line;
        t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
                t.end());
        if (t.empty()) continue;
        out.push_back(read_graph6_line(t));
    }
    if (out.empty()) throw FormatError("graph6: no graphs in input");
    return out;
}

std::string write_graph6(const PlaneGraph& g) {
    int n = g.n();
    std::string s;
    if (n <= 62) {
        s.push_back(char(63 + n));
    } else {
        s.push_back(126);
        s.push_back(char(63 + (n >> 12 & 63)));
        s.push_back(char(63 + (n >> 6 & 63)));
        s.push_back(char(63 + (n & 63)));
    }
    int bits = 0, buf = 0;
    for (VertexId v = 1; v < n; v++)
        for (VertexId u = 0; u < v; u++) {
            buf = buf << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(char(63 + buf));
                bits = 0;
                buf = 0;
            }
        }
    if (bits) s.push_back(char(63 + (buf << (6 - bits))));
    return s;
}

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t pos = 0;
    std::string header = kPlanarCodeHeader;
    if (all.rfind(header, 0) == 0) pos = header.size();
    std::vector<PlaneGraph> out;
    auto byte = [&]() -> int {
        if (pos >= all.size()) throw FormatError("planar_code: truncated");
        return (unsigned char)all[pos++];
    };
    while (pos < all.size()) {
        int n = byte();
        if (n == 0) throw FormatError("planar_code: zero vertex count");
        Rot rot(n);
        for (int v = 0; v < n; v++) {
            while (true) {
                int w = byte();
                if (w == 0) break;
                if (w > n) throw FormatError("planar_code: neighbor out of range");
                rot[v].push_back(w - 1);
            }
        }
        try {
            out.push_back(build(rot));
        } catch (const Error& e) {
            throw FormatError(std::string("planar_code: ") + e.what());
        }
    }
    if (out.empty()) throw FormatError("planar_code: no graphs in input");
    return out;
}

void write_planar_code_header(std::ostream& out) { out << kPlanarCodeHeader; }

void write_planar_code(std::ostream& out, const PlaneGraph& g) {
    if (g.n() > 255) throw FormatError("planar_code: more than 255 vertices");
    out.put(char(g.n()));
    for (int v = 0; v < g.n(); v++) {
        for (VertexId w : g.rot[v]) out.put(char(w + 1));
        out.put(0);
    }
}

std::optional<Format> sniff_format(const std::string& head) {
    if (head.rfind(kPlanarCodeHeader, 0) == 0) return Format::planar_code;
    if (head.rfind(kGraph6Header, 0) == 0) return Format::graph6;
    for (char c : head) {
        if (c == ':') return Format::rotsys;
        if (c == '#' || c == '\n') return Format::rotsys;  // comments only occur in rotsys
    }
    if (!head.empty()) {
        bool printable = true;
        for (unsigned char c : head)
            if (c < 63 || c > 126) printable = false;
        if (printable) return Format::graph6;
    }
    return std::nullopt;
}

std::vector<PlaneGraph> read_graphs_file(const std::string& path, std::optional<Format> fmt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    if (!fmt) {
        std::string head;
        char c;
        while (head.size() < 64 && in.get(c)) head.push_back(c);
        in.clear();
        in.seekg(0);
        // strip one trailing newline for single-line sniffing
        std::string probe = head;
        while (!probe.empty() && (probe.back() == '\n' || probe.back() == '\r')) probe.pop_back();
        fmt = sniff_format(probe.find('\n') == std::string::npos ? probe : head);
        if (!fmt) throw FormatError("cannot determine format of " + path);
    }
    switch (*fmt) {
        case Format::rotsys: {
            std::vector<PlaneGraph> v;
            v.push_back(read_rotsys(in));
            return v;
        }
        case Format::graph6:
            return read_graph6(in);
        case Format::planar_code:
            return read_planar_code(in);
    }
    throw FormatError("unreachable");
}

PlaneGraph read_graph_file(const std::string& path, std::optional<Format> fmt) {
    auto all = read_graphs_file(path, fmt);
    return all.front();
}

}  // namespace quartic
