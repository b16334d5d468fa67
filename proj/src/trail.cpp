#include "quartic/trail.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace quartic {

Trail reversed(const Trail& t) {
    Trail r = t;
    std::reverse(r.verts.begin(), r.verts.end());
    return r;
}

Trail rotated(const Trail& t, int k) {
    assert(t.closed && !t.verts.empty());
    int L = t.length();
    k = ((k % L) + L) % L;
    Trail r;
    r.closed = true;
    r.verts.reserve(L + 1);
    for (int i = 0; i <= L; i++) r.verts.push_back(t.verts[(k + i) % L]);
    return r;
}

std::string to_string(const Trail& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.verts.size(); i++) {
        if (i) os << ' ';
        os << t.verts[i];
    }
    return os.str();
}

std::optional<std::string> trail_defect(const PlaneGraph& g, const Trail& t) {
    if (t.verts.empty()) return "empty trail";
    if (t.closed && t.verts.front() != t.verts.back()) return "closed trail does not return to start";
    std::vector<char> used(g.m, 0);
    for (int i = 0; i + 1 < (int)t.verts.size(); i++) {
        VertexId u = t.verts[i], v = t.verts[i + 1];
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) return "vertex out of range";
        int e = g.edge_id(u, v);
        if (e < 0)
            return "non-adjacent step " + std::to_string(u) + "-" + std::to_string(v) +
                   " at position " + std::to_string(i);
        if (used[e])
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated at position " +
                   std::to_string(i);
        used[e] = 1;
    }
    return std::nullopt;
}

bool has_short_subcycle(const PlaneGraph& g, const Trail& t, int k) {
    (void)g;
    int L = t.length();
    if (L <= 0) return false;
    // positions 0..L-1 are the cyclic vertex slots for a closed trail;
    // for open trails no wrap.
    auto vat = [&](int i) { return t.verts[t.closed ? (i % L) : i]; };
    int last_start = t.closed ? L - 1 : L - 2;
    for (int i = 0; i <= last_start; i++) {
        int max_len = std::min(k, t.closed ? L : L - i);
        for (int len = 2; len <= max_len; len++) {
            if (!t.closed && i + len > L) break;
            if (vat(i) != vat(i + len)) continue;
            bool distinct = true;
            for (int a = 0; a < len && distinct; a++)
                for (int b = a + 1; b < len; b++)
                    if (vat(i + a) == vat(i + b)) {
                        distinct = false;
                        break;
                    }
            if (distinct) return true;
        }
    }
    return false;
}

bool window_check_4(const Trail& t) {
    int L = t.length();
    if (L <= 0) return true;
    if (t.closed) {
        for (int i = 0; i < L; i++) {
            if (t.verts[i] == t.verts[(i + 3) % L]) return false;
            if (t.verts[i] == t.verts[(i + 4) % L]) return false;
        }
    } else {
        for (int i = 0; i + 3 <= L; i++)
            if (t.verts[i] == t.verts[i + 3]) return false;
        for (int i = 0; i + 4 <= L; i++)
            if (t.verts[i] == t.verts[i + 4]) return false;
    }
    return true;
}

std::vector<int> trail_edge_ids(const PlaneGraph& g, const Trail& t) {
    std::vector<int> out;
    for (int i = 0; i + 1 < (int)t.verts.size(); i++) {
        int e = g.edge_id(t.verts[i], t.verts[i + 1]);
        assert(e >= 0);
        out.push_back(e);
    }
    return out;
}

} // namespace quartic
