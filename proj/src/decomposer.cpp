#include "quartic/decomposer.hpp"

#include "quartic/embed.hpp"
#include "quartic/errors.hpp"
#include "quartic/generation.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/oracle.hpp"
#include "quartic/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <variant>

namespace quartic {

bool is_subdivision(const LengthSequence& l, const UnderlinedPattern& pattern) {
    assert(pattern.lengths.size() == pattern.underlined.size());
    for (int x : l)
        if (x <= 0) return false;
    size_t np = pattern.lengths.size();
    // order is preserved: l must split into consecutive blocks, one per
    // pattern entry; underlined entries forbid splitting
    std::function<bool(size_t, size_t)> match = [&](size_t i, size_t j) -> bool {
        if (i == np) return j == l.size();
        if (j >= l.size()) return false;
        if (pattern.underlined[i]) return l[j] == pattern.lengths[i] && match(i + 1, j + 1);
        int sum = 0;
        for (size_t k = j; k < l.size(); ++k) {
            sum += l[k];
            if (sum > pattern.lengths[i]) break;
            if (sum == pattern.lengths[i] && match(i + 1, k + 1)) return true;
        }
        return false;
    };
    return match(0, 0);
}

namespace {

void check_parts(const LengthSequence& l, int total, int need) {
    for (int x : l)
        if (x < 1 || x > 4) throw BadLengths("part lengths must lie in 1..4");
    if (total != need) {
        std::ostringstream os;
        os << "lengths sum to " << total << ", need " << need;
        throw BadLengths(os.str());
    }
}

// Slices verts (an open or closed walk) at the prefix sums of l.
std::vector<Trail> slice(const std::vector<VertexId>& verts, const LengthSequence& l) {
    std::vector<Trail> out;
    int at = 0;
    for (int len : l) {
        Trail p;
        p.verts.assign(verts.begin() + at, verts.begin() + at + len + 1);
        out.push_back(std::move(p));
        at += len;
    }
    assert(at + 1 == (int)verts.size());
    return out;
}

// Roles x a b c d y = indices 0..5 into of_role.
std::vector<VertexId> role_seq(const char* s, const std::vector<VertexId>& of_role) {
    std::vector<VertexId> out;
    for (; *s; ++s) {
        int i = std::string("xabcdy").find(*s);
        assert(i >= 0 && i < 6);
        out.push_back(of_role[i]);
    }
    return out;
}

bool all_distinct(const Trail& p) {
    std::set<VertexId> s(p.verts.begin(), p.verts.end());
    return s.size() == p.verts.size();
}

}  // namespace

PathDecomposition cut_circuit(const PlaneGraph& g, const Trail& c, const LengthSequence& l,
                              VertexId v) {
    if (!c.closed) throw PreconditionViolated("cut_circuit: open trail");
    if (auto res = verify_circuit(g, c, 4); !res)
        throw PreconditionViolated("cut_circuit: not a good circuit: " + res.diagnostic);
    for (int x : l)
        if (x < 1 || x > 4) throw BadLengths("cut_circuit: part lengths must lie in 1..4");
    int total = std::accumulate(l.begin(), l.end(), 0);
    if (total != c.length()) {
        std::ostringstream os;
        os << "lengths sum to " << total << " but the circuit has " << c.length() << " edges";
        throw LengthMismatch(os.str());
    }
    int pos = -1;
    for (int i = 0; i < c.length() && pos < 0; ++i)
        if (c.verts[i] == v) pos = i;
    if (pos < 0) throw StartVertexAbsent("cut_circuit: start vertex not on the circuit");
    Trail r = rotated(c, pos);
    PathDecomposition d{slice(r.verts, l), v};
    // slices of a 4-locally self-avoiding circuit with <= 4 edges are paths
    for (const auto& p : d.paths) assert(all_distinct(p));
    return d;
}

PathDecomposition f6_decomposition(const LengthSequence& l) {
    check_parts(l, std::accumulate(l.begin(), l.end(), 0), 11);
    std::vector<VertexId> id{0, 1, 2, 3, 4, 5};
    const char* walk = is_subdivision(l, {{3, 4, 4}, {false, true, false}})
                           ? "xadbxcyabcdy"
                           : "xadbcyabxcdy";
    PathDecomposition d{slice(role_seq(walk, id), l), 0};
    for (const auto& p : d.paths) assert(all_distinct(p));
    return d;
}

PathDecomposition octahedron_decomposition(const PlaneGraph& g, const LengthSequence& l,
                                           VertexId v) {
    if (!is_octahedron(g)) throw PreconditionViolated("octahedron_decomposition: wrong graph");
    if (v < 0 || v >= g.n()) throw StartVertexAbsent("octahedron_decomposition: bad start vertex");
    check_parts(l, std::accumulate(l.begin(), l.end(), 0), 12);
    // roles: x = v, d = its antipode, a = any neighbor, c = a's antipode,
    // b and y = the remaining pair (swapping them is an automorphism)
    auto antipode = [&](VertexId u) {
        for (VertexId w = 0; w < 6; ++w)
            if (w != u && !g.has_edge(u, w)) return w;
        return VertexId(-1);
    };
    VertexId x = v, d = antipode(v), a = g.rot[v][0], c = antipode(a);
    VertexId b = -1, y = -1;
    for (VertexId w = 0; w < 6; ++w)
        if (w != x && w != d && w != a && w != c) (b < 0 ? b : y) = w;
    std::vector<VertexId> of_role{x, a, b, c, d, y};
    const char* walk = is_subdivision(l, {{3, 4, 5}, {false, true, false}})   ? "xadcbxydbaycx"
                       : is_subdivision(l, {{5, 4, 3}, {false, true, false}}) ? "xcyabdyxbcdax"
                                                                              : "xadbcyxbaydcx";
    PathDecomposition out{slice(role_seq(walk, of_role), l), v};
    assert(verify_decomposition(g, out, l, v));
    return out;
}

namespace {

// One obstruction copy inside a larger quartic graph, role order x a b c d y.
// x and y have one edge each leaving the copy, a b c d none.
struct F6Copy {
    std::array<VertexId, 6> role;
};

// Role assignment for a candidate 6-set, or nullopt. In a quartic graph any
// obstruction subgraph is induced unless the whole graph is the octahedron,
// so checking induced copies is enough here.
std::optional<F6Copy> assign_roles(const PlaneGraph& g, const std::vector<VertexId>& t) {
    std::array<int, 6> deg{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j && g.has_edge(t[i], t[j])) ++deg[i];
    std::vector<int> d3;
    for (int i = 0; i < 6; ++i) {
        if (deg[i] == 3) d3.push_back(i);
        else if (deg[i] != 4) return std::nullopt;
    }
    if (d3.size() != 2) return std::nullopt;
    VertexId x = t[d3[0]], y = t[d3[1]];
    if (g.has_edge(x, y)) return std::nullopt;
    VertexId b = -1, d = -1;
    std::vector<VertexId> ac;
    for (int i = 0; i < 6; ++i) {
        VertexId u = t[i];
        if (u == x || u == y) continue;
        bool ux = g.has_edge(u, x), uy = g.has_edge(u, y);
        if (ux && uy) ac.push_back(u);
        else if (ux) b = u;      // adjacent to x only: misses y
        else if (uy) d = u;      // adjacent to y only: misses x
        else return std::nullopt;
    }
    if (b < 0 || d < 0 || ac.size() != 2) return std::nullopt;
    VertexId a = ac[0], c = ac[1];
    if (g.has_edge(a, c)) return std::nullopt;
    // the eleven edges; the four non-adjacencies were checked above
    const std::array<std::pair<VertexId, VertexId>, 11> req{{{x, a},
                                                             {x, b},
                                                             {x, c},
                                                             {y, a},
                                                             {y, c},
                                                             {y, d},
                                                             {a, b},
                                                             {a, d},
                                                             {b, c},
                                                             {b, d},
                                                             {c, d}}};
    for (auto [p, q] : req)
        if (!g.has_edge(p, q)) return std::nullopt;
    return F6Copy{{x, a, b, c, d, y}};
}

// All induced obstruction copies. In quartic planar graphs distinct copies
// are vertex disjoint; overlap means a caller precondition broke.
std::vector<F6Copy> find_f6_copies(const PlaneGraph& g) {
    std::vector<F6Copy> out;
    std::set<std::vector<VertexId>> seen;
    for (VertexId u = 0; u < g.n(); ++u) {
        if ((int)g.rot[u].size() != 4) continue;
        std::vector<VertexId> s{u};
        s.insert(s.end(), g.rot[u].begin(), g.rot[u].end());
        for (VertexId w = 0; w < g.n(); ++w) {
            if (std::find(s.begin(), s.end(), w) != s.end()) continue;
            std::vector<VertexId> t = s;
            t.push_back(w);
            std::vector<VertexId> key = t;
            std::sort(key.begin(), key.end());
            if (seen.count(key)) continue;
            if (auto copy = assign_roles(g, t)) {
                seen.insert(key);
                out.push_back(*copy);
            }
        }
    }
    std::vector<char> hit(g.n(), 0);
    for (const auto& c : out)
        for (VertexId u : c.role) {
            if (hit[u]) throw InternalCaseExhaustion("p_decomposition: overlapping copies");
            hit[u] = 1;
        }
    return out;
}

// g with every copy swapped for a copy-free filler: the 4-antiprism minus
// one edge, quartic except the two entry vertices, order 8 > 6. hx/hy are
// the filler vertices standing in for each copy's x and y.
struct GPrime {
    PlaneGraph h;
    std::vector<int> gadget_of;    // h id -> copy index or -1
    std::vector<VertexId> old_of;  // h id -> g id for untouched vertices, else -1
    std::vector<VertexId> new_of;  // g id -> h id, -1 inside copies
    std::vector<VertexId> hx, hy;  // per copy
};

GPrime build_gprime(const PlaneGraph& g, const std::vector<F6Copy>& copies) {
    std::vector<int> in_copy(g.n(), -1);
    for (size_t i = 0; i < copies.size(); ++i)
        for (VertexId u : copies[i].role) in_copy[u] = (int)i;
    GPrime gp;
    gp.new_of.assign(g.n(), -1);
    VertexId next = 0;
    for (VertexId u = 0; u < g.n(); ++u)
        if (in_copy[u] < 0) gp.new_of[u] = next++;
    const int n_out = next;
    PlaneGraph ap = antiprism(4);
    auto [ru, rv] = ap.edges[0];  // dropped edge, its ends become the entries
    const int c = (int)copies.size();
    auto base = [&](int i) { return n_out + 8 * i; };
    gp.hx.resize(c);
    gp.hy.resize(c);
    for (int i = 0; i < c; ++i) {
        gp.hx[i] = base(i) + ru;
        gp.hy[i] = base(i) + rv;
    }
    auto resolve = [&](VertexId u) -> VertexId {
        int i = in_copy[u];
        if (i < 0) return gp.new_of[u];
        if (u == copies[i].role[0]) return gp.hx[i];
        if (u == copies[i].role[5]) return gp.hy[i];
        throw InternalCaseExhaustion("p_decomposition: edge leaves a copy interior");
    };
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [u, w] : g.edges) {
        if (in_copy[u] >= 0 && in_copy[u] == in_copy[w]) continue;
        es.emplace_back(resolve(u), resolve(w));
    }
    for (int i = 0; i < c; ++i)
        for (size_t e = 1; e < ap.edges.size(); ++e)
            es.emplace_back(base(i) + ap.edges[e].first, base(i) + ap.edges[e].second);
    try {
        gp.h = embed(adj_from_edges(n_out + 8 * c, es));
    } catch (const NotPlanar&) {
        throw InternalCaseExhaustion("p_decomposition: replacement lost planarity");
    }
    gp.gadget_of.assign(gp.h.n(), -1);
    gp.old_of.assign(gp.h.n(), -1);
    for (VertexId u = 0; u < g.n(); ++u)
        if (gp.new_of[u] >= 0) gp.old_of[gp.new_of[u]] = u;
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < 8; ++j) gp.gadget_of[base(i) + j] = i;
    return gp;
}

enum class SpliceStart {
    Plain,      // start anywhere valid for the requested vertex
    CopyFirst,  // walk opens by running through the focus copy, entering at x
    CopyLast,   // walk closes with the focus copy, entering at x and ending at y
};

// Good circuit of the replaced graph, walked back in g with each filler
// traversal swapped for the 11-edge obstruction decomposition of the residual
// length window. Total edges emitted: m(g) = sum of l.
PathDecomposition splice_decomposition(const PlaneGraph& g, const std::vector<F6Copy>& copies,
                                       const LengthSequence& l, VertexId start, SpliceStart mode,
                                       int focus) {
    GPrime gp = build_gprime(g, copies);
    if (find_f6(gp.h))
        throw InternalCaseExhaustion("p_decomposition: replacement kept an obstruction");
    SolveOutcome oc = good_circuit(gp.h);
    auto* gc = std::get_if<GoodCircuit>(&oc);
    if (!gc) throw InternalCaseExhaustion("p_decomposition: replaced graph did not solve");
    const int L = gc->circuit.length();
    std::vector<VertexId> ring(gc->circuit.verts.begin(), gc->circuit.verts.begin() + L);
    auto at = [&](int i) { return ring[((i % L) + L) % L]; };
    auto gad = [&](VertexId u) { return gp.gadget_of[u]; };

    // each filler occupies 16 consecutive slots, an Euler trail between its
    // two entry vertices
    const int c = (int)copies.size();
    std::vector<int> seg_start(c, -1);
    std::vector<int> slots(c, 0);
    for (int t = 0; t < L; ++t) {
        int i = gad(at(t));
        if (i < 0) continue;
        ++slots[i];
        if (gad(at(t - 1)) != i) {
            if (seg_start[i] >= 0)
                throw InternalCaseExhaustion("p_decomposition: filler not contiguous");
            seg_start[i] = t;
        }
    }
    for (int i = 0; i < c; ++i)
        if (seg_start[i] < 0 || slots[i] != 16)
            throw InternalCaseExhaustion("p_decomposition: filler traversal malformed");

    int s = -1, dir = 1;
    if (mode == SpliceStart::Plain) {
        VertexId target = -1;
        int ic = -1;
        for (size_t i = 0; i < copies.size() && ic < 0; ++i) {
            if (copies[i].role[0] == start) { target = gp.hx[i]; ic = (int)i; }
            if (copies[i].role[5] == start) { target = gp.hy[i]; ic = (int)i; }
        }
        if (ic < 0) {
            if (gp.new_of[start] < 0)
                throw InternalCaseExhaustion("p_decomposition: start inside a copy interior");
            target = gp.new_of[start];
        }
        for (int t = 0; t < L && s < 0; ++t) {
            if (at(t) != target) continue;
            int gi = gad(at(t));
            if (gi >= 0 && gad(at(t - 1)) == gi && gad(at(t + 1)) == gi) continue;
            s = t;
        }
        if (s < 0) throw InternalCaseExhaustion("p_decomposition: start not on the circuit");
    } else {
        bool fwd_x = at(seg_start[focus]) == gp.hx[focus];
        if (mode == SpliceStart::CopyFirst) {
            s = fwd_x ? seg_start[focus] : seg_start[focus] + 15;
            dir = fwd_x ? 1 : -1;
        } else {
            s = fwd_x ? seg_start[focus] + 15 : seg_start[focus];
            dir = fwd_x ? 1 : -1;
        }
    }
    auto w = [&](int t) { return at(s + dir * t); };

    auto end_image = [&](int i, VertexId u) -> VertexId {
        if (u == gp.hx[i]) return copies[i].role[0];
        if (u == gp.hy[i]) return copies[i].role[5];
        throw InternalCaseExhaustion("p_decomposition: entered a filler mid-trail");
    };
    auto image = [&](VertexId u) {
        int i = gad(u);
        return i < 0 ? gp.old_of[u] : end_image(i, u);
    };

    const int k = (int)l.size();
    std::vector<Trail> paths;
    int idx = 0, have = 0;
    std::vector<VertexId> pv{image(w(0))};
    auto emit_edge = [&](VertexId u) {
        pv.push_back(u);
        if (++have == l[idx]) {
            paths.push_back(Trail{pv, false});
            ++idx;
            have = 0;
            pv = {u};
        }
    };
    auto emit_copy = [&](int i, bool entered_x) {
        LengthSequence lf;
        int acc = 0, ci = idx, chave = have;
        while (acc < 11) {
            int r = std::min(l[ci] - chave, 11 - acc);
            lf.push_back(r);
            acc += r;
            chave += r;
            if (chave == l[ci]) { ++ci; chave = 0; }
        }
        PathDecomposition pd = f6_decomposition(lf);
        const auto& ro = copies[i].role;
        // entering at y composes with the swap automorphism (x y)(b d)
        std::array<VertexId, 6> map = entered_x
                                          ? ro
                                          : std::array<VertexId, 6>{ro[5], ro[1], ro[4], ro[3],
                                                                    ro[2], ro[0]};
        for (const auto& p : pd.paths) {
            assert(map[p.verts.front()] == pv.back());
            for (size_t j = 1; j < p.verts.size(); ++j) emit_edge(map[p.verts[j]]);
        }
    };

    std::vector<char> consumed(c, 0);
    int pos = 0;
    if (int g0 = gad(w(0)); g0 >= 0 && gad(w(1)) == g0) {
        // the walk opens inside a filler; its entry edge arrives at the wrap
        consumed[g0] = 1;
        emit_copy(g0, w(0) == gp.hx[g0]);
        pos = 15;
    }
    while (pos < L) {
        VertexId b = w(pos + 1);
        int gb = gad(b);
        if (gb >= 0 && gb == gad(w(pos)))
            throw InternalCaseExhaustion("p_decomposition: walk re-entered a filler");
        emit_edge(gb < 0 ? gp.old_of[b] : end_image(gb, b));
        if (gb >= 0 && !consumed[gb]) {
            consumed[gb] = 1;
            emit_copy(gb, b == gp.hx[gb]);
            pos += 16;
        } else {
            pos += 1;
        }
    }
    if (idx != k || have != 0 || pos != L)
        throw InternalCaseExhaustion("p_decomposition: walk did not close on the lengths");
    return PathDecomposition{std::move(paths), start};
}

bool connected(const PlaneGraph& g) {
    if (g.n() == 0) return true;
    std::vector<char> vis(g.n(), 0);
    std::vector<VertexId> st{0};
    vis[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        VertexId u = st.back();
        st.pop_back();
        for (VertexId x : g.rot[u])
            if (!vis[x]) {
                vis[x] = 1;
                ++cnt;
                st.push_back(x);
            }
    }
    return cnt == g.n();
}

}  // namespace

PathDecomposition p_decomposition(const PlaneGraph& g, const LengthSequence& l, VertexId v) {
    if (v < 0 || v >= g.n()) throw StartVertexAbsent("p_decomposition: start vertex out of range");
    for (int x : l)
        if (x < 1 || x > 4) throw BadLengths("p_decomposition: part lengths must lie in 1..4");
    if (!g.is_quartic()) throw PreconditionViolated("p_decomposition: quartic input required");
    int total = std::accumulate(l.begin(), l.end(), 0);
    if (total != g.m) {
        std::ostringstream os;
        os << "lengths sum to " << total << " but the graph has " << g.m << " edges";
        throw LengthMismatch(os.str());
    }
    if (!connected(g)) throw Disconnected("p_decomposition: graph is not connected");
    if (is_octahedron(g)) return octahedron_decomposition(g, l, v);
    SolveOutcome oc = good_circuit(g);
    if (auto* gc = std::get_if<GoodCircuit>(&oc)) return cut_circuit(g, gc->circuit, l, v);
    if (!std::holds_alternative<ObstructedByF6>(oc))
        throw InternalCaseExhaustion("p_decomposition: solver disagreed on connectivity");

    std::vector<F6Copy> copies = find_f6_copies(g);
    if (copies.empty())
        throw InternalCaseExhaustion("p_decomposition: obstructed but no induced copy");
    int j = -1, r = -1;
    for (size_t i = 0; i < copies.size() && j < 0; ++i)
        for (int q = 0; q < 6; ++q)
            if (copies[i].role[q] == v) {
                j = (int)i;
                r = q;
                break;
            }
    PathDecomposition out{{}, v};
    const int k = (int)l.size();
    if (j >= 0 && r >= 1 && r <= 4) {
        // v has degree 4 inside a copy, so it vanishes under replacement.
        // Normalize its role to a or d via the copy automorphisms (a c) and
        // (x y)(b d), then start the walk one edge off the copy boundary.
        auto& ro = copies[j].role;
        if (r == 3) { std::swap(ro[1], ro[3]); r = 1; }
        if (r == 2) {
            std::swap(ro[0], ro[5]);
            std::swap(ro[2], ro[4]);
            r = 4;
        }
        if (r == 1) {
            // first edge of the walk through the copy is x->v; shift by one
            LengthSequence lp{1};
            lp.insert(lp.end(), l.begin(), l.end());
            if (--lp.back() == 0) lp.pop_back();
            PathDecomposition sub =
                splice_decomposition(g, copies, lp, ro[0], SpliceStart::CopyFirst, j);
            auto& q = sub.paths;
            assert(q.front().length() == 1 && q.front().verts[1] == v);
            out.paths.assign(q.begin() + 1, q.end());
            if (l.back() == 1) {
                out.paths.push_back(q.front());
            } else {
                out.paths.back().verts.push_back(v);
            }
        } else {
            // last edge of the walk through the copy is v->y; shift back one
            LengthSequence lp = l;
            if (--lp.front() == 0) lp.erase(lp.begin());
            lp.push_back(1);
            PathDecomposition sub =
                splice_decomposition(g, copies, lp, ro[5], SpliceStart::CopyLast, j);
            auto& q = sub.paths;
            assert(q.back().length() == 1 && q.back().verts[0] == v);
            out.paths = {q.back()};
            if (l.front() == 1) {
                out.paths.insert(out.paths.end(), q.begin(), q.end() - 1);
            } else {
                out.paths.front().verts.insert(out.paths.front().verts.end(),
                                               q.front().verts.begin() + 1, q.front().verts.end());
                out.paths.insert(out.paths.end(), q.begin() + 1, q.end() - 1);
            }
        }
        assert((int)out.paths.size() == k);
    } else {
        out = splice_decomposition(g, copies, l, v, SpliceStart::Plain, -1);
    }
    (void)k;
    if (auto chk = verify_decomposition(g, out, l, v); !chk)
        throw InternalCaseExhaustion("p_decomposition: self check failed: " + chk.diagnostic);
    return out;
}

DecompositionCheck verify_decomposition(const PlaneGraph& g, const PathDecomposition& d,
                                        const LengthSequence& l, VertexId v) {
    if (d.v != v) return {false, "recorded start vertex differs"};
    if (v < 0 || v >= g.n()) return {false, "start vertex out of range"};
    if (d.paths.size() != l.size()) return {false, "path count does not match length count"};
    if (d.paths.empty()) return {false, "empty decomposition"};
    for (size_t i = 0; i < d.paths.size(); ++i) {
        const Trail& p = d.paths[i];
        std::ostringstream os;
        os << "path " << i << ": ";
        if (p.closed) return {false, os.str() + "marked closed"};
        if (p.length() != l[i]) return {false, os.str() + "wrong length"};
        if (auto defect = trail_defect(g, p)) return {false, os.str() + *defect};
        if (!all_distinct(p)) return {false, os.str() + "repeats a vertex"};
    }
    if (d.paths.front().verts.front() != v) return {false, "first path does not start at v"};
    if (d.paths.back().verts.back() != v) return {false, "last path does not end at v"};
    std::vector<VertexId> verts = d.paths.front().verts;
    for (size_t i = 1; i < d.paths.size(); ++i) {
        if (d.paths[i].verts.front() != verts.back()) {
            std::ostringstream os;
            os << "path " << i << " does not continue where path " << i - 1 << " ended";
            return {false, os.str()};
        }
        verts.insert(verts.end(), d.paths[i].verts.begin() + 1, d.paths[i].verts.end());
    }
    if (auto res = verify_circuit(g, Trail{std::move(verts), true}, 0); !res)
        return {false, "concatenation: " + res.diagnostic};
    return {true, {}};
}

}  // namespace quartic
