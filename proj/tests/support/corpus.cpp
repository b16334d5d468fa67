#include "corpus.hpp"

#include "quartic/errors.hpp"
#include "quartic/obstructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>

namespace quartic::testsup {

PlaneGraph octahedron() {
    return antiprism(3);
}

PlaneGraph f6_graph() {
    return f6_pattern().g;
}

const std::vector<PlaneGraph>& all_3connected(int n_max) {
    static std::map<int, std::vector<PlaneGraph>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n_max);
    if (it == cache.end()) it = cache.emplace(n_max, generate(n_max)).first;
    return it->second;
}

namespace {

Rot shifted_union(const PlaneGraph& a, const PlaneGraph& b, int extra) {
    Rot r(a.n() + b.n() + extra);
    for (VertexId v = 0; v < a.n(); ++v) r[v] = a.rot[v];
    for (VertexId v = 0; v < b.n(); ++v) {
        r[a.n() + v] = b.rot[v];
        for (VertexId& w : r[a.n() + v]) w += a.n();
    }
    return r;
}

}  // namespace

PlaneGraph disjoint_union(const PlaneGraph& a, const PlaneGraph& b) {
    return build(shifted_union(a, b, 0));
}

PlaneGraph join_cutvertex(const PlaneGraph& a, int ea, const PlaneGraph& b, int eb) {
    auto [a1, b1] = a.edges[ea];
    VertexId c1 = b.edges[eb].first + a.n(), d1 = b.edges[eb].second + a.n();
    VertexId x = a.n() + b.n();
    Rot base = shifted_union(a, b, 1);
    rot_replace(base, a1, b1, x);
    rot_replace(base, b1, a1, x);
    rot_replace(base, c1, d1, x);
    rot_replace(base, d1, c1, x);
    // some rotation at the new vertex embeds; try the necklaces with a1 first
    const VertexId o[3][3] = {{b1, c1, d1}, {b1, d1, c1}, {c1, b1, d1}};
    for (const auto& perm : o) {
        base[x] = {a1, perm[0], perm[1], perm[2]};
        try {
            return build(base);
        } catch (const NotPlanar&) {
        }
    }
    throw NotPlanar("join_cutvertex: no planar rotation at the joint");
}

PlaneGraph join_two_edge_cut(const PlaneGraph& a, int ea, const PlaneGraph& b, int eb) {
    auto [a1, b1] = a.edges[ea];
    VertexId c1 = b.edges[eb].first + a.n(), d1 = b.edges[eb].second + a.n();
    for (int flip = 0; flip < 2; ++flip) {
        VertexId p = flip ? d1 : c1, q = flip ? c1 : d1;
        Rot base = shifted_union(a, b, 0);
        rot_replace(base, a1, b1, p);
        rot_replace(base, p, q, a1);
        rot_replace(base, b1, a1, q);
        rot_replace(base, q, p, b1);
        try {
            return build(base);
        } catch (const NotPlanar&) {
        }
    }
    throw NotPlanar("join_two_edge_cut: neither pairing embeds");
}

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    int add() { return n++; }
    void e(int u, int v) { edges.push_back({u, v}); }
};

// Copies g into b minus dropped vertices/edges; returns the id map.
std::vector<int> add_copy(Builder& b, const PlaneGraph& g, const std::vector<VertexId>& drop_v,
                          const std::vector<int>& drop_e) {
    std::vector<int> map(g.n(), -1);
    auto dropped_v = [&](VertexId v) {
        return std::find(drop_v.begin(), drop_v.end(), v) != drop_v.end();
    };
    for (int v = 0; v < g.n(); ++v)
        if (!dropped_v(v)) map[v] = b.add();
    for (int e = 0; e < g.m; ++e) {
        auto [u, v] = g.edges[e];
        if (dropped_v(u) || dropped_v(v)) continue;
        if (std::find(drop_e.begin(), drop_e.end(), e) != drop_e.end()) continue;
        b.e(map[u], map[v]);
    }
    return map;
}

PlaneGraph finish(const Builder& b) {
    return embed(adj_from_edges(b.n, b.edges));
}

}  // namespace

PlaneGraph join_two_vertex_cut(const PlaneGraph& a, VertexId va, const PlaneGraph& b,
                               VertexId vb) {
    Builder bl;
    int x = bl.add(), y = bl.add();
    auto ma = add_copy(bl, a, {va}, {});
    auto mb = add_copy(bl, b, {vb}, {});
    bl.e(x, ma[a.rot[va][0]]);
    bl.e(x, ma[a.rot[va][1]]);
    bl.e(y, ma[a.rot[va][2]]);
    bl.e(y, ma[a.rot[va][3]]);
    bl.e(x, mb[b.rot[vb][0]]);
    bl.e(x, mb[b.rot[vb][1]]);
    bl.e(y, mb[b.rot[vb][2]]);
    bl.e(y, mb[b.rot[vb][3]]);
    return finish(bl);
}

std::vector<LowConnInstance> junction_corpus() {
    std::vector<LowConnInstance> out;
    auto push = [&](const Builder& b, const std::string& recipe) {
        out.push_back({finish(b), false, recipe});
    };

    // far side: antiprism(kb) minus its edge 0, joined through the cut
    auto far_side = [](Builder& b, int kb, VertexId x, VertexId y) {
        PlaneGraph B = antiprism(kb);
        auto eb = B.edges[0];
        auto mb = add_copy(b, B, {}, {0});
        b.e(x, mb[eb.first]);
        b.e(y, mb[eb.second]);
    };

    for (auto [ka, kb] : {std::pair{3, 3}, {3, 4}, {4, 4}})
        out.push_back({join_two_vertex_cut(antiprism(ka), 0, antiprism(kb), 0), false,
                       "2vcut A" + std::to_string(ka) + "/A" + std::to_string(kb)});

    for (int k : {3, 4}) {
        // halves of the 2-vertex cut share the neighbour v on one side
        Builder b;
        int x = b.add(), y = b.add(), v = b.add();
        PlaneGraph A = antiprism(k);
        auto ma = add_copy(b, A, {0}, {});
        b.e(x, v);
        b.e(y, v);
        b.e(v, ma[A.rot[0][0]]);
        b.e(v, ma[A.rot[0][1]]);
        b.e(x, ma[A.rot[0][2]]);
        b.e(y, ma[A.rot[0][3]]);
        PlaneGraph B = antiprism(4);
        auto mb = add_copy(b, B, {0}, {});
        b.e(x, mb[B.rot[0][0]]);
        b.e(x, mb[B.rot[0][1]]);
        b.e(y, mb[B.rot[0][2]]);
        b.e(y, mb[B.rot[0][3]]);
        push(b, "2vcut shared neighbour, A" + std::to_string(k));
    }

    for (int kb : {4, 5}) {
        // adjacent cut ends, no common neighbour
        Builder b;
        PlaneGraph A = antiprism(4);
        int x = b.add(), y = b.add();
        auto ma = add_copy(b, A, {0}, {});
        b.e(x, y);
        b.e(x, ma[A.rot[0][0]]);
        b.e(x, ma[A.rot[0][1]]);
        b.e(y, ma[A.rot[0][2]]);
        b.e(y, ma[A.rot[0][3]]);
        far_side(b, kb, x, y);
        push(b, "edgecut adjacent ends, far A" + std::to_string(kb));
    }

    for (int kb : {4, 5}) {
        // one common neighbour: triangle x,y,v over a vertex-deleted antiprism
        Builder b;
        PlaneGraph A = antiprism(4);
        int x = b.add(), y = b.add(), v = b.add();
        auto ma = add_copy(b, A, {0}, {});
        b.e(x, y);
        b.e(x, v);
        b.e(y, v);
        b.e(v, ma[A.rot[0][0]]);
        b.e(v, ma[A.rot[0][1]]);
        b.e(x, ma[A.rot[0][2]]);
        b.e(y, ma[A.rot[0][3]]);
        far_side(b, kb, x, y);
        push(b, "edgecut one common neighbour, far A" + std::to_string(kb));
    }

    for (int ka : {3, 4}) {
        // two nonadjacent common neighbours: K4 minus vw over a split antiprism
        Builder b;
        PlaneGraph A = antiprism(ka);
        int x = b.add(), y = b.add(), v = b.add(), w = b.add();
        auto ma = add_copy(b, A, {0}, {});
        b.e(x, y);
        b.e(x, v);
        b.e(x, w);
        b.e(y, v);
        b.e(y, w);
        b.e(v, ma[A.rot[0][0]]);
        b.e(v, ma[A.rot[0][1]]);
        b.e(w, ma[A.rot[0][2]]);
        b.e(w, ma[A.rot[0][3]]);
        far_side(b, 4, x, y);
        push(b, "edgecut two common neighbours, A" + std::to_string(ka));
    }

    for (int kb : {4, 5}) {
        // K4 on the cut ends, common neighbours adjacent
        Builder b;
        PlaneGraph A = antiprism(4);
        int x = b.add(), y = b.add(), v = b.add(), w = b.add();
        auto ea = A.edges[0];
        auto ma = add_copy(b, A, {}, {0});
        b.e(x, y);
        b.e(x, v);
        b.e(x, w);
        b.e(y, v);
        b.e(y, w);
        b.e(v, w);
        b.e(v, ma[ea.first]);
        b.e(w, ma[ea.second]);
        far_side(b, kb, x, y);
        push(b, "edgecut K4 junction, far A" + std::to_string(kb));
    }

    for (int ka : {4, 5}) {
        // obstruction minus one edge at the cut; roles x=0 a=1 b=2 c=3 d=4 y=5,
        // cut ends on the removed edge (a,d)
        Builder b;
        int fx = b.add(), fa = b.add(), fb = b.add(), fc = b.add(), fd = b.add(), fy = b.add();
        for (auto [u, v] : std::vector<std::pair<int, int>>{{fx, fa},
                                                            {fx, fb},
                                                            {fx, fc},
                                                            {fy, fa},
                                                            {fy, fc},
                                                            {fy, fd},
                                                            {fa, fb},
                                                            {fb, fc},
                                                            {fc, fd},
                                                            {fb, fd}})
            b.e(u, v);
        PlaneGraph A = antiprism(ka);
        auto ea = A.edges[0];
        auto ma = add_copy(b, A, {}, {0});
        b.e(fx, ma[ea.first]);
        b.e(fy, ma[ea.second]);
        far_side(b, 4, fa, fd);
        push(b, "edgecut obstruction-minus-edge junction, A" + std::to_string(ka));
    }

    {
        // rings of pieces: nested 2-edge cuts
        for (int parts : {3, 4}) {
            Builder b;
            std::vector<std::pair<int, int>> ends;
            for (int i = 0; i < parts; ++i) {
                PlaneGraph A = antiprism(4);
                auto ea = A.edges[0];
                auto ma = add_copy(b, A, {}, {0});
                ends.push_back({ma[ea.first], ma[ea.second]});
            }
            for (size_t i = 0; i < ends.size(); ++i)
                b.e(ends[i].second, ends[(i + 1) % ends.size()].first);
            push(b, "ring of " + std::to_string(parts) + " pieces");
        }
    }
    return out;
}

PendantSide pendant_side(int k) {
    PlaneGraph g = antiprism(k);
    Rot r = g.rot;
    VertexId hx = g.n(), hy = g.n() + 1;
    r.push_back({g.rot[0][0], g.rot[0][1]});
    r.push_back({g.rot[0][2], g.rot[0][3]});
    rot_replace(r, g.rot[0][0], 0, hx);
    rot_replace(r, g.rot[0][1], 0, hx);
    rot_replace(r, g.rot[0][2], 0, hy);
    rot_replace(r, g.rot[0][3], 0, hy);
    r[0].clear();
    auto c1 = rot_compact(r);
    PlaneGraph side = build(c1.first);
    VertexId sx = -1, sy = -1;
    for (int i = 0; i < side.n(); ++i) {
        if (c1.second[i] == hx) sx = i;
        if (c1.second[i] == hy) sy = i;
    }
    SplitResult a = split_vertex(side, sx);
    SplitResult b = split_vertex(a.g, sy);
    auto c2 = rot_compact(b.g.rot);
    PendantSide ps;
    ps.L = build(c2.first);
    std::vector<int> newid(b.g.n(), -1);
    for (int i = 0; i < (int)c2.second.size(); ++i) newid[c2.second[i]] = i;
    ps.x1 = newid[a.pendants[0]];
    ps.x2 = newid[a.pendants[1]];
    ps.y1 = newid[b.pendants[0]];
    ps.y2 = newid[b.pendants[1]];
    return ps;
}

std::optional<std::pair<Trail, Trail>> random_trail_pair(const PendantSide& ps,
                                                         std::mt19937& rng) {
    const PlaneGraph& L = ps.L;
    // pair the four incident edges at every internal vertex
    std::vector<std::array<int, 4>> mate(L.n(), {-1, -1, -1, -1});
    for (VertexId v = 0; v < L.n(); ++v) {
        if (L.deg(v) != 4) continue;
        std::array<int, 4> idx{0, 1, 2, 3};
        std::shuffle(idx.begin(), idx.end(), rng);
        mate[v][idx[0]] = idx[1];
        mate[v][idx[1]] = idx[0];
        mate[v][idx[2]] = idx[3];
        mate[v][idx[3]] = idx[2];
    }
    auto slot_of = [&](VertexId v, VertexId nb) {
        for (int i = 0; i < (int)L.rot[v].size(); ++i)
            if (L.rot[v][i] == nb) return i;
        return -1;
    };
    int used = 0;
    auto walk = [&](VertexId start) {
        Trail t;
        t.verts.push_back(start);
        VertexId prev = start, cur = L.rot[start][0];
        ++used;
        while (L.deg(cur) == 4) {
            t.verts.push_back(cur);
            int in = slot_of(cur, prev);
            int out = mate[cur][in];
            prev = cur;
            cur = L.rot[cur][out];
            ++used;
        }
        t.verts.push_back(cur);
        return t;
    };
    Trail t1 = walk(ps.x1);
    VertexId other = t1.verts.back() == ps.x2 ? ps.y1 : ps.x2;
    Trail t2 = walk(other);
    if (used != L.m) return std::nullopt;  // a closed tour was left over
    for (const Trail* t : {&t1, &t2})
        if (trail_defect(L, *t) || has_short_subcycle(L, *t, 4)) return std::nullopt;
    return std::make_pair(t1, t2);
}

std::vector<LowConnInstance> low_connectivity_corpus(int at_least) {
    std::vector<PlaneGraph> pieces{octahedron(), antiprism(4), antiprism(5), antiprism(6)};
    std::vector<std::string> names{"oct", "A4", "A5", "A6"};
    std::vector<LowConnInstance> out;

    auto push = [&](PlaneGraph g, bool obstructed, std::string recipe) {
        out.push_back({std::move(g), obstructed, std::move(recipe)});
    };
    auto name2 = [&](const char* op, size_t i, size_t j, int ea, int eb) {
        std::ostringstream os;
        os << names[i] << " " << op << "(" << ea << "," << eb << ") " << names[j];
        return os.str();
    };

    // pairwise joins over a spread of attachment edges
    for (size_t i = 0; i < pieces.size() && (int)out.size() < at_least; ++i) {
        for (size_t j = i; j < pieces.size() && (int)out.size() < at_least; ++j) {
            bool obs = i == 0 || j == 0;  // removing one octahedron edge leaves the obstruction
            for (int ea = 0; ea < pieces[i].m; ea += 3) {
                for (int eb = 0; eb < pieces[j].m; eb += 5) {
                    push(join_cutvertex(pieces[i], ea, pieces[j], eb), obs,
                         name2("cutvertex", i, j, ea, eb));
                    push(join_two_edge_cut(pieces[i], ea, pieces[j], eb), obs,
                         name2("edgecut", i, j, ea, eb));
                    if ((int)out.size() >= at_least) return out;
                }
            }
        }
    }
    // three-piece chains: two cuts of each kind, mixed
    for (size_t i = 0; i < pieces.size() && (int)out.size() < at_least; ++i) {
        PlaneGraph mid = join_two_edge_cut(pieces[i], 0, pieces[(i + 1) % pieces.size()], 1);
        push(join_cutvertex(mid, 2, pieces[(i + 2) % pieces.size()], 3),
             i == 0 || (i + 1) % pieces.size() == 0 || (i + 2) % pieces.size() == 0,
             "chain from " + names[i]);
    }
    return out;
}

}  // namespace quartic::testsup
