#include "quartic/connectivity.hpp"

#include "quartic/errors.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <queue>

namespace quartic {

namespace {

// Components of g minus a removed vertex set, over vertices that have at
// least one incident edge in g.  Vertices isolated only by the removal still
// count as (singleton) components.
std::vector<std::vector<VertexId>> components_without(const PlaneGraph& g,
                                                      const std::vector<VertexId>& removed) {
    std::vector<char> gone(g.n(), 0);
    for (VertexId v : removed) gone[v] = 1;
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < g.n(); s++) {
        if (gone[s] || g.deg(s) == 0 || comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<VertexId> stack{s};
        comp[s] = (int)out.size() - 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (VertexId w : g.rot[v]) {
                if (gone[w] || comp[w] >= 0) continue;
                comp[w] = comp[v];
                stack.push_back(w);
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Half-edge counts from v into each side interior (cut vertices excluded).
std::pair<int, int> distribution(const PlaneGraph& g, VertexId v,
                                 const std::vector<char>& in_a, VertexId x, VertexId y) {
    int ta = 0, tb = 0;
    for (VertexId w : g.rot[v]) {
        if (w == x || w == y) continue;
        (in_a[w] ? ta : tb)++;
    }
    return {ta, tb};
}

CutType type_from_counts(bool xy_edge, std::pair<int, int> dx, std::pair<int, int> dy) {
    if (xy_edge) return CutType::d;
    bool bx = dx.first == dx.second, by = dy.first == dy.second;
    if (bx && by) return CutType::a;
    if (bx || by) return CutType::d;
    return (dx.first > dx.second) == (dy.first > dy.second) ? CutType::b : CutType::c;
}

// Lexicographically least side A over groupings of the removal components,
// then classify.  Sides include the cut vertices.
ClassifiedCut classify_from_components(const PlaneGraph& g, VertexId x, VertexId y,
                                       const std::vector<std::vector<VertexId>>& comps) {
    int k = (int)comps.size();
    assert(k >= 2);
    std::vector<VertexId> best;
    unsigned best_mask = 0;
    for (unsigned mask = 1; mask + 1 < (1u << k); mask++) {
        std::vector<VertexId> cand;
        for (int i = 0; i < k; i++)
            if (mask >> i & 1) cand.insert(cand.end(), comps[i].begin(), comps[i].end());
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) {
            best = cand;
            best_mask = mask;
        }
    }
    ClassifiedCut out;
    std::vector<char> in_a(g.n(), 0);
    for (VertexId v : best) in_a[v] = 1;
    for (int i = 0; i < k; i++)
        if (!(best_mask >> i & 1))
            out.side_b.insert(out.side_b.end(), comps[i].begin(), comps[i].end());
    out.side_a = std::move(best);
    out.side_a.push_back(x);
    out.side_a.push_back(y);
    out.side_b.push_back(x);
    out.side_b.push_back(y);
    std::sort(out.side_a.begin(), out.side_a.end());
    std::sort(out.side_b.begin(), out.side_b.end());
    out.type = type_from_counts(g.has_edge(x, y), distribution(g, x, in_a, x, y),
                                distribution(g, y, in_a, x, y));
    return out;
}

int active_vertices(const PlaneGraph& g) {
    int c = 0;
    for (VertexId v = 0; v < g.n(); v++)
        if (g.deg(v) > 0) c++;
    return c;
}

// Unit-capacity max-flow (per-edge both directions), BFS augmentation.
int maxflow_units(const PlaneGraph& g, VertexId s, VertexId t) {
    std::vector<std::array<int, 2>> cap(g.m, {1, 1});  // [0]: small->large
    int flow = 0;
    for (;;) {
        std::vector<int> pred_edge(g.n(), -1), pred_v(g.n(), -1);
        std::queue<VertexId> q;
        q.push(s);
        pred_v[s] = s;
        while (!q.empty() && pred_v[t] < 0) {
            VertexId v = q.front();
            q.pop();
            for (int i = 0; i < g.deg(v); i++) {
                VertexId w = g.rot[v][i];
                if (pred_v[w] >= 0) continue;
                int e = g.eid[v][w];
                int dir = g.edges[e].first == v ? 0 : 1;
                if (cap[e][dir] == 0) continue;
                pred_v[w] = v;
                pred_edge[w] = e;
                q.push(w);
            }
        }
        if (pred_v[t] < 0) return flow;
        for (VertexId v = t; v != s; v = pred_v[v]) {
            int e = pred_edge[v];
            int dir = g.edges[e].second == v ? 0 : 1;  // traversed small->large?
            cap[e][dir]--;
            cap[e][1 - dir]++;
        }
        flow++;
    }
}

}  // namespace

bool is_cut_vertex(const PlaneGraph& g, VertexId x) {
    return components_without(g, {x}).size() > 1;
}

bool is_cut_pair(const PlaneGraph& g, VertexId x, VertexId y) {
    return components_without(g, {x, y}).size() > 1;
}

ClassifiedCut classify_2cut(const PlaneGraph& g, VertexId x, VertexId y) {
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw NotACut("bad vertex pair");
    if (g.component_count() != 1) throw NotACut("graph disconnected");
    if (is_cut_vertex(g, x) || is_cut_vertex(g, y)) throw NotACut("pair is not minimal");
    auto comps = components_without(g, {x, y});
    if (comps.size() < 2) throw NotACut("pair does not disconnect");
    return classify_from_components(g, x, y, comps);
}

std::vector<std::pair<int, int>> find_two_edge_cuts(const PlaneGraph& g) {
    std::vector<std::pair<int, int>> out;
    if (g.m < 2) return out;
    auto comp = g.component_of();
    std::vector<int> comp_size(g.n(), 0);
    for (VertexId v = 0; v < g.n(); v++)
        if (g.deg(v) > 0) comp_size[comp[v]]++;
    // Vertices reached from e1's endpoint when edges e1, e2 are skipped.
    auto reach = [&](int e1, int e2) {
        std::vector<char> seen(g.n(), 0);
        std::vector<VertexId> stack;
        VertexId s = g.edges[e1].first;
        stack.push_back(s);
        seen[s] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            cnt++;
            for (int i = 0; i < g.deg(v); i++) {
                VertexId w = g.rot[v][i];
                int e = g.eid[v][w];
                if (e == e1 || e == e2) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return std::pair{cnt, comp_size[comp[s]]};
    };
    std::vector<char> bridge(g.m, 0);
    for (int e = 0; e < g.m; e++) {
        auto [cnt, whole] = reach(e, e);
        bridge[e] = cnt < whole;
    }
    // A pair containing a bridge is never inclusion-minimal.
    for (int e1 = 0; e1 < g.m; e1++) {
        if (bridge[e1]) continue;
        for (int e2 = e1 + 1; e2 < g.m; e2++) {
            if (bridge[e2]) continue;
            auto [cnt, whole] = reach(e1, e2);
            if (cnt < whole) out.emplace_back(e1, e2);
        }
    }
    return out;
}

std::optional<std::pair<int, int>> any_two_edge_cut(const PlaneGraph& g) {
    auto all = find_two_edge_cuts(g);
    if (all.empty()) return std::nullopt;
    return all.front();
}

int edge_connectivity(const PlaneGraph& g) {
    int n_active = active_vertices(g);
    if (n_active <= 1) return 0;
    if (g.component_count() > 1) return 0;
    VertexId s = -1;
    for (VertexId v = 0; v < g.n() && s < 0; v++)
        if (g.deg(v) > 0) s = v;
    int best = g.m;
    for (VertexId t = 0; t < g.n(); t++) {
        if (t == s || g.deg(t) == 0) continue;
        best = std::min(best, maxflow_units(g, s, t));
    }
    return best;
}

bool is_3connected(const PlaneGraph& g) {
    int n_active = active_vertices(g);
    if (n_active < 4) return false;
    if (g.component_count() != 1) return false;
    for (VertexId x = 0; x < g.n(); x++) {
        if (g.deg(x) == 0) continue;
        if (is_cut_vertex(g, x)) return false;
    }
    for (VertexId x = 0; x < g.n(); x++) {
        if (g.deg(x) == 0) continue;
        for (VertexId y = x + 1; y < g.n(); y++) {
            if (g.deg(y) == 0) continue;
            if (is_cut_pair(g, x, y)) return false;
        }
    }
    return true;
}

CutReport connectivity_report(const PlaneGraph& g) {
    CutReport rep;
    rep.edge_connectivity = edge_connectivity(g);
    bool connected = g.component_count() == 1;
    for (VertexId x = 0; x < g.n(); x++) {
        if (g.deg(x) == 0) continue;
        if (connected && is_cut_vertex(g, x)) rep.cutvertices.push_back(x);
    }
    std::vector<char> is_cv(g.n(), 0);
    for (VertexId v : rep.cutvertices) is_cv[v] = 1;
    if (connected) {
        for (VertexId x = 0; x < g.n(); x++) {
            if (g.deg(x) == 0 || is_cv[x]) continue;
            for (VertexId y = x + 1; y < g.n(); y++) {
                if (g.deg(y) == 0 || is_cv[y]) continue;
                auto comps = components_without(g, {x, y});
                if (comps.size() < 2) continue;
                auto cc = classify_from_components(g, x, y, comps);
                rep.two_vertex_cuts.push_back({x, y, cc.type, cc.side_a, cc.side_b});
            }
        }
        for (auto [e1, e2] : find_two_edge_cuts(g)) {
            TwoEdgeCut cut{e1, e2, {}, {}};
            std::vector<char> seen(g.n(), 0);
            std::vector<VertexId> stack;
            VertexId s = g.edges[e1].first;
            stack.push_back(s);
            seen[s] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                cut.side_a.push_back(v);
                for (int i = 0; i < g.deg(v); i++) {
                    VertexId w = g.rot[v][i];
                    int e = g.eid[v][w];
                    if (e == e1 || e == e2) continue;
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            for (VertexId v = 0; v < g.n(); v++)
                if (g.deg(v) > 0 && !seen[v]) cut.side_b.push_back(v);
            std::sort(cut.side_a.begin(), cut.side_a.end());
            if (cut.side_b < cut.side_a) std::swap(cut.side_a, cut.side_b);
            rep.two_edge_cuts.push_back(std::move(cut));
        }
    }
    return rep;
}

InducedSide induce_side(const PlaneGraph& g, const std::vector<VertexId>& side) {
    InducedSide out;
    out.old_of_new = side;
    out.new_of_old.assign(g.n(), -1);
    for (int i = 0; i < (int)side.size(); i++) {
        if (side[i] < 0 || side[i] >= g.n() || out.new_of_old[side[i]] >= 0)
            throw PreconditionViolated("induce_side: bad vertex set");
        out.new_of_old[side[i]] = i;
    }
    Rot rot(side.size());
    for (int i = 0; i < (int)side.size(); i++) {
        for (VertexId w : g.rot[side[i]]) {
            if (out.new_of_old[w] >= 0)
                rot[i].push_back(out.new_of_old[w]);
            else
                out.stubs.push_back({i, (int)rot[i].size(), w});
        }
    }
    out.g = build(rot);
    return out;
}

}  // namespace quartic
