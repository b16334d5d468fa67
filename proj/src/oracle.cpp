#include "quartic/oracle.hpp"

#include "quartic/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace quartic {

VerifyResult verify_circuit(const PlaneGraph& g, const Trail& t, int k) {
    if (auto defect = trail_defect(g, t)) return {false, *defect};
    if (t.length() != g.m) {
        std::ostringstream os;
        os << "covers " << t.length() << " of " << g.m << " edges";
        return {false, os.str()};
    }
    if (k >= 2 && has_short_subcycle(g, t, k)) {
        std::ostringstream os;
        os << "subcycle of length <= " << k;
        return {false, os.str()};
    }
    return {true, {}};
}

namespace {

struct Engine {
    const PlaneGraph& g;
    const SearchConfig& cfg;
    const std::function<bool(const Trail&)>& visitor;
    std::vector<char> used;
    std::vector<VertexId> verts;
    long long expansions = 0;
    long long visited = 0;
    int remaining;
    bool stop = false;

    Engine(const PlaneGraph& g_, const SearchConfig& cfg_,
           const std::function<bool(const Trail&)>& vis)
        : g(g_), cfg(cfg_), visitor(vis), used(g_.m, 0), remaining(g_.m) {}

    // Appending w at index L: would it close a subcycle of length <= k?
    bool window_ok(VertexId w) const {
        if (cfg.k < 2) return true;
        int L = (int)verts.size();
        for (int len = 2; len <= cfg.k && len <= L; len++) {
            if (verts[L - len] != w) continue;
            bool distinct = true;
            for (int a = L - len + 1; a < L && distinct; a++)
                for (int b = a + 1; b < L; b++)
                    if (verts[a] == verts[b]) {
                        distinct = false;
                        break;
                    }
            if (distinct) return false;
        }
        return true;
    }

    // All unused edges must lie in one component containing cur.
    bool remainder_ok(VertexId cur) const {
        if (remaining == 0) return true;
        bool cur_has = false;
        for (int i = 0; i < g.deg(cur) && !cur_has; i++)
            if (!used[g.eid[cur][g.rot[cur][i]]]) cur_has = true;
        if (!cur_has) return false;
        std::vector<char> seen(g.n(), 0);
        std::vector<VertexId> stack{cur};
        seen[cur] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (int i = 0; i < g.deg(v); i++) {
                VertexId w = g.rot[v][i];
                if (used[g.eid[v][w]]) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int e = 0; e < g.m; e++)
            if (!used[e] && (!seen[g.edges[e].first] || !seen[g.edges[e].second])) return false;
        return true;
    }

    void accept() {
        Trail t{verts, cfg.closed};
        if (cfg.closed && cfg.k >= 2 && has_short_subcycle(g, t, cfg.k)) return;  // wrap windows
        visited++;
        if (!visitor(t)) stop = true;
    }

    void dfs(VertexId cur, VertexId closed_start) {
        if (stop) return;
        if (cfg.cap && ++expansions > *cfg.cap) throw BudgetExhausted("oracle node budget");
        if (remaining == 0) {
            if (!cfg.closed || cur == closed_start) accept();
            return;
        }
        if (!remainder_ok(cur)) return;
        for (int i = 0; i < g.deg(cur); i++) {
            VertexId w = g.rot[cur][i];
            int e = g.eid[cur][w];
            if (used[e]) continue;
            if (!window_ok(w)) continue;
            used[e] = 1;
            remaining--;
            verts.push_back(w);
            dfs(w, closed_start);
            verts.pop_back();
            remaining++;
            used[e] = 0;
            if (stop) return;
        }
    }
};

long long run(const PlaneGraph& g, const SearchConfig& cfg,
              const std::function<bool(const Trail&)>& visitor) {
    if (cfg.k == 1 || cfg.k < 0) throw PreconditionViolated("k must be 0 or >= 2");
    if (g.m == 0) return 0;
    if (!g.connected_ignoring_isolated()) throw PreconditionViolated("graph not connected");
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < g.n(); v++)
        if (g.deg(v) % 2) odd.push_back(v);
    Engine eng(g, cfg, visitor);
    if (cfg.closed) {
        if (!odd.empty()) throw PreconditionViolated("odd-degree vertex in closed search");
        VertexId u = g.edges[0].first, v = g.edges[0].second;
        eng.verts.push_back(u);
        eng.used[0] = 1;
        eng.remaining--;
        eng.verts.push_back(v);
        eng.dfs(v, u);
    } else {
        if (odd.size() != 2) throw PreconditionViolated("open search needs exactly 2 odd vertices");
        VertexId s = cfg.start.value_or(odd[0]);
        if (s != odd[0] && s != odd[1])
            throw PreconditionViolated("open search must start at an odd vertex");
        eng.verts.push_back(s);
        eng.dfs(s, -1);
    }
    return eng.visited;
}

}  // namespace

std::optional<Trail> search(const PlaneGraph& g, const SearchConfig& cfg) {
    std::optional<Trail> found;
    run(g, cfg, [&](const Trail& t) {
        found = t;
        return false;
    });
    if (found && cfg.closed && cfg.start) {
        VertexId s = *cfg.start;
        auto& vs = found->verts;
        auto it = std::find(vs.begin(), vs.end() - 1, s);
        if (it == vs.end() - 1) throw PreconditionViolated("start vertex not on circuit");
        found = rotated(*found, (int)(it - vs.begin()));
    }
    return found;
}

long long enumerate_trails(const PlaneGraph& g, const SearchConfig& cfg,
                           const std::function<bool(const Trail&)>& visitor) {
    return run(g, cfg, visitor);
}

}  // namespace quartic
