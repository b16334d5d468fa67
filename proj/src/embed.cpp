#include "quartic/embed.hpp"

#include "quartic/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace quartic {

Adj adj_from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Adj adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

namespace {

// One biconnected block as an edge list over global ids.
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void block_dfs(const Adj& adj, VertexId v, VertexId parent, int& timer, std::vector<int>& tin,
               std::vector<int>& low, EdgeList& stack, std::vector<EdgeList>& blocks) {
    tin[v] = low[v] = timer++;
    for (VertexId w : adj[v]) {
        if (w == parent) {
            parent = -2;  // skip the tree edge once; parallel edges are rejected earlier anyway
            continue;
        }
        if (tin[w] >= 0) {
            if (tin[w] < tin[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], tin[w]);
            }
            continue;
        }
        stack.push_back({v, w});
        block_dfs(adj, w, v, timer, tin, low, stack, blocks);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= tin[v]) {
            EdgeList blk;
            while (true) {
                auto e = stack.back();
                stack.pop_back();
                blk.push_back(e);
                if (e == std::pair{v, w}) break;
            }
            blocks.push_back(std::move(blk));
        }
    }
}

// Path-addition planarity on one 2-connected block (local dense ids).
// Faces are oriented vertex cycles; returns rotations, nullopt if stuck.
struct BlockEmbedder {
    int n;
    std::vector<std::vector<int>> adj;      // sorted
    std::set<std::pair<int, int>> unused;   // undirected, (min,max)
    std::vector<char> in_h;                 // vertex embedded?
    std::vector<std::vector<int>> faces;

    explicit BlockEmbedder(int n_, const EdgeList& edges) : n(n_), adj(n_), in_h(n_, 0) {
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
            unused.insert(std::minmax(u, v));
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }

    void use_edge(int u, int v) {
        auto it = unused.find(std::minmax(u, v));
        assert(it != unused.end());
        unused.erase(it);
    }

    std::vector<int> initial_cycle() const {
        // DFS until a back edge closes a cycle.
        std::vector<int> par(n, -1), order;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    par[w] = v;
                    stack.push_back(w);
                } else if (par[v] != w && par[w] != v) {
                    // close cycle through tree paths: ascend both to meet
                    std::vector<int> pv{v}, pw{w};
                    std::set<int> anc;
                    for (int x = v; x >= 0; x = par[x]) anc.insert(x);
                    int meet = w;
                    while (!anc.count(meet)) meet = par[meet];
                    std::vector<int> cyc;
                    for (int x = v; x != meet; x = par[x]) cyc.push_back(x);
                    cyc.push_back(meet);
                    std::vector<int> other;
                    for (int x = w; x != meet; x = par[x]) other.push_back(x);
                    std::reverse(other.begin(), other.end());
                    for (int x : other) cyc.push_back(x);
                    (void)pv;
                    (void)pw;
                    return cyc;
                }
            }
        }
        return {};  // forest: no cycle (block is a single edge; caller handles)
    }

    struct Fragment {
        std::vector<int> attachments;  // embedded vertices, sorted
        std::vector<int> interior;     // unembedded vertices (empty for a chord)
        std::pair<int, int> chord{-1, -1};
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; s++) {
            if (in_h[s] || seen[s]) continue;
            Fragment f;
            std::set<int> att;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                f.interior.push_back(v);
                for (int w : adj[v]) {
                    if (in_h[w])
                        att.insert(w);
                    else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(f.interior.begin(), f.interior.end());
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        for (auto [u, v] : unused)
            if (in_h[u] && in_h[v]) {
                Fragment f;
                f.attachments = {u, v};
                f.chord = {u, v};
                out.push_back(std::move(f));
            }
        return out;
    }

    bool admissible(const std::vector<int>& face, const std::vector<int>& att) const {
        for (int a : att)
            if (std::find(face.begin(), face.end(), a) == face.end()) return false;
        return true;
    }

    // Path between two distinct attachments through the fragment interior.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord.first >= 0) return {f.chord.first, f.chord.second};
        assert(f.attachments.size() >= 2);
        int a = f.attachments[0];
        std::set<int> inside(f.interior.begin(), f.interior.end());
        std::vector<int> par(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> q;
        // start from a, first step must enter the fragment interior
        for (int w : adj[a])
            if (inside.count(w) && !seen[w]) {
                seen[w] = 1;
                par[w] = a;
                q.push_back(w);
            }
        for (size_t i = 0; i < q.size(); i++) {
            int v = q[i];
            for (int w : adj[v]) {
                if (in_h[w] && w != a) {
                    std::vector<int> path{w, v};
                    for (int x = par[v]; x >= 0; x = par[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;  // a ... w
                }
                if (inside.count(w) && !seen[w]) {
                    seen[w] = 1;
                    par[w] = v;
                    q.push_back(w);
                }
            }
        }
        return {};
    }

    void embed_path(int face_idx, const std::vector<int>& path) {
        std::vector<int> face = faces[face_idx];
        int a = path.front(), b = path.back();
        int ia = (int)(std::find(face.begin(), face.end(), a) - face.begin());
        int L = (int)face.size();
        // arc1: a forward to b; arc2: b forward to a
        std::vector<int> arc1, arc2;
        int i = ia;
        arc1.push_back(face[i]);
        while (face[i] != b) {
            i = (i + 1) % L;
            arc1.push_back(face[i]);
        }
        arc2.push_back(face[i]);
        while (face[i] != a) {
            i = (i + 1) % L;
            arc2.push_back(face[i]);
        }
        // face1 = arc1 + reversed path interior; face2 = arc2 + path interior
        std::vector<int> f1 = arc1, f2 = arc2;
        for (int j = (int)path.size() - 2; j >= 1; j--) f1.push_back(path[j]);
        for (int j = 1; j + 1 < (int)path.size(); j++) f2.push_back(path[j]);
        faces[face_idx] = f1;
        faces.push_back(f2);
        for (size_t j = 0; j + 1 < path.size(); j++) use_edge(path[j], path[j + 1]);
        for (size_t j = 1; j + 1 < path.size(); j++) in_h[path[j]] = 1;
    }

    std::optional<std::vector<std::vector<int>>> run() {
        auto cyc = initial_cycle();
        assert((int)cyc.size() >= 3);
        faces.push_back(cyc);
        std::reverse(cyc.begin(), cyc.end());
        faces.push_back(cyc);
        for (int v : faces[0]) in_h[v] = 1;
        for (size_t j = 0; j < faces[0].size(); j++)
            use_edge(faces[0][j], faces[0][(j + 1) % faces[0].size()]);

        while (!unused.empty()) {
            auto frags = fragments();
            assert(!frags.empty());
            int pick = -1, pick_face = -1, best_count = -1;
            for (int fi = 0; fi < (int)frags.size(); fi++) {
                int count = 0, last = -1;
                for (int j = 0; j < (int)faces.size(); j++)
                    if (admissible(faces[j], frags[fi].attachments)) {
                        count++;
                        if (last < 0) last = j;
                    }
                if (count == 0) return std::nullopt;  // stuck: nonplanar
                if (best_count < 0 || count < best_count) {
                    best_count = count;
                    pick = fi;
                    pick_face = last;
                }
            }
            auto path = alpha_path(frags[pick]);
            assert(path.size() >= 2);
            embed_path(pick_face, path);
        }
        return faces;
    }
};

// rotation from oriented face cycles: face ...u,v,w... puts w right after u
// around v.
std::optional<Rot> rot_from_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> nxt(n);
    for (auto& f : faces) {
        int L = (int)f.size();
        for (int i = 0; i < L; i++) {
            int u = f[(i + L - 1) % L], v = f[i], w = f[(i + 1) % L];
            if (nxt[v].count(u)) return std::nullopt;
            nxt[v][u] = w;
        }
    }
    Rot rot(n);
    for (int v = 0; v < n; v++) {
        if (nxt[v].empty()) continue;
        int start = nxt[v].begin()->first;
        int u = start;
        do {
            auto it = nxt[v].find(u);
            if (it == nxt[v].end()) return std::nullopt;
            rot[v].push_back(it->second);
            u = it->second;
        } while (u != start && (int)rot[v].size() <= (int)nxt[v].size());
        if ((int)rot[v].size() != (int)nxt[v].size() || u != start) return std::nullopt;
    }
    return rot;
}

}  // namespace

std::optional<Rot> planar_rotation(const Adj& adj) {
    int n = (int)adj.size();
    for (int v = 0; v < n; v++) {
        std::set<int> s(adj[v].begin(), adj[v].end());
        if (s.size() != adj[v].size() || s.count(v))
            throw NotSimple("abstract adjacency has loop or parallel edge");
        for (int w : adj[v])
            if (w < 0 || w >= n || std::find(adj[w].begin(), adj[w].end(), v) == adj[w].end())
                throw InconsistentRotation("asymmetric adjacency");
    }

    std::vector<int> tin(n, -1), low(n, -1);
    std::vector<EdgeList> blocks;
    EdgeList stack;
    int timer = 0;
    for (int v = 0; v < n; v++)
        if (tin[v] < 0) block_dfs(adj, v, -1, timer, tin, low, stack, blocks);

    Rot rot(n);
    for (auto& blk : blocks) {
        std::vector<VertexId> verts;
        for (auto [u, v] : blk) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (blk.size() == 1) {
            rot[blk[0].first].push_back(blk[0].second);
            rot[blk[0].second].push_back(blk[0].first);
            continue;
        }
        std::vector<int> local_of(n, -1);
        for (int i = 0; i < (int)verts.size(); i++) local_of[verts[i]] = i;
        EdgeList local;
        for (auto [u, v] : blk) local.push_back({local_of[u], local_of[v]});
        BlockEmbedder be((int)verts.size(), local);
        auto faces = be.run();
        if (!faces) return std::nullopt;
        auto sub = rot_from_faces((int)verts.size(), *faces);
        if (!sub) return std::nullopt;
        for (int i = 0; i < (int)verts.size(); i++)
            for (int w : (*sub)[i]) rot[verts[i]].push_back(verts[w]);
    }
    return rot;
}

PlaneGraph embed(const Adj& adj) {
    auto rot = planar_rotation(adj);
    if (!rot) throw NotPlanar("graph admits no plane rotation system");
    return build(*rot);
}

}  // namespace quartic
