#include "quartic/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace quartic {

Dart PlaneGraph::dart(int id) const {
    int v = (int)(std::upper_bound(dart_base_.begin(), dart_base_.end(), id) - dart_base_.begin()) - 1;
    return {v, id - dart_base_[v]};
}

Dart PlaneGraph::twin(const Dart& d) const {
    VertexId u = head(d);
    int s = slot_of(u, d.tail);
    assert(s >= 0);
    return {u, s};
}

int PlaneGraph::slot_of(VertexId v, VertexId nbr) const {
    for (int i = 0; i < deg(v); i++)
        if (rot[v][i] == nbr) return i;
    return -1;
}

bool PlaneGraph::is_quartic() const {
    for (int v = 0; v < n(); v++)
        if (deg(v) != 4) return false;
    return n() > 0;
}

std::vector<int> PlaneGraph::component_of() const {
    std::vector<int> comp(n(), -1);
    int c = 0;
    for (int s = 0; s < n(); s++) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : rot[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        c++;
    }
    return comp;
}

int PlaneGraph::component_count() const {
    auto comp = component_of();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool PlaneGraph::connected_ignoring_isolated() const {
    auto comp = component_of();
    int seen = -1;
    for (int v = 0; v < n(); v++) {
        if (deg(v) == 0) continue;
        if (seen < 0) seen = comp[v];
        else if (comp[v] != seen) return false;
    }
    return true;
}

PlaneGraph build(const Rot& rot) {
    PlaneGraph g;
    g.rot = rot;
    int n = g.n();

    for (int v = 0; v < n; v++) {
        std::vector<VertexId> seen;
        for (VertexId w : rot[v]) {
            if (w < 0 || w >= n)
                throw InconsistentRotation("neighbor id out of range");
            if (w == v) throw NotSimple("loop at vertex " + std::to_string(v));
            if (std::find(seen.begin(), seen.end(), w) != seen.end())
                throw NotSimple("parallel edge " + std::to_string(v) + "-" + std::to_string(w));
            seen.push_back(w);
        }
    }
    for (int v = 0; v < n; v++)
        for (VertexId w : rot[v]) {
            bool back = false;
            for (VertexId u : rot[w]) back |= (u == v);
            if (!back)
                throw InconsistentRotation(std::to_string(v) + " lists " + std::to_string(w) +
                                           " but not vice versa");
        }

    g.eid.assign(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; v++)
        for (VertexId w : rot[v])
            if (v < w) {
                g.eid[v][w] = g.eid[w][v] = (int)g.edges.size();
                g.edges.push_back({v, w});
            }
    g.m = (int)g.edges.size();

    g.dart_base_.assign(n + 1, 0);
    for (int v = 0; v < n; v++) g.dart_base_[v + 1] = g.dart_base_[v] + g.deg(v);

    // trace faces: orbits of d -> rot_next(twin(d))
    g.dart_face.assign(2 * g.m, -1);
    for (int id = 0; id < 2 * g.m; id++) {
        if (g.dart_face[id] >= 0) continue;
        int f = (int)g.faces.size();
        g.faces.push_back({});
        Dart d = g.dart(id);
        while (true) {
            int did = g.dart_id(d);
            if (g.dart_face[did] >= 0) break;
            g.dart_face[did] = f;
            g.faces[f].push_back(did);
            d = g.face_next(d);
        }
    }

    // Euler per component (components with edges; isolated vertices are flat)
    auto comp = g.component_of();
    int nc = g.component_count();
    std::vector<int> cv(nc, 0), ce(nc, 0), cf(nc, 0);
    for (int v = 0; v < n; v++) cv[comp[v]]++;
    for (auto& [u, v] : g.edges) ce[comp[u]]++, (void)v;
    for (auto& walk : g.faces) cf[comp[g.dart(walk[0]).tail]]++;
    for (int c = 0; c < nc; c++) {
        if (ce[c] == 0) continue;
        if (cv[c] - ce[c] + cf[c] != 2)
            throw NotPlanar("rotation system has genus > 0 (V-E+F = " +
                            std::to_string(cv[c] - ce[c] + cf[c]) + " on a component)");
    }
    return g;
}

void rot_remove_edge(Rot& r, VertexId u, VertexId v) {
    auto strike = [&](VertexId a, VertexId b) {
        auto it = std::find(r[a].begin(), r[a].end(), b);
        if (it == r[a].end()) throw PatternAbsent("no edge " + std::to_string(u) + "-" + std::to_string(v));
        r[a].erase(it);
    };
    strike(u, v);
    strike(v, u);
}

void rot_insert_after(Rot& r, VertexId u, VertexId after, VertexId w) {
    auto it = std::find(r[u].begin(), r[u].end(), after);
    assert(it != r[u].end());
    r[u].insert(it + 1, w);
}

void rot_replace(Rot& r, VertexId u, VertexId old_nbr, VertexId new_nbr) {
    auto it = std::find(r[u].begin(), r[u].end(), old_nbr);
    assert(it != r[u].end());
    *it = new_nbr;
}

Rot rot_relabel(const Rot& r, const std::vector<int>& new_of) {
    int nn = 0;
    for (int v = 0; v < (int)r.size(); v++) {
        if (new_of[v] < 0) {
            assert(r[v].empty());
            continue;
        }
        nn = std::max(nn, new_of[v] + 1);
    }
    Rot out(nn);
    for (int v = 0; v < (int)r.size(); v++) {
        if (new_of[v] < 0) continue;
        for (VertexId w : r[v]) {
            assert(new_of[w] >= 0);
            out[new_of[v]].push_back(new_of[w]);
        }
    }
    return out;
}

std::pair<Rot, std::vector<VertexId>> rot_compact(const Rot& r) {
    std::vector<int> new_of(r.size(), -1);
    std::vector<VertexId> old_of;
    for (int v = 0; v < (int)r.size(); v++)
        if (!r[v].empty()) {
            new_of[v] = (int)old_of.size();
            old_of.push_back(v);
        }
    return {rot_relabel(r, new_of), old_of};
}

SplitResult split_vertex(const PlaneGraph& g, VertexId v) {
    Rot r = g.rot;
    int d = g.deg(v);
    std::vector<VertexId> pend;
    for (int i = 0; i < d; i++) {
        VertexId u = r[v][i];
        VertexId p = (int)r.size();
        r.push_back({u});
        rot_replace(r, u, v, p);
        pend.push_back(p);
    }
    r[v].clear();
    return {build(r), pend};
}

// Finds a face of g whose walk contains the unique dart out of every listed
// pendant; returns the pendants in order of appearance along that walk,
// or nullopt.
static std::optional<std::vector<VertexId>> face_order_of_pendants(
    const PlaneGraph& g, const std::vector<VertexId>& pendants) {
    for (auto& walk : g.faces) {
        std::vector<VertexId> order;
        for (int did : walk) {
            VertexId t = g.dart(did).tail;
            if (std::find(pendants.begin(), pendants.end(), t) != pendants.end())
                order.push_back(t);
        }
        if (order.size() == pendants.size()) return order;
    }
    return std::nullopt;
}

std::pair<PlaneGraph, VertexId> identify_pendants(const PlaneGraph& g,
                                                  const std::vector<VertexId>& pendants) {
    for (VertexId p : pendants)
        if (g.deg(p) != 1) throw PreconditionViolated("identify_pendants: not a pendant");
    auto order = face_order_of_pendants(g, pendants);
    if (!order) throw NotCoFacial("pendants do not lie on a common face");

    // Attach the merged vertex inside that face. The face orientation fixes
    // the rotation; we try the appearance order and its reverse and keep the
    // one that stays plane.
    for (int flip = 0; flip < 2; flip++) {
        Rot r = g.rot;
        VertexId w = (int)r.size();
        r.push_back({});
        std::vector<VertexId> ord = *order;
        if (flip) std::reverse(ord.begin(), ord.end());
        for (VertexId p : ord) {
            VertexId u = g.rot[p][0];
            rot_replace(r, u, p, w);
            r[w].push_back(u);
            r[p].clear();
        }
        try {
            return {build(r), w};
        } catch (const NotPlanar&) {
            if (flip) throw;
        }
    }
    throw NotPlanar("unreachable");
}

CompletionResult complete_into_quartic(const PlaneGraph& g) {
    std::vector<VertexId> pend;
    for (int v = 0; v < g.n(); v++) {
        if (g.deg(v) == 1) pend.push_back(v);
        else if (g.deg(v) != 4)
            throw PreconditionViolated("completion: vertex of degree " + std::to_string(g.deg(v)));
    }
    if (pend.size() != 4) throw PreconditionViolated("completion needs exactly four pendants");
    for (VertexId p : pend)
        for (VertexId q : pend)
            if (p < q && g.has_edge(p, q)) throw PendantsAdjacent("pendant edge");
    auto order = face_order_of_pendants(g, pend);
    if (!order) throw NotCoFacial("pendants of completion not co-facial");

    for (int flip = 0; flip < 2; flip++) {
        std::vector<VertexId> p = *order;
        if (flip) std::reverse(p.begin(), p.end());
        Rot r = g.rot;
        VertexId z = (int)r.size();
        r.push_back({p[0], p[1], p[2], p[3]});
        for (int i = 0; i < 4; i++) {
            VertexId prev = p[(i + 3) % 4], next = p[(i + 1) % 4];
            // pendant keeps its old edge, then gains cycle + apex edges
            r[p[i]] = {g.rot[p[i]][0], next, z, prev};
        }
        try {
            return {build(r), z, p};
        } catch (const NotPlanar&) {
            if (flip) throw;
        }
    }
    throw NotPlanar("unreachable");
}

} // namespace quartic
