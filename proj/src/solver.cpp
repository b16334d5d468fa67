#include "quartic/solver.hpp"

#include "quartic/connectivity.hpp"
#include "quartic/embed.hpp"
#include "quartic/errors.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/oracle.hpp"
#include "splice_util.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace quartic {

Trail antiprism_good_circuit(int k) {
    if (k < 4) throw PreconditionViolated("antiprism circuit: k >= 4 required");
    const VertexId a = 0, b = 1, c = 2;
    auto x = [&](int i) { return VertexId(2 + i); };
    auto y = [&](int j) { return VertexId(k + 1 + j); };
    std::vector<VertexId> v{a, b, c};
    for (int j = k - 2; j >= 1; --j) v.push_back(y(j));
    for (int i = 1; i <= k - 1; ++i) v.push_back(x(i));
    v.push_back(c);
    v.push_back(a);
    v.push_back(x(1));
    v.push_back(b);
    v.push_back(y(1));
    for (int i = 2; i <= k - 2; ++i) {
        v.push_back(x(i));
        v.push_back(y(i));
    }
    v.push_back(x(k - 1));
    v.push_back(a);
    return Trail{std::move(v), true};
}

Trail translate_trail(const Trail& t, const std::vector<VertexId>& map, VertexId missing_label) {
    Trail out = t;
    for (auto& v : out.verts) {
        VertexId w = v < (VertexId)map.size() ? map[v] : -1;
        if (w < 0) w = missing_label;
        if (w < 0) throw PreconditionViolated("translate_trail: unmapped vertex");
        v = w;
    }
    return out;
}

ReductionRoles lift_roles(const PlaneGraph& h, const ExpansionOp& op, const ApplyResult& res) {
    auto tr = [&](VertexId v) {
        VertexId w = res.new_of_old[v];
        assert(w >= 0);
        return w;
    };
    if (const auto* p = std::get_if<Pegging>(&op))
        return PeggingRoles{res.added[0], tr(p->a), tr(p->b), tr(p->c), tr(p->d)};
    if (const auto* f = std::get_if<FourCycleAddition>(&op)) {
        FourCARoles r;
        r.x = tr(f->x);
        for (int i = 0; i < 4; ++i) {
            r.ring[i] = res.added[i];
            r.outer[i] = tr(h.rot[f->x][i]);
        }
        return r;
    }
    const auto& s = std::get<ThreeCycleSlide>(op);
    SlideRoles r;
    r.x = res.added[0];
    r.y = res.added[1];
    r.z = res.added[2];
    r.delta = tr(h.rot[s.u][s.slot]);
    r.alpha = tr(h.rot[s.u][(s.slot + 1) % 4]);
    r.beta = tr(h.rot[s.u][(s.slot + 2) % 4]);
    r.gamma = tr(h.rot[s.u][(s.slot + 3) % 4]);
    r.u_label = res.g.n();
    return r;
}

namespace {

using detail::EdgeKey;
using detail::arcs_without;
using detail::ekey;

// Fills the gaps between consecutive arcs with edge-disjoint trails covering
// every gadget edge exactly once; first filling whose spliced circuit
// verifies at k=4 wins. Exhaustive over gadget routings, arcs stay intact.
std::optional<Trail> gadget_lift(const PlaneGraph& g, const Trail& ch, const std::set<EdgeKey>& drop,
                                 const std::vector<EdgeKey>& gadget) {
    auto arcs = arcs_without(ch, drop);
    int t = (int)arcs.size();
    std::vector<int> used(gadget.size(), 0);
    std::vector<std::vector<VertexId>> fill(t);
    std::optional<Trail> found;

    auto splice = [&]() {
        std::vector<VertexId> verts;
        for (int j = 0; j < t; ++j) {
            verts.insert(verts.end(), arcs[j].begin(), arcs[j].end());
            verts.insert(verts.end(), fill[j].begin() + 1, fill[j].end() - 1);
        }
        verts.push_back(verts.front());
        Trail cand{std::move(verts), true};
        if (verify_circuit(g, cand, 4)) found = cand;
    };

    // trails for gap j run from arcs[j].back() to arcs[(j+1)%t].front()
    std::function<void(int)> per_gap = [&](int j) {
        if (found) return;
        if (j == t) {
            if (std::all_of(used.begin(), used.end(), [](int u) { return u != 0; })) splice();
            return;
        }
        VertexId target = arcs[(j + 1) % t].front();
        std::function<void(VertexId)> walk = [&](VertexId at) {
            if (found) return;
            if (at == target) per_gap(j + 1);
            for (size_t e = 0; e < gadget.size(); ++e) {
                if (used[e]) continue;
                VertexId nxt;
                if (gadget[e].first == at) nxt = gadget[e].second;
                else if (gadget[e].second == at) nxt = gadget[e].first;
                else continue;
                used[e] = 1;
                fill[j].push_back(nxt);
                walk(nxt);
                fill[j].pop_back();
                used[e] = 0;
                if (found) return;
            }
        };
        fill[j] = {arcs[j].back()};
        walk(arcs[j].back());
        fill[j].clear();
    };
    per_gap(0);
    return found;
}

}  // namespace

Trail lift_4cycle_addition(const PlaneGraph& g, const FourCARoles& r, const Trail& ch, Transcript* tr) {
    std::set<EdgeKey> drop;
    std::vector<EdgeKey> gadget;
    for (int i = 0; i < 4; ++i) {
        drop.insert(ekey(r.x, r.outer[i]));
        gadget.push_back(ekey(r.x, r.ring[i]));
        gadget.push_back(ekey(r.ring[i], r.ring[(i + 1) % 4]));
        gadget.push_back(ekey(r.ring[i], r.outer[i]));
    }
    auto res = gadget_lift(g, ch, drop, gadget);
    if (!res) throw InternalCaseExhaustion("4-cycle addition lift found no routing");
    if (tr) tr->note("lift: 4-cycle ring at " + std::to_string(r.x));
    return *res;
}

Trail lift_3cycle_slide(const PlaneGraph& g, const SlideRoles& r, const Trail& ch, Transcript* tr) {
    std::set<EdgeKey> drop{ekey(r.u_label, r.alpha), ekey(r.u_label, r.beta),
                           ekey(r.u_label, r.gamma), ekey(r.u_label, r.delta),
                           ekey(r.alpha, r.delta)};
    std::vector<EdgeKey> gadget{ekey(r.x, r.alpha), ekey(r.x, r.delta), ekey(r.x, r.y),
                                ekey(r.x, r.z),     ekey(r.y, r.alpha), ekey(r.y, r.beta),
                                ekey(r.y, r.z),     ekey(r.z, r.gamma), ekey(r.z, r.delta)};
    auto res = gadget_lift(g, ch, drop, gadget);
    if (!res) throw InternalCaseExhaustion("3-cycle slide lift found no routing");
    if (tr) tr->note("lift: slide triangle " + std::to_string(r.x) + "," + std::to_string(r.y) +
                     "," + std::to_string(r.z));
    return *res;
}

Trail lift_special_pegging(const PlaneGraph& g, VertexId a, VertexId b, VertexId c, VertexId d,
                           VertexId x_label, const Trail& circuit, Transcript* tr) {
    std::set<EdgeKey> drop{ekey(a, b), ekey(c, d)};
    // the circuit's edges absent from g must be exactly the re-paired pair
    std::set<EdgeKey> foreign;
    for (int i = 0; i + 1 < (int)circuit.verts.size(); ++i) {
        VertexId u = circuit.verts[i], v = circuit.verts[i + 1];
        if (!g.has_edge(u, v)) foreign.insert(ekey(u, v));
    }
    if (foreign != drop)
        throw PreconditionViolated("special pegging: circuit does not match the cut pair");
    std::vector<EdgeKey> gadget;
    for (VertexId w : g.rot[x_label]) gadget.push_back(ekey(x_label, w));
    auto res = gadget_lift(g, circuit, drop, gadget);
    if (!res) throw InternalCaseExhaustion("special pegging lift found no routing");
    if (tr) tr->note("lift: reinserted cut vertex " + std::to_string(x_label));
    return *res;
}

namespace detail {

Trail transport(const PlaneGraph& from, const Trail& t, const PlaneGraph& to) {
    CanonicalForm cf = canonical_form(from), ct = canonical_form(to);
    if (cf.code != ct.code) throw PreconditionViolated("transport: graphs not isomorphic");
    std::vector<VertexId> to_of_pos(to.n());
    for (VertexId v = 0; v < to.n(); ++v) to_of_pos[ct.label_of[v]] = v;
    std::vector<VertexId> map(from.n());
    for (VertexId v = 0; v < from.n(); ++v) map[v] = to_of_pos[cf.label_of[v]];
    return translate_trail(t, map);
}

}  // namespace detail

namespace {

using detail::transport;

struct Base10 {
    PlaneGraph g;
    Trail circuit;
    std::string code;
};

// Octahedron plus one 4-cycle addition, with its printed good circuit.
const Base10& base10() {
    static const Base10 b = [] {
        std::vector<std::pair<VertexId, VertexId>> oct_edges;
        for (VertexId u = 0; u < 6; ++u)
            for (VertexId v = u + 1; v < 6; ++v)
                if (!((u == 0 && v == 4) || (u == 1 && v == 5) || (u == 2 && v == 3)))
                    oct_edges.push_back({u, v});
        PlaneGraph oct = embed(adj_from_edges(6, oct_edges));
        ApplyResult res = apply(oct, FourCycleAddition{4});
        const PlaneGraph& g = res.g;
        // ring letters by their outer attachment: w-b, v-d, y-f, x-c
        VertexId w = -1, v = -1, y = -1, x = -1;
        for (VertexId rv : res.added) {
            for (VertexId nb : g.rot[rv]) {
                if (nb == 1) w = rv;
                if (nb == 3) v = rv;
                if (nb == 5) y = rv;
                if (nb == 2) x = rv;
            }
        }
        assert(w >= 0 && v >= 0 && y >= 0 && x >= 0);
        const VertexId a = 0, bb = 1, c = 2, d = 3, e = 4, f = 5;
        Trail t{{a, bb, w, e, v, y, x, c, bb, d, a, f, y, e, x, w, v, d, f, c, a}, true};
        if (!verify_circuit(g, t, 4))
            throw InternalCaseExhaustion("base fixture circuit failed verification");
        return Base10{g, t, canonical_code(g)};
    }();
    return b;
}

std::string antiprism_code(int k) {
    static std::map<int, std::string> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, canonical_code(antiprism(k))).first;
    return it->second;
}

}  // namespace

Trail good_circuit_3connected(const PlaneGraph& g, Transcript* tr) {
    if (!g.is_quartic() || !is_3connected(g))
        throw PreconditionViolated("good_circuit_3connected: 3-connected quartic input required");
    if (is_octahedron(g)) throw IsOctahedron("the octahedron admits no good circuit");
    CanonicalForm cf = canonical_form(g);
    if (g.n() % 2 == 0 && g.n() >= 8 && cf.code == antiprism_code(g.n() / 2)) {
        if (tr) tr->note("base: " + std::to_string(g.n() / 2) + "-antiprism");
        Trail t = transport(antiprism(g.n() / 2), antiprism_good_circuit(g.n() / 2), g);
        assert(verify_circuit(g, t, 4));
        return t;
    }
    if (g.n() == 10 && cf.code == base10().code) {
        if (tr) tr->note("base: octahedron plus 4-cycle addition");
        Trail t = transport(base10().g, base10().circuit, g);
        assert(verify_circuit(g, t, 4));
        return t;
    }
    auto steps = find_reductions(g);
    for (const auto& step : steps) {
        if (is_octahedron(step.reduced)) continue;
        if (tr) {
            const char* kind = std::holds_alternative<SlideRoles>(step.roles)  ? "unslide"
                               : std::holds_alternative<FourCARoles>(step.roles) ? "4-cycle removal"
                                                                                 : "unpegging";
            tr->note("reduce " + std::to_string(g.n()) + " -> " + std::to_string(step.reduced.n()) +
                     " via " + kind);
        }
        Trail ch = translate_trail(good_circuit_3connected(step.reduced, tr), step.old_of_new);
        Trail lifted = std::visit(
            [&](const auto& roles) -> Trail {
                using T = std::decay_t<decltype(roles)>;
                if constexpr (std::is_same_v<T, SlideRoles>) {
                    return lift_3cycle_slide(g, roles, ch, tr);
                } else if constexpr (std::is_same_v<T, FourCARoles>) {
                    return lift_4cycle_addition(g, roles, ch, tr);
                } else {
                    PeggingLift pl = lift_pegging(g, roles, ch, tr);
                    if (auto* t = std::get_if<Trail>(&pl)) return *t;
                    auto& rs = std::get<Restructure>(pl);
                    if (tr) tr->note("pegging lift restructured through a slide");
                    Trail ch2 = translate_trail(good_circuit_3connected(rs.reduced, tr), rs.old_of_new);
                    return lift_3cycle_slide(g, rs.roles, ch2, tr);
                }
            },
            step.roles);
        assert(verify_circuit(g, lifted, 4));
        return lifted;
    }
    throw InternalCaseExhaustion("3-connected solver: no usable reduction");
}

SolveOutcome good_circuit(const PlaneGraph& g, Transcript* tr) {
    if (!g.is_quartic()) throw PreconditionViolated("good_circuit: quartic input required");
    if (g.component_count() != 1) return NotConnected{};
    if (auto f6 = find_f6(g)) {
        if (tr) tr->note("obstruction found");
        return ObstructedByF6{*f6};
    }
    // peel cutvertices; each removal re-pairs the stubs across the cut
    for (VertexId x = 0; x < g.n(); ++x) {
        if (!is_cut_vertex(g, x)) continue;
        std::array<VertexId, 4> nb;
        for (int i = 0; i < 4; ++i) nb[i] = g.rot[x][i];
        Rot r = g.rot;
        for (int i = 0; i < 4; ++i) rot_remove_edge(r, x, nb[i]);
        PlaneGraph without = build(r);
        std::vector<int> comp = without.component_of();
        // planarity groups the rotation at x into two consecutive same-side pairs
        int s0 = -1;
        for (int s = 0; s < 4 && s0 < 0; ++s)
            if (comp[nb[s]] == comp[nb[(s + 1) % 4]] &&
                comp[nb[(s + 2) % 4]] == comp[nb[(s + 3) % 4]] &&
                comp[nb[s]] != comp[nb[(s + 2) % 4]])
                s0 = s;
        if (s0 < 0) throw InternalCaseExhaustion("cut vertex stubs not planar-separated");
        VertexId a1 = nb[s0], a2 = nb[(s0 + 1) % 4], b1 = nb[(s0 + 2) % 4], b2 = nb[(s0 + 3) % 4];
        // cross pairs {a2 b1, b2 a1}: planar, and an independent 2-edge-cut
        // of the merged graph; the stubs reuse the slots x occupied
        Rot m = g.rot;
        rot_replace(m, a1, x, b2);
        rot_replace(m, a2, x, b1);
        rot_replace(m, b1, x, a2);
        rot_replace(m, b2, x, a1);
        m[x].clear();
        auto [rc, old_of_new] = rot_compact(m);
        PlaneGraph gp = build(rc);
        if (tr) tr->note("cut vertex " + std::to_string(x) + ": re-paired and recursed");
        SolveOutcome sub = good_circuit(gp, tr);
        if (!std::holds_alternative<GoodCircuit>(sub))
            throw InternalCaseExhaustion("cut vertex re-pairing lost solvability");
        Trail ch = translate_trail(std::get<GoodCircuit>(sub).circuit, old_of_new);
        Trail t = lift_special_pegging(g, a1, b2, a2, b1, x, ch, tr);
        assert(verify_circuit(g, t, 4));
        return GoodCircuit{t};
    }
    if (is_3connected(g)) return GoodCircuit{good_circuit_3connected(g, tr)};
    return good_circuit_2connected(g, tr);
}

}  // namespace quartic
