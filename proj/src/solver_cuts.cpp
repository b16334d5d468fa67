#include "quartic/solver.hpp"

#include "quartic/connectivity.hpp"
#include "quartic/errors.hpp"
#include "quartic/generation.hpp"
#include "quartic/obstructions.hpp"
#include "quartic/oracle.hpp"
#include "splice_util.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace quartic {

namespace {

using detail::arcs_without;
using detail::assemble_pieces;
using detail::EdgeKey;
using detail::ekey;

std::vector<VertexId> cat(std::initializer_list<std::vector<VertexId>> parts) {
    std::vector<VertexId> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<VertexId> slice(const std::vector<VertexId>& v, int from, int to) {
    return {v.begin() + from, v.begin() + to};
}

std::vector<VertexId> rslice(const std::vector<VertexId>& v, int from, int to) {
    std::vector<VertexId> out{v.begin() + from, v.begin() + to};
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<VertexId> rev_copy(std::vector<VertexId> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<int> positions_in(const std::vector<VertexId>& vs, VertexId v) {
    std::vector<int> out;
    for (int i = 0; i < (int)vs.size(); ++i)
        if (vs[i] == v) out.push_back(i);
    return out;
}

// Cyclic slots 0..L-1 of a closed trail holding v (slot L repeats slot 0).
std::vector<int> pass_positions(const Trail& c, VertexId v) {
    std::vector<int> out;
    for (int i = 0; i < c.length(); ++i)
        if (c.verts[i] == v) out.push_back(i);
    return out;
}

// Appending w must not close a 3- or 4-cycle within the trail.
bool ok_push(const std::vector<VertexId>& vs, VertexId w) {
    int k = (int)vs.size();
    if (k >= 3 && vs[k - 3] == w) return false;
    if (k >= 4 && vs[k - 4] == w) return false;
    return true;
}

bool mark_edges(const PlaneGraph& g, const std::vector<VertexId>& vs, std::vector<char>& used) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        VertexId u = vs[i], v = vs[i + 1];
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) return false;
        int e = g.edge_id(u, v);
        if (e < 0 || used[e]) return false;
        used[e] = 1;
    }
    return true;
}

bool good_open(const PlaneGraph& g, const Trail& t) {
    return !t.closed && t.verts.size() >= 2 && !trail_defect(g, t) && !has_short_subcycle(g, t, 4);
}

bool good_closed(const PlaneGraph& g, const Trail& t) {
    return t.closed && !trail_defect(g, t) && !has_short_subcycle(g, t, 4);
}

// Good open trail from..to covering every edge of s exactly once.
bool euler_between(const PlaneGraph& s, const Trail& t, VertexId from, VertexId to) {
    if (t.closed || (int)t.verts.size() != s.m + 1) return false;
    if (t.verts.front() != from || t.verts.back() != to) return false;
    std::vector<char> used(s.m, 0);
    if (!mark_edges(s, t.verts, used)) return false;
    return !has_short_subcycle(s, t, 4);
}

// Wraps a candidate vertex list, orients it from->to and validates it.
std::optional<Trail> accept_side_trail(const PlaneGraph& s, std::vector<VertexId> verts,
                                       VertexId from, VertexId to) {
    if (verts.size() < 2) return std::nullopt;
    Trail t{std::move(verts), false};
    if (t.verts.front() != from) t = reversed(t);
    if (!euler_between(s, t, from, to)) return std::nullopt;
    return t;
}

// Exhaustive good Euler trail search, only for small sides.
std::optional<Trail> euler_good_trail(const PlaneGraph& p, VertexId from, VertexId to) {
    std::vector<char> used(p.m, 0);
    std::vector<VertexId> vs{from};
    int left = p.m;
    std::function<bool()> go = [&]() -> bool {
        if (left == 0) return vs.back() == to;
        VertexId cur = vs.back();
        for (VertexId w : p.rot[cur]) {
            int e = p.edge_id(cur, w);
            if (used[e] || !ok_push(vs, w)) continue;
            used[e] = 1;
            vs.push_back(w);
            --left;
            if (go()) return true;
            used[e] = 0;
            vs.pop_back();
            ++left;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    return Trail{vs, false};
}

// Enumerates pairs of edge-disjoint good trails (t1: af..at, t2: bf..bt) that
// together cover p, feeding them to sink until it returns true.
bool for_each_trail_pair(const PlaneGraph& p, VertexId af, VertexId at, VertexId bf, VertexId bt,
                         const std::function<bool(const Trail&, const Trail&)>& sink) {
    std::vector<char> used(p.m, 0);
    std::vector<VertexId> v1{af}, v2;
    int left = p.m;
    bool done = false;

    std::function<void()> go2 = [&]() {
        if (done) return;
        VertexId cur = v2.back();
        if (left == 0) {
            if (cur == bt && sink(Trail{v1, false}, Trail{v2, false})) done = true;
            return;
        }
        for (VertexId w : p.rot[cur]) {
            int e = p.edge_id(cur, w);
            if (used[e] || !ok_push(v2, w)) continue;
            used[e] = 1;
            v2.push_back(w);
            --left;
            go2();
            used[e] = 0;
            v2.pop_back();
            ++left;
            if (done) return;
        }
    };
    std::function<void()> go1 = [&]() {
        if (done) return;
        VertexId cur = v1.back();
        if (cur == at && v1.size() >= 2) {
            v2.assign(1, bf);
            go2();
            v2.clear();
            if (done) return;
        }
        for (VertexId w : p.rot[cur]) {
            int e = p.edge_id(cur, w);
            if (used[e] || !ok_push(v1, w)) continue;
            used[e] = 1;
            v1.push_back(w);
            --left;
            go1();
            used[e] = 0;
            v1.pop_back();
            ++left;
            if (done) return;
        }
    };
    go1();
    return done;
}

struct PendantRoles {
    VertexId x1, x2, y1, y2;
    VertexId a1, a2, b1, b2;  // the anchors, rot[pendant][0]
};

PendantRoles validate_pendant_graph(const PlaneGraph& g, const TrailPair& in) {
    PendantRoles q{in.x1, in.x2, in.y1, in.y2, -1, -1, -1, -1};
    std::array<VertexId, 4> ps{q.x1, q.x2, q.y1, q.y2};
    for (VertexId p : ps)
        if (p < 0 || p >= g.n())
            throw PreconditionViolated("rearrange_trails: pendant id out of range");
    std::set<VertexId> uniq(ps.begin(), ps.end());
    if (uniq.size() != 4) throw PreconditionViolated("rearrange_trails: pendants not distinct");
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.deg(v) != (uniq.count(v) ? 1 : 4))
            throw PreconditionViolated("rearrange_trails: graph must be quartic off the pendants");
    q.a1 = g.rot[q.x1][0];
    q.a2 = g.rot[q.x2][0];
    q.b1 = g.rot[q.y1][0];
    q.b2 = g.rot[q.y2][0];
    for (VertexId a : {q.a1, q.a2, q.b1, q.b2})
        if (uniq.count(a)) throw PreconditionViolated("rearrange_trails: pendants may not be adjacent");
    if (q.a1 == q.a2 || q.b1 == q.b2)
        throw PreconditionViolated("rearrange_trails: pendant pair shares its anchor");
    return q;
}

bool usable_pair(const PlaneGraph& g, const Trail& n1, const Trail& n2) {
    for (const Trail* t : {&n1, &n2})
        if (!good_open(g, *t)) return false;
    std::vector<char> used(g.m, 0);
    if (!mark_edges(g, n1.verts, used) || !mark_edges(g, n2.verts, used)) return false;
    return std::count(used.begin(), used.end(), (char)1) == g.m;
}

void check_rearranged(const PlaneGraph& g, const PendantRoles& q, const TrailPair& out) {
    bool ok = usable_pair(g, out.t1, out.t2);
    if (ok && out.shape == TrailShape::XXYY) {
        ok = out.t1.verts.front() == q.x1 && out.t1.verts.back() == q.x2 &&
             out.t2.verts.front() == q.y1 && out.t2.verts.back() == q.y2 &&
             out.t1.length() >= 5 && out.t2.length() >= 5;
    } else if (ok) {
        VertexId e1 = out.t1.verts.back(), e2 = out.t2.verts.back();
        ok = out.t1.verts.front() == q.x1 && out.t2.verts.front() == q.x2 && e1 != e2 &&
             (e1 == q.y1 || e1 == q.y2) && (e2 == q.y1 || e2 == q.y2) &&
             out.t1.length() >= 3 && out.t2.length() >= 3;
    }
    if (!ok) throw InternalCaseExhaustion("rearrange_trails: postcondition failed");
}

}  // namespace

TrailPair rearrange_trails(const PlaneGraph& g, const TrailPair& in) {
    PendantRoles q = validate_pendant_graph(g, in);
    Trail t1 = in.t1, t2 = in.t2;
    for (const Trail* t : {&t1, &t2}) {
        if (t->closed || t->verts.size() < 2)
            throw PreconditionViolated("rearrange_trails: trails must be open");
        if (auto d = trail_defect(g, *t)) throw PreconditionViolated("rearrange_trails: " + *d);
        if (has_short_subcycle(g, *t, 4))
            throw PreconditionViolated("rearrange_trails: input trail has a short subcycle");
    }
    {
        std::vector<char> used(g.m, 0);
        if (!mark_edges(g, t1.verts, used) || !mark_edges(g, t2.verts, used) ||
            std::count(used.begin(), used.end(), (char)1) != g.m)
            throw PreconditionViolated("rearrange_trails: trails must cover every edge once");
        std::array<VertexId, 4> ends{t1.verts.front(), t1.verts.back(), t2.verts.front(),
                                     t2.verts.back()};
        std::array<VertexId, 4> want{q.x1, q.x2, q.y1, q.y2};
        std::sort(ends.begin(), ends.end());
        std::sort(want.begin(), want.end());
        if (ends != want)
            throw PreconditionViolated("rearrange_trails: trail ends must be the four pendants");
    }
    auto isx = [&](VertexId v) { return v == q.x1 || v == q.x2; };

    for (int round = 0; round < 8; ++round) {
        if (isx(t1.verts.front()) != isx(t1.verts.back())) {
            // crossing layout
            if (t1.length() >= 3 && t2.length() >= 3) {
                if (!isx(t1.verts.front())) t1 = reversed(t1);
                if (!isx(t2.verts.front())) t2 = reversed(t2);
                if (t1.verts.front() != q.x1) std::swap(t1, t2);
                TrailPair out{t1, t2, q.x1, q.x2, q.y1, q.y2, TrailShape::XY};
                check_rearranged(g, q, out);
                return out;
            }
            // exactly one trail of length 2; route the other through its hub
            Trail shrt = t1, lng = t2;
            if (shrt.length() != 2) std::swap(shrt, lng);
            if (shrt.length() != 2)
                throw InternalCaseExhaustion("rearrange_trails: crossing lengths out of range");
            if (!isx(shrt.verts.front())) shrt = reversed(shrt);
            if (!isx(lng.verts.front())) lng = reversed(lng);
            VertexId z = shrt.verts[1];
            auto pz = positions_in(lng.verts, z);
            if (pz.size() != 1)
                throw InternalCaseExhaustion("rearrange_trails: hub visits the long trail twice");
            Trail n1{cat({{shrt.verts.front()}, slice(lng.verts, pz[0], (int)lng.verts.size())}),
                     false};
            Trail n2{cat({slice(lng.verts, 0, pz[0] + 1), {shrt.verts.back()}}), false};
            t1 = n1;
            t2 = n2;
            continue;
        }
        // same-pair layout
        Trail tx = isx(t1.verts.front()) ? t1 : t2;
        Trail ty = isx(t1.verts.front()) ? t2 : t1;
        if (tx.length() >= 5 && ty.length() >= 5) {
            if (tx.verts.front() != q.x1) tx = reversed(tx);
            if (ty.verts.front() != q.y1) ty = reversed(ty);
            TrailPair out{tx, ty, q.x1, q.x2, q.y1, q.y2, TrailShape::XXYY};
            check_rearranged(g, q, out);
            return out;
        }
        bool short_x = tx.length() < 5;
        Trail P = short_x ? tx : ty;
        Trail Q = short_x ? ty : tx;
        if (P.length() != 3 && P.length() != 4)
            throw InternalCaseExhaustion("rearrange_trails: same-pair lengths out of range");
        VertexId A1 = P.verts[1], A2 = P.verts[(int)P.verts.size() - 2];
        auto p1 = positions_in(Q.verts, A1);
        auto p2 = positions_in(Q.verts, A2);
        if (p1.size() != 1 || p2.size() != 1)
            throw InternalCaseExhaustion("rearrange_trails: anchor count off");
        if (p1[0] > p2[0]) {
            Q = reversed(Q);
            p1 = positions_in(Q.verts, A1);
            p2 = positions_in(Q.verts, A2);
        }
        int pa1 = p1[0], pa2 = p2[0], M = (int)Q.verts.size();
        std::vector<std::pair<Trail, Trail>> cands;
        if (P.length() == 3) {
            cands.push_back({Trail{cat({{P.verts.front()}, slice(Q.verts, pa1, M)}), false},
                             Trail{cat({{P.verts.back(), A2}, rslice(Q.verts, 0, pa1 + 1)}), false}});
        } else {
            VertexId C = P.verts[2];
            cands.push_back(
                {Trail{cat({{P.verts.front()}, slice(Q.verts, pa1, M)}), false},
                 Trail{cat({{P.verts.back(), A2, C}, rslice(Q.verts, 0, pa1 + 1)}), false}});
            cands.push_back({Trail{cat({{P.verts.front(), A1, C}, slice(Q.verts, pa2, M)}), false},
                             Trail{cat({{P.verts.back()}, rslice(Q.verts, 0, pa2 + 1)}), false}});
        }
        bool applied = false;
        for (auto& [n1, n2] : cands)
            if (usable_pair(g, n1, n2)) {
                t1 = n1;
                t2 = n2;
                applied = true;
                break;
            }
        if (!applied)
            throw InternalCaseExhaustion("rearrange_trails: no extraction stayed self-avoiding");
    }
    throw InternalCaseExhaustion("rearrange_trails: did not converge");
}

namespace {

// ---- shared pendant-completion step ----

struct PendantQuad {
    PlaneGraph L;  // quartic except four pendants
    VertexId x1, x2, y1, y2;
};

// Completes L, solves the completion, removes the eight new edges and hands
// the two leftover arcs to rearrange_trails.
TrailPair completion_pair(const PendantQuad& pq,
                          const std::function<Trail(const PlaneGraph&)>& solve) {
    CompletionResult comp = complete_into_quartic(pq.L);
    Trail c = solve(comp.g);
    std::set<EdgeKey> drop;
    for (int i = 0; i < 4; ++i) {
        drop.insert(ekey(comp.z, comp.cycle[i]));
        drop.insert(ekey(comp.cycle[i], comp.cycle[(i + 1) % 4]));
    }
    auto arcs = arcs_without(c, drop);
    if (arcs.size() != 2)
        throw InternalCaseExhaustion("completion circuit left " + std::to_string(arcs.size()) +
                                     " arcs");
    TrailPair pr;
    pr.t1 = Trail{arcs[0], false};
    pr.t2 = Trail{arcs[1], false};
    pr.x1 = pq.x1;
    pr.x2 = pq.x2;
    pr.y1 = pq.y1;
    pr.y2 = pq.y2;
    pr.shape = TrailShape::XY;  // placeholder; rearrange_trails reclassifies
    return rearrange_trails(pq.L, pr);
}

Trail three_ec_impl(const PlaneGraph& g, Transcript* tr, int depth);
Trail twocon_impl(const PlaneGraph& g, Transcript* tr, int depth);
Trail side_chain(const PlaneGraph& s, VertexId nx, VertexId ny, Transcript* tr, int depth);
Trail cut_side_trail(const PlaneGraph& s, VertexId nx, VertexId ny, int slot_x, int slot_y,
                     Transcript* tr, int depth);

// ---- 2-vertex-cut machinery ----

// A cut side with x and y split into two pendants each.
struct SplitSide {
    InducedSide ind;
    PlaneGraph L;
    VertexId lx1, lx2, ly1, ly2;
    std::vector<VertexId> to_g;  // L id -> g id; pendants land on x resp. y
    VertexId x, y;
};

SplitSide make_split_side(const PlaneGraph& g, const std::vector<VertexId>& side, VertexId x,
                          VertexId y) {
    SplitSide s;
    s.x = x;
    s.y = y;
    s.ind = induce_side(g, side);
    VertexId nx = s.ind.new_of_old[x], ny = s.ind.new_of_old[y];
    if (s.ind.g.deg(nx) != 2 || s.ind.g.deg(ny) != 2)
        throw InternalCaseExhaustion("cut end keeps wrong side degree");
    SplitResult sx = split_vertex(s.ind.g, nx);
    SplitResult sy = split_vertex(sx.g, ny);
    auto compacted = rot_compact(sy.g.rot);
    s.L = build(compacted.first);
    const auto& old_of = compacted.second;
    std::vector<int> newid(sy.g.n(), -1);
    for (int i = 0; i < (int)old_of.size(); ++i) newid[old_of[i]] = i;
    s.lx1 = newid[sx.pendants[0]];
    s.lx2 = newid[sx.pendants[1]];
    s.ly1 = newid[sy.pendants[0]];
    s.ly2 = newid[sy.pendants[1]];
    s.to_g.resize(s.L.n());
    for (int i = 0; i < s.L.n(); ++i) {
        VertexId pre = old_of[i];
        if (pre < s.ind.g.n())
            s.to_g[i] = s.ind.old_of_new[pre];
        else
            s.to_g[i] = (pre == sx.pendants[0] || pre == sx.pendants[1]) ? x : y;
    }
    return s;
}

struct CutSideTrails {
    Trail t1, t2;  // open x..y trails in g ids
};
struct CutSideCircuits {
    Trail cx, cy;  // closed, through x resp. y, in g ids
};
using CutSideResult = std::variant<CutSideTrails, CutSideCircuits>;

CutSideResult side_round(const PlaneGraph& g, const SplitSide& s, Transcript* tr, int depth) {
    PendantQuad pq{s.L, s.lx1, s.lx2, s.ly1, s.ly2};
    TrailPair pr = completion_pair(pq, [&](const PlaneGraph& ap) {
        if (is_octahedron(ap))
            throw InternalCaseExhaustion("completed cut side turned into the octahedron");
        return three_ec_impl(ap, tr, depth + 1);
    });
    if (pr.shape == TrailShape::XY) {
        Trail t1 = translate_trail(pr.t1, s.to_g);
        Trail t2 = translate_trail(pr.t2, s.to_g);
        if (!good_open(g, t1) || !good_open(g, t2))
            throw InternalCaseExhaustion("side trails broke at the cut ends");
        return CutSideTrails{t1, t2};
    }
    Trail cx = translate_trail(pr.t1, s.to_g);
    Trail cy = translate_trail(pr.t2, s.to_g);
    cx.closed = cy.closed = true;
    // merging the pendant pair back can in principle close a short cycle
    // through the new wrap window; nothing excludes it a priori, so check
    if (!good_closed(g, cx) || !good_closed(g, cy))
        throw InternalCaseExhaustion("pendant merge closed a short cycle");
    return CutSideCircuits{cx, cy};
}

// ---- the split octahedron ----

// The only side whose fused auxiliary is the octahedron: an octahedron with
// one vertex split into two degree-2 halves. Its crossing trail pair is found
// once by search and reused through canonical transport.
struct SplitOcta {
    PlaneGraph h;
    VertexId hx, hy;
    Trail r1, r2;
};

const SplitOcta& split_octa_fixture() {
    static const SplitOcta fix = [] {
        PlaneGraph oct = antiprism(3);
        SplitResult sp = split_vertex(oct, 0);
        for (int off = 0; off < 2; ++off) {
            std::vector<VertexId> pa{sp.pendants[off], sp.pendants[(off + 1) % 4]};
            std::vector<VertexId> pb{sp.pendants[(off + 2) % 4], sp.pendants[(off + 3) % 4]};
            try {
                auto ia = identify_pendants(sp.g, pa);
                auto ib = identify_pendants(ia.first, pb);
                auto compacted = rot_compact(ib.first.rot);
                SplitOcta f;
                f.h = build(compacted.first);
                f.hx = f.hy = -1;
                for (int i = 0; i < f.h.n(); ++i) {
                    if (compacted.second[i] == ia.second) f.hx = i;
                    if (compacted.second[i] == ib.second) f.hy = i;
                }
                if (f.hx < 0 || f.hy < 0 || f.h.deg(f.hx) != 2 || f.h.deg(f.hy) != 2)
                    throw InternalCaseExhaustion("split octahedron bookkeeping failed");
                bool found = for_each_trail_pair(f.h, f.hx, f.hy, f.hx, f.hy,
                                                 [&](const Trail& a, const Trail& b) {
                                                     f.r1 = a;
                                                     f.r2 = b;
                                                     return true;
                                                 });
                if (!found)
                    throw InternalCaseExhaustion("split octahedron has no crossing trail pair");
                return f;
            } catch (const NotCoFacial&) {
            }
        }
        throw InternalCaseExhaustion("octahedron split admitted no pendant pairing");
    }();
    return fix;
}

CutSideTrails fixture_side_trails(const PlaneGraph& g, const SplitSide& s) {
    const SplitOcta& f = split_octa_fixture();
    VertexId nx = s.ind.new_of_old[s.x], ny = s.ind.new_of_old[s.y];
    Trail a, b;
    try {
        a = detail::transport(f.h, f.r1, s.ind.g);
        b = detail::transport(f.h, f.r2, s.ind.g);
    } catch (const PreconditionViolated&) {
        throw InternalCaseExhaustion("side does not match the split octahedron");
    }
    for (Trail* t : {&a, &b}) {
        if (t->verts.front() != nx) *t = reversed(*t);
        if (t->verts.front() != nx || t->verts.back() != ny)
            throw InternalCaseExhaustion("transported trail misses the cut ends");
    }
    Trail ta = translate_trail(a, s.ind.old_of_new);
    Trail tb = translate_trail(b, s.ind.old_of_new);
    if (!good_open(g, ta) || !good_open(g, tb))
        throw InternalCaseExhaustion("transported fixture trails lost goodness");
    return {ta, tb};
}

// Merges x and y of a side into one vertex, solves that auxiliary, splits the
// circuit at the merged vertex and rearranges. Crossing trails come back as
// such; a same-pair outcome means the side stays two circuits (nullopt).
// Requires N(x) and N(y) disjoint, else the merge is not simple.
std::optional<CutSideTrails> fused_side_trails(const PlaneGraph& g, const SplitSide& s,
                                               Transcript* tr, int depth) {
    auto fused = identify_pendants(s.L, {s.lx1, s.lx2, s.ly1, s.ly2});
    auto compacted = rot_compact(fused.first.rot);
    PlaneGraph a2 = build(compacted.first);
    const auto& old_of = compacted.second;
    std::vector<int> newid(fused.first.n(), -1);
    for (int i = 0; i < (int)old_of.size(); ++i) newid[old_of[i]] = i;
    VertexId u = newid[fused.second];
    if (!a2.is_quartic() || edge_connectivity(a2) < 4)
        throw InternalCaseExhaustion("fused side auxiliary lost edge connectivity");
    if (is_octahedron(a2)) {
        if (tr) tr->note("fused side is the octahedron; fixture trails");
        return fixture_side_trails(g, s);
    }
    Trail c2 = three_ec_impl(a2, tr, depth + 1);
    std::set<EdgeKey> drop;
    for (VertexId w : a2.rot[u]) drop.insert(ekey(u, w));
    auto arcs = arcs_without(c2, drop);
    if (arcs.size() != 2) throw InternalCaseExhaustion("fused circuit split into odd arc count");
    VertexId an1 = newid[s.L.rot[s.lx1][0]], an2 = newid[s.L.rot[s.lx2][0]];
    VertexId bn1 = newid[s.L.rot[s.ly1][0]], bn2 = newid[s.L.rot[s.ly2][0]];
    auto pend_of = [&](VertexId a2id) -> VertexId {
        if (a2id == an1) return s.lx1;
        if (a2id == an2) return s.lx2;
        if (a2id == bn1) return s.ly1;
        if (a2id == bn2) return s.ly2;
        throw InternalCaseExhaustion("arc end is not an anchor of the merged vertex");
    };
    auto to_L = [&](const std::vector<VertexId>& arc) {
        std::vector<VertexId> out;
        out.reserve(arc.size() + 2);
        for (VertexId w : arc) out.push_back(old_of[w]);
        return out;
    };
    TrailPair pr;
    pr.t1 = Trail{cat({{pend_of(arcs[0].front())}, to_L(arcs[0]), {pend_of(arcs[0].back())}}),
                  false};
    pr.t2 = Trail{cat({{pend_of(arcs[1].front())}, to_L(arcs[1]), {pend_of(arcs[1].back())}}),
                  false};
    pr.x1 = s.lx1;
    pr.x2 = s.lx2;
    pr.y1 = s.ly1;
    pr.y2 = s.ly2;
    pr.shape = TrailShape::XY;
    pr = rearrange_trails(s.L, pr);
    if (pr.shape != TrailShape::XY) return std::nullopt;
    Trail t1 = translate_trail(pr.t1, s.to_g);
    Trail t2 = translate_trail(pr.t2, s.to_g);
    if (!good_open(g, t1) || !good_open(g, t2))
        throw InternalCaseExhaustion("fused side trails broke at the cut ends");
    return CutSideTrails{t1, t2};
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> split_closed(const Trail& c, int p) {
    return {slice(c.verts, 0, p + 1), slice(c.verts, p, (int)c.verts.size())};
}

// Both side circuits pass a common neighbour v of x and y; open them there
// and let the assembler interleave the six pieces.
std::optional<Trail> try_v_splice(const PlaneGraph& g, const CutSideCircuits& own,
                                  const CutSideCircuits& oth, VertexId v) {
    auto px = pass_positions(own.cx, v);
    auto py = pass_positions(own.cy, v);
    if (px.size() != 1 || py.size() != 1 || px[0] == 0 || py[0] == 0) return std::nullopt;
    auto cxs = split_closed(own.cx, px[0]);
    auto cys = split_closed(own.cy, py[0]);
    std::vector<std::vector<VertexId>> pieces{cxs.first,     cxs.second,   cys.first,
                                              cys.second,    oth.cx.verts, oth.cy.verts};
    long long budget = 20'000'000;
    return assemble_pieces(g, pieces, &budget);
}

// Splice each side's two circuits at an interior vertex they share, then
// chain the two side circuits at x.
std::optional<Trail> try_w_splice(const PlaneGraph& g, const CutSideCircuits& ca,
                                  const CutSideCircuits& cb) {
    auto joints = [&](const CutSideCircuits& c) {
        std::vector<std::pair<int, int>> out;  // (pos in cx, pos in cy)
        for (VertexId w = 0; w < g.n(); ++w) {
            auto px = pass_positions(c.cx, w);
            auto py = pass_positions(c.cy, w);
            if (px.size() == 1 && py.size() == 1 && px[0] > 0 && py[0] > 0)
                out.push_back({px[0], py[0]});
        }
        return out;
    };
    for (auto [pax, pay] : joints(ca)) {
        auto sa = split_closed(ca.cx, pax);
        auto la = rotated(ca.cy, pay);
        for (auto [pbx, pby] : joints(cb)) {
            auto sb = split_closed(cb.cx, pbx);
            auto lb = rotated(cb.cy, pby);
            std::vector<std::vector<VertexId>> pieces{sa.first, sa.second, la.verts,
                                                      sb.first, sb.second, lb.verts};
            long long budget = 10'000'000;
            if (auto t = assemble_pieces(g, pieces, &budget)) return t;
        }
    }
    return std::nullopt;
}

Trail three_ec_impl(const PlaneGraph& g, Transcript* tr, int depth) {
    if (depth > 200) throw InternalCaseExhaustion("cut recursion exceeded depth bound");
    if (is_3connected(g)) return good_circuit_3connected(g, tr);
    CutReport rep = connectivity_report(g);
    if (rep.two_vertex_cuts.empty())
        throw InternalCaseExhaustion("no 2-vertex-cut in a non-3-connected graph");
    const TwoVertexCut& cut = rep.two_vertex_cuts.front();
    if (cut.type != CutType::a)
        throw InternalCaseExhaustion("unexpected cut type under edge connectivity 4");
    if (tr)
        tr->note("2-vertex cut {" + std::to_string(cut.x) + "," + std::to_string(cut.y) +
                 "}, sides " + std::to_string(cut.side_a.size()) + "/" +
                 std::to_string(cut.side_b.size()));
    SplitSide sa = make_split_side(g, cut.side_a, cut.x, cut.y);
    SplitSide sb = make_split_side(g, cut.side_b, cut.x, cut.y);
    CutSideResult ra = side_round(g, sa, tr, depth);
    CutSideResult rb = side_round(g, sb, tr, depth);

    Trail out;
    auto* ta = std::get_if<CutSideTrails>(&ra);
    auto* tb = std::get_if<CutSideTrails>(&rb);
    if (ta && tb) {
        std::vector<std::vector<VertexId>> pieces{ta->t1.verts, ta->t2.verts, tb->t1.verts,
                                                  tb->t2.verts};
        long long budget = 20'000'000;
        auto got = assemble_pieces(g, pieces, &budget);
        if (!got) throw InternalCaseExhaustion("crossing-crossing stitch failed");
        out = *got;
    } else if (ta || tb) {
        auto& t = ta ? *ta : *tb;
        auto& c = ta ? std::get<CutSideCircuits>(rb) : std::get<CutSideCircuits>(ra);
        std::vector<std::vector<VertexId>> pieces{c.cx.verts, t.t1.verts, c.cy.verts, t.t2.verts};
        long long budget = 20'000'000;
        auto got = assemble_pieces(g, pieces, &budget);
        if (!got) throw InternalCaseExhaustion("crossing-circuit stitch failed");
        out = *got;
    } else {
        auto& ca = std::get<CutSideCircuits>(ra);
        auto& cb = std::get<CutSideCircuits>(rb);
        std::vector<VertexId> common;
        for (VertexId w : g.rot[cut.x])
            if (g.edge_id(w, cut.y) >= 0) common.push_back(w);
        std::optional<Trail> got;
        if (!common.empty()) {
            std::vector<char> in_a(g.n(), 0);
            for (VertexId w : cut.side_a) in_a[w] = 1;
            for (VertexId v : common) {
                got = in_a[v] ? try_v_splice(g, ca, cb, v) : try_v_splice(g, cb, ca, v);
                if (got) {
                    if (tr) tr->note("spliced at common neighbour " + std::to_string(v));
                    break;
                }
            }
            if (!got) throw InternalCaseExhaustion("common-neighbour splice failed");
        } else {
            if (auto st = fused_side_trails(g, sa, tr, depth)) {
                std::vector<std::vector<VertexId>> pieces{cb.cx.verts, st->t1.verts, cb.cy.verts,
                                                          st->t2.verts};
                long long budget = 20'000'000;
                got = assemble_pieces(g, pieces, &budget);
            }
            if (!got)
                if (auto st = fused_side_trails(g, sb, tr, depth)) {
                    std::vector<std::vector<VertexId>> pieces{ca.cx.verts, st->t1.verts,
                                                              ca.cy.verts, st->t2.verts};
                    long long budget = 20'000'000;
                    got = assemble_pieces(g, pieces, &budget);
                }
            if (!got) got = try_w_splice(g, ca, cb);
            if (!got) throw InternalCaseExhaustion("circuit-circuit stitch exhausted");
        }
        out = *got;
    }
    auto vr = verify_circuit(g, out, 4);
    if (!vr.ok) throw InternalCaseExhaustion("stitched circuit invalid: " + vr.diagnostic);
    return out;
}

// ---- 2-edge-cut machinery ----

// Adds the missing xy edge in the slots the cut edges vacated, solves, and
// opens the circuit at that edge.
Trail side_virtual_edge(const PlaneGraph& s, VertexId nx, VertexId ny, int slot_x, int slot_y,
                        Transcript* tr, int depth) {
    Rot r = s.rot;
    r[nx].insert(r[nx].begin() + slot_x, ny);
    r[ny].insert(r[ny].begin() + slot_y, nx);
    PlaneGraph aux = build(r);
    if (find_f6(aux)) {
        if (tr) tr->note("virtual edge raised the obstruction; chaining");
        return side_chain(s, nx, ny, tr, depth);
    }
    Trail c = twocon_impl(aux, tr, depth + 1);
    int at = -1;
    for (int i = 0; i < c.length(); ++i) {
        VertexId u = c.verts[i], v = c.verts[i + 1];
        if ((u == nx && v == ny) || (u == ny && v == nx)) {
            at = i;
            break;
        }
    }
    if (at < 0) throw InternalCaseExhaustion("virtual edge missing from its circuit");
    Trail rc = rotated(c, at + 1);
    Trail open_t{slice(rc.verts, 0, (int)rc.verts.size() - 1), false};
    if (open_t.verts.front() != nx) open_t = reversed(open_t);
    if (!euler_between(s, open_t, nx, ny))
        throw InternalCaseExhaustion("virtual-edge trail failed validation");
    return open_t;
}

// Contracts the xy edge, solves, and re-expands the two passes through the
// merged vertex in whichever of the three layouts validates.
Trail side_contract(const PlaneGraph& s, VertexId nx, VertexId ny, Transcript* tr, int depth) {
    auto tail_pair = [&](VertexId center, VertexId skip) {
        const auto& rr = s.rot[center];
        int p = (int)(std::find(rr.begin(), rr.end(), skip) - rr.begin());
        return std::array<VertexId, 2>{rr[(p + 1) % 3], rr[(p + 2) % 3]};
    };
    auto as = tail_pair(nx, ny);
    auto bs = tail_pair(ny, nx);
    Rot r = s.rot;
    VertexId v = (VertexId)r.size();
    r.push_back({as[0], as[1], bs[0], bs[1]});
    for (VertexId w : {as[0], as[1]}) rot_replace(r, w, nx, v);
    for (VertexId w : {bs[0], bs[1]}) rot_replace(r, w, ny, v);
    r[nx].clear();
    r[ny].clear();
    auto compacted = rot_compact(r);
    PlaneGraph aux = build(compacted.first);
    if (find_f6(aux)) {
        if (tr) tr->note("contraction raised the obstruction; chaining");
        return side_chain(s, nx, ny, tr, depth);
    }
    VertexId va = -1;
    for (int i = 0; i < (int)compacted.second.size(); ++i)
        if (compacted.second[i] == v) va = i;
    Trail c = twocon_impl(aux, tr, depth + 1);
    auto pos = pass_positions(c, va);
    if (pos.size() != 2) throw InternalCaseExhaustion("merged vertex pass count off");
    Trail cr = rotated(c, pos[0]);
    int q = -1;
    for (int i = 1; i < cr.length(); ++i)
        if (cr.verts[i] == va) q = i;
    auto lift = [&](int from, int to) {
        std::vector<VertexId> out;
        for (int i = from + 1; i < to; ++i) out.push_back(compacted.second[cr.verts[i]]);
        return out;
    };
    std::vector<VertexId> seg1 = lift(0, q), seg2 = lift(q, cr.length());
    for (int sw = 0; sw < 2; ++sw) {
        const auto& P0 = sw ? seg2 : seg1;
        const auto& Q0 = sw ? seg1 : seg2;
        for (int dp = 0; dp < 2; ++dp)
            for (int dq = 0; dq < 2; ++dq) {
                auto P = dp ? rev_copy(P0) : P0;
                auto Q = dq ? rev_copy(Q0) : Q0;
                for (int pat = 0; pat < 3; ++pat) {
                    std::vector<VertexId> cand;
                    if (pat == 0)
                        cand = cat({{nx}, P, {ny}, Q, {nx, ny}});
                    else if (pat == 1)
                        cand = cat({{nx}, P, {ny, nx}, Q, {ny}});
                    else
                        cand = cat({{nx}, P, {nx, ny}, Q, {ny}});
                    if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
                }
            }
    }
    throw InternalCaseExhaustion("contraction rebuild found no good trail");
}

// One common neighbour v: strip the triangle xyv, split v, complete, and
// restore the three edges around the junction.
Trail side_one_common(const PlaneGraph& s, VertexId nx, VertexId ny, VertexId v, Transcript* tr,
                      int depth) {
    Rot r = s.rot;
    rot_remove_edge(r, nx, ny);
    rot_remove_edge(r, nx, v);
    rot_remove_edge(r, ny, v);
    PlaneGraph stripped = build(r);
    SplitResult sv = split_vertex(stripped, v);
    auto compacted = rot_compact(sv.g.rot);
    PlaneGraph L = build(compacted.first);
    std::vector<int> newid(sv.g.n(), -1);
    for (int i = 0; i < (int)compacted.second.size(); ++i) newid[compacted.second[i]] = i;
    PendantQuad pq{L, newid[sv.pendants[0]], newid[sv.pendants[1]], newid[nx], newid[ny]};
    TrailPair pr = completion_pair(pq, [&](const PlaneGraph& ap) {
        if (find_f6(ap))
            throw InternalCaseExhaustion("one-common completion holds the obstruction");
        return twocon_impl(ap, tr, depth + 1);
    });
    std::vector<VertexId> to_s(L.n());
    for (int i = 0; i < L.n(); ++i)
        to_s[i] = compacted.second[i] < s.n() ? compacted.second[i] : v;
    if (pr.shape == TrailShape::XXYY) {
        Trail cv = translate_trail(pr.t1, to_s);  // v ... v, still flagged open
        Trail tq = translate_trail(pr.t2, to_s);  // nx ... ny
        auto cvint = slice(cv.verts, 1, (int)cv.verts.size() - 1);
        for (int dq = 0; dq < 2; ++dq) {
            Trail qd = dq ? reversed(tq) : tq;
            for (int dv = 0; dv < 2; ++dv) {
                auto ci = dv ? rev_copy(cvint) : cvint;
                auto cand = cat({qd.verts, {qd.verts.front(), v}, ci, {v, qd.verts.back()}});
                if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
            }
        }
        throw InternalCaseExhaustion("one-common circuit rebuild failed");
    }
    Trail u1 = translate_trail(pr.t1, to_s);  // v ... cut end
    Trail u2 = translate_trail(pr.t2, to_s);
    for (int sw = 0; sw < 2; ++sw) {
        Trail px = reversed(sw ? u2 : u1);  // X ... v
        Trail py = reversed(sw ? u1 : u2);  // Y ... v
        VertexId X = px.verts.front(), Y = py.verts.front();
        {
            auto cand = cat({px.verts, {X, Y}, slice(py.verts, 1, (int)py.verts.size()), {Y}});
            if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
        }
        if (px.verts.size() >= 3 && py.verts.size() >= 4 &&
            px.verts[px.verts.size() - 2] == py.verts[1]) {
            // both trails reach v through the same vertex; reroute around it
            VertexId b = py.verts[1];
            auto cand = cat({slice(px.verts, 0, (int)px.verts.size() - 1),
                             {Y, X, v},
                             rslice(py.verts, 2, (int)py.verts.size() - 1),
                             {b, v, Y}});
            if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
        }
    }
    throw InternalCaseExhaustion("one-common crossing rebuild failed");
}

// Two non-adjacent common neighbours v, w: delete x and y outright, split both
// common neighbours, complete, and restore the five junction edges.
Trail side_two_common(const PlaneGraph& s, VertexId nx, VertexId ny, VertexId v, VertexId w,
                      Transcript* tr, int depth) {
    Rot r = s.rot;
    rot_remove_edge(r, nx, ny);
    rot_remove_edge(r, nx, v);
    rot_remove_edge(r, nx, w);
    rot_remove_edge(r, ny, v);
    rot_remove_edge(r, ny, w);
    PlaneGraph stripped = build(r);
    SplitResult s1 = split_vertex(stripped, v);
    SplitResult s2 = split_vertex(s1.g, w);
    auto compacted = rot_compact(s2.g.rot);
    PlaneGraph L = build(compacted.first);
    std::vector<int> newid(s2.g.n(), -1);
    for (int i = 0; i < (int)compacted.second.size(); ++i) newid[compacted.second[i]] = i;
    PendantQuad pq{L, newid[s1.pendants[0]], newid[s1.pendants[1]], newid[s2.pendants[0]],
                   newid[s2.pendants[1]]};
    TrailPair pr = completion_pair(pq, [&](const PlaneGraph& ap) {
        if (find_f6(ap))
            throw InternalCaseExhaustion("two-common completion holds the obstruction");
        return twocon_impl(ap, tr, depth + 1);
    });
    std::vector<VertexId> to_s(L.n());
    for (int i = 0; i < L.n(); ++i) {
        VertexId pre = compacted.second[i];
        if (pre < s.n())
            to_s[i] = pre;
        else
            to_s[i] = (pre == s1.pendants[0] || pre == s1.pendants[1]) ? v : w;
    }
    if (pr.shape == TrailShape::XXYY) {
        Trail cv = translate_trail(pr.t1, to_s);  // v ... v
        Trail cw = translate_trail(pr.t2, to_s);  // w ... w
        auto cvint = slice(cv.verts, 1, (int)cv.verts.size() - 1);
        auto cwint = slice(cw.verts, 1, (int)cw.verts.size() - 1);
        for (int rs = 0; rs < 2; ++rs) {
            VertexId X = rs ? ny : nx, Y = rs ? nx : ny;
            for (int vs = 0; vs < 2; ++vs) {
                VertexId V = vs ? w : v, W = vs ? v : w;
                const auto& ai = vs ? cwint : cvint;
                const auto& bi = vs ? cvint : cwint;
                for (int d1 = 0; d1 < 2; ++d1)
                    for (int d2 = 0; d2 < 2; ++d2) {
                        auto a = d1 ? rev_copy(ai) : ai;
                        auto b = d2 ? rev_copy(bi) : bi;
                        auto cand = cat({{X, V}, a, {V, Y, X, W}, b, {W, Y}});
                        if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
                    }
            }
        }
        throw InternalCaseExhaustion("two-common circuit rebuild failed");
    }
    Trail u1 = translate_trail(pr.t1, to_s);
    Trail u2 = translate_trail(pr.t2, to_s);
    for (Trail* t : {&u1, &u2})
        if (t->verts.front() != v) *t = reversed(*t);  // orient v ... w
    for (int rs = 0; rs < 2; ++rs) {
        VertexId X = rs ? ny : nx, Y = rs ? nx : ny;
        for (int sw = 0; sw < 2; ++sw) {
            const Trail& ua = sw ? u2 : u1;
            const Trail& ub = sw ? u1 : u2;
            auto cand = cat({{X}, ua.verts, {X, Y}, ub.verts, {Y}});
            if (auto t = accept_side_trail(s, cand, nx, ny)) return *t;
        }
    }
    throw InternalCaseExhaustion("two-common crossing rebuild failed");
}

// The cut sits on a small dense piece. Cut the piece off along its two exit
// edges, recurse on the far part, and search the piece for a matching pair of
// entry trails.
Trail side_chain(const PlaneGraph& s, VertexId nx, VertexId ny, Transcript* tr, int depth) {
    auto mem = c_subgraph_at_cut(s, nx, ny);
    if (!mem) throw InternalCaseExhaustion("expected a piece at the cut, found none");
    if ((int)mem->exit_edges.size() != 2)
        throw InternalCaseExhaustion("piece has unexpected exit count");
    if (tr) tr->note("chain piece, kind " + std::to_string((int)mem->kind));
    std::vector<char> inp(s.n(), 0);
    for (VertexId m : mem->map) inp[m] = 1;
    std::vector<VertexId> rest;
    for (VertexId u = 0; u < s.n(); ++u)
        if (!inp[u]) rest.push_back(u);
    InducedSide pind = induce_side(s, mem->map);
    InducedSide aind = induce_side(s, rest);
    VertexId m1 = mem->exit_edges[0].first, o1 = mem->exit_edges[0].second;
    VertexId m2 = mem->exit_edges[1].first, o2 = mem->exit_edges[1].second;
    if (o1 == o2) throw InternalCaseExhaustion("chain exits meet at one vertex");
    VertexId no1 = aind.new_of_old[o1], no2 = aind.new_of_old[o2];
    int so1 = -1, so2 = -1;
    for (const auto& st : aind.stubs) {
        if (st.v == no1 && st.far == m1) so1 = st.slot;
        if (st.v == no2 && st.far == m2) so2 = st.slot;
    }
    if (so1 < 0 || so2 < 0) throw InternalCaseExhaustion("chain stub bookkeeping failed");
    Trail far = cut_side_trail(aind.g, no1, no2, so1, so2, tr, depth + 1);
    Trail far_s = translate_trail(far, aind.old_of_new);  // o1 ... o2
    VertexId pnx = pind.new_of_old[nx], pny = pind.new_of_old[ny];
    for (int pass = 0; pass < 2; ++pass) {
        VertexId ea = pass ? m2 : m1, eb = pass ? m1 : m2;
        Trail mid = pass ? reversed(far_s) : far_s;
        std::optional<Trail> got;
        for_each_trail_pair(
            pind.g, pnx, pind.new_of_old[ea], pny, pind.new_of_old[eb],
            [&](const Trail& t1, const Trail& t2) {
                Trail a = translate_trail(t1, pind.old_of_new);
                Trail b = translate_trail(t2, pind.old_of_new);
                auto cand = cat({a.verts, mid.verts, rev_copy(b.verts)});
                if (auto t = accept_side_trail(s, cand, nx, ny)) {
                    got = *t;
                    return true;
                }
                return false;
            });
        if (got) return *got;
    }
    throw InternalCaseExhaustion("chain stitch found no good combination");
}

// Good Euler trail across one side of a 2-edge cut; nx, ny are the side's
// ends of the cut edges (degree 3), slot_* their vacated rotation slots.
Trail cut_side_trail(const PlaneGraph& s, VertexId nx, VertexId ny, int slot_x, int slot_y,
                     Transcript* tr, int depth) {
    if (depth > 200) throw InternalCaseExhaustion("side recursion exceeded depth bound");
    if (s.n() <= 8) {
        if (auto t = euler_good_trail(s, nx, ny)) return *t;
        throw InternalCaseExhaustion("small side admits no good crossing trail");
    }
    if (s.edge_id(nx, ny) < 0) {
        if (tr) tr->note("side: virtual edge, n=" + std::to_string(s.n()));
        return side_virtual_edge(s, nx, ny, slot_x, slot_y, tr, depth);
    }
    std::vector<VertexId> common;
    for (VertexId u : s.rot[nx])
        if (u != ny && s.edge_id(u, ny) >= 0) common.push_back(u);
    if (common.empty()) {
        if (tr) tr->note("side: contraction, n=" + std::to_string(s.n()));
        return side_contract(s, nx, ny, tr, depth);
    }
    if (common.size() == 1) {
        if (tr) tr->note("side: one common neighbour, n=" + std::to_string(s.n()));
        return side_one_common(s, nx, ny, common[0], tr, depth);
    }
    if (s.edge_id(common[0], common[1]) >= 0) {
        if (tr) tr->note("side: adjacent common neighbours; chaining");
        return side_chain(s, nx, ny, tr, depth);
    }
    if (tr) tr->note("side: two common neighbours, n=" + std::to_string(s.n()));
    return side_two_common(s, nx, ny, common[0], common[1], tr, depth);
}

// 2-connected, quartic, no obstruction copy anywhere.
Trail twocon_impl(const PlaneGraph& g, Transcript* tr, int depth) {
    if (depth > 200) throw InternalCaseExhaustion("recursion exceeded depth bound");
    CutReport rep = connectivity_report(g);
    if (!rep.cutvertices.empty()) {
        // contracting the ends of a 2-edge cut can leave a cutvertex when the
        // ends also form a vertex cut; the general entry peels those
        SolveOutcome oc = good_circuit(g, tr);
        if (auto* gc = std::get_if<GoodCircuit>(&oc)) return gc->circuit;
        throw InternalCaseExhaustion("cutvertex auxiliary came back unsolved");
    }
    if (rep.two_edge_cuts.empty()) return good_circuit_3edgeconnected(g, tr);
    const TwoEdgeCut& cut = rep.two_edge_cuts.front();
    std::vector<char> in_a(g.n(), 0);
    for (VertexId w : cut.side_a) in_a[w] = 1;
    auto e1 = g.edges[cut.e1], e2 = g.edges[cut.e2];
    VertexId x = in_a[e1.first] ? e1.first : e1.second;
    VertexId sv = in_a[e1.first] ? e1.second : e1.first;
    VertexId y = in_a[e2.first] ? e2.first : e2.second;
    VertexId tv = in_a[e2.first] ? e2.second : e2.first;
    if (x == y || sv == tv)
        throw InternalCaseExhaustion("cut edges share an endpoint in a 2-connected graph");
    if (tr)
        tr->note("2-edge cut {" + std::to_string(x) + "-" + std::to_string(sv) + ", " +
                 std::to_string(y) + "-" + std::to_string(tv) + "}, sides " +
                 std::to_string(cut.side_a.size()) + "/" + std::to_string(cut.side_b.size()));
    InducedSide ia = induce_side(g, cut.side_a);
    InducedSide ib = induce_side(g, cut.side_b);
    auto slot_of = [](const InducedSide& ind, VertexId v) {
        for (const auto& st : ind.stubs)
            if (st.v == v) return st.slot;
        throw InternalCaseExhaustion("cut end has no stub");
    };
    VertexId nax = ia.new_of_old[x], nay = ia.new_of_old[y];
    VertexId nbs = ib.new_of_old[sv], nbt = ib.new_of_old[tv];
    Trail ta = cut_side_trail(ia.g, nax, nay, slot_of(ia, nax), slot_of(ia, nay), tr, depth + 1);
    Trail tb = cut_side_trail(ib.g, nbt, nbs, slot_of(ib, nbt), slot_of(ib, nbs), tr, depth + 1);
    Trail tga = translate_trail(ta, ia.old_of_new);  // x ... y
    Trail tgb = translate_trail(tb, ib.old_of_new);  // t ... s
    Trail out{cat({tga.verts, tgb.verts, {x}}), true};
    auto vr = verify_circuit(g, out, 4);
    if (!vr.ok) throw InternalCaseExhaustion("cut splice invalid: " + vr.diagnostic);
    return out;
}

}  // namespace

Trail good_circuit_3edgeconnected(const PlaneGraph& g, Transcript* tr) {
    if (g.n() == 0 || !g.is_quartic())
        throw NotThreeEdgeConnected("good_circuit_3edgeconnected: graph must be quartic");
    if (edge_connectivity(g) < 4)
        throw NotThreeEdgeConnected("good_circuit_3edgeconnected: graph has a small edge cut");
    if (is_octahedron(g)) throw IsOctahedron("the octahedron admits no good circuit");
    return three_ec_impl(g, tr, 0);
}

SolveOutcome good_circuit_2connected(const PlaneGraph& g, Transcript* tr) {
    if (g.n() == 0 || !g.is_quartic())
        throw PreconditionViolated("good_circuit_2connected: graph must be quartic");
    if (edge_connectivity(g) == 0) throw NotTwoConnected("good_circuit_2connected: disconnected");
    for (VertexId v = 0; v < g.n(); ++v)
        if (is_cut_vertex(g, v))
            throw NotTwoConnected("good_circuit_2connected: cut vertex " + std::to_string(v));
    if (auto f6 = find_f6(g)) {
        if (tr) tr->note("obstruction found");
        return ObstructedByF6{*f6};
    }
    return GoodCircuit{twocon_impl(g, tr, 0)};
}

}  // namespace quartic
