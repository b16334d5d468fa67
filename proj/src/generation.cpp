#include "quartic/generation.hpp"

#include "quartic/connectivity.hpp"
#include "quartic/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace quartic {

PlaneGraph antiprism(int k) {
    if (k < 3) throw PreconditionViolated("antiprism: k >= 3 required");
    int n = 2 * k;
    std::vector<VertexId> top(k), bot(k);
    top[0] = 0;
    for (int i = 1; i < k; ++i) top[i] = 2 + i;  // x_i
    bot[0] = 1;
    for (int j = 1; j <= k - 2; ++j) bot[j] = k + 1 + j;  // y_j
    bot[k - 1] = 2;
    auto T = [&](int i) { return top[((i % k) + k) % k]; };
    auto B = [&](int i) { return bot[((i % k) + k) % k]; };
    Rot r(n);
    for (int i = 0; i < k; ++i) {
        r[T(i)] = {T(i + 1), B(i), B(i - 1), T(i - 1)};
        r[B(i)] = {B(i - 1), T(i), T(i + 1), B(i + 1)};
    }
    return build(r);
}

namespace {

// u's rotation is the only free choice after the incident slots are fixed;
// at most one cyclic order closes the faces, so try all with fixed anchor.
PlaneGraph build_with_vertex_orders(Rot r, VertexId v,
                                    const std::vector<std::vector<VertexId>>& orders) {
    for (const auto& ord : orders) {
        r[v] = ord;
        try {
            return build(r);
        } catch (const NotPlanar&) {
        }
    }
    throw PatternAbsent("no planar rotation for the inserted vertex");
}

bool cofacial_edges(const PlaneGraph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
    std::set<int> fab;
    Dart ab{a, g.slot_of(a, b)}, ba{b, g.slot_of(b, a)};
    fab.insert(g.dart_face[g.dart_id(ab)]);
    fab.insert(g.dart_face[g.dart_id(ba)]);
    Dart cd{c, g.slot_of(c, d)}, dc{d, g.slot_of(d, c)};
    return fab.count(g.dart_face[g.dart_id(cd)]) || fab.count(g.dart_face[g.dart_id(dc)]);
}

ApplyResult apply_pegging(const PlaneGraph& g, const Pegging& op) {
    auto [a, b, c, d] = op;
    std::set<VertexId> distinct{a, b, c, d};
    if (distinct.size() != 4 || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d))
        throw PatternAbsent("pegging: not a path");
    if (!cofacial_edges(g, a, b, c, d)) throw PatternAbsent("pegging: edges not co-facial");
    Rot r = g.rot;
    VertexId u = g.n();
    r.emplace_back();
    rot_replace(r, a, b, u);
    rot_replace(r, b, a, u);
    rot_replace(r, c, d, u);
    rot_replace(r, d, c, u);
    std::vector<std::vector<VertexId>> orders;
    std::array<VertexId, 3> rest{b, c, d};
    std::sort(rest.begin(), rest.end());
    do {
        orders.push_back({a, rest[0], rest[1], rest[2]});
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::vector<int> ident(g.n());
    std::iota(ident.begin(), ident.end(), 0);
    return {build_with_vertex_orders(std::move(r), u, orders), {u}, std::move(ident)};
}

ApplyResult apply_4ca(const PlaneGraph& g, const FourCycleAddition& op) {
    VertexId x = op.x;
    if (x < 0 || x >= g.n() || g.deg(x) != 4) throw PatternAbsent("4-cycle addition: need a degree-4 vertex");
    std::array<VertexId, 4> nb;
    for (int i = 0; i < 4; ++i) nb[i] = g.rot[x][i];
    VertexId e0 = g.n();
    std::array<VertexId, 4> ring{e0, e0 + 1, e0 + 2, e0 + 3};
    Rot r = g.rot;
    for (int i = 0; i < 4; ++i) {
        r.emplace_back();
        rot_replace(r, x, nb[i], ring[i]);
        rot_replace(r, nb[i], x, ring[i]);
    }
    auto ringrot = [&](int sign) {
        for (int i = 0; i < 4; ++i) {
            VertexId nxt = ring[(i + 1) % 4], prv = ring[(i + 3) % 4];
            r[ring[i]] = sign > 0 ? std::vector<VertexId>{nb[i], nxt, x, prv}
                                  : std::vector<VertexId>{nb[i], prv, x, nxt};
        }
    };
    std::vector<int> ident(g.n());
    std::iota(ident.begin(), ident.end(), 0);
    for (int sign : {+1, -1}) {
        ringrot(sign);
        try {
            return {build(r), {ring.begin(), ring.end()}, ident};
        } catch (const NotPlanar&) {
        }
    }
    throw PatternAbsent("4-cycle addition: no planar ring orientation");
}

// Facial triangle test for the corner between rot[u][slot] and rot[u][slot+1].
bool facial_triangle_at(const PlaneGraph& g, VertexId u, int slot) {
    VertexId d = g.rot[u][slot], a = g.rot[u][(slot + 1) % g.deg(u)];
    if (!g.has_edge(a, d)) return false;
    int fid = g.dart_face[g.dart_id({u, (slot + 1) % g.deg(u)})];
    const auto& walk = g.faces[fid];
    if (walk.size() != 3) return false;
    std::set<VertexId> tails;
    for (int did : walk) tails.insert(g.dart(did).tail);
    return tails == std::set<VertexId>{u, a, d};
}

ApplyResult apply_slide(const PlaneGraph& g, const ThreeCycleSlide& op) {
    VertexId u = op.u;
    if (u < 0 || u >= g.n() || g.deg(u) != 4 || op.slot < 0 || op.slot >= 4)
        throw PatternAbsent("slide: need a degree-4 vertex and slot");
    if (!facial_triangle_at(g, u, op.slot)) throw PatternAbsent("slide: no facial triangle at slot");
    VertexId d = g.rot[u][op.slot], a = g.rot[u][(op.slot + 1) % 4], b = g.rot[u][(op.slot + 2) % 4],
             c = g.rot[u][(op.slot + 3) % 4];
    VertexId x = g.n(), y = g.n() + 1, z = g.n() + 2;
    Rot r = g.rot;
    r.emplace_back();
    r.emplace_back();
    r.emplace_back();
    rot_replace(r, a, u, y);
    rot_replace(r, a, d, x);
    rot_replace(r, d, a, x);
    rot_replace(r, d, u, z);
    rot_replace(r, b, u, y);
    rot_replace(r, c, u, z);
    r[u].clear();
    PlaneGraph out = [&] {
        for (int sign : {+1, -1}) {
            if (sign > 0) {
                r[x] = {a, y, z, d};
                r[y] = {a, b, z, x};
                r[z] = {c, d, x, y};
            } else {
                r[x] = {d, z, y, a};
                r[y] = {x, z, b, a};
                r[z] = {y, x, d, c};
            }
            try {
                return build(r);
            } catch (const NotPlanar&) {
            }
        }
        throw PatternAbsent("slide: no planar triangle orientation");
    }();
    // compact away the hole left by u
    auto [rc, old_of_new] = rot_compact(out.rot);
    PlaneGraph comp = build(rc);
    std::vector<VertexId> added;
    std::vector<int> new_of_old(g.n(), -1);
    for (int i = 0; i < comp.n(); ++i) {
        if (old_of_new[i] >= g.n()) added.push_back(i);
        else new_of_old[old_of_new[i]] = i;
    }
    assert(added.size() == 3);
    return {std::move(comp), added, std::move(new_of_old)};
}

}  // namespace

ApplyResult apply(const PlaneGraph& g, const ExpansionOp& op) {
    return std::visit(
        [&](const auto& o) -> ApplyResult {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Pegging>) return apply_pegging(g, o);
            else if constexpr (std::is_same_v<T, FourCycleAddition>) return apply_4ca(g, o);
            else return apply_slide(g, o);
        },
        op);
}

std::vector<ExpansionOp> enumerate_expansions(const PlaneGraph& g) {
    std::vector<ExpansionOp> ops;
    // peggings: directed paths a-b-c-d with ab, cd co-facial; orientation
    // matters only up to reversal, so keep (a,b) < (d,c) lexicographically
    for (VertexId b = 0; b < g.n(); ++b)
        for (VertexId c : g.rot[b]) {
            for (VertexId a : g.rot[b]) {
                if (a == c) continue;
                for (VertexId d : g.rot[c]) {
                    if (d == b || d == a) continue;
                    if (std::make_pair(a, b) > std::make_pair(d, c)) continue;
                    if (cofacial_edges(g, a, b, c, d)) ops.push_back(Pegging{a, b, c, d});
                }
            }
        }
    for (VertexId x = 0; x < g.n(); ++x)
        if (g.deg(x) == 4) ops.push_back(FourCycleAddition{x});
    for (VertexId u = 0; u < g.n(); ++u) {
        if (g.deg(u) != 4) continue;
        for (int s = 0; s < 4; ++s)
            if (facial_triangle_at(g, u, s)) ops.push_back(ThreeCycleSlide{u, s});
    }
    return ops;
}

namespace {

bool in_class(const PlaneGraph& g) { return g.is_quartic() && is_3connected(g); }

struct Compacted {
    PlaneGraph g;
    std::vector<VertexId> old_of_new;
};

// Builds, compacts and class-checks a candidate reduction; nullopt to skip.
std::optional<Compacted> finish_reduction(const Rot& r) {
    try {
        auto [rc, old_of_new] = rot_compact(r);
        PlaneGraph h = build(rc);
        if (!in_class(h)) return std::nullopt;
        return Compacted{std::move(h), std::move(old_of_new)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

void find_unslides(const PlaneGraph& g, std::vector<ReductionStep>& out) {
    std::set<std::set<VertexId>> seen;
    for (const auto& walk : g.faces) {
        if (walk.size() != 3) continue;
        std::set<VertexId> tri;
        for (int did : walk) tri.insert(g.dart(did).tail);
        if (tri.size() != 3 || !seen.insert(tri).second) continue;
        std::vector<VertexId> tv(tri.begin(), tri.end());
        for (int xi = 0; xi < 3; ++xi)
            for (int swap = 0; swap < 2; ++swap) {
                VertexId x = tv[xi], y = tv[(xi + 1 + swap) % 3], z = tv[(xi + 2 - swap) % 3];
                auto outside = [&](VertexId v) {
                    std::vector<VertexId> o;
                    for (VertexId w : g.rot[v])
                        if (!tri.count(w)) o.push_back(w);
                    return o;
                };
                auto xo = outside(x), yo = outside(y), zo = outside(z);
                if (xo.size() != 2 || yo.size() != 2 || zo.size() != 2) continue;
                for (VertexId alpha : xo) {
                    VertexId delta = alpha == xo[0] ? xo[1] : xo[0];
                    if (std::find(yo.begin(), yo.end(), alpha) == yo.end()) continue;
                    if (std::find(zo.begin(), zo.end(), delta) == zo.end()) continue;
                    VertexId beta = yo[0] == alpha ? yo[1] : yo[0];
                    VertexId gamma = zo[0] == delta ? zo[1] : zo[0];
                    if (g.has_edge(alpha, delta)) continue;
                    if (beta == gamma || alpha == gamma || beta == delta) continue;
                    VertexId u = g.n();
                    Rot base = g.rot;
                    base.emplace_back();
                    rot_replace(base, alpha, y, u);
                    rot_replace(base, alpha, x, delta);
                    rot_replace(base, delta, x, alpha);
                    rot_replace(base, delta, z, u);
                    rot_replace(base, beta, y, u);
                    rot_replace(base, gamma, z, u);
                    base[x].clear();
                    base[y].clear();
                    base[z].clear();
                    for (auto uorder : {std::vector<VertexId>{alpha, beta, gamma, delta},
                                        std::vector<VertexId>{alpha, delta, gamma, beta}}) {
                        Rot r = base;
                        r[u] = uorder;
                        auto fin = finish_reduction(std::move(r));
                        if (!fin) continue;
                        VertexId uc = -1;
                        for (int i = 0; i < fin->g.n(); ++i)
                            if (fin->old_of_new[i] == u) uc = i;
                        assert(uc >= 0);
                        std::vector<int> new_of_old(g.n() + 1, -1);
                        for (int i = 0; i < fin->g.n(); ++i) new_of_old[fin->old_of_new[i]] = i;
                        int slot = -1;
                        for (int s = 0; s < 4; ++s) {
                            VertexId dd = fin->g.rot[uc][s], aa = fin->g.rot[uc][(s + 1) % 4];
                            if (((dd == new_of_old[delta] && aa == new_of_old[alpha]) ||
                                 (dd == new_of_old[alpha] && aa == new_of_old[delta])) &&
                                facial_triangle_at(fin->g, uc, s)) {
                                slot = s;
                                break;
                            }
                        }
                        if (slot < 0) continue;
                        out.push_back({std::move(fin->g), std::move(fin->old_of_new),
                                       ThreeCycleSlide{uc, slot},
                                       SlideRoles{x, y, z, alpha, beta, gamma, delta, g.n()}});
                        goto next_assignment;  // one reduction per role assignment
                    }
                next_assignment:;
                }
            }
    }
}

void find_4ca_removals(const PlaneGraph& g, std::vector<ReductionStep>& out) {
    for (VertexId x = 0; x < g.n(); ++x) {
        if (g.deg(x) != 4) continue;
        std::array<VertexId, 4> ring;
        for (int i = 0; i < 4; ++i) ring[i] = g.rot[x][i];
        bool ok = true;
        std::array<VertexId, 4> outer{};
        std::set<VertexId> ringset(ring.begin(), ring.end());
        for (int i = 0; i < 4 && ok; ++i) {
            VertexId e = ring[i], prv = ring[(i + 3) % 4], nxt = ring[(i + 1) % 4];
            if (g.deg(e) != 4 || !g.has_edge(e, prv) || !g.has_edge(e, nxt)) {
                ok = false;
                break;
            }
            VertexId o = -1;
            for (VertexId w : g.rot[e])
                if (w != x && w != prv && w != nxt) o = w;
            if (o < 0 || ringset.count(o)) ok = false;
            outer[i] = o;
        }
        if (!ok) continue;
        std::set<VertexId> distinct(outer.begin(), outer.end());
        if (distinct.size() != 4 || distinct.count(x)) continue;  // would create parallel edges
        Rot r = g.rot;
        for (int i = 0; i < 4; ++i) {
            rot_replace(r, x, ring[i], outer[i]);
            rot_replace(r, outer[i], ring[i], x);
            r[ring[i]].clear();
        }
        auto fin = finish_reduction(std::move(r));
        if (!fin) continue;
        VertexId xc = -1;
        for (int i = 0; i < fin->g.n(); ++i)
            if (fin->old_of_new[i] == x) xc = i;
        out.push_back({std::move(fin->g), std::move(fin->old_of_new), FourCycleAddition{xc},
                       FourCARoles{x, ring, outer}});
    }
}

void find_unpegs(const PlaneGraph& g, std::vector<ReductionStep>& out) {
    for (VertexId u = 0; u < g.n(); ++u) {
        if (g.deg(u) != 4) continue;
        for (int pairing = 0; pairing < 2; ++pairing) {
            VertexId p = g.rot[u][pairing], q = g.rot[u][(pairing + 1) % 4],
                     rr = g.rot[u][(pairing + 2) % 4], s = g.rot[u][(pairing + 3) % 4];
            if (g.has_edge(p, q) || g.has_edge(rr, s)) continue;
            VertexId a, b, c, d;
            if (g.has_edge(q, rr)) {
                a = p, b = q, c = rr, d = s;
            } else if (g.has_edge(p, s)) {
                a = q, b = p, c = s, d = rr;
            } else {
                continue;  // no middle edge, not a pegging image
            }
            Rot r = g.rot;
            rot_replace(r, p, u, q);
            rot_replace(r, q, u, p);
            rot_replace(r, rr, u, s);
            rot_replace(r, s, u, rr);
            r[u].clear();
            auto fin = finish_reduction(std::move(r));
            if (!fin) continue;
            std::vector<int> new_of_old(g.n(), -1);
            for (int i = 0; i < fin->g.n(); ++i) new_of_old[fin->old_of_new[i]] = i;
            out.push_back({std::move(fin->g), std::move(fin->old_of_new),
                           Pegging{new_of_old[a], new_of_old[b], new_of_old[c], new_of_old[d]},
                           PeggingRoles{u, a, b, c, d}});
        }
    }
}

}  // namespace

std::vector<ReductionStep> find_reductions(const PlaneGraph& g) {
    if (!g.is_quartic()) throw PreconditionViolated("find_reductions: quartic graph required");
    std::vector<ReductionStep> out;
    find_unslides(g, out);
    find_4ca_removals(g, out);
    find_unpegs(g, out);
    return out;
}

namespace {

// Rotation-stream code from one start dart; labels assigned in discovery
// order, each vertex read from its entry slot in direction dir.
void code_from(const PlaneGraph& g, VertexId v0, int s0, int dir, std::string& code,
               std::vector<int>& label, std::vector<int>& entry) {
    label.assign(g.n(), -1);
    entry.assign(g.n(), -1);
    code.clear();
    code.push_back(static_cast<char>(g.n()));
    std::vector<VertexId> order;
    label[v0] = 0;
    entry[v0] = s0;
    order.push_back(v0);
    for (size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        int dv = g.deg(v);
        for (int k = 0; k < dv; ++k) {
            int slot = ((entry[v] + dir * k) % dv + dv) % dv;
            VertexId w = g.rot[v][slot];
            if (label[w] < 0) {
                label[w] = static_cast<int>(order.size());
                entry[w] = g.slot_of(w, v);
                order.push_back(w);
            }
            code.push_back(static_cast<char>(label[w] + 1));
        }
        code.push_back('\0');
    }
}

}  // namespace

CanonicalForm canonical_form(const PlaneGraph& g) {
    if (g.n() == 0) return {std::string(1, '\0'), {}};
    if (g.n() >= 250) throw PreconditionViolated("canonical_form: graph too large");
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.deg(v) == 0) throw PreconditionViolated("canonical_form: isolated vertex");
    if (!g.connected_ignoring_isolated()) throw PreconditionViolated("canonical_form: disconnected");
    CanonicalForm best;
    std::string code;
    std::vector<int> label, entry;
    for (int dir : {+1, -1})
        for (VertexId v = 0; v < g.n(); ++v)
            for (int s = 0; s < g.deg(v); ++s) {
                code_from(g, v, s, dir, code, label, entry);
                if (best.code.empty() || code < best.code) {
                    best.code = code;
                    best.label_of = label;
                }
            }
    return best;
}

std::string canonical_code(const PlaneGraph& g) { return canonical_form(g).code; }

namespace {

struct GenState {
    std::map<std::string, PlaneGraph> seen;  // canonical code -> representative
    std::mutex mu;

    bool insert(const PlaneGraph& g) {
        std::string code = canonical_code(g);
        std::lock_guard<std::mutex> lk(mu);
        return seen.emplace(std::move(code), g).second;
    }
};

void expand_one(const PlaneGraph& g, int n_max, GenState& st, std::vector<PlaneGraph>& fresh) {
    for (const auto& op : enumerate_expansions(g)) {
        int dn = std::holds_alternative<Pegging>(op)             ? 1
                 : std::holds_alternative<FourCycleAddition>(op) ? 4
                                                                 : 2;
        if (g.n() + dn > n_max) continue;
        ApplyResult res;
        try {
            res = apply(g, op);
        } catch (const PatternAbsent&) {
            continue;
        }
        if (!in_class(res.g)) continue;
        if (st.insert(res.g)) fresh.push_back(std::move(res.g));
    }
}

}  // namespace

std::vector<PlaneGraph> generate(int n_max, int jobs) {
    if (n_max < 6) return {};
    if (jobs < 1) jobs = 1;
    GenState st;
    std::vector<PlaneGraph> work;
    for (int k = 3; 2 * k <= n_max; ++k) {
        PlaneGraph ap = antiprism(k);
        if (st.insert(ap)) work.push_back(std::move(ap));
    }
    while (!work.empty()) {
        std::vector<PlaneGraph> next;
        if (jobs == 1 || work.size() < 2) {
            for (const auto& g : work) expand_one(g, n_max, st, next);
        } else {
            std::vector<std::vector<PlaneGraph>> parts(jobs);
            std::vector<std::thread> threads;
            std::atomic<size_t> idx{0};
            for (int t = 0; t < jobs; ++t)
                threads.emplace_back([&, t] {
                    for (size_t i = idx.fetch_add(1); i < work.size(); i = idx.fetch_add(1))
                        expand_one(work[i], n_max, st, parts[t]);
                });
            for (auto& th : threads) th.join();
            for (auto& p : parts)
                for (auto& g : p) next.push_back(std::move(g));
        }
        work = std::move(next);
    }
    std::vector<std::pair<std::pair<int, std::string>, PlaneGraph>> ordered;
    for (auto& [code, g] : st.seen) ordered.push_back({{g.n(), code}, std::move(g)});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PlaneGraph> out;
    for (auto& [key, g] : ordered) out.push_back(std::move(g));
    return out;
}

}  // namespace quartic
