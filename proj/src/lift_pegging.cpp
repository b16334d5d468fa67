#include "quartic/errors.hpp"
#include "quartic/oracle.hpp"
#include "quartic/solver.hpp"
#include "splice_util.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <string>

namespace quartic {

namespace detail {

std::vector<std::vector<VertexId>> arcs_without(const Trail& c, const std::set<EdgeKey>& drop) {
    assert(c.closed);
    int L = c.length();  // cyclic edge slots 0..L-1, slot i is verts[i]-verts[i+1]
    std::vector<bool> kept(L);
    int last_gap = -1;
    for (int i = 0; i < L; ++i) {
        kept[i] = !drop.count(ekey(c.verts[i], c.verts[i + 1]));
        if (!kept[i]) last_gap = i;
    }
    if (last_gap < 0) throw PreconditionViolated("splice: no dropped edges in circuit");
    // maximal kept runs; consecutive dropped slots collapse into one gap, so
    // interior vertices of a dropped run anchor no arc
    std::vector<std::vector<VertexId>> arcs;
    std::vector<VertexId> cur;
    for (int step = 0; step < L; ++step) {
        int pos = (last_gap + 1 + step) % L;
        if (kept[pos]) {
            if (cur.empty()) cur.push_back(c.verts[pos]);
            cur.push_back(c.verts[pos + 1]);
        } else if (!cur.empty()) {
            arcs.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) arcs.push_back(std::move(cur));
    if (arcs.empty()) throw PreconditionViolated("splice: every circuit edge dropped");
    return arcs;
}

std::optional<Trail> assemble_pieces(const PlaneGraph& g,
                                     const std::vector<std::vector<VertexId>>& pieces,
                                     long long* budget) {
    int k = (int)pieces.size();
    assert(k >= 1);
    std::vector<int> used(k, 0);
    std::vector<std::pair<int, int>> order;  // (piece, reversed)
    std::optional<Trail> found;
    const VertexId start = pieces[0].front();

    std::function<void(VertexId)> dfs = [&](VertexId end) {
        if (found || *budget <= 0) return;
        --*budget;
        if ((int)order.size() == k) {
            if (end != start) return;
            std::vector<VertexId> verts;
            for (auto [pi, rev] : order) {
                auto p = pieces[pi];
                if (rev) std::reverse(p.begin(), p.end());
                verts.insert(verts.end(), p.begin() + (verts.empty() ? 0 : 1), p.end());
            }
            Trail cand{std::move(verts), true};
            if (verify_circuit(g, cand, 4)) found = std::move(cand);
            return;
        }
        for (int i = 1; i < k; ++i) {
            if (used[i]) continue;
            for (int rev = 0; rev < 2; ++rev) {
                VertexId head = rev ? pieces[i].back() : pieces[i].front();
                VertexId tail = rev ? pieces[i].front() : pieces[i].back();
                if (head != end) continue;
                used[i] = 1;
                order.push_back({i, rev});
                dfs(tail);
                order.pop_back();
                used[i] = 0;
                if (found) return;
                if (pieces[i].size() == 1) break;  // both orientations identical
            }
        }
    };
    used[0] = 1;
    order.push_back({0, 0});
    dfs(pieces[0].back());
    return found;
}

}  // namespace detail

namespace {

using detail::arcs_without;
using detail::assemble_pieces;
using detail::EdgeKey;
using detail::ekey;

int short_subcycle_count(const Trail& t, int k) {
    int L = t.length();
    auto vat = [&](int i) { return t.verts[i % L]; };
    int cnt = 0;
    for (int i = 0; i < L; ++i)
        for (int len = 2; len <= k && len <= L; ++len) {
            if (vat(i) != vat(i + len)) continue;
            bool distinct = true;
            for (int a = 0; a < len && distinct; ++a)
                for (int b = a + 1; b < len; ++b)
                    if (vat(i + a) == vat(i + b)) {
                        distinct = false;
                        break;
                    }
            if (distinct) ++cnt;
        }
    return cnt;
}

// Cuts each arc at the requested interior vertex positions.
std::vector<std::vector<VertexId>> split_arcs(const std::vector<std::vector<VertexId>>& arcs,
                                              const std::vector<std::pair<int, int>>& cuts) {
    std::vector<std::vector<VertexId>> out;
    for (int ai = 0; ai < (int)arcs.size(); ++ai) {
        std::vector<int> at{0, (int)arcs[ai].size() - 1};
        for (auto [a, p] : cuts)
            if (a == ai) at.push_back(p);
        std::sort(at.begin(), at.end());
        for (size_t j = 0; j + 1 < at.size(); ++j)
            out.emplace_back(arcs[ai].begin() + at[j], arcs[ai].begin() + at[j + 1] + 1);
    }
    return out;
}

}  // namespace

PeggingLift lift_pegging(const PlaneGraph& g, const PeggingRoles& roles, const Trail& ch,
                         Transcript* tr) {
    const VertexId u = roles.u;
    assert(g.has_edge(u, roles.a) && g.has_edge(u, roles.b) && g.has_edge(u, roles.c) &&
           g.has_edge(u, roles.d));
    auto arcs = arcs_without(ch, {ekey(roles.a, roles.b), ekey(roles.c, roles.d)});
    if (arcs.size() != 2) throw PreconditionViolated("pegging lift: expected two arcs");

    // induced circuit: both removed edges detour through u
    std::vector<VertexId> v0(arcs[0]);
    v0.push_back(u);
    v0.insert(v0.end(), arcs[1].begin(), arcs[1].end());
    v0.push_back(u);
    v0.push_back(arcs[0].front());
    Trail induced{std::move(v0), true};
    assert(!trail_defect(g, induced));
    if (verify_circuit(g, induced, 4)) {
        if (tr) tr->note("pegging lift: induced circuit already good");
        return induced;
    }
    if (short_subcycle_count(induced, 4) > 1)
        throw InternalCaseExhaustion("pegging lift: induced circuit has several short subcycles");

    // Rerouting search. The passes through u may pair the four neighbours in
    // any of the three ways, the two arcs may be cut at up to two interior
    // vertices, and the resulting pieces are rechained in every orientation.
    // First verified reassembly wins; fewer cuts are tried first.
    const std::array<std::array<VertexId, 4>, 3> pairings{{
        {roles.a, roles.b, roles.c, roles.d},
        {roles.a, roles.c, roles.b, roles.d},
        {roles.a, roles.d, roles.b, roles.c},
    }};
    std::vector<std::pair<int, int>> positions;  // (arc, interior index)
    for (int ai = 0; ai < 2; ++ai)
        for (int p = 1; p + 1 < (int)arcs[ai].size(); ++p) positions.push_back({ai, p});

    std::vector<std::vector<std::pair<int, int>>> cut_sets{{}};
    for (auto& pos : positions) cut_sets.push_back({pos});
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j)
            cut_sets.push_back({positions[i], positions[j]});
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j)
            for (size_t k = j + 1; k < positions.size(); ++k)
                cut_sets.push_back({positions[i], positions[j], positions[k]});

    long long budget = 30'000'000;
    for (const auto& cuts : cut_sets) {
        auto base = split_arcs(arcs, cuts);
        for (int pi = 0; pi < 3; ++pi) {
            auto pieces = base;
            pieces.push_back({pairings[pi][0], u, pairings[pi][1]});
            pieces.push_back({pairings[pi][2], u, pairings[pi][3]});
            if (auto t = assemble_pieces(g, pieces, &budget)) {
                if (tr)
                    tr->note("pegging lift: rerouted with " + std::to_string(cuts.size()) +
                             " cut(s), pairing " + std::to_string(pi));
                return *t;
            }
            if (budget <= 0) break;
        }
        if (budget <= 0) break;
    }

    // No rerouting exists on this circuit. Restructure the host through a
    // 3-cycle slide reduction and let the caller re-solve the smaller graph.
    for (auto& step : find_reductions(g)) {
        if (auto* sr = std::get_if<SlideRoles>(&step.roles)) {
            if (tr) tr->note("pegging lift: restructuring through a slide reduction");
            return Restructure{std::move(step.reduced), std::move(step.old_of_new), *sr};
        }
    }
    throw InternalCaseExhaustion("pegging lift: no rerouting and no slide restructuring");
}

}  // namespace quartic
