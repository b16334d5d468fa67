#include "quartic/obstructions.hpp"

#include "quartic/embed.hpp"
#include "quartic/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace quartic {

namespace {

// x a b c d y
const std::vector<std::pair<int, int>>& f6_role_edges() {
    static const std::vector<std::pair<int, int>> e = {
        {0, 1}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 5}, {5, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    // xa     ad      db      bx      xc      cy      ya      ab      bc      cd      dy
    return e;
}

// x a b c d e y; edge set read off the trail x a c b e d x y b a d c e y
const std::vector<std::pair<int, int>>& g7_role_edges() {
    static const std::vector<std::pair<int, int>> e = {
        {0, 1}, {1, 3}, {3, 2}, {2, 5}, {5, 4}, {4, 0}, {0, 6},
        {6, 2}, {2, 1}, {1, 4}, {4, 3}, {3, 5}, {5, 6}};
    return e;
}

PatternGraph make_pattern(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> roles) {
    PatternGraph p;
    p.g = embed(adj_from_edges(n, edges));
    p.role = std::move(roles);
    return p;
}

// Backtracking embedding of pattern edges into g. `order` lists roles in
// assignment order; `pinned` fixes images; `exact` demands the image's
// induced edge set equal the pattern's.
struct Matcher {
    const PlaneGraph& g;
    int k;
    const std::vector<std::pair<int, int>>& pedges;
    std::vector<int> order;
    std::vector<VertexId> image;
    std::vector<char> taken;
    bool exact;

    Matcher(const PlaneGraph& g_, int k_, const std::vector<std::pair<int, int>>& pe, bool exact_)
        : g(g_), k(k_), pedges(pe), image(k_, -1), taken(g_.n(), 0), exact(exact_) {
        // most-constrained-first: maximize edges to already-ordered roles
        std::vector<char> placed(k, 0);
        for (int step = 0; step < k; step++) {
            int best = -1, best_score = -1;
            for (int r = 0; r < k; r++) {
                if (placed[r]) continue;
                int score = 0;
                for (auto [a, b] : pedges) {
                    if (a == r && placed[b]) score++;
                    if (b == r && placed[a]) score++;
                }
                int deg = 0;
                for (auto [a, b] : pedges) deg += (a == r || b == r);
                score = score * 16 + deg;
                if (score > best_score) {
                    best_score = score;
                    best = r;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool consistent(int r, VertexId v) const {
        if (taken[v]) return false;
        for (auto [a, b] : pedges) {
            int other = a == r ? b : (b == r ? a : -1);
            if (other < 0 || image[other] < 0) continue;
            if (!g.has_edge(v, image[other])) return false;
        }
        if (exact) {
            // no extra adjacency to already-placed non-neighbors
            for (int r2 = 0; r2 < k; r2++) {
                if (image[r2] < 0 || r2 == r) continue;
                bool pat = false;
                for (auto [a, b] : pedges)
                    pat |= (a == r && b == r2) || (b == r && a == r2);
                if (!pat && g.has_edge(v, image[r2])) return false;
            }
        }
        return true;
    }

    bool run(int step) {
        if (step == k) return true;
        int r = order[step];
        if (image[r] >= 0) return run(step + 1);  // pinned
        for (VertexId v = 0; v < g.n(); v++) {
            if (!consistent(r, v)) continue;
            image[r] = v;
            taken[v] = 1;
            if (run(step + 1)) return true;
            taken[v] = 0;
            image[r] = -1;
        }
        return false;
    }

    std::optional<std::vector<VertexId>> match(const std::vector<std::pair<int, VertexId>>& pins) {
        for (auto [r, v] : pins) {
            if (taken[v] || !consistent(r, v)) return std::nullopt;
            image[r] = v;
            taken[v] = 1;
        }
        if (run(0)) return image;
        return std::nullopt;
    }
};

}  // namespace

const PatternGraph& f6_pattern() {
    static const PatternGraph p =
        make_pattern(6, f6_role_edges(), {"x", "a", "b", "c", "d", "y"});
    return p;
}

const PatternGraph& g7_pattern() {
    static const PatternGraph p =
        make_pattern(7, g7_role_edges(), {"x", "a", "b", "c", "d", "e", "y"});
    return p;
}

const PatternGraph& octahedron_pattern() {
    static const PatternGraph p = [] {
        auto edges = f6_role_edges();
        edges.push_back({0, 5});
        return make_pattern(6, edges, {"x", "a", "b", "c", "d", "y"});
    }();
    return p;
}

std::optional<std::vector<VertexId>> find_f6(const PlaneGraph& g) {
    if (g.n() < 6) return std::nullopt;
    Matcher m(g, 6, f6_role_edges(), false);
    return m.match({});
}

std::optional<std::vector<VertexId>> find_f6_naive(const PlaneGraph& g) {
    int n = g.n();
    if (n < 6) return std::nullopt;
    std::vector<VertexId> pick;
    std::vector<VertexId> cand(n);
    for (int i = 0; i < n; i++) cand[i] = i;
    // all 6-subsets, then all 720 role assignments
    std::vector<int> idx(6);
    std::function<std::optional<std::vector<VertexId>>(int, int)> rec =
        [&](int at, int from) -> std::optional<std::vector<VertexId>> {
        if (at == 6) {
            std::vector<VertexId> perm(idx.begin(), idx.end());
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (auto [a, b] : f6_role_edges())
                    if (!g.has_edge(perm[a], perm[b])) {
                        ok = false;
                        break;
                    }
                if (ok) return perm;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return std::nullopt;
        }
        for (int v = from; v < n; v++) {
            idx[at] = v;
            if (auto r = rec(at + 1, v + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(0, 0);
}

bool is_octahedron(const PlaneGraph& g) {
    // the octahedron is the unique simple 4-regular graph on 6 vertices
    return g.n() == 6 && g.is_quartic();
}

std::optional<CMember> c_subgraph_at_cut(const PlaneGraph& a, VertexId x, VertexId y) {
    struct Candidate {
        CKind kind;
        int n;
        std::vector<std::pair<int, int>> edges;
        std::pair<int, int> removed{-1, -1};
        std::array<int, 2> entry;
    };
    std::vector<Candidate> cands;
    for (auto e : f6_role_edges()) {
        Candidate c;
        c.kind = CKind::F6minusE;
        c.n = 6;
        for (auto f : f6_role_edges())
            if (f != e) c.edges.push_back(f);
        c.removed = e;
        c.entry = {0, 5};
        cands.push_back(std::move(c));
    }
    cands.push_back({CKind::G7, 7, g7_role_edges(), {-1, -1}, {0, 6}});
    for (auto e : g7_role_edges()) {
        if (e == std::pair{0, 6}) continue;  // xy stays
        Candidate c;
        c.kind = CKind::G7minusE;
        c.n = 7;
        for (auto f : g7_role_edges())
            if (f != e) c.edges.push_back(f);
        c.removed = e;
        c.entry = {0, 6};
        cands.push_back(std::move(c));
    }
    {
        Candidate c;
        c.kind = CKind::K4;
        c.n = 4;
        c.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        c.entry = {0, 1};
        cands.push_back(std::move(c));
    }

    for (const auto& c : cands) {
        if (c.n > a.n()) continue;
        std::vector<int> pdeg(c.n, 0);
        for (auto [u, v] : c.edges) pdeg[u]++, pdeg[v]++;
        for (int flip = 0; flip < 2; flip++) {
            Matcher m(a, c.n, c.edges, true);
            std::vector<std::pair<int, VertexId>> pins = {{c.entry[0], flip ? y : x},
                                                          {c.entry[1], flip ? x : y}};
            auto img = m.match(pins);
            if (!img) continue;
            // degree bookkeeping: deficit at entry roles feeds the entry cut,
            // the rest must appear as exit edges inside a.
            bool ok = true;
            CMember out;
            out.kind = c.kind;
            out.removed = c.removed;
            out.map = *img;
            std::vector<char> in_m(a.n(), 0);
            for (VertexId v : *img) in_m[v] = 1;
            for (int r = 0; r < c.n && ok; r++) {
                VertexId v = (*img)[r];
                int entry_deficit = (r == c.entry[0] || r == c.entry[1]) ? 1 : 0;
                int expected_exit = 4 - pdeg[r] - entry_deficit;
                if (expected_exit < 0) {
                    ok = false;
                    break;
                }
                int got = 0;
                for (VertexId w : a.rot[v])
                    if (!in_m[w]) {
                        got++;
                        if (got <= expected_exit) out.exit_edges.push_back({v, w});
                    }
                if (a.deg(v) != pdeg[r] + expected_exit || got != expected_exit) ok = false;
            }
            if (!ok) continue;
            assert(out.exit_edges.size() == 2 || (c.kind == CKind::G7 && out.exit_edges.empty()));
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace quartic
