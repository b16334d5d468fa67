#pragma once

#include "quartic/plane_graph.hpp"
#include "quartic/trail.hpp"

#include <functional>
#include <optional>
#include <string>

namespace quartic {

// k = 0 disables the subcycle bound (raw Eulerian enumeration); otherwise
// k >= 2 and trails must avoid subcycles of length <= k.
struct SearchConfig {
    int k = 4;
    bool closed = true;
    std::optional<VertexId> start;
    std::optional<long long> cap;  // node-expansion budget; trip -> BudgetExhausted
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok
    explicit operator bool() const { return ok; }
};

// Eulerian + closed-flag consistency + no subcycle of length <= k, checked
// against the literal subcycle definition (not the window shortcut).
VerifyResult verify_circuit(const PlaneGraph& g, const Trail& t, int k);

// Exhaustive backtracking. Closed circuits are anchored at edge 0 oriented
// low->high, which enumerates circuits once up to rotation and reversal;
// open trails start at cfg.start (must be an odd vertex) or the smallest odd
// vertex. cfg.start on closed search only rotates the found circuit.
std::optional<Trail> search(const PlaneGraph& g, const SearchConfig& cfg);

// Calls visitor on every Eulerian trail/circuit satisfying cfg; visitor
// returning false stops early. Returns the number of trails visited.
long long enumerate_trails(const PlaneGraph& g, const SearchConfig& cfg,
                           const std::function<bool(const Trail&)>& visitor);

}  // namespace quartic
