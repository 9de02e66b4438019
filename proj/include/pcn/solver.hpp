#ifndef PCN_SOLVER_HPP
#define PCN_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "pcn/coloring.hpp"
#include "pcn/graph.hpp"

namespace pcn {

// Wall-clock budget; unlimited when no limit is set. Searches check the
// clock every 4096 nodes, so overshoot is bounded and cheap.
struct Budget {
    std::optional<std::chrono::milliseconds> limit;

    static Budget unlimited() { return {}; }
    static Budget millis(std::int64_t ms)
    {
        return {std::chrono::milliseconds(ms)};
    }
    static Budget seconds(double s)
    {
        return millis(static_cast<std::int64_t>(s * 1000.0));
    }
};

enum class SolveStatus { Exact, Bounds, Timeout };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
    bool budget_exhausted = false;
};

// Size of a greedily grown clique; a clique forces pairwise-distinct
// colors, so this is a sound lower bound.
int clique_lower_bound(const Graph& g, const DistanceMatrix& dm);

// For any set D with pairwise distance <= 2, colors >= 2 appear at most
// once in D and color 1 at most alpha(G[D]) times, giving
// chi >= |D| - alpha(G[D]) + 1. Tries the closed radius-1 ball around
// each vertex, plus all of V when the diameter is at most 2; alpha is
// computed exactly and only when |D| <= 20 (an under-estimate would be
// unsound).
int distance2_lower_bound(const Graph& g, const DistanceMatrix& dm);

enum class DecideOutcome { Yes, No, Unknown };

struct DecideResult {
    DecideOutcome outcome = DecideOutcome::Unknown;
    std::optional<PackingColoring> certificate; // present iff Yes
    std::uint64_t nodes = 0;
};

// Is there a packing coloring with max color <= k? Depth-first search
// over vertices in the fixed default order, colors tried ascending,
// with incremental feasible-color sets: assigning color i to v removes
// i from every unassigned vertex within distance i, and an emptied set
// triggers an immediate backtrack. No returned only after exhaustion.
DecideResult decide(const Graph& g, const DistanceMatrix& dm, int k,
                    Budget budget = Budget::unlimited());

struct SolveResult {
    int lower = 0;
    int upper = 0;
    SolveStatus status = SolveStatus::Timeout;
    std::optional<PackingColoring> certificate; // achieves upper
    SearchStats stats;
};

// Bounds from the clique and distance-2 arguments plus a normalized
// greedy certificate, then iterative deepening decide(k) upward from the
// lower bound. Within a call the lower bound never decreases and the
// upper never increases.
SolveResult solve(const Graph& g, Budget budget = Budget::unlimited());

} // namespace pcn

#endif
