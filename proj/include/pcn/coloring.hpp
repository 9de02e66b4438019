#ifndef PCN_COLORING_HPP
#define PCN_COLORING_HPP

#include <optional>
#include <vector>

#include "pcn/graph.hpp"

namespace pcn {

// Vertex-indexed positive colors. Validity (d(u,v) > i for every
// same-colored pair) is checked, never assumed.
struct PackingColoring {
    std::vector<int> colors;

    int max_color() const
    {
        int k = 0;
        for (int c : colors)
            k = std::max(k, c);
        return k;
    }
};

// A same-colored pair at distance <= color, with u < v.
struct Violation {
    int u;
    int v;
    int color;
    int distance;

    bool operator==(const Violation& o) const
    {
        return u == o.u && v == o.v && color == o.color && distance == o.distance;
    }
};

// All violating pairs, sorted by (u, v); empty iff c is a valid packing
// coloring. Throws DomainError on length mismatch or nonpositive colors.
std::vector<Violation> verify_coloring(const Graph& g, const PackingColoring& c,
                                       const DistanceMatrix& dm);

bool is_valid_coloring(const Graph& g, const PackingColoring& c,
                       const DistanceMatrix& dm);

// Greedily compacts color classes downward: in ascending color order,
// each class moves to the smallest color <= its current one that keeps
// the coloring valid. Moving a class down only weakens its own pairwise
// constraints, so only cross-class checks are needed. Idempotent.
PackingColoring normalize_coloring(const Graph& g, const PackingColoring& c,
                                   const DistanceMatrix& dm);

// Processes vertices in the given order (default: non-increasing degree,
// ties by id) assigning the smallest color consistent with the vertices
// already colored. Always valid, never uses more than n colors.
PackingColoring greedy_coloring(const Graph& g, const DistanceMatrix& dm,
                                const std::optional<std::vector<int>>& order
                                = std::nullopt);

// Default vertex order shared by greedy_coloring and the exact search:
// non-increasing degree, ties by smaller id.
std::vector<int> default_vertex_order(const Graph& g);

} // namespace pcn

#endif
