#ifndef PCN_TRANSFORMS_HPP
#define PCN_TRANSFORMS_HPP

#include <map>
#include <optional>
#include <vector>

#include "pcn/graph.hpp"

namespace pcn {

// Result of a local operation: the new graph plus enough metadata to
// locate new and merged vertices. vertex_map sends every surviving old
// vertex id to its new id and is injective; new_vertices never collide
// with its range.
struct TransformOutcome {
    Graph graph;
    std::vector<int> new_vertices;
    std::optional<int> merged_vertex;
    std::map<int, int> vertex_map;
};

// Replaces edge xy by the path x-z-y; z is appended at index n so the
// original ids stay stable. Order +1, size +1.
TransformOutcome subdivide_edge(const Graph& g, EdgeRef e);

// Subdivides every edge; subdivision vertices are appended in canonical
// edge order. Order n+m, size 2m.
Graph subdivide_all(const Graph& g);

Graph delete_edge(const Graph& g, EdgeRef e);

// Removes v and its incident edges; remaining ids are compacted.
TransformOutcome delete_vertex(const Graph& g, int v);

// Merges the endpoints of e into one vertex kept at the smaller of the
// two old indices; indices above the larger shift down by one. Parallel
// edges merge, loops drop.
TransformOutcome contract_edge(const Graph& g, EdgeRef e);

// Two disjoint copies of subdivide_edge(g, e).graph plus one edge
// between the two subdivision vertices x', x''. vertex_map covers the
// first copy; new_vertices = {x', x''}.
TransformOutcome join_subdivided(const Graph& g, EdgeRef e);

} // namespace pcn

#endif
