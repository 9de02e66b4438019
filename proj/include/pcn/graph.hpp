#ifndef PCN_GRAPH_HPP
#define PCN_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pcn/errors.hpp"

namespace pcn {

// Sentinel for "no finite path". Strictly greater than any finite
// shortest-path distance under comparison, which is what the packing
// constraint d(u,v) > i relies on for cross-component pairs.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// An undirected edge, normalized so that u < v.
struct EdgeRef {
    int u;
    int v;

    EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a)
    {
        if (a == b)
            throw DomainError("edge endpoints must differ: " + std::to_string(a));
    }
    bool operator==(const EdgeRef& o) const { return u == o.u && v == o.v; }
    bool operator<(const EdgeRef& o) const
    {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Immutable simple undirected graph. Vertices are 0-indexed; adjacency
// lists are sorted and symmetric, with no loops or duplicates.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges are collapsed;
    // self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<int>& neighbors(int v) const
    {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    // Canonical sorted edge list (u < v, lexicographic).
    std::vector<EdgeRef> edges() const;

    Graph renamed(std::string name) const
    {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    // Structural equality; the name label is not part of it.
    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= order())
            throw DomainError("vertex id out of range: " + std::to_string(v));
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
    std::string name_;
};

// All-pairs unweighted shortest-path distances, kInfiniteDistance for
// cross-component pairs. Immutable once built.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

    int dim() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Breadth-first distances from every source.
DistanceMatrix all_pairs_distances(const Graph& g);

// Maximum pairwise distance; kInfiniteDistance if disconnected, 0 for a
// single vertex. Throws DomainError on the empty graph.
int diameter(const Graph& g);
int diameter(const Graph& g, const DistanceMatrix& dm);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

bool is_connected(const Graph& g);

} // namespace pcn

#endif
