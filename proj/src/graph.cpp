#include "pcn/graph.hpp"

#include <algorithm>
#include <queue>

namespace pcn {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string name)
{
    if (n < 0)
        throw DomainError("vertex count must be nonnegative");
    Graph g;
    g.adj_.assign(n, {});
    g.name_ = std::move(name);
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw DomainError("self-loop at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw DomainError("edge endpoint out of range: (" + std::to_string(a)
                              + "," + std::to_string(b) + ")");
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    int m = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<int>(nb.size());
    }
    g.m_ = m / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeRef> Graph::edges() const
{
    std::vector<EdgeRef> es;
    es.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const int n = g.order();
    std::vector<int> flat(static_cast<size_t>(n) * n, kInfiniteDistance);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        int* dist = flat.data() + static_cast<size_t>(s) * n;
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (dist[v] == kInfiniteDistance) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(flat));
}

int diameter(const Graph& g, const DistanceMatrix& dm)
{
    if (g.order() == 0)
        throw DomainError("diameter of the empty graph is undefined");
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            best = std::max(best, dm(u, v));
    return best;
}

int diameter(const Graph& g) { return diameter(g, all_pairs_distances(g)); }

int max_degree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("max_degree of the empty graph is undefined");
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("min_degree of the empty graph is undefined");
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    if (n <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int v : g.neighbors(queue[head])) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

} // namespace pcn
