#include "pcn/random_graphs.hpp"

#include <string>

namespace pcn {

namespace {

double unit_double(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    if (n < 0)
        throw DomainError("random_graph requires n >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng)
{
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g))
            return g;
    }
}

std::vector<Graph> random_corpus(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = 4 + i % 6;
        const double p = i % 2 == 0 ? 0.25 : 0.5;
        Graph g = random_connected_graph(n, p, rng);
        out.push_back(g.renamed("corpus:" + std::to_string(i)));
    }
    return out;
}

} // namespace pcn
