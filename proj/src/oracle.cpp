#include "pcn/oracle.hpp"

#include <algorithm>
#include <vector>

namespace pcn {

namespace {

// Distances via Floyd-Warshall, deliberately not sharing the BFS code
// the main solver relies on.
std::vector<std::vector<int>> floyd_warshall(const Graph& g)
{
    const int n = g.order();
    const int big = n + 1; // farther than any finite distance
    std::vector<std::vector<int>> d(n, std::vector<int>(n, big));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int u : g.neighbors(v))
            d[v][u] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

bool extend(const std::vector<std::vector<int>>& d, std::vector<int>& colors,
            int v, int k, int big)
{
    const int n = static_cast<int>(d.size());
    if (v == n)
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (colors[u] == c && d[u][v] != big && d[u][v] <= c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            colors[v] = c;
            if (extend(d, colors, v + 1, k, big))
                return true;
            colors[v] = 0;
        }
    }
    return false;
}

} // namespace

int oracle_solve(const Graph& g)
{
    const int n = g.order();
    if (n > 10)
        throw DomainError("oracle_solve is capped at order 10, got "
                          + std::to_string(n));
    if (n == 0)
        return 0;
    const auto d = floyd_warshall(g);
    const int big = n + 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(n, 0);
        if (extend(d, colors, 0, k, big))
            return k;
    }
    return n; // unreachable: n distinct colors always work
}

} // namespace pcn
