#include "pcn/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pcn {

namespace {

void check_shape(const Graph& g, const PackingColoring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        throw DomainError("coloring length " + std::to_string(c.colors.size())
                          + " does not match graph order "
                          + std::to_string(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (c.colors[v] < 1)
            throw DomainError("color at vertex " + std::to_string(v)
                              + " must be positive");
}

} // namespace

std::vector<Violation> verify_coloring(const Graph& g, const PackingColoring& c,
                                       const DistanceMatrix& dm)
{
    check_shape(g, c);
    std::vector<Violation> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (c.colors[u] == c.colors[v] && dm(u, v) <= c.colors[u])
                out.push_back({u, v, c.colors[u], dm(u, v)});
    return out;
}

bool is_valid_coloring(const Graph& g, const PackingColoring& c,
                       const DistanceMatrix& dm)
{
    check_shape(g, c);
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (c.colors[u] == c.colors[v] && dm(u, v) <= c.colors[u])
                return false;
    return true;
}

PackingColoring normalize_coloring(const Graph& g, const PackingColoring& c,
                                   const DistanceMatrix& dm)
{
    if (!is_valid_coloring(g, c, dm))
        throw DomainError("normalize_coloring requires a valid coloring");
    PackingColoring out = c;
    const int n = g.order();
    std::set<int> used(c.colors.begin(), c.colors.end());
    for (int color : used) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (out.colors[v] == color)
                members.push_back(v);
        for (int target = 1; target < color; ++target) {
            bool ok = true;
            for (int v : members) {
                for (int w = 0; w < n && ok; ++w)
                    if (w != v && out.colors[w] == target && dm(v, w) <= target)
                        ok = false;
                if (!ok)
                    break;
            }
            // Within-class pairs were at distance > color >= target already.
            if (ok) {
                for (int v : members)
                    out.colors[v] = target;
                break;
            }
        }
    }
    return out;
}

std::vector<int> default_vertex_order(const Graph& g)
{
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

PackingColoring greedy_coloring(const Graph& g, const DistanceMatrix& dm,
                                const std::optional<std::vector<int>>& order)
{
    const int n = g.order();
    std::vector<int> seq = order ? *order : default_vertex_order(g);
    if (static_cast<int>(seq.size()) != n)
        throw DomainError("greedy order must be a permutation of the vertices");
    PackingColoring c;
    c.colors.assign(n, 0);
    for (int v : seq) {
        int color = 1;
        for (;;) {
            bool ok = true;
            for (int w = 0; w < n; ++w) {
                if (c.colors[w] == color && dm(v, w) <= color) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                break;
            ++color;
        }
        c.colors[v] = color;
    }
    return c;
}

} // namespace pcn
