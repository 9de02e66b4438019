#include "pcn/transforms.hpp"

#include <algorithm>

namespace pcn {

namespace {

void require_edge(const Graph& g, EdgeRef e)
{
    if (!g.has_edge(e.u, e.v))
        throw DomainError("no such edge: (" + std::to_string(e.u) + ","
                          + std::to_string(e.v) + ")");
}

std::map<int, int> identity_map(int n)
{
    std::map<int, int> m;
    for (int v = 0; v < n; ++v)
        m[v] = v;
    return m;
}

} // namespace

TransformOutcome subdivide_edge(const Graph& g, EdgeRef e)
{
    require_edge(g, e);
    const int n = g.order();
    const int z = n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.size() + 1);
    for (const EdgeRef& f : g.edges())
        if (!(f == e))
            edges.emplace_back(f.u, f.v);
    edges.emplace_back(e.u, z);
    edges.emplace_back(z, e.v);
    TransformOutcome out;
    out.graph = Graph::from_edges(n + 1, edges, g.name());
    out.new_vertices = {z};
    out.vertex_map = identity_map(n);
    return out;
}

Graph subdivide_all(const Graph& g)
{
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.size());
    int z = n;
    for (const EdgeRef& e : g.edges()) {
        edges.emplace_back(e.u, z);
        edges.emplace_back(z, e.v);
        ++z;
    }
    return Graph::from_edges(n + g.size(), edges, g.name());
}

Graph delete_edge(const Graph& g, EdgeRef e)
{
    require_edge(g, e);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.size() - 1);
    for (const EdgeRef& f : g.edges())
        if (!(f == e))
            edges.emplace_back(f.u, f.v);
    return Graph::from_edges(g.order(), edges, g.name());
}

TransformOutcome delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw DomainError("no such vertex: " + std::to_string(v));
    TransformOutcome out;
    for (int w = 0; w < g.order(); ++w)
        if (w != v)
            out.vertex_map[w] = w < v ? w : w - 1;
    std::vector<std::pair<int, int>> edges;
    for (const EdgeRef& f : g.edges())
        if (f.u != v && f.v != v)
            edges.emplace_back(out.vertex_map[f.u], out.vertex_map[f.v]);
    out.graph = Graph::from_edges(g.order() - 1, edges, g.name());
    return out;
}

TransformOutcome contract_edge(const Graph& g, EdgeRef e)
{
    require_edge(g, e);
    // Merged vertex keeps the smaller index e.u; ids above e.v shift down.
    TransformOutcome out;
    for (int w = 0; w < g.order(); ++w)
        if (w != e.u && w != e.v)
            out.vertex_map[w] = w < e.v ? w : w - 1;
    const int merged = e.u;
    out.merged_vertex = merged;
    out.new_vertices = {merged};
    auto new_id = [&](int w) {
        return (w == e.u || w == e.v) ? merged : out.vertex_map.at(w);
    };
    std::vector<std::pair<int, int>> edges;
    for (const EdgeRef& f : g.edges()) {
        const int a = new_id(f.u), b = new_id(f.v);
        if (a != b)
            edges.emplace_back(a, b);
    }
    out.graph = Graph::from_edges(g.order() - 1, edges, g.name());
    return out;
}

TransformOutcome join_subdivided(const Graph& g, EdgeRef e)
{
    const TransformOutcome sub = subdivide_edge(g, e);
    const int copy_order = sub.graph.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * sub.graph.size() + 1);
    for (const EdgeRef& f : sub.graph.edges()) {
        edges.emplace_back(f.u, f.v);
        edges.emplace_back(f.u + copy_order, f.v + copy_order);
    }
    const int xp = sub.new_vertices[0];
    const int xpp = xp + copy_order;
    edges.emplace_back(xp, xpp);
    TransformOutcome out;
    out.graph = Graph::from_edges(2 * copy_order, edges, g.name());
    out.new_vertices = {xp, xpp};
    out.vertex_map = identity_map(g.order());
    return out;
}

} // namespace pcn
