#include "pcn/catalog.hpp"

#include <cassert>
#include <charconv>

#include "pcn/transforms.hpp"

namespace pcn {

Graph path_graph(int n)
{
    if (n < 1)
        throw DomainError("path_graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges, "path:" + std::to_string(n));
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw DomainError("cycle_graph requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges, "cycle:" + std::to_string(n));
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw DomainError("complete_graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges, "complete:" + std::to_string(n));
}

Graph petersen()
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(i, i + 5);              // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph::from_edges(10, edges, "petersen");
}

LabeledGraph fan_graph(int n)
{
    if (n < 4)
        throw DomainError("fan_graph requires n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, n);
    return {Graph::from_edges(n + 1, edges, "fan:" + std::to_string(n)),
            {{"apex", n}}};
}

LabeledGraph x_graph(int n)
{
    if (n < 5)
        throw DomainError("x_graph requires n >= 5");
    // U = 0..n-1 with u = 0, V = n..2n-1 with v = n, x = 2n, y = 2n+1.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(n + i, n + j);
        }
    const int u = 0, v = n, x = 2 * n, y = 2 * n + 1;
    edges.emplace_back(u, x);
    edges.emplace_back(x, y);
    edges.emplace_back(y, v);
    return {Graph::from_edges(2 * n + 2, edges, "x:" + std::to_string(n)),
            {{"u", u}, {"v", v}, {"x", x}, {"y", y}}};
}

LabeledGraph gnk_graph(int n, int k)
{
    if (k < 4 || n < 2 * k - 2)
        throw DomainError("gnk_graph requires k >= 4 and n >= 2k-2");
    // A = 0..n-1 with a = 0, a' = 1; path interior n..n+2k-3;
    // B = n+2k-2..2n+2k-3 with b = n+2k-2, b' = n+2k-1.
    const int path_len = 2 * k - 1;          // edges on the a'..b' path
    const int interior = path_len - 1;       // 2k-2 interior vertices
    const int a = 0, aprime = 1;
    const int b = n + interior, bprime = n + interior + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(n + interior + i, n + interior + j);
        }
    edges.emplace_back(a, b);
    int prev = aprime;
    for (int t = 0; t < interior; ++t) {
        edges.emplace_back(prev, n + t);
        prev = n + t;
    }
    edges.emplace_back(prev, bprime);
    return {Graph::from_edges(2 * n + interior, edges,
                              "gnk:" + std::to_string(n) + "," + std::to_string(k)),
            {{"a", a}, {"a'", aprime}, {"b", b}, {"b'", bprime}}};
}

Graph g38()
{
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {0, 7},
        {7, 8},   {8, 9},   {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14},
        {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 20}, {20, 21},
        {21, 22}, {22, 23}, {23, 24}, {24, 6},  {25, 26}, {25, 27}, {24, 28},
        {5, 29},  {2, 31},  {0, 32},  {19, 33}, {21, 30}, {16, 34}, {9, 35},
        {14, 36}, {11, 37}, {32, 36}, {33, 37}, {20, 26}, {1, 26},  {15, 27},
        {10, 27}, {13, 22}, {3, 12},  {30, 31}, {30, 35}, {31, 34}, {28, 34},
        {29, 35}, {4, 18},  {7, 23},  {32, 33}, {28, 37}, {29, 36}, {8, 17},
        {6, 25}};
    Graph g = Graph::from_edges(38, edges, "g38");
    assert(g.size() == 57);
    assert(max_degree(g) == 3 && min_degree(g) == 3);
    assert(diameter(g) == 4);
    return g;
}

LabeledGraph g78()
{
    const Graph base = g38();
    const TransformOutcome out = join_subdivided(base, base.edges().front());
    LabeledGraph lg{out.graph.renamed("g78"), {}};
    lg.marks["x'"] = out.new_vertices[0];
    lg.marks["x''"] = out.new_vertices[1];
    return lg;
}

namespace {

int parse_int(const std::string& s, const std::string& spec)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("bad catalog parameter in '" + spec + "'");
    return value;
}

} // namespace

LabeledGraph catalog_lookup(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "petersen" && args.empty())
        return {petersen(), {}};
    if (head == "g38" && args.empty())
        return {g38(), {}};
    if (head == "g78" && args.empty())
        return g78();
    if (head == "gnk") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw DomainError("gnk spec needs two parameters, e.g. gnk:6,4");
        return gnk_graph(parse_int(args.substr(0, comma), spec),
                         parse_int(args.substr(comma + 1), spec));
    }
    if (args.empty())
        throw DomainError("unknown catalog spec '" + spec + "'");
    const int n = parse_int(args, spec);
    if (head == "path")
        return {path_graph(n), {}};
    if (head == "cycle")
        return {cycle_graph(n), {}};
    if (head == "complete")
        return {complete_graph(n), {}};
    if (head == "fan")
        return fan_graph(n);
    if (head == "x")
        return x_graph(n);
    throw DomainError("unknown catalog spec '" + spec + "'");
}

} // namespace pcn
