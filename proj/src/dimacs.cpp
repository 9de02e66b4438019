#include "pcn/dimacs.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace pcn {

namespace {

bool blank(const std::string& s)
{
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

Graph parse_dimacs(std::istream& in, std::string name)
{
    int n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", lineno);
            std::string fmt;
            ss >> fmt >> n >> declared_m;
            if (!ss || fmt != "edge" || n < 0 || declared_m < 0)
                throw ParseError("malformed problem line, expected 'p edge <n> <m>'",
                                 lineno);
        } else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge line before problem line", lineno);
            int u = 0, v = 0;
            ss >> u >> v;
            if (!ss)
                throw ParseError("malformed edge line, expected 'e <u> <v>'", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of range: " + std::to_string(u)
                                     + " " + std::to_string(v),
                                 lineno);
            if (u == v)
                throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unrecognized line type '" + tag + "'", lineno);
        }
    }
    if (n < 0)
        throw ParseError("missing problem line", 0);
    return Graph::from_edges(n, edges, std::move(name));
}

Graph parse_dimacs(const std::string& text, std::string name)
{
    std::istringstream in(text);
    return parse_dimacs(in, std::move(name));
}

std::string emit_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (const EdgeRef& e : g.edges())
        out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return out.str();
}

} // namespace pcn
