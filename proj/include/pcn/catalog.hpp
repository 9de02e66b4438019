#ifndef PCN_CATALOG_HPP
#define PCN_CATALOG_HPP

#include <map>
#include <string>

#include "pcn/graph.hpp"

namespace pcn {

// A graph together with named special vertices ("apex", "x", "y", "a",
// "a'", ...). Every builder is deterministic.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> marks;

    int mark(const std::string& role) const
    {
        auto it = marks.find(role);
        if (it == marks.end())
            throw DomainError("no vertex marked '" + role + "'");
        return it->second;
    }
};

// P_n: vertices 0..n-1, edges i-(i+1).
Graph path_graph(int n);

// C_n, n >= 3.
Graph cycle_graph(int n);

// K_n.
Graph complete_graph(int n);

// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9 with
// edges (i+5)-((i+2 mod 5)+5), spokes i-(i+5).
Graph petersen();

// P_n plus a universal vertex, marked "apex" (index n). n >= 4.
LabeledGraph fan_graph(int n);

// Two copies of K_n joined by a path u-x-y-v (the twice-subdivided
// joining edge). Marks "u","x","y","v"; x is adjacent to u. n >= 5.
LabeledGraph x_graph(int n);

// Two copies of K_n with an edge ab between them and a path of length
// 2k-1 between a' and b'. Marks "a","b","a'","b'". k >= 4, n >= 2k-2.
LabeledGraph gnk_graph(int n, int k);

// The cubic graph of order 38 with diameter 4; edge list fixed. Asserts
// 3-regularity and diameter 4 in debug builds.
Graph g38();

// Two disjoint copies of g38 with its first canonical edge subdivided,
// joined by an edge between the two subdivision vertices. Order 78,
// cubic. Marks "x'","x''".
LabeledGraph g78();

// Resolves a catalog spec string: "path:n", "cycle:n", "complete:n",
// "petersen", "fan:n", "x:n", "gnk:n,k", "g38", "g78". The returned
// graph's name is the spec string.
LabeledGraph catalog_lookup(const std::string& spec);

} // namespace pcn

#endif
