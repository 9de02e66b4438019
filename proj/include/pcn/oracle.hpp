#ifndef PCN_ORACLE_HPP
#define PCN_ORACLE_HPP

#include "pcn/graph.hpp"

namespace pcn {

// Independent exhaustive reference solver, hard-capped at order 10.
// Plain enumeration of color assignments in vertex-index order with
// prefix validity as the only pruning; distances come from its own
// Floyd-Warshall rather than the BFS path used everywhere else. Used
// solely to cross-check the optimized solver.
int oracle_solve(const Graph& g);

} // namespace pcn

#endif
