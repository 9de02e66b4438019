#ifndef PCN_DIMACS_HPP
#define PCN_DIMACS_HPP

#include <iosfwd>
#include <string>

#include "pcn/graph.hpp"

namespace pcn {

// DIMACS edge format: "c ..." comments, one "p edge <n> <m>" header,
// then "e <u> <v>" lines with 1-based endpoints. Duplicate edge lines
// are collapsed; self-loops and out-of-range endpoints are ParseErrors
// carrying the offending line number.
Graph parse_dimacs(std::istream& in, std::string name = "");
Graph parse_dimacs(const std::string& text, std::string name = "");

// Deterministic emitter: header, then edges sorted lexicographically,
// 1-based. Byte-identical across runs for equal graphs.
std::string emit_dimacs(const Graph& g);

} // namespace pcn

#endif
