#ifndef PCN_DIGEST_HPP
#define PCN_DIGEST_HPP

#include <string>

#include "pcn/graph.hpp"

namespace pcn {

// Hex SHA-256 of (n, sorted edge list). Labeling-sensitive by design;
// equal graphs under the same labeling get equal digests, which is all
// the result cache needs.
std::string graph_digest(const Graph& g);

} // namespace pcn

#endif
