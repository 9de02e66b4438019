#ifndef PCN_RANDOM_GRAPHS_HPP
#define PCN_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "pcn/graph.hpp"

namespace pcn {

// G(n, p) with explicit bit-to-double conversion so the sequence only
// depends on the mt19937_64 stream, not on library distribution details.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Rejection-samples G(n, p) until connected.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

// The shared randomized corpus: `count` seeded connected graphs cycling
// n through 4..9 with edge probability alternating 0.25 / 0.5.
std::vector<Graph> random_corpus(int count, std::uint64_t seed);

} // namespace pcn

#endif
