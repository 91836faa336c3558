#pragma once

#include <cstdint>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch::testing {

Graph make(int n, std::vector<Edge> edges);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);  // centre 0

// One representative per isomorphism class of connected graphs on n vertices.
std::vector<Graph> all_connected_graphs(int n);
// All connected graphs with 1 <= n <= max_n, up to isomorphism.
std::vector<Graph> connected_pool(int max_n);
// Random connected graphs with a fixed seed; edge density varies per graph.
std::vector<Graph> random_connected_graphs(int count, int n, std::uint64_t seed);

}  // namespace leafsearch::testing
