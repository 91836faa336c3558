#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch::layered {

enum class Objective { Min, Max };

const char* to_string(Objective o);

struct Config {
  std::size_t max_orderings = 40320;  // per layer
  int threads = 1;                    // roots solved concurrently
};

struct Result {
  bool yes = false;
  std::optional<Ordering> witness;
  int leaves = 0;  // leaf count of the witness F-tree
};

// Decision version. Min: some F-tree with at most k leaves. Max: some F-tree
// with at least k leaves. Requires k >= 1, n >= 2 and paradigm BFS or LBFS.
Result solve(const Graph& g, Paradigm paradigm, Objective objective, int k, const Config& config = {});

// Exact optimum over every root; no leaf-count pruning, so every layer is
// materialised (subject to the cap).
Result optimum(const Graph& g, Paradigm paradigm, Objective objective, const Config& config = {});

// Whether tau may follow sigma_prev as the visiting order of layer i.
bool layer_transition_valid(const Graph& g, const LayerPartition& layers, int i,
                            const std::vector<Vertex>& sigma_prev, const std::vector<Vertex>& tau,
                            Paradigm paradigm);

// Leaves of layer i (not the last) once tau fixes the parents of layer i+1.
int layer_leaf_count(const Graph& g, const LayerPartition& layers, int i, const std::vector<Vertex>& tau);

}  // namespace leafsearch::layered
