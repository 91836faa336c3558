#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leafsearch/forcing.hpp"
#include "leafsearch/graph.hpp"

namespace leafsearch::oracle {

// Exhaustive ground-truth solvers. All of them are exponential and meant for
// graphs of a dozen or so vertices; they exist to be slow and right.

struct LeafRange {
  int min = 0;
  int max = 0;
  Ordering min_witness;
  Ordering max_witness;
};

// Exact min/max F-tree leaf counts over all paradigm orderings. Prefixes are
// abandoned as soon as every unvisited vertex has a visited neighbour, since
// the F-tree is fixed from then on.
LeafRange brute_leaf_range(const Graph& g, Paradigm paradigm);

// Same answer from a plain walk over every complete ordering.
LeafRange brute_leaf_range_full(const Graph& g, Paradigm paradigm);

// An ordering whose F-tree has between lo and hi internal vertices, if any.
// Prefixes with more than hi internal vertices are pruned.
std::optional<Ordering> brute_find_internal(const Graph& g, Paradigm paradigm, int lo, int hi);

// Minimum connected dominating set by increasing subset size.
std::vector<Vertex> brute_min_cds(const Graph& g);

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 at the root
};

struct TreeLeafRange {
  int min = 0;
  int max = 0;
  RootedTree min_tree;
  RootedTree max_tree;
};

// Min/max non-root leaf counts over every spanning tree and every root.
TreeLeafRange brute_spanning_leaf_range(const Graph& g);

// Longest generic Z-sequence (memoised on the set of chosen vertices).
ZSequence brute_longest_zsequence(const Graph& g);

// Minimum Z*-forcing set with a witnessing rule sequence; n <= 24.
std::pair<std::vector<Vertex>, RuleSequence> brute_min_zstar(const Graph& g);

// No induced cycle of length >= 5 in g or its complement.
bool is_weakly_chordal(const Graph& g);

// Helpers shared with tests and gadgets.
bool is_connected_dominating(const Graph& g, VertexMask set);
int leaf_count_of(const Graph& g, const Ordering& order);

}  // namespace leafsearch::oracle
