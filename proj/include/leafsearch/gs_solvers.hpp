#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leafsearch/forcing.hpp"
#include "leafsearch/graph.hpp"
#include "leafsearch/tree_decomposition.hpp"
#include "leafsearch/zforcing_tw.hpp"

namespace leafsearch::gs {

struct Result {
  bool yes = false;
  std::optional<Ordering> witness;
  int leaves = 0;              // leaf count of the witness F-tree
  std::optional<int> optimum;  // min CDS size or min forcing set size, when computed
};

// Exact minimum connected dominating set. Cut vertices are forced in, then
// sizes are tried in increasing order, branching on the closed neighbourhood
// of an undominated vertex or on the boundary of a disconnected partial set.
// Requires n >= 2.
std::vector<Vertex> min_cds(const Graph& g);

// Smallest CDS of size <= limit, or nothing.
std::optional<std::vector<Vertex>> cds_at_most(const Graph& g, int limit);

// GS ordering that visits the connected set first (in BFS order inside it),
// then everything else. Every vertex outside a dominating `set` ends up a leaf.
Ordering ordering_from_cds(const Graph& g, const std::vector<Vertex>& set);

// Some GS F-tree with at least k leaves. Requires n >= 2.
Result max_leaf_gs(const Graph& g, int k);

struct MinLeafOptions {
  std::optional<TreeDecomposition> td;  // used instead of the heuristic one
  int exact_td_limit = 16;              // largest n for exact width checks
  ztw::Options dp;
};

// Some GS F-tree with at most k leaves, via a minimum Z*-forcing set.
Result min_leaf_gs(const Graph& g, int k, const MinLeafOptions& options = {});

// Extends a Z-sequence to a GS ordering in which every member is internal.
Ordering zsequence_to_ordering(const Graph& g, const ZSequence& z);

// The F-tree's leaves as a Z*-forcing set, with the rules that colour the
// internal vertices from last to first, each through its first child.
std::pair<std::vector<Vertex>, RuleSequence> ftree_to_zstar(const Graph& g, const Ordering& order);

struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted

  int width() const;
  TreeDecomposition as_tree() const;
};

// Leaves moved to the end, internal vertices and leaves each keeping their
// relative order. Parents are unchanged: no internal vertex hangs off a leaf.
Ordering leaf_suffix_normal_form(const Graph& g, const Ordering& order);

// Path decomposition of width at most the F-tree's leaf count: start from the
// leaf set, then for each internal vertex from last to first add it and drop
// its children. Validated before returning.
PathDecomposition pathdecomp_from_gs(const Graph& g, const Ordering& order);

}  // namespace leafsearch::gs
