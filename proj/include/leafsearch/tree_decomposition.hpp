#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;  // tree edges between bag indices

  int width() const;
};

// Throws InvalidDecomposition naming the first violated axiom.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Decomposition induced by eliminating vertices in the given order.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);

// Min-fill elimination; ties go to the smallest vertex id.
TreeDecomposition min_fill_td(const Graph& g);

// Min-fill, replaced by an exact decomposition when n <= 14 and that is narrower.
TreeDecomposition heuristic_td(const Graph& g);

// Exact treewidth by dynamic programming over vertex subsets. Empty when n
// exceeds max_n.
std::optional<TreeDecomposition> exact_td(const Graph& g, int max_n = 16);

// A path decomposition as a chain-shaped tree decomposition.
TreeDecomposition from_path_bags(std::vector<std::vector<Vertex>> bags);

enum class NodeType { Leaf, Introduce, Forget, Rule, Join };

const char* to_string(NodeType t);

struct NiceNode {
  NodeType type = NodeType::Leaf;
  Vertex vertex = -1;            // introduced, forgotten, or about to be forgotten
  std::vector<Vertex> bag;       // sorted
  std::vector<int> children;
};

// Rooted binary tree with empty leaf and root bags; every Forget node has a
// Rule node as its child.
struct NiceTD {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
};

NiceTD make_nice(const Graph& g, const TreeDecomposition& td);

// Structural check of the nice form; throws InvalidDecomposition.
void validate_nice(const Graph& g, const NiceTD& nice);

}  // namespace leafsearch
