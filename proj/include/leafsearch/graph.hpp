#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leafsearch/error.hpp"

namespace leafsearch {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Paradigm { GS, BFS, LBFS };

const char* to_string(Paradigm p);
Paradigm paradigm_from_string(const std::string& s);

// Simple connected undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  // Validates the edge list; see build_graph.
  Graph(int n, std::span<const Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[static_cast<size_t>(u) * n_ + v] != 0; }

  // Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Open neighbourhood as a bitmask; only valid for n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }
  bool has_masks() const noexcept { return n_ <= 64; }

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> masks_;
};

Graph build_graph(int n, std::span<const Edge> edges);

// Connectivity check on an arbitrary edge list, used by generators before building.
bool edges_connected(int n, std::span<const Edge> edges);

// A permutation of all vertices together with its inverse.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<Vertex> seq);

  int size() const noexcept { return static_cast<int>(seq_.size()); }
  Vertex operator[](int i) const { return seq_[i]; }
  int position(Vertex v) const { return pos_[v]; }
  const std::vector<Vertex>& seq() const noexcept { return seq_; }

  bool operator==(const Ordering& other) const { return seq_ == other.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> pos_;
};

// First-in tree: each non-root vertex hangs off its earliest visited neighbour.
struct FTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 for the root
  std::vector<std::vector<Vertex>> children;
  std::vector<bool> leaf;  // the root is never a leaf

  int leaf_count() const;
  int internal_count() const { return static_cast<int>(leaf.size()) - leaf_count(); }
  std::vector<Vertex> leaves() const;
  std::vector<Vertex> internals() const;
};

FTree ftree_from_ordering(const Graph& g, const Ordering& order);

// BFS distance layers from a root.
struct LayerPartition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> layer_of;

  int max_layer_size() const;
};

LayerPartition bfs_layers(const Graph& g, Vertex root);

int ordering_bandwidth(const Graph& g, const Ordering& order);

// True iff `order` can be produced by the given search paradigm.
bool validate_ordering(const Graph& g, const Ordering& order, Paradigm paradigm);

}  // namespace leafsearch
