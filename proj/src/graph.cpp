#include "leafsearch/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace leafsearch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotConnectedOrdering: return "NotConnectedOrdering";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::PrefixNotRealized: return "PrefixNotRealized";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::NotGSOrdering: return "NotGSOrdering";
    case ErrorKind::DecompositionUnavailable: return "DecompositionUnavailable";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::MalformedClause: return "MalformedClause";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

const char* to_string(Paradigm p) {
  switch (p) {
    case Paradigm::GS: return "gs";
    case Paradigm::BFS: return "bfs";
    case Paradigm::LBFS: return "lbfs";
  }
  return "?";
}

Paradigm paradigm_from_string(const std::string& s) {
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "gs") return Paradigm::GS;
  if (lower == "bfs") return Paradigm::BFS;
  if (lower == "lbfs") return Paradigm::LBFS;
  throw Error(ErrorKind::BadParameter, "unknown paradigm '" + s + "'");
}

bool edges_connected(int n, std::span<const Edge> edges) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "graph needs at least one vertex");
  adj_.resize(n);
  matrix_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::OutOfRange,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<size_t>(u) * n + v];
    if (cell) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    cell = 1;
    matrix_[static_cast<size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  std::sort(edges_.begin(), edges_.end());
  if (!edges_connected(n, edges_)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  if (n <= 64) {
    masks_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : adj_[v]) masks_[v] |= std::uint64_t{1} << w;
  }
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Ordering::Ordering(std::vector<Vertex> seq) : seq_(std::move(seq)), pos_(seq_.size(), -1) {
  const int n = static_cast<int>(seq_.size());
  for (int i = 0; i < n; ++i) {
    Vertex v = seq_[i];
    if (v < 0 || v >= n || pos_[v] != -1) throw Error(ErrorKind::NotAPermutation, "sequence is not a permutation");
    pos_[v] = i;
  }
}

int FTree::leaf_count() const { return static_cast<int>(std::count(leaf.begin(), leaf.end(), true)); }

std::vector<Vertex> FTree::leaves() const {
  std::vector<Vertex> out;
  for (int v = 0; v < static_cast<int>(leaf.size()); ++v)
    if (leaf[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> FTree::internals() const {
  std::vector<Vertex> out;
  for (int v = 0; v < static_cast<int>(leaf.size()); ++v)
    if (!leaf[v]) out.push_back(v);
  return out;
}

FTree ftree_from_ordering(const Graph& g, const Ordering& order) {
  const int n = g.n();
  if (order.size() != n) throw Error(ErrorKind::NotAPermutation, "ordering size differs from vertex count");
  FTree t;
  t.root = order[0];
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  for (int i = 1; i < n; ++i) {
    Vertex v = order[i];
    Vertex best = -1;
    for (Vertex w : g.neighbors(v)) {
      if (order.position(w) < i && (best == -1 || order.position(w) < order.position(best))) best = w;
    }
    if (best == -1) {
      throw Error(ErrorKind::NotConnectedOrdering, "vertex " + std::to_string(v) + " has no earlier neighbour");
    }
    t.parent[v] = best;
  }
  // Children in visiting order.
  for (int i = 1; i < n; ++i) t.children[t.parent[order[i]]].push_back(order[i]);
  t.leaf.assign(n, false);
  for (int v = 0; v < n; ++v) t.leaf[v] = (v != t.root && t.children[v].empty());
  return t;
}

int LayerPartition::max_layer_size() const {
  size_t best = 0;
  for (const auto& layer : layers) best = std::max(best, layer.size());
  return static_cast<int>(best);
}

LayerPartition bfs_layers(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.n()) throw Error(ErrorKind::OutOfRange, "root out of range");
  LayerPartition lp;
  lp.root = root;
  lp.layer_of.assign(g.n(), -1);
  lp.layer_of[root] = 0;
  lp.layers.push_back({root});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex u : lp.layers.back()) {
      for (Vertex w : g.neighbors(u)) {
        if (lp.layer_of[w] == -1) {
          lp.layer_of[w] = static_cast<int>(lp.layers.size());
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    lp.layers.push_back(std::move(next));
  }
  return lp;
}

int ordering_bandwidth(const Graph& g, const Ordering& order) {
  int bw = 0;
  for (auto [u, v] : g.edges()) bw = std::max(bw, std::abs(order.position(u) - order.position(v)));
  return bw;
}

}  // namespace leafsearch
