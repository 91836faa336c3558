#pragma once

#include <functional>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch {

// Incremental state of a partially executed search. Supports push/pop so the
// same object drives tie-broken runs, validation and exhaustive enumeration.
//
// The first-in parent of every vertex is fixed as soon as one of its
// neighbours is visited, so the state also tracks the partial F-tree: once
// every unvisited vertex has a visited neighbour the whole tree is known.
class SearchState {
 public:
  SearchState(const Graph& g, Paradigm paradigm);

  const Graph& graph() const noexcept { return *g_; }
  Paradigm paradigm() const noexcept { return paradigm_; }

  int visited_count() const noexcept { return static_cast<int>(prefix_.size()); }
  bool complete() const noexcept { return visited_count() == g_->n(); }
  const std::vector<Vertex>& prefix() const noexcept { return prefix_; }
  bool visited(Vertex v) const { return pos_[v] >= 0; }
  int position(Vertex v) const { return pos_[v]; }

  // Vertices that may be visited next, ascending by id.
  std::vector<Vertex> candidates() const;
  bool is_candidate(Vertex v) const;

  void push(Vertex v);
  void pop();

  // Earliest visited neighbour, or -1 if none is visited yet.
  Vertex parent(Vertex v) const { return parent_[v]; }
  int child_count(Vertex v) const { return child_count_[v]; }
  // Vertices that already have a child; the root counts once visited.
  int internal_count() const noexcept { return internal_; }
  bool tree_determined() const noexcept { return !prefix_.empty() && orphans_ == 0; }

 private:
  // LBFS: a is preferred over b (a's label is lexicographically larger).
  int compare_labels(Vertex a, Vertex b) const;

  const Graph* g_;
  Paradigm paradigm_;
  std::vector<int> pos_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> parent_;
  std::vector<int> child_count_;
  std::vector<std::vector<int>> labels_;  // visited-neighbour positions, ascending
  std::vector<std::vector<Vertex>> adopted_;  // per push: vertices whose parent was set
  int internal_ = 0;
  int orphans_ = 0;  // unvisited vertices without a visited neighbour
};

// The paradigm ordering in which every tie goes to the vertex leftmost in rho;
// the start vertex is rho[0].
Ordering run_plus(const Graph& g, Paradigm paradigm, const Ordering& rho);

// Continues a partial search, breaking ties by smallest id.
Ordering complete_search(SearchState& state);

// A paradigm ordering that begins with the given clique.
Ordering complete_from_clique_prefix(const Graph& g, Paradigm paradigm, const std::vector<Vertex>& prefix);

// Calls visitor on every paradigm ordering exactly once; the visitor returns
// false to stop early. Returns false iff stopped early.
using OrderingVisitor = std::function<bool(const std::vector<Vertex>&)>;
bool enumerate_orderings(const Graph& g, Paradigm paradigm, const OrderingVisitor& visitor);

}  // namespace leafsearch
