#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch::xp {

enum class Objective { Min, Max };

struct Result {
  bool yes = false;
  std::optional<Ordering> witness;
  int internal = 0;  // internal vertices of the witness F-tree
};

// BFS+rho over every ordered choice of at most k (min) or exactly k (max)
// leading vertices, the rest in id order. Accepts on <= k / >= k internal
// vertices. Requires k >= 1.
Result bfs_internal_xp(const Graph& g, int k, Objective objective);

// GS F-tree with at most k internal vertices iff a CDS of size <= k exists.
Result gs_min_internal_xp(const Graph& g, int k);

// GS F-tree with at least k internal vertices iff a generic Z-sequence of
// length k exists.
Result gs_max_internal_xp(const Graph& g, int k);

// Variables x(v,i), y(v,i) for i in 1..k and z(j,i) for 1 <= j < i <= k.
struct Literal {
  int var = 0;
  bool negated = false;
};

struct ClauseGroup {
  std::string name;  // X, Y, Z, X', A, B or C
  std::vector<std::vector<Literal>> clauses;
};

struct CircuitInstance {
  int n = 0;
  int k = 0;
  int num_vars = 0;
  int target_weight = 0;  // 3k - 1
  std::vector<ClauseGroup> groups;

  int x(Vertex v, int i) const { return (i - 1) * n + v; }
  int y(Vertex v, int i) const { return k * n + (i - 1) * n + v; }
  int z(int j, int i) const { return 2 * k * n + (i - 1) * (i - 2) / 2 + (j - 1); }
  std::string var_name(int var) const;
  std::size_t clause_count() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

// The conjunction X, Y, Z, X', A, B, C for "at least k internal vertices".
CircuitInstance build_wcs_circuit(const Graph& g, int k);

// Whether an assignment of weight exactly target_weight satisfies every
// clause. The search picks one x-, one y- and (from i = 2) one z-variable per
// slot, which covers every such assignment because X, Y and Z allow at most
// one true variable per slot.
bool eval_wcs(const CircuitInstance& c, std::vector<bool>* assignment = nullptr);

}  // namespace leafsearch::xp
