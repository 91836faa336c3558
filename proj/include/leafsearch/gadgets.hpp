#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch::gadgets {

struct ReductionOutput {
  Graph graph;
  std::vector<std::string> roles;  // one label per vertex, e.g. "set:2", "literal:-3", "b1"
  std::string translation;         // the parameter correspondence
};

// Split graph: a clique of set vertices and an independent set of element
// vertices. Elements are 0..universe-1. A cover of size <= l exists iff an
// F-tree with <= l internal vertices exists.
ReductionOutput set_cover_to_split(int universe, const std::vector<std::vector<int>>& sets);

// Bipartite G with sides 0..nx-1 and 0..ny-1; edges are (x, y) pairs. A vertex
// r joins X and X becomes a clique. A one-sided total dominating sequence of
// length k exists iff an F-tree with >= k+1 internal vertices exists.
ReductionOutput grundy_to_split(int nx, int ny, const std::vector<std::pair<int, int>>& edges);

// Clauses hold signed 1-based variables. Satisfiable iff some LBFS F-tree has
// exactly k internal vertices. vars = 0 takes the largest variable used.
using Clause = std::array<int, 3>;
ReductionOutput sat3_to_weakly_chordal(const std::vector<Clause>& clauses, int k, int vars = 0);

Graph path_of_triangles(int t);
Graph star_of_ladders(int k);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);

// Families by name: path_of_triangles, star_of_ladders, path, cycle, complete, star.
Graph gen_family(const std::string& name, int param);

// Small exact solvers for the source problems.
int min_set_cover(int universe, const std::vector<std::vector<int>>& sets);  // -1 if none
int longest_one_sided_total_sequence(int nx, int ny, const std::vector<std::pair<int, int>>& edges);
bool satisfiable(const std::vector<Clause>& clauses, int vars);

// Degree-sequence split test, independent of how the graph was built.
bool is_split(const Graph& g);

}  // namespace leafsearch::gadgets
