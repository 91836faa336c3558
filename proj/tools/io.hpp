#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "leafsearch/gadgets.hpp"
#include "leafsearch/graph.hpp"
#include "leafsearch/tree_decomposition.hpp"

namespace leafsearch::io {

// Files use 1-based vertex ids; everything in memory is 0-based. Parse
// failures throw Error(Parse) with "<source>:<line>: " in front.

// PACE .gr: "c" comments, one "p <tag> <n> <m>" line, then "u v" edges.
Graph read_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

// PACE .td: "s td <bags> <max bag size> <n>", "b <i> <v>..." lines, then "i j" tree edges.
TreeDecomposition read_td(std::istream& in, int n, const std::string& source = "<input>");
TreeDecomposition read_td_file(const std::string& path, int n);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

// DIMACS CNF with exactly three literals per clause. Returns (clauses, vars).
std::pair<std::vector<gadgets::Clause>, int> read_cnf(std::istream& in, const std::string& source = "<input>");

// "p setcover <universe> <sets>" then one line per set listing 1-based elements.
struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};
SetCoverInstance read_setcover(std::istream& in, const std::string& source = "<input>");

// "p grundy <nx> <ny> <m>" then "x y" lines, both sides 1-based.
struct GrundyInstance {
  int nx = 0;
  int ny = 0;
  std::vector<std::pair<int, int>> edges;
};
GrundyInstance read_grundy(std::istream& in, const std::string& source = "<input>");

// Whitespace- or comma-separated 0-based vertex ids.
std::vector<Vertex> parse_vertex_list(const std::string& text);

}  // namespace leafsearch::io
