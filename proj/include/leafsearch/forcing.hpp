#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "leafsearch/graph.hpp"

namespace leafsearch {

using VertexMask = std::uint64_t;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
VertexMask to_mask(const std::vector<Vertex>& vs);
std::vector<Vertex> from_mask(VertexMask m);

// Ordered Z*-rule applications u -> w starting from an initial blue set.
struct RuleSequence {
  std::vector<Vertex> initial;
  std::vector<std::pair<Vertex, Vertex>> rules;
  bool complete = false;  // replay ends with every vertex blue
};

// Prefix of a GS ordering in which every member has a neighbour outside the
// closed neighbourhoods of its predecessors; `witness[i]` is such a neighbour.
struct ZSequence {
  std::vector<Vertex> seq;
  std::vector<Vertex> witness;

  int length() const { return static_cast<int>(seq.size()); }
};

// Blue vertex u may colour w iff w is u's only white neighbour and w is
// either the last white vertex or still has a white neighbour itself.
bool zstar_applicable(const Graph& g, VertexMask blue, Vertex u, Vertex w);

// Replays the rules, checking each precondition at its turn and the
// `complete` flag against the final state.
bool replay_valid(const Graph& g, const RuleSequence& rs);

// Searches over rule-application orders (memoised on blue sets) for one that
// colours everything; nothing is assumed about confluence. n <= 64.
std::optional<RuleSequence> zstar_force(const Graph& g, const std::vector<Vertex>& initial);

bool is_valid_zsequence(const Graph& g, const ZSequence& z);

// Reverses the forced vertices of a complete rule sequence; each rule's
// forcing vertex becomes the fresh witness.
ZSequence zsequence_from_rules(const Graph& g, const RuleSequence& rs);

}  // namespace leafsearch
