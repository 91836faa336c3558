#include "leafsearch/forcing.hpp"

#include <bit>
#include <unordered_set>

namespace leafsearch {

VertexMask to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::vector<Vertex> from_mask(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool zstar_applicable(const Graph& g, VertexMask blue, Vertex u, Vertex w) {
  const VertexMask all = full_mask(g.n());
  if (!(blue & bit(u)) || (blue & bit(w)) || !g.adjacent(u, w)) return false;
  const VertexMask white = all & ~blue;
  if ((g.neighbor_mask(u) & white) != bit(w)) return false;
  return white == bit(w) || (g.neighbor_mask(w) & white) != 0;
}

bool replay_valid(const Graph& g, const RuleSequence& rs) {
  if (!g.has_masks()) return false;
  VertexMask blue = 0;
  for (Vertex v : rs.initial) {
    if (v < 0 || v >= g.n() || (blue & bit(v))) return false;
    blue |= bit(v);
  }
  for (auto [u, w] : rs.rules) {
    if (u < 0 || w < 0 || u >= g.n() || w >= g.n()) return false;
    if (!zstar_applicable(g, blue, u, w)) return false;
    blue |= bit(w);
  }
  return rs.complete == (blue == full_mask(g.n()));
}

namespace {

struct ForceSearch {
  const Graph& g;
  VertexMask all;
  std::unordered_set<VertexMask> dead;
  std::vector<std::pair<Vertex, Vertex>> trail;

  bool run(VertexMask blue) {
    if (blue == all) return true;
    if (dead.count(blue)) return false;
    const VertexMask white = all & ~blue;
    for (VertexMask us = blue; us; us &= us - 1) {
      const Vertex u = std::countr_zero(us);
      const VertexMask wn = g.neighbor_mask(u) & white;
      if (std::popcount(wn) != 1) continue;
      const Vertex w = std::countr_zero(wn);
      if (white != wn && (g.neighbor_mask(w) & white) == 0) continue;
      trail.emplace_back(u, w);
      if (run(blue | wn)) return true;
      trail.pop_back();
    }
    dead.insert(blue);
    return false;
  }
};

}  // namespace

std::optional<RuleSequence> zstar_force(const Graph& g, const std::vector<Vertex>& initial) {
  if (!g.has_masks()) throw Error(ErrorKind::OutOfRange, "Z*-forcing search supports at most 64 vertices");
  ForceSearch search{g, full_mask(g.n()), {}, {}};
  if (!search.run(to_mask(initial))) return std::nullopt;
  RuleSequence rs;
  rs.initial = initial;
  rs.rules = std::move(search.trail);
  rs.complete = true;
  return rs;
}

bool is_valid_zsequence(const Graph& g, const ZSequence& z) {
  const int n = g.n();
  if (z.seq.size() != z.witness.size() || z.seq.size() > static_cast<size_t>(n)) return false;
  std::vector<bool> in_seq(n, false);
  std::vector<bool> closed(n, false);  // union of closed neighbourhoods of predecessors
  for (size_t i = 0; i < z.seq.size(); ++i) {
    const Vertex v = z.seq[i];
    const Vertex w = z.witness[i];
    if (v < 0 || v >= n || in_seq[v] || w < 0 || w >= n) return false;
    if (i > 0) {
      bool has_earlier = false;
      for (Vertex u : g.neighbors(v)) has_earlier = has_earlier || in_seq[u];
      if (!has_earlier) return false;
    }
    if (!g.adjacent(v, w) || closed[w]) return false;
    in_seq[v] = true;
    closed[v] = true;
    for (Vertex u : g.neighbors(v)) closed[u] = true;
  }
  return true;
}

ZSequence zsequence_from_rules(const Graph& g, const RuleSequence& rs) {
  if (!replay_valid(g, rs)) throw Error(ErrorKind::InvalidSequence, "rule sequence does not replay");
  ZSequence z;
  for (auto it = rs.rules.rbegin(); it != rs.rules.rend(); ++it) {
    z.seq.push_back(it->second);
    z.witness.push_back(it->first);
  }
  return z;
}

}  // namespace leafsearch
