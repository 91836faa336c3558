#include "leafsearch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "leafsearch/search.hpp"

namespace leafsearch::oracle {

namespace {

void require_masks(const Graph& g, int limit, const char* what) {
  if (g.n() > limit) {
    throw Error(ErrorKind::OutOfRange, std::string(what) + " supports at most " + std::to_string(limit) + " vertices");
  }
}

template <class OnTree, class Prune>
bool walk_ftrees(SearchState& state, OnTree& on_tree, Prune& prune) {
  if (prune(state)) return true;
  if (state.tree_determined()) return on_tree(state);
  for (Vertex v : state.candidates()) {
    state.push(v);
    const bool keep_going = walk_ftrees(state, on_tree, prune);
    state.pop();
    if (!keep_going) return false;
  }
  return true;
}

Ordering completed(const SearchState& state) {
  SearchState copy = state;
  return complete_search(copy);
}

}  // namespace

int leaf_count_of(const Graph& g, const Ordering& order) { return ftree_from_ordering(g, order).leaf_count(); }

LeafRange brute_leaf_range(const Graph& g, Paradigm paradigm) {
  const int n = g.n();
  LeafRange r;
  r.min = n + 1;
  r.max = -1;
  SearchState state(g, paradigm);
  auto on_tree = [&](const SearchState& s) {
    const int leaves = n - s.internal_count();
    if (leaves < r.min) {
      r.min = leaves;
      r.min_witness = completed(s);
    }
    if (leaves > r.max) {
      r.max = leaves;
      r.max_witness = completed(s);
    }
    return true;
  };
  auto no_prune = [](const SearchState&) { return false; };
  walk_ftrees(state, on_tree, no_prune);
  return r;
}

LeafRange brute_leaf_range_full(const Graph& g, Paradigm paradigm) {
  LeafRange r;
  r.min = g.n() + 1;
  r.max = -1;
  enumerate_orderings(g, paradigm, [&](const std::vector<Vertex>& seq) {
    Ordering o(seq);
    const int leaves = leaf_count_of(g, o);
    if (leaves < r.min) {
      r.min = leaves;
      r.min_witness = o;
    }
    if (leaves > r.max) {
      r.max = leaves;
      r.max_witness = o;
    }
    return true;
  });
  return r;
}

std::optional<Ordering> brute_find_internal(const Graph& g, Paradigm paradigm, int lo, int hi) {
  std::optional<Ordering> found;
  SearchState state(g, paradigm);
  auto on_tree = [&](const SearchState& s) {
    if (s.internal_count() >= lo && s.internal_count() <= hi) {
      found = completed(s);
      return false;
    }
    return true;
  };
  auto prune = [&](const SearchState& s) { return s.internal_count() > hi; };
  walk_ftrees(state, on_tree, prune);
  return found;
}

bool is_connected_dominating(const Graph& g, VertexMask set) {
  if (set == 0) return false;
  VertexMask dominated = set;
  for (VertexMask s = set; s; s &= s - 1) dominated |= g.neighbor_mask(std::countr_zero(s));
  if (dominated != full_mask(g.n())) return false;
  VertexMask reached = set & (~set + 1);
  VertexMask frontier = reached;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

std::vector<Vertex> brute_min_cds(const Graph& g) {
  require_masks(g, 30, "brute_min_cds");
  const int n = g.n();
  // Combinations of size `size` in lexicographic order.
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexMask m = 0;
      for (int i : idx) m |= bit(i);
      if (is_connected_dominating(g, m)) return from_mask(m);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};  // unreachable for connected graphs
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

RootedTree root_tree(int n, const std::vector<Edge>& tree_edges, Vertex root) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        t.parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  return t;
}

}  // namespace

TreeLeafRange brute_spanning_leaf_range(const Graph& g) {
  const int n = g.n();
  TreeLeafRange r;
  if (n == 1) {
    r.min_tree = r.max_tree = RootedTree{0, {-1}};
    return r;
  }
  r.min = n + 1;
  r.max = -1;
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> chosen;

  auto can_still_connect = [&](int from) {
    Dsu d(n);
    int comps = n;
    for (auto [u, v] : chosen) comps -= d.unite(u, v);
    for (int i = from; i < m; ++i) comps -= d.unite(edges[i].first, edges[i].second);
    return comps == 1;
  };

  auto record = [&]() {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : chosen) {
      ++deg[u];
      ++deg[v];
    }
    int d1 = 0;
    Vertex some_leaf = -1, some_inner = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) {
        ++d1;
        if (some_leaf < 0) some_leaf = v;
      } else if (some_inner < 0) {
        some_inner = v;
      }
    }
    const int lo = d1 - 1;
    const int hi = some_inner >= 0 ? d1 : d1 - 1;
    if (lo < r.min) {
      r.min = lo;
      r.min_tree = root_tree(n, chosen, some_leaf);
    }
    if (hi > r.max) {
      r.max = hi;
      r.max_tree = root_tree(n, chosen, some_inner >= 0 ? some_inner : some_leaf);
    }
  };

  // Include/exclude each edge in turn; excluding needs the rest to still span.
  auto rec = [&](auto&& self, int i) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      record();
      return;
    }
    if (i == m) return;
    {
      Dsu d(n);
      for (auto [u, v] : chosen) d.unite(u, v);
      if (d.find(edges[i].first) != d.find(edges[i].second)) {
        chosen.push_back(edges[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
    if (can_still_connect(i + 1)) self(self, i + 1);
  };
  rec(rec, 0);
  return r;
}

ZSequence brute_longest_zsequence(const Graph& g) {
  require_masks(g, 24, "brute_longest_zsequence");
  const int n = g.n();
  const VertexMask all = full_mask(n);
  std::vector<VertexMask> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.neighbor_mask(v) | bit(v);

  // best[S] = longest continuation from chosen set S, plus one (0 = unknown).
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  auto dominated = [&](VertexMask s) {
    VertexMask d = 0;
    for (; s; s &= s - 1) d |= closed[std::countr_zero(s)];
    return d;
  };
  auto fresh = [&](VertexMask s, Vertex v) -> VertexMask {
    if (s & bit(v)) return 0;
    if (s != 0 && (g.neighbor_mask(v) & s) == 0) return 0;
    return g.neighbor_mask(v) & ~dominated(s) & all;
  };
  auto solve = [&](auto&& self, VertexMask s) -> int {
    if (best[s]) return best[s] - 1;
    int result = 0;
    for (int v = 0; v < n; ++v)
      if (fresh(s, v)) result = std::max(result, 1 + self(self, s | bit(v)));
    best[s] = static_cast<std::int8_t>(result + 1);
    return result;
  };
  const int length = solve(solve, 0);
  ZSequence z;
  VertexMask s = 0;
  while (z.length() < length) {
    const int remaining = length - z.length();
    for (int v = 0; v < n; ++v) {
      const VertexMask f = fresh(s, v);
      if (f && 1 + solve(solve, s | bit(v)) == remaining) {
        z.seq.push_back(v);
        z.witness.push_back(std::countr_zero(f));
        s |= bit(v);
        break;
      }
    }
  }
  return z;
}

std::pair<std::vector<Vertex>, RuleSequence> brute_min_zstar(const Graph& g) {
  require_masks(g, 24, "brute_min_zstar");
  const int n = g.n();
  const VertexMask all = full_mask(n);
  // win[B]: 0 unknown, 1 losing, 2 winning.
  std::vector<std::uint8_t> win(std::size_t{1} << n, 0);
  auto moves = [&](VertexMask blue, auto&& visit) {
    const VertexMask white = all & ~blue;
    for (VertexMask us = blue; us; us &= us - 1) {
      const Vertex u = std::countr_zero(us);
      const VertexMask wn = g.neighbor_mask(u) & white;
      if (std::popcount(wn) != 1) continue;
      const Vertex w = std::countr_zero(wn);
      if (white != wn && (g.neighbor_mask(w) & white) == 0) continue;
      if (visit(u, w)) return;
    }
  };
  auto solve = [&](auto&& self, VertexMask blue) -> bool {
    if (blue == all) return true;
    if (win[blue]) return win[blue] == 2;
    bool ok = false;
    moves(blue, [&](Vertex, Vertex w) { return ok = self(self, blue | bit(w)); });
    win[blue] = ok ? 2 : 1;
    return ok;
  };
  VertexMask best = all;
  for (int size = 0; size <= n && best == all; ++size) {
    if (size == n) break;
    for (VertexMask s = 0; s <= all; ++s) {
      if (std::popcount(s) == size && solve(solve, s)) {
        best = s;
        break;
      }
      if (s == all) break;
    }
  }
  RuleSequence rs;
  rs.initial = from_mask(best);
  VertexMask blue = best;
  while (blue != all) {
    std::pair<Vertex, Vertex> step{-1, -1};
    moves(blue, [&](Vertex u, Vertex w) {
      if (solve(solve, blue | bit(w))) {
        step = {u, w};
        return true;
      }
      return false;
    });
    rs.rules.push_back(step);
    blue |= bit(step.second);
  }
  rs.complete = true;
  return {from_mask(best), rs};
}

namespace {

// Induced cycle of length >= 5 in the graph given by adjacency masks. Paths
// grow from their smallest vertex; a neighbour of the start may only close.
bool has_hole(int n, const std::vector<VertexMask>& adj) {
  std::vector<Vertex> path;
  // `forbidden` holds the path and the neighbourhoods of its inner vertices.
  auto extend = [&](auto&& self, VertexMask forbidden) -> bool {
    const Vertex start = path.front();
    const Vertex last = path.back();
    for (VertexMask cand = adj[last] & ~forbidden; cand; cand &= cand - 1) {
      const Vertex x = std::countr_zero(cand);
      if (x <= start) continue;
      if (adj[start] & bit(x)) {
        if (path.size() + 1 >= 5) return true;
        continue;
      }
      path.push_back(x);
      const bool found = self(self, forbidden | adj[last] | bit(x));
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    for (VertexMask c = adj[s]; c; c &= c - 1) {
      const Vertex p1 = std::countr_zero(c);
      if (p1 <= s) continue;
      path = {s, p1};
      if (extend(extend, bit(s) | bit(p1))) return true;
    }
  }
  return false;
}

}  // namespace

bool is_weakly_chordal(const Graph& g) {
  require_masks(g, 64, "is_weakly_chordal");
  const int n = g.n();
  std::vector<VertexMask> adj(n), comp(n);
  const VertexMask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbor_mask(v);
    comp[v] = all & ~adj[v] & ~bit(v);
  }
  return !has_hole(n, adj) && !has_hole(n, comp);
}

}  // namespace leafsearch::oracle
