#include "graph_pool.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace leafsearch::testing {

Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

namespace {

using Code = std::uint64_t;

int pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

struct Raw {
  int n;
  std::vector<Edge> edges;
};

// Minimum edge code over relabellings that keep an isomorphism-invariant
// vertex class order (degree, then neighbour-degree multiset).
Code canonical(const Raw& g) {
  const int n = g.n;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(static_cast<int>(adj[v].size()));
    std::vector<int> nd;
    for (int w : adj[v]) nd.push_back(static_cast<int>(adj[w].size()));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) into order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  std::vector<int> label(n);
  auto rec = [&](auto&& self, size_t c) -> void {
    if (c == classes.size()) {
      for (int i = 0; i < n; ++i) label[order[i]] = i;
      Code code = 0;
      for (auto [u, v] : g.edges) code |= Code{1} << pair_index(label[u], label[v]);
      best = std::min(best, code);
      return;
    }
    auto [b, e] = classes[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

Raw decode(int n, Code code) {
  Raw r{n, {}};
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (code >> pair_index(u, v) & 1) r.edges.emplace_back(u, v);
  return r;
}

std::map<int, std::vector<Code>>& cache() {
  static std::map<int, std::vector<Code>> c;
  return c;
}

// All graphs (connected or not) on n vertices, as canonical codes.
const std::vector<Code>& all_graphs(int n) {
  auto& c = cache();
  if (auto it = c.find(n); it != c.end()) return it->second;
  std::set<Code> seen;
  if (n == 1) {
    seen.insert(0);
  } else {
    for (Code base : all_graphs(n - 1)) {
      Raw g = decode(n - 1, base);
      g.n = n;
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Raw h = g;
        for (int u = 0; u < n - 1; ++u)
          if (mask >> u & 1) h.edges.emplace_back(u, n - 1);
        seen.insert(canonical(h));
      }
    }
  }
  return c[n] = std::vector<Code>(seen.begin(), seen.end());
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Code code : all_graphs(n)) {
    Raw r = decode(n, code);
    if (edges_connected(n, r.edges)) out.emplace_back(n, r.edges);
  }
  return out;
}

std::vector<Graph> connected_pool(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = all_connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Graph> random_connected_graphs(int count, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    // Random spanning tree first, then extra edges at a per-graph density.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<Edge> edges;
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      int u = perm[i], v = perm[pick(rng)];
      edges.emplace(std::min(u, v), std::max(u, v));
    }
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace(u, v);
    out.emplace_back(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
  return out;
}

}  // namespace leafsearch::testing
