#include "leafsearch/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "leafsearch/error.hpp"

namespace leafsearch {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidDecomposition, msg); }

std::vector<std::vector<int>> tree_adjacency(int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

int NiceTD::width() const {
  int w = 0;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()));
  return w - 1;
}

const char* to_string(NodeType t) {
  switch (t) {
    case NodeType::Leaf: return "leaf";
    case NodeType::Introduce: return "introduce";
    case NodeType::Forget: return "forget";
    case NodeType::Rule: return "rule";
    case NodeType::Join: return "join";
  }
  return "?";
}

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int nodes = static_cast<int>(td.bags.size());
  const int n = g.n();
  if (nodes == 0) invalid("no bags");
  if (static_cast<int>(td.edges.size()) != nodes - 1) invalid("tree must have exactly bags-1 edges");
  for (auto [a, b] : td.edges)
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) invalid("tree edge out of range");
  auto adj = tree_adjacency(nodes, td.edges);
  {
    std::vector<bool> seen(nodes, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != nodes) invalid("tree is not connected");
  }
  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < nodes; ++i) {
    std::set<Vertex> uniq;
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= n) invalid("bag " + std::to_string(i) + " names a vertex out of range");
      if (!uniq.insert(v).second) invalid("bag " + std::to_string(i) + " repeats a vertex");
      holding[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty()) invalid("vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holding[u])
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) {
        covered = true;
        break;
      }
    if (!covered) invalid("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> in(nodes, false), seen(nodes, false);
    for (int i : holding[v]) in[i] = true;
    std::vector<int> stack{holding[v][0]};
    seen[holding[v][0]] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (in[y] && !seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != static_cast<int>(holding[v].size()))
      invalid("bags holding vertex " + std::to_string(v) + " are not connected");
  }
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::set<Vertex>> fill(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) fill[v].insert(w);
  TreeDecomposition td;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : fill[v])
      if (rank[w] > i) later.push_back(w);
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) fill[a].insert(b);
    std::vector<Vertex> bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = bag;
  }
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    int parent = -1;
    for (Vertex w : td.bags[i])
      if (w != v && (parent < 0 || rank[w] < parent)) parent = rank[w];
    if (parent >= 0) {
      td.edges.emplace_back(parent, i);
    } else if (i + 1 < n) {
      td.edges.emplace_back(i, n - 1);  // disconnected pieces hang off the last bag
    }
  }
  return td;
}

TreeDecomposition min_fill_td(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v].insert(w);
  std::vector<bool> gone(n, false);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = std::numeric_limits<long>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (fill < best_fill) {
        best_fill = fill;
        best = v;
      }
    }
    gone[best] = true;
    order.push_back(best);
    for (Vertex a : adj[best])
      for (Vertex b : adj[best])
        if (a != b) adj[a].insert(b);
    for (Vertex a : adj[best]) adj[a].erase(best);
    adj[best].clear();
  }
  return decomposition_from_elimination(g, order);
}

std::optional<TreeDecomposition> exact_td(const Graph& g, int max_n) {
  const int n = g.n();
  if (n > max_n || n > 24) return std::nullopt;
  std::vector<std::uint32_t> nb(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nb[v] |= 1u << w;
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q = [&](std::uint32_t s, Vertex v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      out |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(out);
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(1u << v);
      const int cand = std::max<int>(tw[prev], q(prev, v));
      if (cand < best) {
        best = cand;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = last[s];
    s &= ~(1u << last[s]);
  }
  return decomposition_from_elimination(g, order);
}

TreeDecomposition heuristic_td(const Graph& g) {
  TreeDecomposition td = min_fill_td(g);
  if (g.n() <= 14 && td.width() > 1) {
    auto exact = exact_td(g, 14);
    if (exact && exact->width() < td.width()) return *exact;
  }
  return td;
}

TreeDecomposition from_path_bags(std::vector<std::vector<Vertex>> bags) {
  TreeDecomposition td;
  for (auto& b : bags) std::sort(b.begin(), b.end());
  td.bags = std::move(bags);
  for (int i = 1; i < static_cast<int>(td.bags.size()); ++i) td.edges.emplace_back(i - 1, i);
  return td;
}

NiceTD make_nice(const Graph& g, const TreeDecomposition& td) {
  validate_decomposition(g, td);
  NiceTD nice;
  auto add = [&](NodeType type, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    nice.nodes.push_back({type, v, std::move(bag), std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  // Walks node `from` (bag `cur`) to bag `target`: forgets first, then introduces.
  auto morph = [&](int from, std::vector<Vertex> cur, const std::vector<Vertex>& target) {
    for (Vertex v : std::vector<Vertex>(cur)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      from = add(NodeType::Rule, v, cur, {from});
      cur.erase(std::find(cur.begin(), cur.end(), v));
      from = add(NodeType::Forget, v, cur, {from});
    }
    for (Vertex v : target) {
      if (std::binary_search(cur.begin(), cur.end(), v)) continue;
      cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
      from = add(NodeType::Introduce, v, cur, {from});
    }
    return from;
  };
  auto adj = tree_adjacency(static_cast<int>(td.bags.size()), td.edges);
  std::vector<std::vector<Vertex>> bags = td.bags;
  for (auto& b : bags) std::sort(b.begin(), b.end());
  std::function<int(int, int)> build = [&](int x, int parent) {
    std::vector<int> parts;
    for (int y : adj[x]) {
      if (y == parent) continue;
      parts.push_back(morph(build(y, x), bags[y], bags[x]));
    }
    if (parts.empty()) parts.push_back(morph(add(NodeType::Leaf, -1, {}, {}), {}, bags[x]));
    int acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = add(NodeType::Join, -1, bags[x], {acc, parts[i]});
    return acc;
  };
  nice.root = morph(build(0, -1), bags[0], {});
  return nice;
}

void validate_nice(const Graph& g, const NiceTD& nice) {
  std::vector<int> forgotten(g.n(), 0);
  std::vector<int> parent(nice.nodes.size(), -1);
  for (int i = 0; i < static_cast<int>(nice.nodes.size()); ++i)
    for (int c : nice.nodes[i].children) parent[c] = i;
  if (!nice.nodes[nice.root].bag.empty()) invalid("root bag is not empty");
  for (int i = 0; i < static_cast<int>(nice.nodes.size()); ++i) {
    const auto& nd = nice.nodes[i];
    auto child_bag = [&](int k) -> const std::vector<Vertex>& { return nice.nodes[nd.children[k]].bag; };
    auto expect_children = [&](std::size_t k) {
      if (nd.children.size() != k) invalid(std::string(to_string(nd.type)) + " node has the wrong child count");
    };
    std::vector<Vertex> tmp;
    switch (nd.type) {
      case NodeType::Leaf:
        expect_children(0);
        if (!nd.bag.empty()) invalid("leaf bag is not empty");
        break;
      case NodeType::Introduce:
        expect_children(1);
        tmp = child_bag(0);
        tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), nd.vertex), nd.vertex);
        if (tmp != nd.bag || std::binary_search(child_bag(0).begin(), child_bag(0).end(), nd.vertex))
          invalid("introduce node does not add exactly its vertex");
        break;
      case NodeType::Forget:
        expect_children(1);
        tmp = nd.bag;
        tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), nd.vertex), nd.vertex);
        if (tmp != child_bag(0) || std::binary_search(nd.bag.begin(), nd.bag.end(), nd.vertex))
          invalid("forget node does not drop exactly its vertex");
        if (nice.nodes[nd.children[0]].type != NodeType::Rule || nice.nodes[nd.children[0]].vertex != nd.vertex)
          invalid("forget node without a matching rule child");
        ++forgotten[nd.vertex];
        break;
      case NodeType::Rule:
        expect_children(1);
        if (child_bag(0) != nd.bag) invalid("rule node changes the bag");
        if (parent[i] < 0 || nice.nodes[parent[i]].type != NodeType::Forget) invalid("rule node not below a forget node");
        break;
      case NodeType::Join:
        expect_children(2);
        if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) invalid("join children differ in bag");
        break;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (forgotten[v] != 1) invalid("vertex " + std::to_string(v) + " is not forgotten exactly once");
}

}  // namespace leafsearch
