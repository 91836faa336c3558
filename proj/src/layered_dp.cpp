#include "leafsearch/layered_dp.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "leafsearch/error.hpp"
#include "leafsearch/search.hpp"

namespace leafsearch::layered {

const char* to_string(Objective o) { return o == Objective::Min ? "min" : "max"; }

namespace {

constexpr int kUnreached = std::numeric_limits<int>::min();

// Same preference as the search engine: smaller position at the first
// difference wins, a proper prefix loses.
int compare_labels(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? 1 : -1;
}

// sigma_pos[v] is v's index in the previous layer's ordering, -1 elsewhere.
bool transition_ok(const Graph& g, const LayerPartition& lp, int i, const std::vector<int>& sigma_pos,
                   int sigma_len, const std::vector<Vertex>& tau, Paradigm paradigm) {
  if (paradigm == Paradigm::BFS) {
    int last = -1;
    for (Vertex v : tau) {
      int f = std::numeric_limits<int>::max();
      for (Vertex w : g.neighbors(v))
        if (lp.layer_of[w] == i - 1) f = std::min(f, sigma_pos[w]);
      if (f < last) return false;
      last = f;
    }
    return true;
  }
  const int b = static_cast<int>(tau.size());
  std::vector<std::vector<int>> label(b);
  std::vector<int> slot(g.n(), -1);
  for (int j = 0; j < b; ++j) {
    slot[tau[j]] = j;
    for (Vertex w : g.neighbors(tau[j]))
      if (lp.layer_of[w] == i - 1) label[j].push_back(sigma_pos[w]);
    std::sort(label[j].begin(), label[j].end());
  }
  for (int j = 0; j < b; ++j) {
    for (int m = j + 1; m < b; ++m)
      if (compare_labels(label[m], label[j]) > 0) return false;
    for (Vertex w : g.neighbors(tau[j]))
      if (slot[w] > j) label[slot[w]].push_back(sigma_len + j);
  }
  return true;
}

void check_layered(const Graph& g, const LayerPartition& lp) {
  for (auto [u, v] : g.edges()) {
    if (std::abs(lp.layer_of[u] - lp.layer_of[v]) > 1) {
      throw Error(ErrorKind::AssumptionViolated,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a layer");
    }
  }
}

std::vector<std::vector<Vertex>> layer_orderings(const std::vector<Vertex>& layer, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t f = 2; f <= layer.size(); ++f) {
    count *= f;
    if (count > cap) {
      throw Error(ErrorKind::BudgetExceeded, "layer of size " + std::to_string(layer.size()) +
                                                 " exceeds the ordering cap " + std::to_string(cap));
    }
  }
  std::vector<std::vector<Vertex>> out;
  out.reserve(count);
  std::vector<Vertex> p = layer;
  std::sort(p.begin(), p.end());
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct RootOutcome {
  int value = kUnreached;
  std::vector<Vertex> order;
};

// Optimal leaf count from one root; in min mode entries above `bound` are
// dropped. Returns kUnreached if nothing survives.
RootOutcome run_root(const Graph& g, const LayerPartition& lp, Paradigm paradigm, Objective objective,
                     int bound, std::size_t cap) {
  check_layered(g, lp);
  const bool minimise = objective == Objective::Min;
  const int layers = static_cast<int>(lp.layers.size());
  std::vector<std::vector<std::vector<Vertex>>> orders(layers);
  std::vector<std::vector<int>> value(layers), back(layers);
  orders[0] = {{lp.root}};
  value[0] = {0};
  back[0] = {-1};
  std::vector<int> sigma_pos(g.n(), -1);
  for (int i = 1; i < layers; ++i) {
    orders[i] = layer_orderings(lp.layers[i], cap);
    const auto& cur = orders[i];
    const bool last = i == layers - 1;
    std::vector<int> leaves(cur.size());
    for (std::size_t t = 0; t < cur.size(); ++t)
      leaves[t] = last ? static_cast<int>(cur[t].size()) : layer_leaf_count(g, lp, i, cur[t]);
    value[i].assign(cur.size(), kUnreached);
    back[i].assign(cur.size(), -1);
    const auto& prev = orders[i - 1];
    for (std::size_t s = 0; s < prev.size(); ++s) {
      if (value[i - 1][s] == kUnreached) continue;
      for (std::size_t j = 0; j < prev[s].size(); ++j) sigma_pos[prev[s][j]] = static_cast<int>(j);
      for (std::size_t t = 0; t < cur.size(); ++t) {
        const int cand = value[i - 1][s] + leaves[t];
        int& slot = value[i][t];
        // Predecessors arrive in lexicographic order; only strict gains replace.
        const bool better = slot == kUnreached || (minimise ? cand < slot : cand > slot);
        if (!better) continue;
        if (minimise && cand > bound) continue;
        if (!transition_ok(g, lp, i, sigma_pos, static_cast<int>(prev[s].size()), cur[t], paradigm)) continue;
        slot = cand;
        back[i][t] = static_cast<int>(s);
      }
      for (Vertex v : prev[s]) sigma_pos[v] = -1;
    }
    if (std::all_of(value[i].begin(), value[i].end(), [](int v) { return v == kUnreached; })) return {};
  }
  int best = -1;
  for (std::size_t t = 0; t < value[layers - 1].size(); ++t) {
    const int v = value[layers - 1][t];
    if (v == kUnreached) continue;
    if (best < 0 || (minimise ? v < value[layers - 1][best] : v > value[layers - 1][best])) best = static_cast<int>(t);
  }
  RootOutcome out;
  out.value = value[layers - 1][best];
  std::vector<std::vector<Vertex>> chain(layers);
  for (int i = layers - 1, t = best; i >= 0; t = back[i][t], --i) chain[i] = orders[i][t];
  for (const auto& c : chain) out.order.insert(out.order.end(), c.begin(), c.end());
  return out;
}

Ordering plain_from_root(const Graph& g, Paradigm paradigm, Vertex root) {
  std::vector<Vertex> rho{root};
  for (int v = 0; v < g.n(); ++v)
    if (v != root) rho.push_back(v);
  return run_plus(g, paradigm, Ordering(rho));
}

void check_args(const Graph& g, Paradigm paradigm) {
  if (paradigm == Paradigm::GS) throw Error(ErrorKind::Unsupported, "the layered program handles BFS and LBFS only");
  if (g.n() < 2) throw Error(ErrorKind::BadParameter, "the layered program needs at least two vertices");
}

Result finish(const Graph& g, Paradigm paradigm, RootOutcome&& best) {
  Result r;
  r.yes = true;
  r.witness = Ordering(std::move(best.order));
  r.leaves = ftree_from_ordering(g, *r.witness).leaf_count();
  if (r.leaves != best.value || !validate_ordering(g, *r.witness, paradigm))
    throw Error(ErrorKind::AssumptionViolated, "layered witness does not reproduce its table value");
  return r;
}

// Runs body(root) for every root, in parallel when asked. body returns true
// to claim the root; roots above the smallest claimed one are skipped.
template <class Body>
int first_claimed_root(int n, int threads, Body body) {
  std::atomic<int> claimed{n};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r; (r = next.fetch_add(1)) < n;) {
      if (r > claimed.load()) continue;
      if (body(r)) {
        int cur = claimed.load();
        while (r < cur && !claimed.compare_exchange_weak(cur, r)) {
        }
      }
    }
  };
  threads = std::clamp(threads, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return claimed.load();
}

}  // namespace

bool layer_transition_valid(const Graph& g, const LayerPartition& layers, int i,
                            const std::vector<Vertex>& sigma_prev, const std::vector<Vertex>& tau,
                            Paradigm paradigm) {
  std::vector<int> sigma_pos(g.n(), -1);
  for (std::size_t j = 0; j < sigma_prev.size(); ++j) sigma_pos[sigma_prev[j]] = static_cast<int>(j);
  return transition_ok(g, layers, i, sigma_pos, static_cast<int>(sigma_prev.size()), tau, paradigm);
}

int layer_leaf_count(const Graph& g, const LayerPartition& layers, int i, const std::vector<Vertex>& tau) {
  std::vector<int> rank(g.n(), -1);
  for (std::size_t j = 0; j < tau.size(); ++j) rank[tau[j]] = static_cast<int>(j);
  std::vector<bool> has_child(tau.size(), false);
  if (i + 1 < static_cast<int>(layers.layers.size())) {
    for (Vertex w : layers.layers[i + 1]) {
      int p = -1;
      for (Vertex u : g.neighbors(w))
        if (rank[u] >= 0 && (p < 0 || rank[u] < p)) p = rank[u];
      if (p >= 0) has_child[p] = true;
    }
  }
  return static_cast<int>(std::count(has_child.begin(), has_child.end(), false));
}

Result solve(const Graph& g, Paradigm paradigm, Objective objective, int k, const Config& config) {
  check_args(g, paradigm);
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  const int n = g.n();
  std::vector<RootOutcome> outcome(n);
  const int root = first_claimed_root(n, config.threads, [&](int r) {
    LayerPartition lp = bfs_layers(g, r);
    const int widest = lp.max_layer_size();
    if (objective == Objective::Min) {
      if (widest > k) return false;
      outcome[r] = run_root(g, lp, paradigm, objective, k, config.max_orderings);
      return outcome[r].value != kUnreached;
    }
    if (widest >= k) {
      Ordering o = plain_from_root(g, paradigm, r);
      outcome[r] = {ftree_from_ordering(g, o).leaf_count(), o.seq()};
      return true;
    }
    outcome[r] = run_root(g, lp, paradigm, objective, n, config.max_orderings);
    return outcome[r].value >= k;
  });
  if (root == n) return {};
  return finish(g, paradigm, std::move(outcome[root]));
}

Result optimum(const Graph& g, Paradigm paradigm, Objective objective, const Config& config) {
  check_args(g, paradigm);
  const int n = g.n();
  std::vector<RootOutcome> outcome(n);
  first_claimed_root(n, config.threads, [&](int r) {
    outcome[r] = run_root(g, bfs_layers(g, r), paradigm, objective, n, config.max_orderings);
    return false;
  });
  int best = 0;
  for (int r = 1; r < n; ++r) {
    const bool better = objective == Objective::Min ? outcome[r].value < outcome[best].value
                                                    : outcome[r].value > outcome[best].value;
    if (better) best = r;
  }
  return finish(g, paradigm, std::move(outcome[best]));
}

}  // namespace leafsearch::layered
