#include "leafsearch/gs_solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>

#include "leafsearch/error.hpp"
#include "leafsearch/search.hpp"

namespace leafsearch::gs {

namespace {

void require_gs(const Graph& g, const Ordering& order) {
  if (order.size() != g.n() || !validate_ordering(g, order, Paradigm::GS))
    throw Error(ErrorKind::NotGSOrdering, "ordering is not a GS ordering of the graph");
}

VertexMask cut_vertices(const Graph& g) {
  const int n = g.n();
  VertexMask cuts = 0;
  if (n < 3) return cuts;
  std::vector<int> disc(n, -1), low(n, 0);
  int time = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = time++;
    int kids = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++kids;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cuts |= bit(v);
    }
    if (parent < 0 && kids > 1) cuts |= bit(v);
  };
  dfs(0, -1);
  return cuts;
}

class CdsSearch {
 public:
  explicit CdsSearch(const Graph& g) : g_(g), all_(full_mask(g.n())), closed_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) closed_[v] = g.neighbor_mask(v) | bit(v);
  }

  std::optional<VertexMask> run(VertexMask start, int limit) {
    limit_ = limit;
    seen_.clear();
    if (dfs(start)) return found_;
    return std::nullopt;
  }

 private:
  VertexMask component_of_lowest(VertexMask k) const {
    VertexMask comp = k & (~k + 1), frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g_.neighbor_mask(std::countr_zero(m));
      next &= k & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  bool dfs(VertexMask k) {
    if (!seen_.insert(k).second) return false;
    const int size = std::popcount(k);
    VertexMask dominated = 0;
    for (VertexMask m = k; m; m &= m - 1) dominated |= closed_[std::countr_zero(m)];
    VertexMask branch;
    if (dominated == all_ && k) {
      const VertexMask comp = component_of_lowest(k);
      if (comp == k) {
        found_ = k;
        return true;
      }
      // Some vertex next to this component but outside k must join.
      branch = 0;
      for (VertexMask m = comp; m; m &= m - 1) branch |= g_.neighbor_mask(std::countr_zero(m));
      branch &= ~k;
    } else {
      branch = closed_[std::countr_zero(all_ & ~dominated)] & ~k;
    }
    if (size >= limit_) return false;
    for (VertexMask m = branch; m; m &= m - 1)
      if (dfs(k | bit(std::countr_zero(m)))) return true;
    return false;
  }

  const Graph& g_;
  VertexMask all_;
  std::vector<VertexMask> closed_;
  int limit_ = 0;
  VertexMask found_ = 0;
  std::unordered_set<VertexMask> seen_;
};

}  // namespace

std::optional<std::vector<Vertex>> cds_at_most(const Graph& g, int limit) {
  if (g.n() < 2) throw Error(ErrorKind::BadParameter, "connected dominating sets need n >= 2");
  if (!g.has_masks()) throw Error(ErrorKind::BadParameter, "CDS search supports at most 64 vertices");
  const VertexMask forced = cut_vertices(g);
  CdsSearch search(g);
  for (int size = std::max(1, std::popcount(forced)); size <= limit; ++size)
    if (auto k = search.run(forced, size)) return from_mask(*k);
  return std::nullopt;
}

std::vector<Vertex> min_cds(const Graph& g) { return *cds_at_most(g, g.n()); }

Ordering ordering_from_cds(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<bool> in(g.n(), false), queued(g.n(), false);
  for (Vertex v : set) in[v] = true;
  std::vector<Vertex> rho;
  if (!set.empty()) {
    std::queue<Vertex> q;
    const Vertex start = *std::min_element(set.begin(), set.end());
    q.push(start);
    queued[start] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      rho.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (in[w] && !queued[w]) {
          queued[w] = true;
          q.push(w);
        }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!queued[v]) rho.push_back(v);
  return run_plus(g, Paradigm::GS, Ordering(rho));
}

Result max_leaf_gs(const Graph& g, int k) {
  if (g.n() < 2) throw Error(ErrorKind::BadParameter, "max_leaf_gs needs n >= 2");
  Result r;
  auto cds = cds_at_most(g, g.n() - k);
  if (!cds) return r;
  Ordering order = ordering_from_cds(g, *cds);
  r.leaves = ftree_from_ordering(g, order).leaf_count();
  if (r.leaves < k) throw Error(ErrorKind::AssumptionViolated, "CDS ordering has too few leaves");
  r.yes = true;
  r.witness = std::move(order);
  r.optimum = static_cast<int>(cds->size());
  return r;
}

Ordering zsequence_to_ordering(const Graph& g, const ZSequence& z) {
  if (!is_valid_zsequence(g, z)) throw Error(ErrorKind::InvalidSequence, "not a generic Z-sequence");
  std::vector<bool> used(g.n(), false);
  std::vector<Vertex> rho = z.seq;
  for (Vertex v : z.seq) used[v] = true;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!used[v]) rho.push_back(v);
  Ordering order = run_plus(g, Paradigm::GS, Ordering(rho));
  if (!std::equal(z.seq.begin(), z.seq.end(), order.seq().begin()))
    throw Error(ErrorKind::AssumptionViolated, "GS extension does not start with the sequence");
  FTree t = ftree_from_ordering(g, order);
  for (Vertex v : z.seq)
    if (t.leaf[v]) throw Error(ErrorKind::AssumptionViolated, "sequence member became a leaf");
  return order;
}

std::pair<std::vector<Vertex>, RuleSequence> ftree_to_zstar(const Graph& g, const Ordering& order) {
  require_gs(g, order);
  RuleSequence rs;
  rs.complete = true;
  if (g.n() == 1) {
    rs.initial = {0};
    return {rs.initial, rs};
  }
  FTree t = ftree_from_ordering(g, order);
  rs.initial = t.leaves();
  std::sort(rs.initial.begin(), rs.initial.end());
  for (int i = order.size() - 1; i >= 0; --i) {
    const Vertex v = order[i];
    if (!t.leaf[v]) rs.rules.emplace_back(t.children[v].front(), v);
  }
  if (!replay_valid(g, rs)) throw Error(ErrorKind::AssumptionViolated, "leaf set rules do not replay");
  return {rs.initial, rs};
}

Result min_leaf_gs(const Graph& g, int k, const MinLeafOptions& options) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  Result r;
  if (g.n() == 1) {
    r.yes = true;
    r.witness = Ordering({0});
    r.optimum = 0;
    return r;
  }
  TreeDecomposition td = options.td ? *options.td : heuristic_td(g);
  if (options.td) validate_decomposition(g, td);
  if (td.width() > k) {
    if (g.n() > options.exact_td_limit)
      throw Error(ErrorKind::DecompositionUnavailable,
                  "width " + std::to_string(td.width()) + " exceeds k and the graph is too large for an exact check");
    auto exact = exact_td(g, options.exact_td_limit);
    if (!exact) throw Error(ErrorKind::DecompositionUnavailable, "exact treewidth check failed");
    if (exact->width() > k) return r;
    td = *exact;
  }
  auto z = ztw::min_zstar_tw(g, td, {}, options.dp);
  r.optimum = z.size;
  if (z.size > k) return r;
  Ordering order = zsequence_to_ordering(g, zsequence_from_rules(g, z.rules));
  r.leaves = ftree_from_ordering(g, order).leaf_count();
  if (r.leaves > z.size) throw Error(ErrorKind::AssumptionViolated, "extended ordering has too many leaves");
  r.yes = true;
  r.witness = std::move(order);
  return r;
}

int PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

TreeDecomposition PathDecomposition::as_tree() const { return from_path_bags(bags); }

Ordering leaf_suffix_normal_form(const Graph& g, const Ordering& order) {
  FTree t = ftree_from_ordering(g, order);
  std::vector<Vertex> seq;
  for (Vertex v : order.seq())
    if (!t.leaf[v]) seq.push_back(v);
  for (Vertex v : order.seq())
    if (t.leaf[v]) seq.push_back(v);
  Ordering out(seq);
  if (ftree_from_ordering(g, out).parent != t.parent || !validate_ordering(g, out, Paradigm::GS))
    throw Error(ErrorKind::AssumptionViolated, "leaf suffix form changed the F-tree");
  return out;
}

PathDecomposition pathdecomp_from_gs(const Graph& g, const Ordering& order) {
  require_gs(g, order);
  const Ordering normal = leaf_suffix_normal_form(g, order);
  FTree t = ftree_from_ordering(g, normal);
  const int internal = t.internal_count();
  std::vector<bool> in(g.n(), false);
  auto snapshot = [&] {
    std::vector<Vertex> bag;
    for (Vertex v = 0; v < g.n(); ++v)
      if (in[v]) bag.push_back(v);
    return bag;
  };
  PathDecomposition pd;
  for (Vertex v : t.leaves()) in[v] = true;
  if (t.leaf_count() > 0) pd.bags.push_back(snapshot());
  for (int i = internal - 1; i >= 0; --i) {
    const Vertex v = normal[i];
    in[v] = true;
    pd.bags.push_back(snapshot());
    for (Vertex c : t.children[v]) in[c] = false;
    pd.bags.push_back(snapshot());
  }
  validate_decomposition(g, pd.as_tree());
  if (pd.width() > t.leaf_count())
    throw Error(ErrorKind::AssumptionViolated, "path decomposition is wider than the leaf count");
  return pd;
}

}  // namespace leafsearch::gs
