#include "leafsearch/internal_xp.hpp"

#include <bit>
#include <functional>
#include <unordered_set>

#include "leafsearch/error.hpp"
#include "leafsearch/forcing.hpp"
#include "leafsearch/gs_solvers.hpp"
#include "leafsearch/search.hpp"

namespace leafsearch::xp {

namespace {

int internal_of(const Graph& g, const Ordering& o) { return ftree_from_ordering(g, o).internal_count(); }

Result accept(const Graph& g, Ordering o) {
  Result r;
  r.yes = true;
  r.internal = internal_of(g, o);
  r.witness = std::move(o);
  return r;
}

void require_k(int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
}

}  // namespace

Result bfs_internal_xp(const Graph& g, int k, Objective objective) {
  require_k(k);
  const int n = g.n();
  std::vector<Vertex> prefix;
  std::vector<bool> used(n, false);
  std::optional<Ordering> found;
  std::function<bool()> extend = [&]() -> bool {
    const int s = static_cast<int>(prefix.size());
    if (s > 0 && (objective == Objective::Min || s == k)) {
      std::vector<Vertex> rho = prefix;
      for (Vertex v = 0; v < n; ++v)
        if (!used[v]) rho.push_back(v);
      Ordering o = run_plus(g, Paradigm::BFS, Ordering(rho));
      const int internal = internal_of(g, o);
      if (objective == Objective::Min ? internal <= k : internal >= k) {
        found = std::move(o);
        return true;
      }
    }
    if (s == k) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      prefix.push_back(v);
      const bool hit = extend();
      prefix.pop_back();
      used[v] = false;
      if (hit) return true;
    }
    return false;
  };
  if (!extend()) return {};
  return accept(g, std::move(*found));
}

Result gs_min_internal_xp(const Graph& g, int k) {
  require_k(k);
  if (g.n() == 1) return accept(g, Ordering({0}));
  auto cds = gs::cds_at_most(g, k);
  if (!cds) return {};
  Result r = accept(g, gs::ordering_from_cds(g, *cds));
  if (r.internal > k) throw Error(ErrorKind::AssumptionViolated, "CDS ordering has too many internal vertices");
  return r;
}

Result gs_max_internal_xp(const Graph& g, int k) {
  require_k(k);
  if (g.n() == 1) return k == 1 ? accept(g, Ordering({0})) : Result{};
  if (!g.has_masks()) throw Error(ErrorKind::BadParameter, "sequence search supports at most 64 vertices");
  const int n = g.n();
  ZSequence z;
  std::unordered_set<VertexMask> dead;
  std::function<bool(VertexMask, VertexMask)> grow = [&](VertexMask chosen, VertexMask covered) -> bool {
    if (z.length() == k) return true;
    if (dead.count(chosen)) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen & bit(v)) continue;
      if (chosen && !(g.neighbor_mask(v) & chosen)) continue;
      const VertexMask fresh = g.neighbor_mask(v) & ~covered;
      if (!fresh) continue;
      z.seq.push_back(v);
      z.witness.push_back(std::countr_zero(fresh));
      if (grow(chosen | bit(v), covered | g.neighbor_mask(v) | bit(v))) return true;
      z.seq.pop_back();
      z.witness.pop_back();
    }
    dead.insert(chosen);
    return false;
  };
  if (!grow(0, 0)) return {};
  Result r = accept(g, gs::zsequence_to_ordering(g, z));
  if (r.internal < k) throw Error(ErrorKind::AssumptionViolated, "sequence ordering has too few internal vertices");
  return r;
}

std::string CircuitInstance::var_name(int var) const {
  if (var < k * n) return "x(" + std::to_string(var % n) + "," + std::to_string(var / n + 1) + ")";
  if (var < 2 * k * n) {
    var -= k * n;
    return "y(" + std::to_string(var % n) + "," + std::to_string(var / n + 1) + ")";
  }
  var -= 2 * k * n;
  int i = 2;
  while (var >= i - 1) var -= i++ - 1;
  return "z(" + std::to_string(var + 1) + "," + std::to_string(i) + ")";
}

std::size_t CircuitInstance::clause_count() const {
  std::size_t c = 0;
  for (const auto& grp : groups) c += grp.clauses.size();
  return c;
}

bool CircuitInstance::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& grp : groups)
    for (const auto& clause : grp.clauses) {
      bool sat = false;
      for (const Literal& l : clause) sat = sat || (assignment[l.var] != l.negated);
      if (!sat) return false;
    }
  return true;
}

CircuitInstance build_wcs_circuit(const Graph& g, int k) {
  require_k(k);
  const int n = g.n();
  CircuitInstance c;
  c.n = n;
  c.k = k;
  c.num_vars = 2 * k * n + k * (k - 1) / 2;
  c.target_weight = 3 * k - 1;
  auto no = [](int var) { return Literal{var, true}; };
  ClauseGroup X{"X", {}}, Y{"Y", {}}, Z{"Z", {}}, Xp{"X'", {}}, A{"A", {}}, B{"B", {}}, C{"C", {}};
  for (int i = 1; i <= k; ++i)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) {
        X.clauses.push_back({no(c.x(v, i)), no(c.x(w, i))});
        Y.clauses.push_back({no(c.y(v, i)), no(c.y(w, i))});
      }
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j < i; ++j)
      for (int jj = j + 1; jj < i; ++jj) Z.clauses.push_back({no(c.z(j, i)), no(c.z(jj, i))});
  for (Vertex v = 0; v < n; ++v)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) Xp.clauses.push_back({no(c.x(v, i)), no(c.x(v, j))});
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j < i; ++j)
      for (Vertex v = 0; v < n; ++v) {
        A.clauses.push_back({no(c.y(v, i)), no(c.x(v, j))});
        for (Vertex w : g.neighbors(v)) A.clauses.push_back({no(c.y(w, i)), no(c.x(v, j))});
      }
  for (int i = 1; i <= k; ++i)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        if (!g.adjacent(v, w)) B.clauses.push_back({no(c.y(w, i)), no(c.x(v, i))});
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j < i; ++j)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w)
          if (!g.adjacent(v, w)) C.clauses.push_back({no(c.z(j, i)), no(c.x(v, j)), no(c.x(w, i))});
  c.groups = {X, Y, Z, Xp, A, B, C};
  return c;
}

bool eval_wcs(const CircuitInstance& c, std::vector<bool>* assignment) {
  std::vector<std::vector<const std::vector<Literal>*>> by_var(c.num_vars);
  for (const auto& grp : c.groups)
    for (const auto& clause : grp.clauses)
      for (const Literal& l : clause) by_var[l.var].push_back(&clause);
  std::vector<bool> value(c.num_vars, false);
  // A clause of negated literals is lost for good once all its variables are true.
  auto broken = [&](int var) {
    for (const auto* clause : by_var[var]) {
      bool all_neg_true = true;
      for (const Literal& l : *clause) all_neg_true = all_neg_true && l.negated && value[l.var];
      if (all_neg_true) return true;
    }
    return false;
  };
  // Slot order: x(.,1), y(.,1), x(.,2), z(.,2), y(.,2), ...
  std::vector<std::vector<int>> slots;
  for (int i = 1; i <= c.k; ++i) {
    std::vector<int> xs, ys, zs;
    for (Vertex v = 0; v < c.n; ++v) {
      xs.push_back(c.x(v, i));
      ys.push_back(c.y(v, i));
    }
    for (int j = 1; j < i; ++j) zs.push_back(c.z(j, i));
    slots.push_back(xs);
    if (!zs.empty()) slots.push_back(zs);
    slots.push_back(ys);
  }
  std::function<bool(std::size_t)> pick = [&](std::size_t s) -> bool {
    if (s == slots.size()) return c.satisfied_by(value);
    for (int var : slots[s]) {
      value[var] = true;
      if (!broken(var) && pick(s + 1)) return true;
      value[var] = false;
    }
    return false;
  };
  const bool ok = pick(0);
  if (ok && assignment) *assignment = value;
  return ok;
}

}  // namespace leafsearch::xp
