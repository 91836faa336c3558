#include "leafsearch/gadgets.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "leafsearch/error.hpp"

namespace leafsearch::gadgets {

namespace {

Graph checked(int n, const std::vector<Edge>& edges, const char* what) {
  if (!edges_connected(n, edges)) throw Error(ErrorKind::AssumptionViolated, std::string(what) + " output is disconnected");
  return build_graph(n, edges);
}

void need(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

}  // namespace

ReductionOutput set_cover_to_split(int universe, const std::vector<std::vector<int>>& sets) {
  need(universe >= 1 && !sets.empty(), ErrorKind::AssumptionViolated, "empty universe or family");
  const int s = static_cast<int>(sets.size());
  std::vector<int> hits(universe, 0);
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    std::set<int> seen;
    for (int e : sets[i]) {
      need(e >= 0 && e < universe, ErrorKind::AssumptionViolated, "element out of range");
      if (!seen.insert(e).second) continue;
      ++hits[e];
      edges.emplace_back(i, s + e);
    }
  }
  for (int e = 0; e < universe; ++e) {
    need(hits[e] > 0, ErrorKind::AssumptionViolated, "element " + std::to_string(e) + " is in no set");
    need(hits[e] < s, ErrorKind::AssumptionViolated, "element " + std::to_string(e) + " is in every set");
  }
  ReductionOutput out{checked(s + universe, edges, "set cover"), {}, "cover of size <= l <=> F-tree with <= l internal vertices"};
  for (int i = 0; i < s; ++i) out.roles.push_back("set:" + std::to_string(i));
  for (int e = 0; e < universe; ++e) out.roles.push_back("element:" + std::to_string(e));
  return out;
}

ReductionOutput grundy_to_split(int nx, int ny, const std::vector<std::pair<int, int>>& edges) {
  need(nx >= 1 && ny >= 0, ErrorKind::AssumptionViolated, "X must be nonempty");
  std::vector<int> deg_x(nx, 0), deg_y(ny, 0);
  std::set<std::pair<int, int>> seen;
  // Layout: X, then r, then Y.
  const int r = nx;
  std::vector<Edge> out_edges;
  for (auto [x, y] : edges) {
    need(x >= 0 && x < nx && y >= 0 && y < ny, ErrorKind::AssumptionViolated, "edge endpoint outside its side");
    need(seen.insert({x, y}).second, ErrorKind::AssumptionViolated, "repeated edge");
    ++deg_x[x];
    ++deg_y[y];
    out_edges.emplace_back(x, nx + 1 + y);
  }
  for (int x = 0; x < nx; ++x) need(deg_x[x] > 0, ErrorKind::AssumptionViolated, "X vertex " + std::to_string(x) + " is isolated");
  for (int y = 0; y < ny; ++y) need(deg_y[y] > 0, ErrorKind::AssumptionViolated, "Y vertex " + std::to_string(y) + " is isolated");
  for (int a = 0; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) out_edges.emplace_back(a, b);
  ReductionOutput out{checked(nx + 1 + ny, out_edges, "grundy"), {},
                      "one-sided total dominating sequence of length k <=> F-tree with >= k+1 internal vertices"};
  for (int x = 0; x < nx; ++x) out.roles.push_back("x:" + std::to_string(x));
  out.roles.push_back("r");
  for (int y = 0; y < ny; ++y) out.roles.push_back("y:" + std::to_string(y));
  return out;
}

ReductionOutput sat3_to_weakly_chordal(const std::vector<Clause>& clauses, int k, int vars) {
  if (k < 3) throw Error(ErrorKind::BadParameter, "k must be at least 3");
  int used = 0;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    for (int i = 0; i < 3; ++i) {
      need(cl[i] != 0, ErrorKind::MalformedClause, "clause " + std::to_string(c + 1) + " has literal 0");
      used = std::max(used, std::abs(cl[i]));
      for (int j = 0; j < i; ++j)
        need(cl[i] != cl[j], ErrorKind::MalformedClause, "clause " + std::to_string(c + 1) + " repeats a literal");
    }
  }
  if (vars == 0) vars = used;
  need(used <= vars, ErrorKind::MalformedClause, "literal beyond the declared variable count");
  need(vars >= 1, ErrorKind::MalformedClause, "no variables");

  const int v = vars;
  const int l = static_cast<int>(clauses.size());
  // Layout: x_1..x_v, ~x_1..~x_v, clauses, b1, b2, r, q1_i, q2_i, pendants, path.
  auto lit = [&](int signed_var) { return signed_var > 0 ? signed_var - 1 : v + (-signed_var) - 1; };
  const int c0 = 2 * v, b1 = c0 + l, b2 = b1 + 1, r = b2 + 1, q0 = r + 1, p0 = q0 + 2 * l;
  const int path0 = p0 + 6;
  const int n = path0 + (k > 3 ? k - 2 : 0);
  std::vector<Edge> e;
  std::vector<std::string> roles(n);
  for (int i = 0; i < 2 * v; ++i) {
    for (int j = i + 1; j < 2 * v; ++j)
      if (j != i + v) e.emplace_back(i, j);
    roles[i] = "literal:" + std::string(i < v ? "" : "-") + std::to_string(i % v + 1);
  }
  for (int c = 0; c < l; ++c) {
    std::set<int> in;
    for (int x : clauses[c]) in.insert(lit(x));
    for (int i = 0; i < 2 * v; ++i)
      if (!in.count(i)) e.emplace_back(i, c0 + c);
    roles[c0 + c] = "clause:" + std::to_string(c + 1);
  }
  for (int i = 0; i < c0 + l; ++i) {
    e.emplace_back(i, b1);
    e.emplace_back(i, b2);
    e.emplace_back(i, r);
  }
  e.emplace_back(b1, r);
  e.emplace_back(b2, r);
  roles[b1] = "b1";
  roles[b2] = "b2";
  roles[r] = "r";
  for (int c = 0; c < l; ++c) {
    e.emplace_back(q0 + 2 * c, c0 + c);
    e.emplace_back(q0 + 2 * c, b1);
    e.emplace_back(q0 + 2 * c + 1, c0 + c);
    e.emplace_back(q0 + 2 * c + 1, b2);
    roles[q0 + 2 * c] = "q1:" + std::to_string(c + 1);
    roles[q0 + 2 * c + 1] = "q2:" + std::to_string(c + 1);
  }
  const int hubs[3] = {r, b1, b2};
  for (int h = 0; h < 3; ++h) {
    for (int j = 0; j < 2; ++j) {
      e.emplace_back(hubs[h], p0 + 2 * h + j);
      roles[p0 + 2 * h + j] = "pendant:" + roles[hubs[h]];
    }
  }
  for (int i = path0; i < n; ++i) {
    e.emplace_back(i == path0 ? r : i - 1, i);
    roles[i] = "path:" + std::to_string(i - path0 + 1);
  }
  return {checked(n, e, "3-SAT"), roles,
          "satisfiable <=> LBFS F-tree with exactly " + std::to_string(k) + " internal vertices"};
}

Graph path_of_triangles(int t) {
  if (t < 1) throw Error(ErrorKind::BadParameter, "path_of_triangles needs t >= 1");
  // Vertex 2i is the shared spine vertex a_i, 2i+1 the apex b_i.
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i) {
    e.emplace_back(2 * i, 2 * i + 1);
    e.emplace_back(2 * i, 2 * i + 2);
    e.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return build_graph(2 * t + 1, e);
}

Graph star_of_ladders(int k) {
  if (k < 2) throw Error(ErrorKind::BadParameter, "star_of_ladders needs k >= 2");
  // Ladder j, rung i: top 1 + 2k*j + 2i, bottom one more.
  std::vector<Edge> e;
  for (int j = 0; j < k; ++j) {
    const int base = 1 + 2 * k * j;
    e.emplace_back(0, base);
    e.emplace_back(0, base + 1);
    for (int i = 0; i < k; ++i) {
      e.emplace_back(base + 2 * i, base + 2 * i + 1);
      if (i + 1 < k) {
        e.emplace_back(base + 2 * i, base + 2 * i + 2);
        e.emplace_back(base + 2 * i + 1, base + 2 * i + 3);
      }
    }
  }
  return build_graph(2 * k * k + 1, e);
}

Graph path(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph complete(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "complete needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph star(int leaves) {
  if (leaves < 1) throw Error(ErrorKind::BadParameter, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

Graph gen_family(const std::string& name, int param) {
  if (name == "path_of_triangles") return path_of_triangles(param);
  if (name == "star_of_ladders") return star_of_ladders(param);
  if (name == "path") return path(param);
  if (name == "cycle") return cycle(param);
  if (name == "complete") return complete(param);
  if (name == "star") return star(param);
  throw Error(ErrorKind::BadParameter, "unknown family '" + name + "'");
}

int min_set_cover(int universe, const std::vector<std::vector<int>>& sets) {
  const int s = static_cast<int>(sets.size());
  std::vector<std::uint32_t> masks;
  for (const auto& set : sets) {
    std::uint32_t m = 0;
    for (int e : set) m |= 1u << e;
    masks.push_back(m);
  }
  const std::uint32_t all = (1u << universe) - 1;
  int best = -1;
  for (std::uint32_t pick = 0; pick < (1u << s); ++pick) {
    std::uint32_t cov = 0;
    for (int i = 0; i < s; ++i)
      if (pick >> i & 1) cov |= masks[i];
    const int size = std::popcount(pick);
    if (cov == all && (best < 0 || size < best)) best = size;
  }
  return best;
}

int longest_one_sided_total_sequence(int nx, int ny, const std::vector<std::pair<int, int>>& edges) {
  (void)ny;
  std::vector<std::uint32_t> nbr(nx, 0);
  for (auto [x, y] : edges) nbr[x] |= 1u << y;
  std::function<int(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t used, std::uint32_t dominated) {
    int best = 0;
    for (int x = 0; x < nx; ++x) {
      if (used >> x & 1 || (nbr[x] & ~dominated) == 0) continue;
      best = std::max(best, 1 + rec(used | 1u << x, dominated | nbr[x]));
    }
    return best;
  };
  return rec(0, 0);
}

bool satisfiable(const std::vector<Clause>& clauses, int vars) {
  for (std::uint32_t a = 0; a < (1u << vars); ++a) {
    bool ok = true;
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int x : cl) sat |= ((a >> (std::abs(x) - 1)) & 1) == (x > 0 ? 1u : 0u);
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_split(const Graph& g) {
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  int m = 0;
  for (int i = 0; i < g.n(); ++i)
    if (d[i] >= i) m = i + 1;
  long lhs = std::accumulate(d.begin(), d.begin() + m, 0L);
  long rhs = static_cast<long>(m) * (m - 1) + std::accumulate(d.begin() + m, d.end(), 0L);
  return lhs == rhs;
}

}  // namespace leafsearch::gadgets
