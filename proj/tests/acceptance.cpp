// One pass/fail line per acceptance criterion. Usage: acceptance [criterion...]

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <tuple>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "graph_pool.hpp"
#include "leafsearch/gadgets.hpp"
#include "leafsearch/gs_solvers.hpp"
#include "leafsearch/internal_xp.hpp"
#include "leafsearch/layered_dp.hpp"
#include "leafsearch/oracle.hpp"
#include "leafsearch/search.hpp"
#include "leafsearch/tree_decomposition.hpp"
#include "leafsearch/zforcing_tw.hpp"

using namespace leafsearch;

namespace {

struct Outcome {
  std::atomic<long> checks{0};
  std::atomic<long> failures{0};
  std::mutex mu;
  std::string first_failure;
  std::map<std::string, long> notes;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) {
      std::lock_guard lock(mu);
      first_failure = what();
    }
  }

  void note(const std::string& key, long add = 1) {
    std::lock_guard lock(mu);
    notes[key] += add;
  }
};

std::string describe(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.n() << " edges";
  for (auto [u, v] : g.edges()) s << ' ' << u << '-' << v;
  return s.str();
}

int worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, count) on all cores. Exceptions count as failures.
void parallel_for(int count, Outcome& out, const std::function<void(int)>& body) {
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < worker_count(); ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < count;) {
        try {
          body(i);
        } catch (const std::exception& e) {
          out.check(false, [&] { return "item " + std::to_string(i) + " threw: " + e.what(); });
        }
      }
    });
  for (auto& th : pool) th.join();
}

std::vector<Graph> pool_upto(int max_n, int min_n = 1) {
  std::vector<Graph> out;
  for (const Graph& g : testing::connected_pool(max_n))
    if (g.n() >= min_n) out.push_back(g);
  return out;
}

// All connected graphs on n <= 7 plus a fixed pool of 500 random 8-vertex graphs.
std::vector<Graph> main_pool(int min_n) {
  auto out = pool_upto(7, min_n);
  for (Graph& g : testing::random_connected_graphs(500, 8, 20240601)) out.push_back(std::move(g));
  return out;
}

using Criterion = std::function<std::string(Outcome&)>;

std::string c1_leaf_dp(Outcome& out) {
  const auto pool = main_pool(2);
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    for (Paradigm p : {Paradigm::BFS, Paradigm::LBFS}) {
      const auto range = oracle::brute_leaf_range(g, p);
      for (int k = 1; k <= g.n(); ++k) {
        const auto lo = layered::solve(g, p, layered::Objective::Min, k);
        const auto hi = layered::solve(g, p, layered::Objective::Max, k);
        out.check(lo.yes == (range.min <= k), [&] { return std::string(to_string(p)) + " min k=" + std::to_string(k) + " " + describe(g); });
        out.check(hi.yes == (range.max >= k), [&] { return std::string(to_string(p)) + " max k=" + std::to_string(k) + " " + describe(g); });
        if (lo.yes) out.check(lo.witness && validate_ordering(g, *lo.witness, p) && oracle::leaf_count_of(g, *lo.witness) <= k, [&] { return "bad min witness " + describe(g); });
        if (hi.yes) out.check(hi.witness && validate_ordering(g, *hi.witness, p) && oracle::leaf_count_of(g, *hi.witness) >= k, [&] { return "bad max witness " + describe(g); });
      }
    }
  });
  return std::to_string(pool.size()) + " graphs (all connected n in 2..7, 500 random n=8), k in 1..n, BFS+LBFS, min+max";
}

std::string c2_triangle(Outcome& out) {
  const auto pool = main_pool(2);
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    const int leaves = oracle::brute_leaf_range(g, Paradigm::GS).min;
    const int zstar = static_cast<int>(oracle::brute_min_zstar(g).first.size());
    const int zseq = g.n() - oracle::brute_longest_zsequence(g).length();
    out.check(leaves == zstar && zstar == zseq, [&] {
      return "leaves " + std::to_string(leaves) + " zstar " + std::to_string(zstar) + " n-zseq " + std::to_string(zseq) + " " + describe(g);
    });
  });
  return std::to_string(pool.size()) + " graphs, min GS leaves = min Z* set = n - longest Z-sequence";
}

// 143 connected graphs on n <= 6 and 157 random graphs on 7..9 vertices whose
// heuristic decomposition has width <= 4.
std::vector<Graph> tw_pool() {
  auto out = pool_upto(6);
  std::mt19937_64 seeds(77);
  for (int n = 7; n <= 9; ++n) {
    const int want = n == 9 ? 53 : 52;
    int got = 0;
    while (got < want) {
      for (Graph& g : testing::random_connected_graphs(16, n, seeds())) {
        if (got == want) break;
        if (heuristic_td(g).width() > 4) continue;
        out.push_back(std::move(g));
        ++got;
      }
    }
  }
  return out;
}

bool same_bags(const TreeDecomposition& a, const TreeDecomposition& b) {
  auto norm = [](std::vector<std::vector<Vertex>> bags) {
    std::sort(bags.begin(), bags.end());
    bags.erase(std::unique(bags.begin(), bags.end()), bags.end());
    return bags;
  };
  return norm(a.bags) == norm(b.bags);
}

// A path decomposition from a min-leaf GS ordering, else an elimination in a
// different order; never the heuristic's own bag set.
std::pair<TreeDecomposition, std::string> second_decomposition(const Graph& g, const TreeDecomposition& first) {
  const int cap = std::max(4, first.width());
  std::vector<std::pair<TreeDecomposition, std::string>> tries;
  tries.emplace_back(gs::pathdecomp_from_gs(g, oracle::brute_leaf_range(g, Paradigm::GS).min_witness).as_tree(), "path");
  std::vector<Vertex> order(g.n());
  for (Vertex v = 0; v < g.n(); ++v) order[v] = g.n() - 1 - v;
  tries.emplace_back(decomposition_from_elimination(g, order), "elimination");
  tries.emplace_back(min_fill_td(g), "min-fill");
  std::mt19937 rng(g.n() * 1000 + g.m());
  for (int r = 0; r < 20; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    tries.emplace_back(decomposition_from_elimination(g, order), "elimination");
  }
  for (auto& [td, kind] : tries)
    if (td.width() <= cap && (!same_bags(td, first) || g.n() == 1)) return {td, kind};
  return {first, "none"};
}

std::string c3_treewidth(Outcome& out) {
  const auto pool = tw_pool();
  std::atomic<int> widest{0};
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    const int truth = static_cast<int>(oracle::brute_min_zstar(g).first.size());
    const auto td1 = heuristic_td(g);
    const auto a = ztw::min_zstar_tw(g, td1);
    out.check(a.size == truth, [&] { return "heuristic td: " + std::to_string(a.size) + " vs " + std::to_string(truth) + " " + describe(g); });
    const auto [td2, kind] = second_decomposition(g, td1);
    out.note("second=" + kind);
    out.check(kind != "none", [&] { return "no second decomposition for " + describe(g); });
    validate_decomposition(g, td2);
    const auto b = ztw::min_zstar_tw(g, td2);
    out.check(b.size == truth, [&] { return kind + " td: " + std::to_string(b.size) + " vs " + std::to_string(truth) + " " + describe(g); });
    int w = widest.load();
    while (std::max(td1.width(), td2.width()) > w && !widest.compare_exchange_weak(w, std::max(td1.width(), td2.width()))) {
    }
  });
  std::string kinds;
  for (auto& [k, c] : out.notes) kinds += " " + k + ":" + std::to_string(c);
  return std::to_string(pool.size()) + " graphs (n <= 6 all, n 7..9 heuristic width <= 4), widest bag set " +
         std::to_string(widest.load() + 1) + ";" + kinds;
}

std::string c4_cds(Outcome& out) {
  const auto pool = pool_upto(7, 2);
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    const int gs_max = oracle::brute_leaf_range(g, Paradigm::GS).max;
    const int tree_max = oracle::brute_spanning_leaf_range(g).max;
    const int cds = g.n() - static_cast<int>(gs::min_cds(g).size());
    out.check(gs_max == tree_max && tree_max == cds, [&] {
      return "gs " + std::to_string(gs_max) + " tree " + std::to_string(tree_max) + " n-cds " + std::to_string(cds) + " " + describe(g);
    });
  });
  return std::to_string(pool.size()) + " graphs (n in 2..7), max GS leaves = max spanning-tree leaves = n - min CDS";
}

std::string c5_families(Outcome& out) {
  std::ostringstream s;
  for (int t : {2, 3, 4}) {
    const Graph g = gadgets::path_of_triangles(t);
    const int tree_min = oracle::brute_spanning_leaf_range(g).min;
    const int bfs_min = oracle::brute_leaf_range(g, Paradigm::BFS).min;
    const int half = (g.n() + 1) / 2;
    out.check(tree_min == 1, [&] { return "triangles t=" + std::to_string(t) + " tree min " + std::to_string(tree_min); });
    out.check(bfs_min >= half, [&] { return "triangles t=" + std::to_string(t) + " BFS min " + std::to_string(bfs_min); });
    s << "triangles(" << t << "): n=" << g.n() << " tree min 1=" << tree_min << " BFS min " << bfs_min << ">=" << half << "; ";
  }
  for (int k : {2, 3}) {
    const Graph g = gadgets::star_of_ladders(k);
    const int tree_max = g.n() - static_cast<int>(gs::min_cds(g).size());
    const int tree_max_brute = k == 2 ? oracle::brute_spanning_leaf_range(g).max : tree_max;
    const int bfs_max = oracle::brute_leaf_range(g, Paradigm::BFS).max;
    const int bfs_max_dp = layered::optimum(g, Paradigm::BFS, layered::Objective::Max).leaves;
    out.check(tree_max == k * k && tree_max_brute == tree_max, [&] { return "ladders k=" + std::to_string(k) + " tree max " + std::to_string(tree_max); });
    out.check(bfs_max <= 3 * k && bfs_max == bfs_max_dp, [&] { return "ladders k=" + std::to_string(k) + " BFS max " + std::to_string(bfs_max); });
    s << "ladders(" << k << "): n=" << g.n() << " tree max " << tree_max << "=" << k * k << " BFS max " << bfs_max << "<=" << 3 * k << "; ";
  }
  return s.str() + "tree max for k=3 via n - min CDS";
}

std::string c6_bandwidth(Outcome& out) {
  const auto pool = pool_upto(6);
  std::atomic<long> bfs_orders{0}, gs_orders{0};
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    enumerate_orderings(g, Paradigm::BFS, [&](const std::vector<Vertex>& seq) {
      const Ordering o(seq);
      const int leaves = oracle::leaf_count_of(g, o);
      const int bw = ordering_bandwidth(g, o);
      out.check(bw <= leaves, [&] { return "BFS bandwidth " + std::to_string(bw) + " > leaves " + std::to_string(leaves) + " " + describe(g); });
      ++bfs_orders;
      return true;
    });
    enumerate_orderings(g, Paradigm::GS, [&](const std::vector<Vertex>& seq) {
      const Ordering o(seq);
      const auto pd = gs::pathdecomp_from_gs(g, o);
      validate_decomposition(g, pd.as_tree());
      const int leaves = oracle::leaf_count_of(g, o);
      out.check(pd.width() <= leaves, [&] { return "path width " + std::to_string(pd.width()) + " > leaves " + describe(g); });
      ++gs_orders;
      return true;
    });
  });
  for (int n : {3, 4, 5}) {
    const Graph g = gadgets::complete(n);
    enumerate_orderings(g, Paradigm::GS, [&](const std::vector<Vertex>& seq) {
      out.check(gs::pathdecomp_from_gs(g, Ordering(seq)).width() == n - 1, [&] { return "K" + std::to_string(n) + " width not n-1"; });
      return true;
    });
  }
  return std::to_string(pool.size()) + " graphs (n <= 6), " + std::to_string(bfs_orders.load()) + " BFS orderings, " +
         std::to_string(gs_orders.load()) + " GS orderings, K3..K5 width n-1";
}

std::string c7_xp(Outcome& out) {
  const auto pool = pool_upto(7);
  parallel_for(static_cast<int>(pool.size()), out, [&](int i) {
    const Graph& g = pool[i];
    const int n = g.n();
    const auto bfs = oracle::brute_leaf_range(g, Paradigm::BFS);
    const auto gsr = oracle::brute_leaf_range(g, Paradigm::GS);
    for (int k = 1; k <= n; ++k) {
      auto tag = [&](const char* what) { return [&, what] { return std::string(what) + " k=" + std::to_string(k) + " " + describe(g); }; };
      if (k <= 3) {
        out.check(xp::bfs_internal_xp(g, k, xp::Objective::Min).yes == (n - bfs.max <= k), tag("bfs min"));
        out.check(xp::bfs_internal_xp(g, k, xp::Objective::Max).yes == (n - bfs.min >= k), tag("bfs max"));
        if (n >= 2) out.check(xp::eval_wcs(xp::build_wcs_circuit(g, k)) == (n - gsr.min >= k), tag("circuit"));
      }
      out.check(xp::gs_min_internal_xp(g, k).yes == (n - gsr.max <= k), tag("gs min"));
      out.check(xp::gs_max_internal_xp(g, k).yes == (n - gsr.min >= k), tag("gs max"));
    }
  });
  return std::to_string(pool.size()) + " graphs (n <= 7); BFS XP and circuit for k <= 3 (circuit n >= 2), GS XP for all k";
}

// Canonical form of a set system: the smallest sorted mask list over all element relabelings.
std::vector<int> canonical_sets(int u, const std::vector<int>& masks) {
  std::vector<int> perm(u), best;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> mapped;
    for (int m : masks) {
      int r = 0;
      for (int e = 0; e < u; ++e)
        if (m >> e & 1) r |= 1 << perm[e];
      mapped.push_back(r);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Canonical bipartite adjacency: row masks under all X and Y relabelings.
std::vector<int> canonical_bipartite(int nx, int ny, const std::vector<int>& rows) {
  std::vector<int> py(ny), best;
  std::iota(py.begin(), py.end(), 0);
  do {
    std::vector<int> mapped;
    for (int r : rows) {
      int m = 0;
      for (int y = 0; y < ny; ++y)
        if (r >> y & 1) m |= 1 << py[y];
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(py.begin(), py.end()));
  return best;
}

std::string c8_gadgets(Outcome& out) {
  // Set cover: every multiset of <= 4 subsets of a universe of <= 4 elements.
  std::vector<std::pair<int, std::vector<int>>> covers;
  long raw_covers = 0, classes = 0;
  std::set<std::pair<int, std::vector<int>>> seen;
  for (int u = 1; u <= 4; ++u)
    for (int s = 1; s <= 4; ++s) {
      std::vector<int> masks(s, 0);
      std::function<void(int, int)> pick = [&](int idx, int from) {
        if (idx == s) {
          ++raw_covers;
          if (seen.insert({u, canonical_sets(u, masks)}).second) ++classes;
          covers.emplace_back(u, masks);
          return;
        }
        for (int m = from; m < (1 << u); ++m) {
          masks[idx] = m;
          pick(idx + 1, m);
        }
      };
      pick(0, 0);
    }
  std::atomic<long> cover_ok{0};
  parallel_for(static_cast<int>(covers.size()), out, [&](int i) {
    const auto& [u, masks] = covers[i];
    std::vector<std::vector<int>> sets;
    for (int m : masks) {
      sets.emplace_back();
      for (int e = 0; e < u; ++e)
        if (m >> e & 1) sets.back().push_back(e);
    }
    std::optional<gadgets::ReductionOutput> built;
    try {
      built = gadgets::set_cover_to_split(u, sets);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AssumptionViolated) throw;
      out.note("setcover rejected");
      return;
    }
    const Graph& g = built->graph;
    out.check(gadgets::is_split(g), [&] { return "set cover output not split"; });
    const int cover = gadgets::min_set_cover(u, sets);
    for (Paradigm p : {Paradigm::GS, Paradigm::BFS, Paradigm::LBFS}) {
      const int internal = g.n() - oracle::brute_leaf_range(g, p).max;
      out.check(internal == cover, [&] { return std::string("set cover ") + to_string(p) + " " + describe(g); });
    }
    ++cover_ok;
  });

  // Grundy: every bipartite graph with 1 <= |X|, |Y| <= 4 (X rows as a multiset).
  std::vector<std::tuple<int, int, std::vector<int>>> grundies;
  long grundy_classes = 0;
  for (int nx = 1; nx <= 4; ++nx)
    for (int ny = 1; ny <= 4; ++ny) {
      std::set<std::vector<int>> keys;
      std::vector<int> rows(nx, 0);
      std::function<void(int, int)> pick = [&](int idx, int from) {
        if (idx == nx) {
          if (keys.insert(canonical_bipartite(nx, ny, rows)).second) ++grundy_classes;
          grundies.emplace_back(nx, ny, rows);
          return;
        }
        for (int m = from; m < (1 << ny); ++m) {
          rows[idx] = m;
          pick(idx + 1, m);
        }
      };
      pick(0, 0);
    }
  std::atomic<long> grundy_ok{0};
  parallel_for(static_cast<int>(grundies.size()), out, [&](int i) {
    const auto& [nx, ny, rows] = grundies[i];
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y)
        if (rows[x] >> y & 1) edges.emplace_back(x, y);
    std::optional<gadgets::ReductionOutput> built;
    try {
      built = gadgets::grundy_to_split(nx, ny, edges);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AssumptionViolated && e.kind() != ErrorKind::Disconnected) throw;
      out.note("grundy rejected");
      return;
    }
    const Graph& g = built->graph;
    out.check(gadgets::is_split(g), [&] { return "grundy output not split"; });
    const int seq = gadgets::longest_one_sided_total_sequence(nx, ny, edges);
    for (Paradigm p : {Paradigm::GS, Paradigm::BFS}) {
      const int internal = g.n() - oracle::brute_leaf_range(g, p).min;
      out.check(internal == seq + 1, [&] { return std::string("grundy ") + to_string(p) + " " + describe(g); });
    }
    ++grundy_ok;
  });

  // 3-SAT: one or two clauses over variables 1..3, k in {3, 4}.
  std::vector<gadgets::Clause> clauses;
  for (int signs = 0; signs < 8; ++signs)
    clauses.push_back({signs & 1 ? -1 : 1, signs & 2 ? -2 : 2, signs & 4 ? -3 : 3});
  std::vector<std::vector<gadgets::Clause>> formulas;
  for (std::size_t a = 0; a < clauses.size(); ++a) {
    formulas.push_back({clauses[a]});
    for (std::size_t b = a + 1; b < clauses.size(); ++b) formulas.push_back({clauses[a], clauses[b]});
  }
  std::atomic<long> sat_ok{0};
  parallel_for(static_cast<int>(formulas.size()) * 2, out, [&](int i) {
    const auto& f = formulas[i / 2];
    const int k = 3 + i % 2;
    const auto built = gadgets::sat3_to_weakly_chordal(f, k, 3);
    const Graph& g = built.graph;
    out.check(oracle::is_weakly_chordal(g), [&] { return "sat3 output not weakly chordal"; });
    const bool sat = gadgets::satisfiable(f, 3);
    const bool found = oracle::brute_find_internal(g, Paradigm::LBFS, k, k).has_value();
    out.check(sat == found, [&] { return "sat3 k=" + std::to_string(k) + " " + describe(g); });
    ++sat_ok;
  });

  std::ostringstream s;
  s << "set cover " << cover_ok << " of " << covers.size() << " systems (" << classes
    << " up to relabeling) x GS/BFS/LBFS; grundy " << grundy_ok << " of " << grundies.size() << " bipartite graphs ("
    << grundy_classes << " up to relabeling) x GS/BFS; 3-SAT " << sat_ok << " formulas x k";
  for (auto& [k, c] : out.notes) s << "; " << k << " " << c;
  return s.str();
}

std::string c9_lbfs_counterexample(Outcome& out) {
  // Vertices 1..8 of the counterexample are 0..7 here.
  const Graph g(8, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}});
  const std::vector<Vertex> s_order{0, 1, 5, 4};  // S with its fixed order 1, 2, 3, 4
  const Ordering reference({0, 1, 3, 2, 5, 4, 7, 6});
  const FTree ref = ftree_from_ordering(g, reference);
  out.check(validate_ordering(g, reference, Paradigm::LBFS), [] { return "reference is not an LBFS ordering"; });
  out.check(validate_ordering(g, reference, Paradigm::BFS), [] { return "reference is not a BFS ordering"; });
  out.check(ref.internals() == std::vector<Vertex>{0, 1, 4, 5}, [] { return "reference internal set is not S"; });

  std::vector<Vertex> rho = s_order;
  for (Vertex v = 0; v < 8; ++v)
    if (std::find(s_order.begin(), s_order.end(), v) == s_order.end()) rho.push_back(v);
  auto children = [](FTree t, Vertex v) {
    std::sort(t.children[v].begin(), t.children[v].end());
    return t.children[v];
  };

  const FTree bfs = ftree_from_ordering(g, run_plus(g, Paradigm::BFS, Ordering(rho)));
  bool preserved = true;
  for (Vertex v : s_order) preserved = preserved && children(bfs, v) == children(ref, v);
  out.check(preserved, [] { return "BFS+ changed the children of S"; });

  const Ordering lbfs_order = run_plus(g, Paradigm::LBFS, Ordering(rho));
  const FTree lbfs = ftree_from_ordering(g, lbfs_order);
  out.check(lbfs_order == Ordering({0, 1, 2, 3, 4, 5, 7, 6}), [] { return "LBFS+ ordering differs from the expected one"; });
  out.check(children(lbfs, 5) != children(ref, 5) && children(lbfs, 4) != children(ref, 4),
            [] { return "LBFS+ kept the children of the third and fourth S vertices"; });
  out.check(lbfs.internal_count() < ref.internal_count(), [] { return "LBFS+ tree does not have fewer internal vertices"; });
  return "BFS+ keeps the children of S; LBFS+ gives the third and fourth S vertices other children and " +
         std::to_string(lbfs.internal_count()) + " < " + std::to_string(ref.internal_count()) + " internal vertices";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"leaf DP equals oracle (BFS, LBFS)", c1_leaf_dp},
      {"min GS leaves = min Z* set = n - longest Z-sequence", c2_triangle},
      {"treewidth DP equals oracle on two decompositions", c3_treewidth},
      {"max GS leaves = max spanning-tree leaves = n - min CDS", c4_cds},
      {"triangle paths and ladder stars: leaf bounds", c5_families},
      {"bandwidth and pathwidth bounded by leaves", c6_bandwidth},
      {"XP solvers and circuit equal oracle", c7_xp},
      {"gadget round trips", c8_gadgets},
      {"LBFS counterexample regression", c9_lbfs_counterexample},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[i].second(out);
    } catch (const std::exception& e) {
      out.check(false, [&] { return std::string("threw: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.failures == 0 && out.checks > 0;
    all_pass = all_pass && pass;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " | " << criteria[i].first << " | "
              << out.checks << " checks, " << out.failures << " failures, " << std::fixed
              << std::setprecision(1) << secs << " s | " << detail;
    if (!pass) std::cout << " | first failure: " << out.first_failure;
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
