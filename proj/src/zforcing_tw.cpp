#include "leafsearch/zforcing_tw.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <future>
#include <string>
#include <unordered_map>

#include <absl/container/flat_hash_set.h>

#include "leafsearch/error.hpp"

namespace leafsearch::ztw {

namespace {

std::uint16_t insert_bit(std::uint16_t m, int pos) {
  const std::uint32_t low = m & ((1u << pos) - 1);
  const std::uint32_t high = static_cast<std::uint32_t>(m) >> pos;
  return static_cast<std::uint16_t>(low | (high << (pos + 1)));
}

std::uint16_t remove_bit(std::uint16_t m, int pos) {
  const std::uint32_t low = m & ((1u << pos) - 1);
  const std::uint32_t high = static_cast<std::uint32_t>(m) >> (pos + 1);
  return static_cast<std::uint16_t>(low | (high << pos));
}

int slot_of(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

struct KeyHash {
  std::size_t operator()(const Signature& s) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(s.gamma_bot | std::uint64_t{s.phi_z} << 16 | std::uint64_t{s.phi_e} << 32 | std::uint64_t{s.lambda} << 48);
    mix(s.b_gamma | std::uint64_t{s.b_phi} << 16 | std::uint64_t{s.b_pi} << 32);
    for (std::uint32_t r : s.d.rows()) mix(r);
    return static_cast<std::size_t>(h);
  }
};

struct KeyEq {
  bool operator()(const Signature& a, const Signature& b) const { return a.same_key(b); }
};

using Origin = std::pair<std::uint32_t, std::uint32_t>;

struct NodeTable {
  SignatureTable table;
  std::vector<Origin> origin;
};

// Deduplicating table that keeps the smaller weight per key. The index set
// holds positions into the table and looks them up by signature.
class TableBuilder {
 public:
  explicit TableBuilder(const Options& opt)
      : cap_(opt.max_signatures), bound_(opt.upper_bound), index_(0, Hash{&out_.table}, Eq{&out_.table}) {}

  // `from` names the producing entries of the children, for traceback.
  void add(const Signature& s, Origin from) {
    if (bound_ >= 0 && s.omega + std::popcount(s.gamma_bot) > bound_) return;
    auto it = index_.find(s);
    if (it == index_.end()) {
      out_.table.push_back(s);
      out_.origin.push_back(from);
      index_.insert(static_cast<std::uint32_t>(out_.table.size() - 1));
      if (out_.table.size() > cap_)
        throw Error(ErrorKind::BudgetExceeded, "signature table exceeds " + std::to_string(cap_) + " entries");
    } else if (s.omega < out_.table[*it].omega) {
      out_.table[*it].omega = s.omega;
      out_.origin[*it] = from;
    }
  }

  NodeTable take() { return std::move(out_); }

 private:
  struct Hash {
    using is_transparent = void;
    const SignatureTable* table;
    std::size_t operator()(std::uint32_t i) const { return KeyHash{}((*table)[i]); }
    std::size_t operator()(const Signature& s) const { return KeyHash{}(s); }
  };
  struct Eq {
    using is_transparent = void;
    const SignatureTable* table;
    const Signature& get(std::uint32_t i) const { return (*table)[i]; }
    const Signature& get(const Signature& s) const { return s; }
    template <class A, class B>
    bool operator()(const A& a, const B& b) const {
      return get(a).same_key(get(b));
    }
  };

  std::size_t cap_;
  int bound_;
  NodeTable out_;
  absl::flat_hash_set<std::uint32_t, Hash, Eq> index_;
};

void each_bit(std::uint32_t m, const std::function<void(int)>& f) {
  for (; m; m &= m - 1) f(std::countr_zero(m));
}

NodeTable introduce(const SignatureTable& child, int pos, Vertex v, const Constraints& constraints,
                         const Options& opt) {
  static constexpr std::pair<GammaType, PhiType> kChoices[] = {
      {GammaType::Zstar, PhiType::Zstar}, {GammaType::Zstar, PhiType::Bot}, {GammaType::Bot, PhiType::Zstar},
      {GammaType::Bot, PhiType::Bot},     {GammaType::Zstar, PhiType::E}};
  auto forced = constraints.find(v);
  const std::uint16_t b = static_cast<std::uint16_t>(1u << pos);
  TableBuilder out(opt);
  for (std::uint32_t i = 0; i < child.size(); ++i) {
    const Signature& s = child[i];
    Signature base = s;
    base.gamma_bot = insert_bit(s.gamma_bot, pos);
    base.phi_z = insert_bit(s.phi_z, pos);
    base.phi_e = insert_bit(s.phi_e, pos);
    base.b_gamma = insert_bit(s.b_gamma, pos);
    base.b_phi = insert_bit(s.b_phi, pos);
    base.b_pi = insert_bit(s.b_pi, pos);
    base.d.insert_slot(pos);
    for (auto [gt, pt] : kChoices) {
      if (forced != constraints.end() && forced->second != gt) continue;
      if (pt == PhiType::E && s.lambda) continue;
      Signature t = base;
      if (gt == GammaType::Bot) {
        t.gamma_bot |= b;
        t.b_gamma |= b;
        t.b_pi |= b;
      }
      if (pt == PhiType::Zstar) {
        t.phi_z |= b;
        if (gt == GammaType::Zstar) t.d.add_arc(DependencyGraph::gamma(pos), DependencyGraph::phi(pos));
      } else {
        t.b_phi |= b;
      }
      if (pt == PhiType::E) {
        t.phi_e |= b;
        t.b_pi |= b;
        t.lambda = true;
      }
      out.add(t, {i, 0});
    }
  }
  return out.take();
}

NodeTable forget(const SignatureTable& child, int pos, const Options& opt) {
  const std::uint16_t b = static_cast<std::uint16_t>(1u << pos);
  TableBuilder out(opt);
  for (std::uint32_t i = 0; i < child.size(); ++i) {
    const Signature& s = child[i];
    if (!(s.b_gamma & s.b_phi & s.b_pi & b)) continue;
    Signature t = s;
    if (s.gamma_bot & b) ++t.omega;
    t.gamma_bot = remove_bit(s.gamma_bot, pos);
    t.phi_z = remove_bit(s.phi_z, pos);
    t.phi_e = remove_bit(s.phi_e, pos);
    t.b_gamma = remove_bit(s.b_gamma, pos);
    t.b_phi = remove_bit(s.b_phi, pos);
    t.b_pi = remove_bit(s.b_pi, pos);
    t.d.remove_slot(pos);
    out.add(t, {i, 0});
  }
  return out.take();
}

NodeTable rule(const Graph& g, const std::vector<Vertex>& bag, const SignatureTable& child, int p,
                    const Options& opt) {
  using DG = DependencyGraph;
  const int size = static_cast<int>(bag.size());
  const std::uint16_t vb = static_cast<std::uint16_t>(1u << p);
  const std::uint16_t all = static_cast<std::uint16_t>((1u << size) - 1);
  std::uint16_t nb = 0;
  for (int i = 0; i < size; ++i)
    if (g.adjacent(bag[p], bag[i])) nb |= static_cast<std::uint16_t>(1u << i);
  const std::uint16_t others = all & ~vb;
  TableBuilder out(opt);
  for (std::uint32_t i = 0; i < child.size(); ++i) {
    const Signature& s = child[i];
    const bool v_bot = s.gamma_bot & vb;
    const PhiType v_phi = s.phi_of(p);
    // (R1) colourer f, (R2) coloured g, (R3) white neighbour h; -1 = none.
    std::vector<int> fs{-1}, gs{-1}, hs{-1};
    if (!(s.b_gamma & vb)) {
      fs.clear();
      each_bit(nb & s.phi_z & ~s.b_phi, [&](int f) { fs.push_back(f); });
    }
    if (!(s.b_phi & vb)) {
      gs.clear();
      each_bit(nb & ~s.gamma_bot & ~s.b_gamma, [&](int x) { gs.push_back(x); });
    }
    if (!(s.b_pi & vb)) {
      hs.clear();
      each_bit(nb & ~s.gamma_bot, [&](int h) { hs.push_back(h); });
    }
    // (R4) vertices for which v is the white neighbour.
    std::uint16_t w_pool = 0;
    if (!v_bot) w_pool = (opt.white_witness_any_bag_vertex ? others : nb) & ~s.b_pi;
    std::uint16_t e_other = s.phi_e & others;
    for (int f : fs) {
      for (int gx : gs) {
        for (int h : hs) {
          // Enumerate every subset of w_pool, the empty set included.
          for (std::uint32_t w = w_pool;; w = (w - 1) & w_pool) {
            Signature t = s;
            bool ok = true;
            // Nothing ever points into gamma of a Bot vertex, so its out-arcs constrain nothing.
            auto arc = [&](int a, int b) {
              if (a % 2 == 0 && (s.gamma_bot >> (a / 2) & 1)) return;
              ok = ok && t.d.add_arc(a, b);
            };
            if (f >= 0) {  // (a)
              arc(DG::phi(f), DG::gamma(p));
              t.b_gamma |= vb;
              t.b_phi |= static_cast<std::uint16_t>(1u << f);
            }
            if (gx >= 0) {  // (b)
              arc(DG::phi(p), DG::gamma(gx));
              t.b_gamma |= static_cast<std::uint16_t>(1u << gx);
              t.b_phi |= vb;
            }
            if (h >= 0) {  // (c)
              arc(DG::gamma(p), DG::gamma(h));
              t.b_pi |= vb;
            }
            each_bit(w, [&](int x) {  // (d)
              arc(DG::gamma(x), DG::gamma(p));
              t.b_pi |= static_cast<std::uint16_t>(1u << x);
            });
            each_bit(nb & s.phi_z, [&](int x) {  // (e)
              if (x == f) return;
              arc(DG::gamma(p), DG::phi(x));
              if (v_phi == PhiType::E) arc(DG::phi(x), DG::gamma(p));
            });
            if (v_phi == PhiType::Zstar) {  // (f)
              each_bit(nb, [&](int x) {
                if (x == gx) return;
                arc(DG::gamma(x), DG::phi(p));
                if (s.phi_e >> x & 1) arc(DG::phi(p), DG::gamma(x));
              });
            }
            if (v_phi == PhiType::E) each_bit(others, [&](int x) { arc(DG::gamma(x), DG::gamma(p)); });  // (g)
            if (e_other) arc(DG::gamma(p), DG::gamma(std::countr_zero(e_other)));                       // (h)
            if (ok) out.add(t, {i, 0});
            if (w == 0) break;
          }
        }
      }
    }
  }
  return out.take();
}

NodeTable join(const SignatureTable& left, const SignatureTable& right, const Options& opt) {
  // Entries are bucketed by everything except D and omega, so the flag checks
  // run once per pair of buckets.
  struct Flags {
    std::uint16_t gamma_bot, phi_z, phi_e, b_gamma, b_phi, b_pi;
    bool lambda;
    bool operator==(const Flags&) const = default;
  };
  struct FlagsHash {
    std::size_t operator()(const Flags& f) const {
      std::uint64_t a = f.gamma_bot | std::uint64_t{f.phi_z} << 16 | std::uint64_t{f.phi_e} << 32 |
                        std::uint64_t{f.lambda} << 48;
      std::uint64_t b = f.b_gamma | std::uint64_t{f.b_phi} << 16 | std::uint64_t{f.b_pi} << 32;
      return std::hash<std::uint64_t>{}(a * 0x9e3779b97f4a7c15ull ^ b);
    }
  };
  using Buckets = std::unordered_map<Flags, std::vector<std::uint32_t>, FlagsHash>;
  auto bucket = [](const SignatureTable& table) {
    Buckets out;
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      const Signature& s = table[i];
      out[{s.gamma_bot, s.phi_z, s.phi_e, s.b_gamma, s.b_phi, s.b_pi, s.lambda}].push_back(i);
    }
    return out;
  };
  const Buckets lb = bucket(left), rb = bucket(right);
  auto type_key = [](const Flags& f) {
    return f.gamma_bot | std::uint64_t{f.phi_z} << 16 | std::uint64_t{f.phi_e} << 32;
  };
  std::unordered_multimap<std::uint64_t, const Buckets::value_type*> by_type;
  for (const auto& kv : rb) by_type.emplace(type_key(kv.first), &kv);
  TableBuilder out(opt);
  for (const auto& [fa, ia] : lb) {
    auto [lo, hi] = by_type.equal_range(type_key(fa));
    for (auto it = lo; it != hi; ++it) {
      const auto& [fb, ib] = *it->second;
      const std::uint16_t z = static_cast<std::uint16_t>(~fa.gamma_bot);
      if (fa.b_gamma & fb.b_gamma & z) continue;
      if (fa.b_phi & fb.b_phi & fa.phi_z) continue;
      if (fa.b_pi & fb.b_pi & z & fa.phi_z) continue;
      // Both sides set lambda through the same E vertex when it sits in the bag.
      if (fa.lambda && fb.lambda && (opt.join_rejects_shared_lambda || fa.phi_e == 0)) continue;
      for (std::uint32_t i : ia) {
        const Signature& a = left[i];
        for (std::uint32_t k : ib) {
          const Signature& b = right[k];
          Signature t = a;
          t.b_gamma |= b.b_gamma;
          t.b_phi |= b.b_phi;
          t.b_pi |= b.b_pi;
          t.lambda = a.lambda || b.lambda;
          if (!t.d.merge(b.d)) continue;
          t.omega = a.omega + b.omega;
          out.add(t, {i, k});
        }
      }
    }
  }
  return out.take();
}

}  // namespace

bool DependencyGraph::add_arc(int from, int to) {
  if (from == to || reaches(to, from)) return false;
  if (reaches(from, to)) return true;
  const std::uint32_t gain = rows_[to] | 1u << to;
  for (int x = 0; x < 2 * kMaxSlots; ++x)
    if (x == from || reaches(x, from)) rows_[x] |= gain;
  return true;
}

bool DependencyGraph::merge(const DependencyGraph& other) {
  // Cheap rejection of a pair ordered one way here and the other way there.
  for (int i = 0; i < 2 * kMaxSlots; ++i)
    for (std::uint32_t x = other.rows_[i]; x; x &= x - 1)
      if (rows_[std::countr_zero(x)] >> i & 1u) return false;
  std::uint32_t used = 0;
  for (int i = 0; i < 2 * kMaxSlots; ++i) {
    rows_[i] |= other.rows_[i];
    if (rows_[i]) used |= 1u << i;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t m = used; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      std::uint32_t acc = rows_[i];
      for (std::uint32_t x = acc; x; x &= x - 1) acc |= rows_[std::countr_zero(x)];
      if (acc >> i & 1u) return false;
      if (acc != rows_[i]) {
        rows_[i] = acc;
        grew = true;
      }
    }
  }
  return true;
}

void DependencyGraph::insert_slot(int slot) {
  const int at = 2 * slot;
  for (auto& r : rows_) {
    const std::uint64_t low = r & ((std::uint64_t{1} << at) - 1);
    const std::uint64_t high = std::uint64_t{r} >> at;
    r = static_cast<std::uint32_t>(low | (high << (at + 2)));
  }
  for (int i = 2 * kMaxSlots - 1; i >= at + 2; --i) rows_[i] = rows_[i - 2];
  rows_[at] = rows_[at + 1] = 0;
}

void DependencyGraph::remove_slot(int slot) {
  const int at = 2 * slot;
  for (auto& r : rows_) {
    const std::uint64_t low = r & ((std::uint64_t{1} << at) - 1);
    const std::uint64_t high = std::uint64_t{r} >> (at + 2);
    r = static_cast<std::uint32_t>(low | (high << at));
  }
  for (int i = at; i + 2 < 2 * kMaxSlots; ++i) rows_[i] = rows_[i + 2];
  rows_[2 * kMaxSlots - 2] = rows_[2 * kMaxSlots - 1] = 0;
}

Digraph bypass(const Digraph& d, int gamma_v, int phi_v) {
  std::set<int> nodes{gamma_v};
  if (phi_v >= 0) nodes.insert(phi_v);
  std::set<int> core = nodes;
  for (auto [a, b] : d.arcs) {
    if (core.count(a)) nodes.insert(b);
    if (core.count(b)) nodes.insert(a);
  }
  std::set<std::pair<int, int>> sub;
  for (auto [a, b] : d.arcs)
    if (nodes.count(a) && nodes.count(b)) sub.insert({a, b});
  // Closure of the induced subgraph by repeated composition.
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [a, b] : std::set<std::pair<int, int>>(sub))
      for (auto [c, e] : std::set<std::pair<int, int>>(sub))
        if (b == c && a != e && sub.insert({a, e}).second) grew = true;
  }
  Digraph out = d;
  out.arcs.insert(sub.begin(), sub.end());
  return out;
}

bool Signature::same_key(const Signature& o) const {
  return gamma_bot == o.gamma_bot && phi_z == o.phi_z && phi_e == o.phi_e && b_gamma == o.b_gamma &&
         b_phi == o.b_phi && b_pi == o.b_pi && lambda == o.lambda && d == o.d;
}

namespace {

NodeTable run_node(const Graph& g, const NiceTD& nice, int node, const std::vector<SignatureTable>& children,
                   const Constraints& constraints, const Options& options) {
  const NiceNode& nd = nice.nodes[node];
  if (static_cast<int>(nd.bag.size()) > DependencyGraph::kMaxSlots)
    throw Error(ErrorKind::BudgetExceeded, "bags above 16 vertices are not supported");
  switch (nd.type) {
    case NodeType::Leaf:
      return {{Signature{}}, {{0, 0}}};
    case NodeType::Introduce:
      return introduce(children.at(0), slot_of(nd.bag, nd.vertex), nd.vertex, constraints, options);
    case NodeType::Forget:
      return forget(children.at(0), slot_of(nice.nodes[nd.children[0]].bag, nd.vertex), options);
    case NodeType::Rule:
      return rule(g, nd.bag, children.at(0), slot_of(nd.bag, nd.vertex), options);
    case NodeType::Join:
      return join(children.at(0), children.at(1), options);
  }
  return {};
}

// Root table plus what traceback needs: producer entries per node and, at
// introduce nodes, whether the new vertex was made Bot.
struct Run {
  SignatureTable root;
  std::vector<std::vector<Origin>> origin;
  std::vector<std::vector<bool>> bot;
};

Run run_dp(const Graph& g, const NiceTD& nice, const Constraints& constraints, const Options& options) {
  Run run;
  run.origin.resize(nice.nodes.size());
  run.bot.resize(nice.nodes.size());
  std::atomic<int> spare{std::max(0, options.threads - 1)};
  std::function<SignatureTable(int)> solve = [&](int node) {
    const NiceNode& nd = nice.nodes[node];
    std::vector<SignatureTable> kids(nd.children.size());
    if (nd.children.size() == 2 && spare.fetch_sub(1) > 0) {
      auto left = std::async(std::launch::async, solve, nd.children[0]);
      kids[1] = solve(nd.children[1]);
      kids[0] = left.get();
      spare.fetch_add(1);
    } else {
      if (nd.children.size() == 2) spare.fetch_add(1);
      for (std::size_t i = 0; i < nd.children.size(); ++i) kids[i] = solve(nd.children[i]);
    }
    NodeTable t = run_node(g, nice, node, kids, constraints, options);
    if (nd.type == NodeType::Introduce) {
      const int pos = slot_of(nd.bag, nd.vertex);
      run.bot[node].reserve(t.table.size());
      for (const Signature& s : t.table) run.bot[node].push_back(s.gamma_bot >> pos & 1);
    }
    run.origin[node] = std::move(t.origin);
    return std::move(t.table);
  };
  run.root = solve(nice.root);
  return run;
}

std::optional<std::size_t> best_entry(const SignatureTable& table) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!best || table[i].omega < table[*best].omega) best = i;
  return best;
}

}  // namespace

SignatureTable process_node(const Graph& g, const NiceTD& nice, int node, const std::vector<SignatureTable>& children,
                            const Constraints& constraints, const Options& options) {
  return run_node(g, nice, node, children, constraints, options).table;
}

std::optional<int> min_weight(const Graph& g, const NiceTD& nice, const Constraints& constraints,
                              const Options& options) {
  Run run = run_dp(g, nice, constraints, options);
  auto best = best_entry(run.root);
  if (!best) return std::nullopt;
  return run.root[*best].omega;
}

namespace {

// Size of the best forcing set among depth-first F-tree leaf sets, each
// checked by replay.
int dfs_upper_bound(const Graph& g) {
  int best = g.n();
  for (Vertex r = 0; r < g.n(); ++r) {
    std::vector<Vertex> seq, stack{r};
    std::vector<bool> seen(g.n(), false);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      seq.push_back(v);
      const auto& nb = g.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        if (!seen[*it]) stack.push_back(*it);
    }
    if (static_cast<int>(seq.size()) != g.n()) continue;
    std::vector<Vertex> leaves = ftree_from_ordering(g, Ordering(seq)).leaves();
    if (static_cast<int>(leaves.size()) < best && zstar_force(g, leaves)) best = static_cast<int>(leaves.size());
  }
  return best;
}

}  // namespace

ZstarResult min_zstar_tw(const Graph& g, const TreeDecomposition& td, const Constraints& constraints,
                         const Options& options) {
  const NiceTD nice = make_nice(g, td);
  ZstarResult result;
  Options bounded = options;
  if (bounded.upper_bound < 0 && constraints.empty()) bounded.upper_bound = dfs_upper_bound(g);
  Run run = run_dp(g, nice, constraints, bounded);
  auto best = best_entry(run.root);
  if (!best) {
    result.size = -1;
    return result;
  }
  result.size = run.root[*best].omega;
  std::vector<std::pair<int, std::uint32_t>> stack{{nice.root, static_cast<std::uint32_t>(*best)}};
  while (!stack.empty()) {
    auto [node, entry] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nice.nodes[node];
    if (nd.type == NodeType::Introduce && run.bot[node][entry]) result.set.push_back(nd.vertex);
    const Origin from = run.origin[node][entry];
    if (nd.children.size() > 0) stack.push_back({nd.children[0], from.first});
    if (nd.children.size() > 1) stack.push_back({nd.children[1], from.second});
  }
  // A vertex below a join is introduced on both sides.
  std::sort(result.set.begin(), result.set.end());
  result.set.erase(std::unique(result.set.begin(), result.set.end()), result.set.end());
  auto rules = zstar_force(g, result.set);
  if (static_cast<int>(result.set.size()) != result.size || !rules)
    throw Error(ErrorKind::AssumptionViolated, "treewidth witness does not replay as a forcing set");
  result.rules = *rules;
  return result;
}

}  // namespace leafsearch::ztw
